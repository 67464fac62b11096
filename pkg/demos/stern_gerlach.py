"""
Stern-Gerlach measurement of a spin prepared in |+>.

The two beam spots are the pointer states. Each conditional block precesses
under +g sigma_z or -g sigma_z, so the reduced spin state stays diagonal in
{|+>, |->} with populations cos^2(g t) and sin^2(g t). The joint state never
develops pointer coherences.
"""

import numpy as np

from hybridmeasure import (
    HybridState,
    MeasurementBasis,
    QuantumState,
    build_scenario,
    evolve_hybrid,
    information_ledger,
    reduce_to_system,
    run_trajectories,
    stern_gerlach_hamiltonian,
)

g = 1.0
h = stern_gerlach_hamiltonian(g)
pm = MeasurementBasis.plus_minus()
state = HybridState(np.array([0.5, 0.5]), (QuantumState.pure([1, 1]),) * 2)

print(" g t     <+|rho|+>   cos^2     I_AS")
for wt in np.linspace(0, np.pi, 7):
    out = evolve_hybrid(state, h, wt / g)
    rho = pm.vectors.conj().T @ reduce_to_system(out).matrix @ pm.vectors
    print(f"{wt:5.3f}  {rho[0, 0].real:9.6f}  {np.cos(wt) ** 2:9.6f}  {information_ledger(out).i_total:.3e}")

res = run_trajectories(build_scenario("stern_gerlach", trajectories=20_000, seed=1, dt=0.3))
print("\nregistration counts:", res.aggregate["outcome_counts"]["1:register"])
for label in ("spot-up", "spot-down"):
    print(f"spin outcomes given {label}:", res.aggregate["outcome_counts"][f"2:complete|{label}"])
print(f"expected P(+) = cos^2(0.3) = {np.cos(0.3) ** 2:.4f}")
