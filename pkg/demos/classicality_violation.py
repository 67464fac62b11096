"""
A Hamiltonian that couples two pointer states.

With an off-diagonal block W_01 the classicality check names the offending
pair, and a pointer coherence grows linearly as (i t) <phi|W_01|phi>.
"""

import numpy as np

from hybridmeasure import GeneralHamiltonian, PAULI_X, PAULI_Z, check_classicality
from hybridmeasure.measurement import coherence_growth_prediction, coherence_witness_state, exact_pointer_coherence

eps = 0.2
w = np.zeros((2, 2, 2, 2), dtype=complex)
w[0, 0], w[1, 1] = PAULI_Z, -PAULI_Z
w[0, 1] = w[1, 0] = eps * PAULI_X
h = GeneralHamiltonian(w)

verdict = check_classicality(h)
print("classical:", verdict.classical, "witness:", verdict.witness, f"magnitude {verdict.magnitude:.2f}")

phi = coherence_witness_state(w[0, 1])
print("\n   t        exact <E_0|rho_A|E_1>    first order")
for t in (1e-1, 1e-2, 1e-3):
    exact = exact_pointer_coherence(h, 0, 1, phi, t)
    pred = coherence_growth_prediction(w[0, 1], phi, t)
    print(f"{t:7.0e}  {exact.real:+.3e}{exact.imag:+.6e}j  {pred.imag:+.6e}j")
