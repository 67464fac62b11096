"""
Classical apparatus dynamics.

A three-pointer apparatus relaxes under a rate matrix. The master equation,
the transition matrix and the Kraus form agree. The detailed-balance
distribution is stationary.
"""

import numpy as np

from hybridmeasure import (
    ClassicalState,
    MarkovGenerator,
    apply_kraus,
    detailed_balance_holds,
    evolve_master,
    kraus_from_transition,
    shannon_information,
)

pi = np.array([0.5, 0.3, 0.2])
s = np.array([[0, 1.0, 2.0], [1.0, 0, 0.5], [2.0, 0.5, 0]])
g = s * pi[:, None]
np.fill_diagonal(g, -g.sum(axis=0))
gen = MarkovGenerator(g)

p0 = ClassicalState.definite(3, 2)
print("   t   p_0      p_1      p_2      I_A     Kraus gap")
for t in (0.0, 0.5, 1.0, 2.0, 5.0, 20.0):
    out = evolve_master(p0, gen, t)
    gap = np.max(np.abs(apply_kraus(kraus_from_transition(gen.transition(t)), p0.matrix()) - out.matrix()))
    p = out.probabilities
    print(f"{t:5.1f}  {p[0]:.5f}  {p[1]:.5f}  {p[2]:.5f}  {shannon_information(out):.5f}  {gap:.1e}")

print("\ndetailed balance at pi:", detailed_balance_holds(gen, ClassicalState(pi)))
print("pi after t = 10:", evolve_master(ClassicalState(pi), gen, 10.0).probabilities)
