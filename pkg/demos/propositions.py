"""
Propositions about the cat.

Pointer subset projectors form a Boolean algebra: "alive and dead" is the
zero operator and "alive or dead" is the identity. Two non-commuting
quantum projectors do not.
"""

import numpy as np

from hybridmeasure import (
    Proposition,
    boolean_sublattice_check,
    complement,
    conjunction,
    disjunction,
    from_pointer_subset,
    power_set_family,
)

alive, dead = from_pointer_subset(2, [0]), from_pointer_subset(2, [1])
print("alive AND dead:\n", conjunction(alive, dead).projector.real)
print("alive OR dead:\n", disjunction(alive, dead).projector.real)
print("NOT alive == dead:", complement(alive) == dead)
for n in range(1, 7):
    print(f"power set over {n} pointers is Boolean:", boolean_sublattice_check(power_set_family(n)))
print("{|0>, |+>} is Boolean:", boolean_sublattice_check([Proposition.from_vector([1, 0]), Proposition.from_vector([1, 1])]))
