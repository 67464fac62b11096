"""
Schroedinger's cat and Wigner's friend as hybrid states.

Before the box is opened the apparatus information is ln 2. Registration
removes it. Completion leaves a pure joint state. The friend's completed
record is unchanged by the outer observer's query.
"""

import math

from hybridmeasure import build_scenario, run_trajectories

cat = run_trajectories(build_scenario("cat", trajectories=10_000, seed=3))
print("cat information series (means over trajectories):")
for row in cat.aggregate["entropy_series"]:
    print(f"  step {row['step']:>2} {row['action']:<9} I_A {row['I_A']:.6f}  I_S {row['I_S']:.6f}  I_AS {row['I_AS']:.6f}")
print(f"  ln 2 = {math.log(2):.6f}")
print("opened box:", cat.aggregate["outcome_counts"]["1:register"])
print("atom given alive:", cat.aggregate["outcome_counts"]["2:complete|alive"])
print("atom given dead:", cat.aggregate["outcome_counts"]["2:complete|dead"])

friend = run_trajectories(build_scenario("wigner_friend", trajectories=2_000, seed=4))
rec = friend.records[0]
for ev in rec.events:
    print(f"friend trajectory 0, step {ev.step:>2} {ev.action:<9} outcome {ev.outcome!s:<12} I_AS {ev.i_total:.3e}")
