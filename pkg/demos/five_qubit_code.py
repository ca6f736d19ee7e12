"""Walk one logical qubit through the five-qubit code and a bit-flip channel."""

import math

from qecfom.fivequbit import (
    LogicalState,
    recover_strategy1,
    recover_strategy2,
    transmit,
    uncorrectable_weight,
)

g = LogicalState(alpha=math.pi / 4, phi=0.0)
q = 0.2

outcomes = transmit(g.encoded(), q)
print(f"syndrome weights at q = {q}")
for o in outcomes:
    tag = "fix" if o.correctable else "lost"
    print(f"  (k={o.k}, l={o.l})  {o.weight:.5f}  {tag}")

d = uncorrectable_weight(outcomes)
print(f"\nweight in uncorrectable syndromes D = {d:.5f}")

rho1 = recover_strategy1(outcomes)
kept, _ = recover_strategy2(outcomes)
print("\nstrategy I output (lost part replaced by I/2):")
print(rho1.round(4))
print(f"\nstrategy II keeps trace {kept.trace().real:.4f}:")
print(kept.round(4))
