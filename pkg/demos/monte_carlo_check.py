"""Sample the flip channel and compare syndrome frequencies with the model."""

import math

import numpy as np

from qecfom.fivequbit import LogicalState, build_syndrome_basis, flip_pattern, transmit

rng = np.random.default_rng(7)
n, q = 100_000, 0.15
state = LogicalState(0.6, 0.9).encoded()
basis = build_syndrome_basis()

masks = (rng.random((n, 5)) < q) @ (1 << np.arange(4, -1, -1))
counts = {}
for mask, m in enumerate(np.bincount(masks, minlength=32)):
    if m == 0:
        continue
    v = flip_pattern(state, mask)
    labels, probs = [], []
    for o in transmit(state, 0.0):
        labels.append((o.k, o.l))
        probs.append(np.linalg.norm(basis.pair(o.k, o.l).conj().T @ v) ** 2)
    for lab, c in zip(labels, rng.multinomial(m, np.array(probs) / sum(probs))):
        counts[lab] = counts.get(lab, 0) + c

print(f"{'(k,l)':>7} {'model':>8} {'sampled':>8} {'z':>6}")
for o in transmit(state, q):
    f = counts.get((o.k, o.l), 0) / n
    sigma = math.sqrt(max(o.weight * (1 - o.weight), 1e-300) / n)
    print(f"{str((o.k, o.l)):>7} {o.weight:8.5f} {f:8.5f} {(f - o.weight) / sigma:6.2f}")
