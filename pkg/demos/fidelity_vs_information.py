"""Fidelity and mutual information disagree about which strategy is better.

Replacing lost blocks with I/2 keeps the receiver's marginal maximally mixed,
so the average fidelity stays at 1, yet the sender-receiver correlation drops.
Discarding them keeps the correlation but loses the discarded fraction.
"""

import math

import numpy as np

from qecfom.fom import evaluate

alpha = math.pi / 4
print("alpha = pi/4, phi = 0")
print(f"{'q':>5} {'I_I':>8} {'I_II':>8} {'F_I':>8} {'F_II':>8} {'N':>8}")
for q in np.linspace(0.0, 0.5, 11):
    r = evaluate(alpha, 0.0, q)
    print(
        f"{q:5.2f} {r['I'].mutual_info:8.4f} {r['II'].mutual_info:8.4f}"
        f" {r['I'].fidelity:8.4f} {r['II'].fidelity:8.4f} {r['II'].kept_fraction:8.4f}"
    )
