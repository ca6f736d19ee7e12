"""Classical bit-flip channel protected by the 4-bit repetition code.

Logical 0 and 1 are sent as ``0000`` and ``1111``. After decoding, one bit
flip is corrected, two flips are detected but cannot be corrected, and three
or four flips are silently decoded to the wrong value. Two ways of handling
the detected-but-uncorrectable strings are compared:

* strategy I replaces them with a uniformly random bit;
* strategy II discards them and tags their positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from qecfom.errors import DegenerateChannel, DomainError
from qecfom.numerics import binary_entropy, binary_entropy_terms


def _check_probability(name: str, value: float) -> None:
    if not (0.0 <= value <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")


def evolve_flip_probability(q0: float, gamma: float, t: float) -> float:
    """Probability that a bit is wrong after time ``t`` at flip rate ``gamma``.

    Solves ``dq/dt = gamma (1 - 2q)`` from ``q(0) = q0``; the solution relaxes
    to 1/2.
    """
    _check_probability("q0", q0)
    if gamma < 0 or t < 0:
        raise DomainError("gamma and t must be non-negative")
    return (q0 - 0.5) * math.exp(-2.0 * gamma * t) + 0.5


@dataclass(frozen=True)
class ChannelParams:
    """Per-bit flip probability, optionally derived from a rate and a time."""

    q: float
    gamma: Optional[float] = None
    t: Optional[float] = None

    def __post_init__(self):
        _check_probability("q", self.q)

    @classmethod
    def from_rate(cls, gamma: float, t: float, q0: float = 0.0) -> "ChannelParams":
        return cls(evolve_flip_probability(q0, gamma, t), gamma, t)


@dataclass(frozen=True)
class ClassicalChannelMatrix:
    """Decoder output probabilities for either input symbol.

    ``p_ok``: decoded correctly; ``p_err``: decoded to the wrong bit;
    ``p_unc``: flagged as uncorrectable.
    """

    p_ok: float
    p_err: float
    p_unc: float

    def __post_init__(self):
        for name in ("p_ok", "p_err", "p_unc"):
            _check_probability(name, getattr(self, name))
        total = self.p_ok + self.p_err + self.p_unc
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"channel matrix row sums to {total!r}, not 1")

    def as_table(self) -> np.ndarray:
        """Transition matrix p(y|x) with columns (0, 1, uncorrectable)."""
        return np.array(
            [[self.p_ok, self.p_err, self.p_unc], [self.p_err, self.p_ok, self.p_unc]]
        )


def repetition4_channel(q: float) -> ClassicalChannelMatrix:
    _check_probability("q", q)
    r = 1.0 - q
    p_ok = r**4 + 4 * q * r**3
    p_unc = 6 * q**2 * r**2
    p_err = q**4 + 4 * q**3 * r
    return ClassicalChannelMatrix(p_ok, p_err, p_unc)


def strategy1_matrix(m: ClassicalChannelMatrix) -> tuple[float, float]:
    """(p_correct, p_wrong) after uncorrectable strings become random bits."""
    return m.p_ok + m.p_unc / 2, m.p_err + m.p_unc / 2


def strategy2_matrix(m: ClassicalChannelMatrix) -> tuple[float, float]:
    """(p_correct, p_wrong) conditioned on the string not being discarded."""
    kept = 1.0 - m.p_unc
    if kept <= 0.0:
        raise DegenerateChannel("every string is flagged uncorrectable")
    return m.p_ok / kept, m.p_err / kept


def _bsc_information(p_correct: float, p_wrong: float) -> float:
    # 1 - h2 for a symmetric channel fed uniform bits.
    return 1.0 - binary_entropy_terms([p_correct, p_wrong])


def mutual_info_strategy1(m: ClassicalChannelMatrix) -> float:
    return _bsc_information(*strategy1_matrix(m))


def mutual_info_strategy2(m: ClassicalChannelMatrix) -> tuple[float, float]:
    """Information per surviving bit and averaged over all sent bits.

    Returns:
        ``(i_ok, i_avg)`` with ``i_avg = (1 - p_unc) * i_ok``.

    Raises:
        DegenerateChannel: if ``p_unc == 1``.
    """
    i_ok = _bsc_information(*strategy2_matrix(m))
    return i_ok, (1.0 - m.p_unc) * i_ok


def success_probabilities(m: ClassicalChannelMatrix) -> tuple[float, float]:
    """Probability the decoded bit equals the sent one, for strategies I and II.

    Strategy II scores tagged bits as failures.
    """
    return m.p_ok + m.p_unc / 2, m.p_ok


def strategy1_joint_table(m: ClassicalChannelMatrix) -> np.ndarray:
    """Joint p(x, y) for uniform inputs through the strategy-I channel."""
    correct, wrong = strategy1_matrix(m)
    return 0.5 * np.array([[correct, wrong], [wrong, correct]])


def mutual_info_generic(joint) -> float:
    """Mutual information of a joint probability table, in bits.

    Evaluates ``-sum p(x,y) log2[p(x) p(y) / p(x,y)]`` over the non-zero cells.
    Rows index the input, columns the output.
    """
    joint = np.asarray(joint, dtype=float)
    if joint.ndim != 2:
        raise DomainError("joint table must be two-dimensional")
    if np.any(joint < 0.0) or abs(joint.sum() - 1.0) > 1e-12:
        raise DomainError("joint table must be non-negative and sum to 1")
    px = joint.sum(axis=1)
    py = joint.sum(axis=0)
    total = 0.0
    for i, j in zip(*np.nonzero(joint)):
        pxy = joint[i, j]
        total -= pxy * (math.log2(px[i]) + math.log2(py[j]) - math.log2(pxy))
    return total


def mutual_info_entropies(joint) -> float:
    """Same quantity as :func:`mutual_info_generic`, as S(X) + S(Y) - S(X,Y)."""
    joint = np.asarray(joint, dtype=float)
    return (
        binary_entropy_terms(joint.sum(axis=1))
        + binary_entropy_terms(joint.sum(axis=0))
        - binary_entropy_terms(joint.ravel())
    )


class ShannonExample(NamedTuple):
    equivocation_rate: float
    similarity_strategy_matches: float
    erasure_loss: float


def shannon_example(n_bits_per_s: float = 1000, err_rate: float = 0.01) -> ShannonExample:
    """Rates for an uncoded binary symmetric channel.

    * ``equivocation_rate``: information lost per second, ``n h2(err)``.
    * ``similarity_strategy_matches``: bits per second that agree with the
      sender when every detected error is replaced by a random bit.
    * ``erasure_loss``: bits per second discarded when detected errors are
      tagged instead.
    """
    if not (0.0 <= err_rate <= 0.5):
        raise DomainError("err_rate must lie in [0, 1/2]")
    n = n_bits_per_s
    return ShannonExample(
        n * binary_entropy(err_rate),
        n * (1.0 - err_rate) + n * err_rate / 2,
        n * err_rate,
    )
