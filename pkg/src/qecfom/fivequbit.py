"""Five-qubit perfect code under an independent bit-flip channel.

Qubit 1 is the leftmost symbol of a ket and the most significant bit of the
state index, so ``|b1 b2 b3 b4 b5>`` sits at ``sum_i b_i 2**(5 - i)``.

The 32 syndrome vectors ``|S_jkl>`` are the codewords ``|j_L>`` hit by a
single-qubit operator on qubit ``k``: ``l = 1`` is X, ``l = 2`` is Z and
``l = 3`` is the real matrix ``iY = [[0, -1], [1, 0]]``. ``(k, l) = (0, 0)``
is the code space itself. The syndrome measurement projects onto the sixteen
two-dimensional spaces spanned by ``|S_0kl>, |S_1kl>``, which keeps the
logical coherences of each collapsed state.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, List, Literal, Sequence, Tuple

import numpy as np

from qecfom.errors import DegenerateEnsemble, DomainError, OrthonormalityViolation
from qecfom.numerics import ket, projector

Strategy = Literal["I", "II"]

N_QUBITS = 5
DIM = 2**N_QUBITS

# Kept fractions at or below this are round-off from a fully discarded ensemble.
KEPT_FLOOR = 1e-12

# (sign, ket) terms of the two codewords, each scaled by 1/sqrt(8).
_ZERO_L_TERMS = (
    (-1, "00000"), (+1, "01111"), (-1, "10011"), (+1, "11100"),
    (+1, "00110"), (+1, "01001"), (+1, "10101"), (+1, "11010"),
)
_ONE_L_TERMS = (
    (-1, "11111"), (+1, "10000"), (+1, "01100"), (-1, "00011"),
    (+1, "11001"), (+1, "10110"), (-1, "01010"), (-1, "00101"),
)

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I_TIMES_Y = np.array([[0, -1], [1, 0]], dtype=complex)
_FLIPS = {1: _PAULI_X, 2: _PAULI_Z, 3: _I_TIMES_Y}

#: Syndrome labels in measurement order: the code space, then (k, l) for
#: k = 1..5 and l = 1..3.
OUTCOME_LABELS: Tuple[Tuple[int, int], ...] = ((0, 0),) + tuple(
    (k, l) for k in range(1, N_QUBITS + 1) for l in (1, 2, 3)
)


def is_correctable(k: int, l: int) -> bool:
    """Whether a ``(k, l)`` syndrome is undone by a unitary (no error or a bit flip)."""
    return l in (0, 1)


def build_codewords() -> Tuple[np.ndarray, np.ndarray]:
    """Return ``(|0_L>, |1_L>)`` as length-32 complex vectors."""

    def build(terms):
        return sum(sign * ket(bits) for sign, bits in terms) / np.sqrt(8)

    return build(_ZERO_L_TERMS), build(_ONE_L_TERMS)


def single_qubit_flip(v: np.ndarray, k: int, l: int) -> np.ndarray:
    """Apply X (``l=1``), Z (``l=2``) or iY (``l=3``) to qubit ``k`` (1-based)."""
    if not 1 <= k <= N_QUBITS:
        raise IndexError(f"qubit index {k} outside 1..{N_QUBITS}")
    if l not in _FLIPS:
        raise IndexError(f"flip type {l} outside 1..3")
    v = np.asarray(v, dtype=complex)
    if v.shape != (DIM,):
        raise ValueError(f"expected a length-{DIM} state, got shape {v.shape}")
    # Axis k-1 of the (2,)*5 view is qubit k.
    t = v.reshape((2,) * N_QUBITS)
    t = np.moveaxis(np.tensordot(_FLIPS[l], t, axes=([1], [k - 1])), 0, k - 1)
    return t.reshape(DIM)


def flip_pattern(v: np.ndarray, pattern: int) -> np.ndarray:
    """Apply X to every qubit whose bit is set in the 5-bit mask ``pattern``."""
    return np.asarray(v)[np.arange(DIM) ^ pattern]


@dataclass(frozen=True)
class SyndromeBasis:
    """The codewords and the 30 single-error syndrome vectors.

    ``vectors[(j, k, l)]`` is ``|S_jkl>``; ``matrix`` holds all 32 as columns
    in the order of :data:`OUTCOME_LABELS`, logical index ``j`` fastest.
    """

    vectors: Dict[Tuple[int, int, int], np.ndarray]
    matrix: np.ndarray

    def pair(self, k: int, l: int) -> np.ndarray:
        """32x2 isometry whose columns are ``|S_0kl>`` and ``|S_1kl>``."""
        i = OUTCOME_LABELS.index((k, l))
        return self.matrix[:, 2 * i : 2 * i + 2]

    def __len__(self):
        return len(self.vectors)


@functools.lru_cache(maxsize=None)
def build_syndrome_basis(tol: float = 1e-12) -> SyndromeBasis:
    """Construct the 32 syndrome vectors and verify their orthonormality.

    Raises:
        OrthonormalityViolation: if the Gram matrix differs from the identity
            by more than ``tol`` in any entry.
    """
    codewords = build_codewords()
    vectors = {}
    for k, l in OUTCOME_LABELS:
        for j, cw in enumerate(codewords):
            vectors[(j, k, l)] = cw if k == 0 else single_qubit_flip(cw, k, l)
    columns = [vectors[(j, k, l)] for k, l in OUTCOME_LABELS for j in (0, 1)]
    matrix = np.column_stack(columns)
    matrix.setflags(write=False)
    gram = matrix.conj().T @ matrix
    err = np.max(np.abs(gram - np.eye(DIM)))
    if err > tol:
        raise OrthonormalityViolation(f"syndrome Gram matrix off identity by {err:.3e}")
    return SyndromeBasis(vectors, matrix)


@dataclass(frozen=True)
class LogicalState:
    """``|g> = sin(alpha)|0_L> + exp(i phi) cos(alpha)|1_L>``."""

    alpha: float
    phi: float = 0.0

    def logical(self) -> np.ndarray:
        return np.array([np.sin(self.alpha), np.exp(1j * self.phi) * np.cos(self.alpha)])

    def logical_orthogonal(self) -> np.ndarray:
        """``|g_perp> = cos(alpha)|0_L> - exp(i phi) sin(alpha)|1_L>``."""
        return np.array([np.cos(self.alpha), -np.exp(1j * self.phi) * np.sin(self.alpha)])

    def encoded(self) -> np.ndarray:
        zero_l, one_l = build_codewords()
        a, b = self.logical()
        return a * zero_l + b * one_l

    def encoded_orthogonal(self) -> np.ndarray:
        zero_l, one_l = build_codewords()
        a, b = self.logical_orthogonal()
        return a * zero_l + b * one_l


def pattern_probability(pattern: int, q: float) -> float:
    w = bin(pattern).count("1")
    return q**w * (1.0 - q) ** (N_QUBITS - w)


def bitflip_channel(rho: np.ndarray, q: float) -> np.ndarray:
    """Flip each of the five qubits independently with probability ``q``.

    Sums ``q^|s| (1-q)^(5-|s|) X_s rho X_s`` over the 32 flip masks ``s``.
    Conjugation by ``X_s`` is a permutation of indices, so no operator
    products are formed.
    """
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"q must lie in [0, 1], got {q!r}")
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (DIM, DIM):
        raise ValueError(f"expected a {DIM}x{DIM} density matrix")
    out = np.zeros_like(rho)
    base = np.arange(DIM)
    for s in range(DIM):
        w = pattern_probability(s, q)
        if w == 0.0:
            continue
        idx = base ^ s
        out += w * rho[np.ix_(idx, idx)]
    return out


@dataclass(frozen=True)
class SyndromeOutcome:
    """Unnormalised logical-basis state left after observing syndrome ``(k, l)``."""

    k: int
    l: int
    collapsed_block: np.ndarray

    @property
    def weight(self) -> float:
        return float(np.trace(self.collapsed_block).real)

    @property
    def correctable(self) -> bool:
        return is_correctable(self.k, self.l)


def measure_syndromes(rho_out: np.ndarray) -> List[SyndromeOutcome]:
    """Project onto the 16 degenerate syndrome spaces.

    Entry ``[j, j']`` of each block is ``<S_jkl| rho_out |S_j'kl>``.
    """
    basis = build_syndrome_basis()
    m = basis.matrix
    full = m.conj().T @ np.asarray(rho_out, dtype=complex) @ m
    return [
        SyndromeOutcome(k, l, full[2 * i : 2 * i + 2, 2 * i : 2 * i + 2].copy())
        for i, (k, l) in enumerate(OUTCOME_LABELS)
    ]


def uncorrectable_weight(outcomes: Sequence[SyndromeOutcome]) -> float:
    """Total probability of the Z- and iY-type syndromes."""
    return sum(o.weight for o in outcomes if not o.correctable)


def _corrected_sum(outcomes: Sequence[SyndromeOutcome]) -> np.ndarray:
    # The <S_jk1|.|S_j'k1> sandwich already applies U_k = sum_j |j_L><S_jk1|.
    out = np.zeros((2, 2), dtype=complex)
    for o in outcomes:
        if o.correctable:
            out += o.collapsed_block
    return out


def recover_strategy1(outcomes: Sequence[SyndromeOutcome]) -> np.ndarray:
    """Correct what can be corrected; replace the rest with I/2."""
    return _corrected_sum(outcomes) + uncorrectable_weight(outcomes) * np.eye(2) / 2


def recover_strategy2(outcomes: Sequence[SyndromeOutcome]) -> Tuple[np.ndarray, float]:
    """Correct what can be corrected; discard the rest.

    Returns:
        The unnormalised kept state and the discarded probability.
    """
    return _corrected_sum(outcomes), uncorrectable_weight(outcomes)


def transmit(v: np.ndarray, q: float) -> List[SyndromeOutcome]:
    """Send an encoded pure state through the channel and measure its syndrome."""
    return measure_syndromes(bitflip_channel(projector(v), q))


@dataclass(frozen=True)
class JointState:
    """Sender-receiver state of the decoded ensemble.

    ``matrix`` is 4x4 in the basis ``|0_L>|g>, |1_L>|g>, |0_L>|g_perp>,
    |1_L>|g_perp>``: the first factor is the receiver's decoded logical
    qubit, the second labels which state was sent. For strategy II the
    matrix is renormalised over the kept outcomes and ``kept_fraction``
    holds the surviving probability.
    """

    matrix: np.ndarray
    kept_fraction: float
    strategy: Strategy
    uncorrectable: Tuple[float, float] = (0.0, 0.0)

    @property
    def blocks(self) -> Tuple[np.ndarray, np.ndarray]:
        return self.matrix[:2, :2], self.matrix[2:, 2:]


def assemble_joint(rho_g: np.ndarray, rho_perp: np.ndarray) -> np.ndarray:
    c = np.zeros((4, 4), dtype=complex)
    c[:2, :2] = rho_g / 2
    c[2:, 2:] = rho_perp / 2
    return c


def joint_states(g: LogicalState, q: float) -> Dict[Strategy, JointState]:
    """Joint states for both strategies from a single channel evaluation.

    Raises:
        DegenerateEnsemble: only via :func:`joint_state`; here a strategy-II
            state with nothing kept is returned with ``kept_fraction == 0``
            and a zero matrix.
    """
    out_g = transmit(g.encoded(), q)
    out_perp = transmit(g.encoded_orthogonal(), q)
    d_g = uncorrectable_weight(out_g)
    d_perp = uncorrectable_weight(out_perp)

    joint_1 = JointState(
        assemble_joint(recover_strategy1(out_g), recover_strategy1(out_perp)),
        1.0,
        "I",
        (d_g, d_perp),
    )
    kept_g, _ = recover_strategy2(out_g)
    kept_perp, _ = recover_strategy2(out_perp)
    kept = float((np.trace(kept_g) + np.trace(kept_perp)).real) / 2
    raw = assemble_joint(kept_g, kept_perp)
    if kept > KEPT_FLOOR:
        joint_2 = JointState(raw / kept, kept, "II", (d_g, d_perp))
    else:
        joint_2 = JointState(np.zeros_like(raw), 0.0, "II", (d_g, d_perp))
    return {"I": joint_1, "II": joint_2}


def joint_state(g: LogicalState, q: float, strategy: Strategy) -> JointState:
    """Joint sender-receiver state after channel, syndrome measurement and recovery.

    Raises:
        DegenerateEnsemble: strategy II with every outcome discarded.
    """
    if strategy not in ("I", "II"):
        raise ValueError(f"unknown strategy {strategy!r}")
    result = joint_states(g, q)[strategy]
    if strategy == "II" and result.kept_fraction <= 0.0:
        raise DegenerateEnsemble("strategy II discarded every outcome")
    return result
