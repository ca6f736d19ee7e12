"""Figures of merit for the decoded ensemble: quantum mutual information and
average fidelity, with the kept-fraction weighting used for strategy II.

Fidelity here is the square-root (Uhlmann) form ``Tr sqrt(sqrt(rho) sigma
sqrt(rho))`` without the outer square; some references square it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Dict, Tuple

import numpy as np

from qecfom.errors import ConsistencyError, DomainError, NotDensityMatrix
from qecfom.fivequbit import JointState, LogicalState, Strategy, joint_states
from qecfom.numerics import clamp_eigenvalues, eigvalsh, psd_sqrt

ROUTE_TOL = 1e-9
TRACE_TOL = 1e-9


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy of a density matrix in bits."""
    rho = np.asarray(rho, dtype=complex)
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotDensityMatrix(f"trace is {tr:.12g}, expected 1")
    try:
        w = clamp_eigenvalues(eigvalsh(rho))
    except DomainError as exc:
        raise NotDensityMatrix(str(exc)) from exc
    w = w[w > 0.0]
    return float(-np.sum(w * np.log2(w))) + 0.0


def receiver_marginal(joint: JointState) -> np.ndarray:
    """Trace out the sender label: ``[[r11+r33, r12+r34], [r21+r43, r22+r44]]``."""
    top, bottom = joint.blocks
    return top + bottom


def sender_marginal(joint: JointState) -> np.ndarray:
    """Trace out the receiver: diagonal of the two block traces."""
    top, bottom = joint.blocks
    return np.diag([np.trace(top), np.trace(bottom)]).astype(complex)


def _check_uniform_sender(rho_s: np.ndarray) -> None:
    err = np.max(np.abs(rho_s - np.eye(2) / 2))
    if err > ROUTE_TOL:
        raise ConsistencyError(f"sender marginal differs from I/2 by {err:.3e}")


def quantum_mutual_info(joint: JointState) -> float:
    """``S(rho_S) + S(rho_R) - S(rho_C)`` in bits.

    The shortcut ``1 + S(rho_R) - S(rho_C)``, which assumes a uniform sender,
    is evaluated too and must agree to 1e-9.

    Raises:
        ConsistencyError: if the sender marginal is not I/2 or the two routes
            disagree.
    """
    rho_s = sender_marginal(joint)
    rho_r = receiver_marginal(joint)
    s_joint = von_neumann_entropy(joint.matrix)
    s_r = von_neumann_entropy(rho_r)
    full = von_neumann_entropy(rho_s) + s_r - s_joint
    shortcut = 1.0 + s_r - s_joint
    if abs(full - shortcut) > ROUTE_TOL:
        raise ConsistencyError(f"mutual information routes differ: {full!r} vs {shortcut!r}")
    _check_uniform_sender(rho_s)
    return full


def uhlmann_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """``Tr sqrt(sqrt(rho) sigma sqrt(rho))`` for PSD ``rho`` and ``sigma``."""
    root = psd_sqrt(rho)
    inner = root @ np.asarray(sigma, dtype=complex) @ root
    inner = (inner + inner.conj().T) / 2
    return float(np.sum(np.sqrt(clamp_eigenvalues(eigvalsh(inner)))))


def average_fidelity(joint: JointState) -> float:
    """Fidelity between the sender and receiver marginals.

    With ``rho_S = I/2`` this is ``(sqrt(l1) + sqrt(l2)) / sqrt(2)`` for the
    eigenvalues ``l1, l2`` of ``rho_R``; the general Uhlmann form is computed
    alongside and must agree to 1e-9.
    """
    rho_s = sender_marginal(joint)
    rho_r = receiver_marginal(joint)
    lam = clamp_eigenvalues(eigvalsh(rho_r))
    shortcut = float(np.sum(np.sqrt(lam)) / math.sqrt(2.0))
    general = uhlmann_fidelity(rho_s, rho_r)
    if abs(shortcut - general) > ROUTE_TOL:
        raise ConsistencyError(f"fidelity routes differ: {shortcut!r} vs {general!r}")
    return shortcut


@dataclass(frozen=True)
class FomResult:
    mutual_info: float
    fidelity: float
    kept_fraction: float
    strategy: Strategy
    params: Tuple[float, float, float]

    @property
    def conditional_fidelity(self) -> float:
        """Fidelity averaged over kept states only (not used for the figures)."""
        if self.kept_fraction <= 0.0:
            return 0.0
        return self.fidelity / self.kept_fraction

    @property
    def conditional_mutual_info(self) -> float:
        if self.kept_fraction <= 0.0:
            return 0.0
        return self.mutual_info / self.kept_fraction


def strategy2_weighted(result_on_kept: FomResult, n: float) -> FomResult:
    """Scale information and fidelity by the kept fraction ``n``.

    Discarded states carry no information and count as fidelity zero.
    """
    if not 0.0 <= n <= 1.0:
        raise DomainError(f"kept fraction must lie in [0, 1], got {n!r}")
    return replace(
        result_on_kept,
        mutual_info=n * result_on_kept.mutual_info,
        fidelity=n * result_on_kept.fidelity,
        kept_fraction=n,
    )


def _clip_unit(x: float, what: str) -> float:
    if x < -ROUTE_TOL or x > 1.0 + ROUTE_TOL:
        raise ConsistencyError(f"{what} {x!r} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


def figures_of_merit(joint: JointState, params=(math.nan,) * 3) -> FomResult:
    """Mutual information and fidelity of one joint state.

    Strategy-II results are weighted by the kept fraction; an empty
    strategy-II ensemble scores zero on both.
    """
    if joint.strategy == "II" and joint.kept_fraction <= 0.0:
        return FomResult(0.0, 0.0, 0.0, "II", tuple(params))
    res = FomResult(
        _clip_unit(quantum_mutual_info(joint), "mutual information"),
        _clip_unit(average_fidelity(joint), "fidelity"),
        1.0,
        joint.strategy,
        tuple(params),
    )
    if joint.strategy == "II":
        res = strategy2_weighted(res, joint.kept_fraction)
    return res


def evaluate(alpha: float, phi: float, q: float) -> Dict[Strategy, FomResult]:
    """Both strategies' figures of merit at one ``(alpha, phi, q)`` point."""
    params = (alpha, phi, q)
    joints = joint_states(LogicalState(alpha, phi), q)
    return {s: figures_of_merit(j, params) for s, j in joints.items()}
