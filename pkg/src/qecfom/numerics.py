"""Small dense linear algebra helpers.

Matrices and state vectors are plain complex ``numpy`` arrays. Everything
here is sized for the problems in this package (dimension <= 64), so the
Hermitian eigensolver is a straightforward cyclic Jacobi iteration rather
than a LAPACK call.
"""

from __future__ import annotations

import math
from typing import Iterable, Tuple

import numpy as np

from qecfom.errors import DomainError, NotHermitian

HERMITIAN_TOL = 1e-12
CLAMP_TOL = 1e-10

_MAX_SWEEPS = 60


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two vectors or two matrices.

    The index of ``a`` varies slowest, so ``tensor(e0, e1)`` is the basis
    vector at index 1.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != b.ndim:
        raise ValueError(f"cannot tensor a {a.ndim}-d array with a {b.ndim}-d array")
    return np.kron(a, b)


def ket(bits: str) -> np.ndarray:
    """Computational basis vector for a bit string, leftmost bit most significant."""
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def projector(v: np.ndarray) -> np.ndarray:
    """Return |v><v|."""
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    # Annihilates a[p, q] in place: a <- U^H a U, v <- v U.
    apq = a[p, q]
    mag = abs(apq)
    phase = apq / mag
    theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
    if theta == 0.0:
        t = 1.0
    elif abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    w = phase.conjugate()
    rot = np.array([[c, s], [-s * w, c * w]], dtype=complex)
    cols = [p, q]
    a[:, cols] = a[:, cols] @ rot
    a[cols, :] = rot.conj().T @ a[cols, :]
    v[:, cols] = v[:, cols] @ rot
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def eigh(m: np.ndarray, tol: float = HERMITIAN_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.

    Args:
        m: square Hermitian matrix.
        tol: absolute entrywise tolerance for the Hermiticity check.

    Returns:
        ``(w, v)`` with real eigenvalues ``w`` in ascending order and the
        matching orthonormal eigenvectors as the columns of ``v``.

    Raises:
        NotHermitian: if ``m`` is not square or ``max|m - m^H| > tol``.
    """
    m = np.asarray(m)
    if not is_hermitian(m, tol):
        raise NotHermitian("eigh requires a Hermitian matrix")
    n = m.shape[0]
    a = (m + m.conj().T).astype(complex) / 2.0
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if n > 1 and scale > 0.0:
        target = (1e-16 * scale) ** 2
        for _ in range(_MAX_SWEEPS):
            off = np.sum(np.abs(a - np.diag(np.diag(a))) ** 2)
            if off <= target:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    if abs(a[p, q]) > 1e-300:
                        _jacobi_rotate(a, v, p, q)
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigvalsh(m: np.ndarray) -> np.ndarray:
    return eigh(m)[0]


def clamp_eigenvalues(w: np.ndarray, tol: float = CLAMP_TOL) -> np.ndarray:
    """Zero out round-off negatives in a PSD spectrum.

    Values in ``[-tol, 0)`` become 0; anything more negative raises
    :class:`DomainError`.
    """
    w = np.asarray(w, dtype=float)
    if np.any(w < -tol):
        raise DomainError(f"eigenvalue {w.min():.3e} is below -{tol:g}")
    return np.where(w < 0.0, 0.0, w)


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix."""
    w, v = eigh(m)
    w = clamp_eigenvalues(w)
    return (v * np.sqrt(w)) @ v.conj().T


def binary_entropy_terms(p: Iterable[float]) -> float:
    """Shannon entropy ``-sum p_i log2 p_i`` in bits, with ``0 log 0 = 0``.

    >>> binary_entropy_terms([0.5, 0.5])
    1.0
    """
    probs = np.asarray(list(p), dtype=float)
    if np.any(probs < -1e-12) or np.any(probs > 1.0 + 1e-12):
        raise DomainError("probabilities must lie in [0, 1]")
    if probs.sum() > 1.0 + 1e-9:
        raise DomainError(f"probabilities sum to {probs.sum():.12g} > 1")
    nz = probs[probs > 0.0]
    return float(-np.sum(nz * np.log2(nz))) + 0.0


def binary_entropy(p: float) -> float:
    """h2(p), the entropy of a biased coin."""
    return binary_entropy_terms([p, 1.0 - p])
