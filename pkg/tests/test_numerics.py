import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qecfom.errors import DomainError, NotHermitian
from qecfom.numerics import (
    binary_entropy_terms,
    clamp_eigenvalues,
    eigh,
    ket,
    psd_sqrt,
    tensor,
)


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


class TestTensor:
    def test_basis_vectors(self):
        e0 = np.array([1.0, 0.0])
        np.testing.assert_array_equal(tensor(e0, e0), [1, 0, 0, 0])

    def test_identity(self):
        np.testing.assert_array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))

    def test_equal_superposition(self):
        g = np.array([1.0, 1.0]) / math.sqrt(2)  # alpha = pi/4, phi = 0
        np.testing.assert_allclose(tensor(g, g), np.full(4, 0.5), atol=1e-15)

    def test_first_factor_slowest(self):
        assert tensor(ket("0"), ket("1"))[1] == 1
        assert tensor(ket("1"), ket("0"))[2] == 1

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_associative(self, seed):
        rng = np.random.default_rng(seed)
        a, b, c = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)) for d in (2, 3, 2))
        left, right = tensor(tensor(a, b), c), tensor(a, tensor(b, c))
        assert left.shape == right.shape == (12, 12)
        np.testing.assert_allclose(left, right, rtol=1e-14, atol=0)

    def test_rejects_mixed_kinds(self):
        with pytest.raises(ValueError):
            tensor(np.eye(2), np.ones(2))


class TestEigh:
    def test_identity(self):
        w, _ = eigh(np.eye(2))
        np.testing.assert_allclose(w, [1, 1])

    def test_diagonal(self):
        w, _ = eigh(np.diag([0.75, 0.25]))
        np.testing.assert_allclose(w, [0.25, 0.75])

    def test_rank_one_projector(self):
        w, v = eigh(np.array([[0.5, 0.5], [0.5, 0.5]]))
        np.testing.assert_allclose(w, [0.0, 1.0], atol=1e-15)
        # eigenvector for 1 is (1, 1)/sqrt(2) up to phase
        assert abs(abs(v[0, 1]) - 1 / math.sqrt(2)) < 1e-12

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            eigh(np.array([[1.0, 1.0], [0.0, 1.0]]))
        with pytest.raises(NotHermitian):
            eigh(np.ones((2, 3)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 7, 16, 32])
    def test_random_hermitian(self, n):
        m = random_hermitian(n, seed=n)
        w, v = eigh(m)
        assert np.all(np.diff(w) >= 0)
        np.testing.assert_allclose(m @ v, v * w, atol=1e-9)
        np.testing.assert_allclose(v.conj().T @ v, np.eye(n), atol=1e-9)
        np.testing.assert_allclose((v * w) @ v.conj().T, m, atol=1e-9)
        np.testing.assert_allclose(w, np.linalg.eigvalsh(m), atol=1e-9)

    @given(st.integers(1, 32), st.integers(0, 2**32 - 1))
    @settings(max_examples=30, deadline=None)
    def test_reconstruction_property(self, n, seed):
        m = random_hermitian(n, seed)
        w, v = eigh(m)
        assert np.max(np.abs((v * w) @ v.conj().T - m)) <= 1e-9
        assert np.max(np.abs(v.conj().T @ v - np.eye(n))) <= 1e-9

    def test_degenerate_spectrum(self):
        rng = np.random.default_rng(5)
        q, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
        m = q @ np.diag([0.1, 0.1, 0.1, 0.3, 0.3, 0.1]) @ q.conj().T
        w, v = eigh(m)
        np.testing.assert_allclose(w, [0.1, 0.1, 0.1, 0.1, 0.3, 0.3], atol=1e-12)
        np.testing.assert_allclose((v * w) @ v.conj().T, m, atol=1e-12)

    def test_zero_matrix(self):
        w, v = eigh(np.zeros((3, 3)))
        np.testing.assert_array_equal(w, 0)
        np.testing.assert_array_equal(v, np.eye(3))


def test_clamp_eigenvalues():
    np.testing.assert_array_equal(clamp_eigenvalues([-5e-11, 0.3]), [0.0, 0.3])
    with pytest.raises(DomainError):
        clamp_eigenvalues([-1e-6, 1.0])


def test_psd_sqrt():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m = a @ a.conj().T
    r = psd_sqrt(m)
    np.testing.assert_allclose(r @ r, m, atol=1e-10)
    np.testing.assert_allclose(r, r.conj().T, atol=1e-12)


class TestEntropy:
    def test_uniform_bit(self):
        assert binary_entropy_terms([0.5, 0.5]) == 1.0

    def test_deterministic(self):
        assert binary_entropy_terms([1.0, 0.0]) == 0.0

    def test_one_percent_equivocation(self):
        # about 8.1 % of the rate is lost at a 1 % error rate
        assert binary_entropy_terms([0.01, 0.99]) == pytest.approx(0.0808, abs=5e-5)

    def test_domain(self):
        with pytest.raises(DomainError):
            binary_entropy_terms([-0.1, 1.1])
        with pytest.raises(DomainError):
            binary_entropy_terms([0.7, 0.7])

    @pytest.mark.parametrize("step", [0.05])
    def test_permutation_invariant_and_max_at_uniform(self, step):
        grid = np.arange(0.0, 1.0 + 1e-12, step)
        top = math.log2(3)
        for a in grid:
            for b in grid:
                c = 1.0 - a - b
                if c < -1e-12:
                    continue
                c = max(c, 0.0)
                h = binary_entropy_terms([a, b, c])
                for perm in itertools.permutations([a, b, c]):
                    assert binary_entropy_terms(perm) == pytest.approx(h, abs=1e-14)
                assert h <= top + 1e-12
        assert binary_entropy_terms([1 / 3] * 3) == pytest.approx(top)
