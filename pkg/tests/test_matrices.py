import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elko import matrices as mat
from elko.errors import AmbiguousIntertwinerError, DimensionError
from elko.kinematics import boost_half, make_momentum


def test_mul_identity_and_pauli_involution():
    i2 = np.eye(2, dtype=complex)
    assert np.allclose(mat.mul(i2, mat.sigma_y), mat.sigma_y)
    assert np.allclose(mat.mul(mat.sigma_y, mat.sigma_y), i2)


def test_mul_shape_mismatch():
    with pytest.raises(DimensionError):
        mat.mul(np.eye(2), np.eye(3))


def test_adjoint_and_conj_are_involutions(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.array_equal(mat.adjoint(mat.adjoint(a)), a)
    assert np.array_equal(mat.conj(mat.conj(a)), a)


def test_det_examples():
    assert mat.det(np.eye(4)) == pytest.approx(1.0)
    assert mat.det(mat.sigma_y) == pytest.approx(-1.0)
    with pytest.raises(DimensionError):
        mat.det(np.ones((2, 3)))


def _random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8])
def test_mul_associativity_supported_shapes(rng, n):
    a, b, c = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(3))
    a, b, c = (m / np.linalg.norm(m) for m in (a, b, c))
    left = mat.mul(mat.mul(a, b), c)
    right = mat.mul(a, mat.mul(b, c))
    assert np.linalg.norm(left - right) <= 1e-13


@pytest.mark.parametrize("n", [2, 3, 4])
def test_det_multiplicative_on_unitaries(rng, n):
    u, v = _random_unitary(rng, n), _random_unitary(rng, n)
    lhs = mat.det(mat.mul(u, v))
    rhs = mat.det(u) * mat.det(v)
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_gamma_algebra_signature(seed):
    # anticommutators reproduce the metric, for any random probe vector
    rng = np.random.default_rng(seed)
    v = rng.normal(size=4)
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    for mu in range(4):
        for nu in range(4):
            acom = mat.GAMMA[mu] @ mat.GAMMA[nu] + mat.GAMMA[nu] @ mat.GAMMA[mu]
            assert np.allclose(acom, 2 * eta[mu, nu] * np.eye(4))
    slashed = sum(float(v[k]) * eta[k, k] * mat.GAMMA[k] for k in range(4))
    p2 = v[0] ** 2 - v[1] ** 2 - v[2] ** 2 - v[3] ** 2
    assert np.allclose(slashed @ slashed, p2 * np.eye(4), atol=1e-10)


def test_gamma5_product_identity():
    assert np.allclose(1j * mat.gamma0 @ mat.gamma1 @ mat.gamma2 @ mat.gamma3, mat.gamma5)


class TestSolveIntertwiner:
    def test_commutant_of_sigma_z_is_ambiguous(self):
        with pytest.raises(AmbiguousIntertwinerError) as exc:
            mat.solve_intertwiner(mat.sigma_z, mat.sigma_z)
        assert exc.value.dimension == 2

    def test_sigma_y_anticommuting_pair_is_ambiguous(self):
        with pytest.raises(AmbiguousIntertwinerError):
            mat.solve_intertwiner(mat.sigma_y, -mat.sigma_y)

    def test_unique_case_distinct_spectra(self):
        a = np.diag([1.0, 2.0]).astype(complex)
        b = np.diag([1.0, 3.0]).astype(complex)
        x = mat.solve_intertwiner(a, b)
        assert np.linalg.norm(x @ a - b @ x) <= 1e-12 * (np.linalg.norm(a) + np.linalg.norm(b))
        # normalisation: unit Frobenius norm, leading entry real positive
        assert np.linalg.norm(x) == pytest.approx(1.0)
        assert x[0, 0].real == pytest.approx(1.0)
        assert abs(x[0, 0].imag) < 1e-14

    def test_boost_conjugation_pair_has_two_dim_family(self):
        # the commutant of sigma.n always contributes a second solution, so
        # the bare solver flags the boost pair as ambiguous and xi_matrix
        # pins the physical element instead
        p = make_momentum(1.0, 2.0, 3.0, 2.0)
        lam = boost_half(p, "R")
        basis = mat.intertwiner_null_space(lam, np.conj(lam))
        assert len(basis) == 2
        for x in basis:
            assert np.linalg.norm(x @ lam - np.conj(lam) @ x) <= 1e-10
        with pytest.raises(AmbiguousIntertwinerError):
            mat.solve_intertwiner(lam, np.conj(lam))

    def test_residual_bound_contract(self, rng):
        a = np.diag([1.0, 2.0, 5.0]).astype(complex)
        b = np.diag([2.0, 7.0, 9.0]).astype(complex)
        b[0, 0] = 1.0
        x = mat.solve_intertwiner(a, b)
        bound = 1e-12 * (np.linalg.norm(a) + np.linalg.norm(b))
        assert np.linalg.norm(x @ a - b @ x) <= bound
