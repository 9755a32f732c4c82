import math

import numpy as np
import pytest

from elko import kinematics as kin
from elko.errors import DomainError
from elko.matrices import spin1_dot


def test_rest_momentum_scalars():
    p = kin.make_momentum(0, 0, 0, 1.0)
    assert p.E == pytest.approx(1.0)
    assert p.p_plus == pytest.approx(1.0)
    assert p.p_minus == pytest.approx(1.0)
    assert p.p_r == 0 and p.p_l == 0


def test_transverse_momentum_scalars():
    p = kin.make_momentum(3, 4, 0, 0.5)
    assert p.E == pytest.approx(math.sqrt(25.25))
    assert p.p_r == pytest.approx(3 + 4j)
    assert p.p_l == pytest.approx(3 - 4j)


def test_negative_z_momentum_scalars():
    p = kin.make_momentum(0, 0, -2, 1.0)
    assert p.E == pytest.approx(math.sqrt(5.0))
    assert p.p_plus == pytest.approx(p.E - 2)
    assert p.p_minus == pytest.approx(p.E + 2)


def test_on_shell_invariant(random_momenta):
    for p in random_momenta(30):
        rhs = math.sqrt(p.px ** 2 + p.py ** 2 + p.pz ** 2 + p.m ** 2)
        assert abs(p.E - rhs) <= 1e-14 * rhs


def test_nonpositive_mass_rejected():
    with pytest.raises(DomainError):
        kin.make_momentum(1, 0, 0, 0.0)
    with pytest.raises(DomainError):
        kin.make_momentum(1, 0, 0, -2.0)


def test_parity_reflect_definition_and_involution(random_momenta):
    p = kin.make_momentum(1, 2, 3, 1.5)
    q = kin.parity_reflect(p)
    assert (q.px, q.py, q.pz) == (-1, -2, -3)
    assert q.E == p.E and q.m == p.m
    for p in random_momenta(10):
        r = kin.parity_reflect(kin.parity_reflect(p))
        assert (r.px, r.py, r.pz, r.E) == (p.px, p.py, p.pz, p.E)


def test_angular_reflection():
    a = kin.AngularParams(math.pi / 3, math.pi / 4)
    r = a.reflected()
    assert r.theta == pytest.approx(2 * math.pi / 3)
    assert r.phi == pytest.approx(5 * math.pi / 4)


def test_angles_of_momentum():
    p = kin.make_momentum(1, 1, 0, 1.0)
    a = p.angles()
    assert a.theta == pytest.approx(math.pi / 2)
    assert a.phi == pytest.approx(math.pi / 4)


class TestBoostHalf:
    def test_rest_is_identity(self):
        p = kin.make_momentum(0, 0, 0, 3.0)
        for side in "RL":
            assert np.allclose(kin.boost_half(p, side), np.eye(2))

    def test_unit_determinant(self, random_momenta):
        for p in random_momenta(20):
            for side in "RL":
                assert abs(np.linalg.det(kin.boost_half(p, side)) - 1.0) <= 1e-12

    def test_hermitian_positive_and_inverse_adjoint(self, random_momenta):
        for p in random_momenta(20):
            r = kin.boost_half(p, "R")
            l = kin.boost_half(p, "L")
            assert np.allclose(r, r.conj().T)
            assert np.all(np.linalg.eigvalsh(r) > 0)
            # Lambda_L = (Lambda_R^dagger)^-1; the boosts themselves are not
            # unitary away from rest
            assert np.linalg.norm(l - np.linalg.inv(r.conj().T)) <= 1e-12 * np.linalg.norm(l)
            if p.p_abs > 1e-3 * p.m:
                assert not np.allclose(r @ r.conj().T, np.eye(2))


class TestBoostOne:
    def test_rest_is_identity(self):
        p = kin.make_momentum(0, 0, 0, 1.0)
        assert np.allclose(kin.boost_one(p, "R"), np.eye(3))

    def test_generator_cube_closes_series(self, random_momenta):
        for p in random_momenta(10):
            if p.p_abs == 0:
                continue
            k = spin1_dot(p.vec / p.p_abs)
            assert np.linalg.norm(k @ k @ k - k) <= 1e-12

    def test_closed_form_matches_series(self, random_momenta):
        for p in random_momenta(10):
            if p.p_abs == 0:
                continue
            x = math.acosh(p.E / p.m)
            halvings = max(0, math.ceil(math.log2(max(x, 1e-9) / 0.5)))
            arg = spin1_dot(p.vec / p.p_abs) * (x / 2 ** halvings)
            series = np.zeros((3, 3), dtype=complex)
            term = np.eye(3, dtype=complex)
            for order in range(20):
                series += term
                term = term @ arg / (order + 1)
            for _ in range(halvings):
                series = series @ series
            assert np.linalg.norm(series - kin.boost_one(p, "R")) <= 1e-12


def test_boost_one_z_axis_eigenvalues():
    p = kin.make_momentum(0, 0, math.sqrt(3.0), 1.0)  # E/m = 2
    expected = np.diag([2 + math.sqrt(3.0), 1.0, 2 - math.sqrt(3.0)])
    assert np.linalg.norm(kin.boost_one(p, "R") - expected) <= 1e-12
    assert np.linalg.norm(kin.boost_one(p, "L") - np.linalg.inv(expected)) <= 1e-12
