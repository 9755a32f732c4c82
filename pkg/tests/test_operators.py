import math

import numpy as np
import pytest

from elko import operators as ops
from elko import spinors as sp
from elko.errors import (
    CoordinateSingularityError,
    DirectionUndefinedError,
    DomainError,
)
from elko.kinematics import boost_half, make_momentum, parity_reflect
from elko.matrices import block_diag2, gamma0, pauli_dot, sigma_z


class TestChargeConjugation:
    def test_squares_to_plus_one(self, rng):
        for theta in (0.0, 0.7, math.pi):
            c = ops.charge_conjugation(sp.PhaseConfig(theta_c=theta))
            for _ in range(5):
                v = rng.normal(size=4) + 1j * rng.normal(size=4)
                assert np.linalg.norm(c.apply(c.apply(v)) - v) <= 1e-13 * np.linalg.norm(v)

    def test_maps_particle_into_antiparticle_span(self, random_momenta):
        c = ops.charge_conjugation()
        for p in random_momenta(5):
            cu = c.apply(sp.dirac_spinor(p, "particle", "up").components)
            basis = np.column_stack([sp.dirac_spinor(p, "antiparticle", i).components
                                     for i in ("up", "down")])
            fit, *_ = np.linalg.lstsq(basis, cu, rcond=None)
            assert np.linalg.norm(cu - basis @ fit) <= 1e-12 * np.linalg.norm(cu)

    def test_fixes_self_conjugate_lambda(self, random_momenta):
        c = ops.charge_conjugation()
        for p in random_momenta(5):
            v = sp.lambda_spinor(p, "S", "up").components
            assert np.linalg.norm(c.apply(v) - v) <= 1e-12 * np.linalg.norm(v)

    def test_anticommutes_with_chirality(self, rng):
        c, g5 = ops.charge_conjugation(), ops.chirality()
        cg, gc = c.compose(g5), g5.compose(c)
        for _ in range(10):
            v = rng.normal(size=4) + 1j * rng.normal(size=4)
            assert np.linalg.norm(cg.apply(v) + gc.apply(v)) <= 1e-13 * np.linalg.norm(v)


class TestParityAndChirality:
    def test_parity_squares_to_identity_on_particles(self, random_momenta):
        pp = ops.parity_operator().compose(ops.parity_operator())
        for p in random_momenta(5):
            state = lambda q: sp.dirac_spinor(q, "particle", "up").components
            assert np.allclose(pp.apply_state(state, p), state(p))

    def test_chirality_blocks(self):
        g5 = ops.chirality()
        upper = np.array([1, 1, 0, 0], dtype=complex)
        lower = np.array([0, 0, 1, -1], dtype=complex)
        assert np.allclose(g5.apply(upper), upper)
        assert np.allclose(g5.apply(lower), -lower)

    def test_parity_negates_antiparticles(self, random_momenta):
        p_op = ops.parity_operator()
        for p in random_momenta(5):
            for index in ("up", "down"):
                state = lambda q, i=index: sp.dirac_spinor(q, "antiparticle", i).components
                assert np.allclose(p_op.apply_state(state, p), -state(p), atol=1e-12)


class TestHelicityOperators:
    def test_spectrum(self):
        p = make_momentum(0.3, -1.2, 0.4, 1.0)
        eigs = np.sort(np.linalg.eigvalsh(ops.helicity_operator(p).matrix))
        assert np.allclose(eigs, [-0.5, -0.5, 0.5, 0.5])

    def test_chiral_helicity_eigenrelation(self, random_momenta):
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            eta = ops.chiral_helicity_operator(p)
            v = sp.lambda_spinor(p, "S", "up", "helicity").components
            assert np.linalg.norm(eta.apply(v) - 0.5 * v) <= 1e-12 * np.linalg.norm(v)

    def test_direction_required(self):
        p = make_momentum(0, 0, 0, 1.0)
        with pytest.raises(DirectionUndefinedError):
            ops.helicity_operator(p)
        with pytest.raises(DirectionUndefinedError):
            ops.chiral_helicity_operator(p)

    def test_helicity_parity_anticommutator(self, random_momenta):
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            pr = parity_reflect(p)
            h_p = ops.helicity_operator(p).matrix
            h_pr = ops.helicity_operator(pr).matrix
            x = sp.lambda_spinor(pr, "S", "up", "helicity").components
            resid = h_p @ (gamma0 @ x) + gamma0 @ (h_pr @ x)
            assert np.linalg.norm(resid) <= 1e-12 * np.linalg.norm(x)


class TestUnitaryChain:
    def test_z_axis_identity_case(self):
        p = make_momentum(0, 0, 1, 1.0)
        u = ops.u1(p)
        h = ops.helicity_operator(p).matrix
        target = 0.5 * block_diag2(sigma_z, sigma_z)
        assert np.allclose(u @ h @ np.linalg.inv(u), target)

    def test_diagonalisation_generic(self, random_momenta):
        target = 0.5 * block_diag2(sigma_z, sigma_z)
        g5_diag = np.diag([1.0, 1.0, -1.0, -1.0])
        for p in random_momenta(10):
            if p.p_abs == 0:
                continue
            u = ops.u1(p)
            conj = u @ ops.helicity_operator(p).matrix @ np.linalg.inv(u)
            assert np.linalg.norm(conj - target) <= 1e-12
            chained = ops.u3() @ (2 * conj) @ np.linalg.inv(ops.u3())
            assert np.linalg.norm(chained - g5_diag) <= 1e-12

    def test_chiral_helicity_chain(self, random_momenta):
        g5_diag = np.diag([1.0, 1.0, -1.0, -1.0])
        for p in random_momenta(10):
            if p.p_abs == 0:
                continue
            n = p.direction()
            alpha_n = block_diag2(pauli_dot(n), -pauli_dot(n))
            u = ops.u1(p)
            conj = u @ alpha_n @ np.linalg.inv(u)
            assert np.linalg.norm(ops.u2() @ conj @ ops.u2().conj().T - g5_diag) <= 1e-12

    def test_determinants(self, random_momenta):
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            assert np.linalg.det(ops.u1(p)) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.det(ops.u2()) == pytest.approx(-1.0)
        assert np.linalg.det(ops.u3()) == pytest.approx(-1.0)

    def test_unitarity(self, random_momenta):
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            u = ops.u1(p)
            assert np.linalg.norm(u @ u.conj().T - np.eye(4)) <= 1e-12

    def test_negative_z_axis_rejected(self):
        with pytest.raises(CoordinateSingularityError):
            ops.u1(make_momentum(0, 0, -2, 1.0))
        with pytest.raises(DirectionUndefinedError):
            ops.u1(make_momentum(0, 0, 0, 1.0))


class TestXiMatrix:
    def test_intertwines_both_boost_pairs(self, random_momenta):
        for p in random_momenta(10):
            if p.p_abs == 0:
                continue
            xi = ops.xi_matrix(p)
            for side in "RL":
                lam = boost_half(p, side)
                bound = 1e-12 * (np.linalg.norm(lam) + np.linalg.norm(np.conj(lam)))
                assert np.linalg.norm(xi @ lam - np.conj(lam) @ xi) <= bound

    def test_x_axis_is_real(self):
        xi = ops.xi_matrix(make_momentum(2.0, 0, 0, 1.0))
        assert np.linalg.norm(xi.imag) <= 1e-14

    def test_normalisation(self):
        xi = ops.xi_matrix(make_momentum(1.0, 2.0, 3.0, 2.0))
        assert np.linalg.norm(xi) == pytest.approx(1.0)

    def test_rest_rejected(self):
        with pytest.raises(DirectionUndefinedError):
            ops.xi_matrix(make_momentum(0, 0, 0, 1.0))


class TestLambdaBasisTransforms:
    def _targets(self, p, h):
        index = "up" if h > 0 else "down"
        ls = sp.lambda_spinor(p, "S", index, "helicity").components
        la = sp.lambda_spinor(p, "A", index, "helicity").components
        return ls, [np.conj(la), -1j * np.conj(ls), 1j * gamma0 @ np.conj(la),
                    gamma0 @ np.conj(ls)]

    def test_maps_and_coefficient_pattern(self, random_momenta):
        # the -i/+i factors live in the stated targets, so after phase pinning
        # every proportionality coefficient is exactly one
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            transforms = ops.lambda_basis_transforms(p)
            for h in (1, -1):
                ls, targets = self._targets(p, h)
                for t, target in zip(transforms, targets):
                    img = t @ ls
                    c = np.vdot(target, img) / np.vdot(target, target)
                    assert np.linalg.norm(img - c * target) <= 1e-12 * np.linalg.norm(ls)
                    assert c == pytest.approx(1.0, abs=1e-10)

    def test_images_stay_self_conjugate(self, random_momenta):
        c_op = ops.charge_conjugation()
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            for t in ops.lambda_basis_transforms(p):
                for index in ("up", "down"):
                    img = t @ sp.lambda_spinor(p, "S", index, "helicity").components
                    assert np.linalg.norm(c_op.apply(img) - img) <= 1e-12 * np.linalg.norm(img)

    def test_first_transform_conjugate_involution(self, random_momenta):
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            t1 = ops.lambda_basis_transforms(p)[0]
            assert np.linalg.norm(t1 @ np.conj(t1) - np.eye(4)) <= 1e-12


class TestChiralGauge:
    def test_zero_angle_is_identity(self):
        assert np.allclose(ops.chiral_gauge_transform(0.0, "lambda"), np.eye(4))
        assert np.allclose(ops.chiral_gauge_transform(0.0, "rho"), np.eye(4))

    def test_unitary(self, rng):
        for alpha in rng.uniform(0, 2 * math.pi, 10):
            for family in ("lambda", "rho"):
                g = ops.chiral_gauge_transform(alpha, family)
                assert np.linalg.norm(g @ g.conj().T - np.eye(4)) <= 1e-13

    def test_preserves_conjugacy(self, random_momenta, rng):
        c = ops.charge_conjugation()
        for p in random_momenta(5):
            alpha = float(rng.uniform(0, 2 * math.pi))
            gl = ops.chiral_gauge_transform(alpha, "lambda")
            v = gl @ sp.lambda_spinor(p, "S", "up").components
            assert np.linalg.norm(c.apply(v) - v) <= 1e-12 * np.linalg.norm(v)
            gr = ops.chiral_gauge_transform(alpha, "rho")
            w = gr @ sp.rho_spinor(p, "A", "down").components
            assert np.linalg.norm(c.apply(w) + w) <= 1e-12 * np.linalg.norm(w)


class TestSu2PhaseTransform:
    def test_identity_element(self):
        assert np.allclose(ops.su2_phase_transform(1.0, [0, 0, 0]), np.eye(2))

    def test_abelian_subgroup_composition(self):
        a, b = 0.7, 1.9
        za = ops.su2_phase_transform(math.cos(a), [0, 0, math.sin(a)])
        zb = ops.su2_phase_transform(math.cos(b), [0, 0, math.sin(b)])
        zab = ops.su2_phase_transform(math.cos(a + b), [0, 0, math.sin(a + b)])
        assert np.linalg.norm(za @ zb - zab) <= 1e-13

    def test_group_closure(self, rng):
        for _ in range(10):
            mats = []
            for _ in range(2):
                phi = rng.uniform(0, 2 * math.pi)
                n = rng.normal(size=3)
                n /= np.linalg.norm(n)
                mats.append(ops.su2_phase_transform(math.cos(phi), n * math.sin(phi)))
            prod = mats[0] @ mats[1]
            assert np.linalg.norm(prod @ prod.conj().T - np.eye(2)) <= 1e-13
            assert abs(abs(np.linalg.det(prod)) - 1.0) <= 1e-13

    def test_unnormalised_parameters_rejected(self):
        with pytest.raises(DomainError):
            ops.su2_phase_transform(1.0, [0.5, 0, 0])


class TestCPClassification:
    def test_dirac_anticommutes(self):
        res = ops.classify_cp_action("spinorial", "dirac", seed=3, n_momenta=40)
        assert res.relation == "anticommute"
        assert res.anticommute_residual <= 1e-12
        assert res.commute_residual > 0.1

    def test_elko_commutes(self):
        res = ops.classify_cp_action("helicity", "elko", seed=3, n_momenta=40)
        assert res.relation == "commute"
        assert res.commute_residual <= 1e-12
        assert res.anticommute_residual > 0.1

    def test_classification_is_phase_independent(self):
        for theta in (0.0, math.pi / 2, 2.1):
            cfg = sp.PhaseConfig(theta_c=theta)
            assert ops.classify_cp_action("spinorial", "dirac", seed=5, n_momenta=10,
                                          cfg=cfg).relation == "anticommute"
            assert ops.classify_cp_action("helicity", "elko", seed=5, n_momenta=10,
                                          cfg=cfg).relation == "commute"

    def test_elko_inversion_images(self, random_momenta):
        # with the imaginary intrinsic phase the inversion image of the self
        # kind is -+i times the anti kind at the same helicity
        for p in random_momenta(5):
            if p.p_abs == 0:
                continue
            a = p.angles()
            pr = parity_reflect(p)
            for h, coeff in ((1, -1j), (-1, 1j)):
                img = 1j * gamma0 @ sp.helicity_lambda_at(
                    pr, "S", h, math.pi - a.theta, math.pi + a.phi)
                tgt = coeff * sp.helicity_lambda_at(p, "A", h, a.theta, a.phi)
                assert np.linalg.norm(img - tgt) <= 1e-12 * np.linalg.norm(img)


class TestComposition:
    def test_antilinear_flag_xor(self):
        c = ops.charge_conjugation()
        assert not c.compose(c).antilinear
        assert c.compose(ops.chirality()).antilinear

    def test_reflection_flag_xor(self):
        p_op = ops.parity_operator()
        assert not p_op.compose(p_op).reflects_momentum
        assert p_op.compose(ops.chirality()).reflects_momentum

    def test_associativity_on_states(self, rng, random_momenta):
        pool = [ops.charge_conjugation(), ops.parity_operator(), ops.chirality(),
                ops.SymmetryOperator(ops.chiral_gauge_transform(0.3, "rho")),
                ops.charge_conjugation(sp.PhaseConfig(theta_c=0.9))]
        momenta = random_momenta(3)
        for _ in range(10):
            a, b, c = (pool[k] for k in rng.integers(0, len(pool), 3))
            left = a.compose(b).compose(c)
            right = a.compose(b.compose(c))
            assert np.allclose(left.matrix, right.matrix)
            assert left.phase == pytest.approx(right.phase)
            assert left.antilinear == right.antilinear
            assert left.reflects_momentum == right.reflects_momentum
            state = lambda q: sp.lambda_spinor(q, "A", "down").components
            for p in momenta:
                assert np.allclose(left.apply_state(state, p),
                                   right.apply_state(state, p))

    def test_nonunimodular_phase_rejected(self):
        with pytest.raises(DomainError):
            ops.SymmetryOperator(np.eye(4), phase=2.0)
