import math

import numpy as np
import pytest

from elko import dynamics as dyn
from elko import spinors as sp
from elko.errors import DomainError
from elko.kinematics import make_momentum
from elko.matrices import block_diag2, gamma0, pauli_dot
from elko.operators import chiral_gauge_transform, su2_phase_transform


class TestDiracMatrix:
    def test_clifford_square(self, random_momenta):
        for p in random_momenta(10):
            gp = dyn.dirac_matrix(p)
            assert np.linalg.norm(gp @ gp - p.m ** 2 * np.eye(4)) <= 1e-12 * p.m ** 2

    def test_rest_frame(self):
        p = make_momentum(0, 0, 0, 1.5)
        assert np.allclose(dyn.dirac_matrix(p), 1.5 * gamma0)

    def test_annihilates_particle_spinor(self, random_momenta):
        for p in random_momenta(5):
            u = sp.dirac_spinor(p, "particle", "down").components
            assert np.linalg.norm((dyn.dirac_matrix(p) - p.m * np.eye(4)) @ u) \
                <= 1e-12 * np.linalg.norm(u)


class TestCoupledSystem:
    def test_rest_frame_correct_convention(self):
        p = make_momentum(0, 0, 0, 1.0)
        assert max(dyn.coupled_system_residual(p, dyn.FrequencyConvention(1))) <= 1e-12

    def test_wrong_convention_leaves_mass_scale_residual(self, random_momenta):
        wrong = dyn.FrequencyConvention(-1)
        for p in random_momenta(20):
            assert max(dyn.coupled_system_residual(p, wrong)) > 0.5 * p.m

    def test_random_momenta_all_four_equations(self, random_momenta):
        conv = dyn.FrequencyConvention(1)
        for p in random_momenta(20):
            assert max(dyn.coupled_system_residual(p, conv)) <= 1e-12

    def test_discovery_unique_and_positive(self, random_momenta):
        conv = dyn.discover_convention(random_momenta(8))
        assert conv.sign == 1

    def test_invalid_sign_rejected(self):
        with pytest.raises(DomainError):
            dyn.FrequencyConvention(0)


class TestMarkov:
    def test_pure_particle_degenerates_to_single_equation(self, random_momenta):
        p = random_momenta(1)[0]
        pair = dyn.markov_superposition(p, (1.0, 0.0), (0.0, 0.0))
        psi1 = sp.dirac_spinor(p, "particle", "up").components
        assert np.allclose(pair.chi, psi1 / math.sqrt(2))
        assert np.allclose(pair.eta, psi1 / math.sqrt(2))
        gp = dyn.dirac_matrix(p)
        assert np.linalg.norm(gp @ pair.chi - p.m * pair.eta) <= 1e-12

    def test_cross_coupled_equations(self, random_momenta, rng):
        for p in random_momenta(10):
            w = rng.normal(size=4) + 1j * rng.normal(size=4)
            pair = dyn.markov_superposition(p, (w[0], w[1]), (w[2], w[3]))
            gp = dyn.dirac_matrix(p)
            scale = max(np.linalg.norm(pair.chi), np.linalg.norm(pair.eta))
            assert np.linalg.norm(gp @ pair.chi - p.m * pair.eta) <= 1e-12 * max(scale, 1)
            assert np.linalg.norm(gp @ pair.eta - p.m * pair.chi) <= 1e-12 * max(scale, 1)

    def test_solutions_lie_in_uv_span(self, random_momenta, rng):
        p = random_momenta(1)[0]
        w = rng.normal(size=4)
        pair = dyn.markov_superposition(p, (w[0], w[1]), (w[2], w[3]))
        basis = np.column_stack([sp.dirac_spinor(p, s, i).components
                                 for s in ("particle", "antiparticle")
                                 for i in ("up", "down")])
        for vec in pair:
            fit, *_ = np.linalg.lstsq(basis, vec, rcond=None)
            assert np.linalg.norm(vec - basis @ fit) <= 1e-12 * np.linalg.norm(vec)

    def test_isometry(self, random_momenta, rng):
        p = random_momenta(1)[0]
        w = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi1 = (w[0] * sp.dirac_spinor(p, "particle", "up").components
                + w[1] * sp.dirac_spinor(p, "particle", "down").components)
        psi2 = (w[2] * sp.dirac_spinor(p, "antiparticle", "up").components
                + w[3] * sp.dirac_spinor(p, "antiparticle", "down").components)
        pair = dyn.markov_superposition(p, (w[0], w[1]), (w[2], w[3]))
        before = np.linalg.norm(psi1) ** 2 + np.linalg.norm(psi2) ** 2
        after = np.linalg.norm(pair.chi) ** 2 + np.linalg.norm(pair.eta) ** 2
        assert after == pytest.approx(before, rel=1e-12)


class TestSenGupta:
    def test_reduces_to_dirac_at_zero_pseudoscalar_mass(self, random_momenta):
        for p in random_momenta(5):
            u = sp.dirac_spinor(p, "particle", "up")
            assert dyn.sen_gupta_residual(p, p.m, 0.0, u) <= 1e-12 * np.linalg.norm(u.components)

    def test_null_dimension_on_generalised_shell(self):
        m1, m2 = 2.0, 1.0
        vec = (0.4, -0.3, 0.9)
        e = math.sqrt(m1 ** 2 - m2 ** 2 + sum(x * x for x in vec))
        null = dyn.sen_gupta_null_space(e, *vec, m1, m2)
        assert len(null) == 2
        op = dyn.sen_gupta_operator(e, *vec, m1, m2)
        for v in null:
            assert np.linalg.norm(op @ v) <= 1e-10

    def test_off_shell_reports_empty_null_space(self):
        null = dyn.sen_gupta_null_space(5.0, 0.4, -0.3, 0.9, 2.0, 1.0)
        assert null == []

    def test_equivalence_transform_to_dirac(self):
        m1, m2 = 2.0, 1.0
        mu = math.sqrt(m1 ** 2 - m2 ** 2)
        vec = (1.0, 0.5, -0.2)
        e = math.sqrt(mu ** 2 + sum(x * x for x in vec))
        emat = dyn.sen_gupta_equivalence(m1, m2)
        dirac = dyn.slash(e, *vec) - mu * np.eye(4)
        for v in dyn.sen_gupta_null_space(e, *vec, m1, m2):
            mapped = np.linalg.inv(emat) @ v
            assert np.linalg.norm(dirac @ mapped) <= 1e-12 * np.linalg.norm(mapped)

    def test_massless_limit_not_chiral_helicity_eigen(self):
        m2 = 1.0
        vec = np.array([0.3, 0.1, 2.2])
        e = math.sqrt(float(vec @ vec) - m2 ** 2)
        null = dyn.sen_gupta_null_space(e, *vec, 0.0, m2)
        assert len(null) >= 1
        n = vec / np.linalg.norm(vec)
        doubled = block_diag2(pauli_dot(n), -pauli_dot(n))
        for v in null:
            v = v / np.linalg.norm(v)
            image = doubled @ v
            fit = np.vdot(v, image)
            assert np.linalg.norm(image - fit * v) > 0.1

    def test_degenerate_masses_rejected_by_equivalence(self):
        with pytest.raises(DomainError):
            dyn.sen_gupta_equivalence(1.0, 1.0)

    def test_degenerate_masses_null_structure_reported(self):
        # m1 = +-m2 puts solutions on the light cone; the structure is
        # recorded here without asserting a particular dimension
        m = 0.8
        vec = (0.3, -0.4, 1.2)
        e = math.sqrt(sum(x * x for x in vec))
        for m2 in (m, -m):
            null = dyn.sen_gupta_null_space(e, *vec, m, m2)
            op = dyn.sen_gupta_operator(e, *vec, m, m2)
            for v in null:
                assert np.linalg.norm(op @ v) <= 1e-9


class TestEightComponent:
    def test_rest_frame_residual(self):
        p = make_momentum(0, 0, 0, 1.0)
        assert dyn.eight_component_residual(p, dyn.FrequencyConvention(1)) <= 1e-12

    def test_random_momenta_residual(self, random_momenta):
        conv = dyn.FrequencyConvention(1)
        for p in random_momenta(10):
            assert dyn.eight_component_residual(p, conv) <= 1e-12

    def test_axial_matrix_squares_to_identity(self):
        l5 = dyn.lambda5()
        assert np.array_equal(l5 @ l5, np.eye(8))

    def test_axial_matrix_commutes_with_kinetic_block(self, random_momenta):
        l5 = dyn.lambda5()
        for p in random_momenta(5):
            kin = dyn.eight_kinetic(p)
            assert np.linalg.norm(l5 @ kin - kin @ l5) <= 1e-12 * max(1.0, p.E)

    def test_gauge_transform_maps_solutions_to_solutions(self, random_momenta):
        conv = dyn.FrequencyConvention(1)
        for p in random_momenta(5):
            g8 = dyn.eight_gauge_transform(0.7)
            for index in ("up", "down"):
                for stack, sector in zip(dyn.eight_stacks(p, index), ("S", "A")):
                    op = dyn.eight_operator(p, conv, sector)
                    assert np.linalg.norm(op @ (g8 @ stack.components)) <= 1e-12

    def test_eight_spinor_momentum_consistency(self):
        a = sp.lambda_spinor(make_momentum(1, 0, 0, 1.0), "S", "up")
        b = sp.rho_spinor(make_momentum(0, 1, 0, 1.0), "A", "up")
        with pytest.raises(DomainError):
            dyn.EightSpinor(a, b)


class TestMassTerm:
    def test_physical_quartet_value_vanishes(self, random_momenta):
        for p in random_momenta(5):
            val = dyn.lagrangian_mass_term(
                sp.lambda_spinor(p, "S", "up"), sp.rho_spinor(p, "A", "up"),
                sp.lambda_spinor(p, "A", "up"), sp.rho_spinor(p, "S", "up"), p.m)
            assert abs(val) <= 1e-12 * p.m ** 2

    def test_real_for_arbitrary_fields(self, rng):
        fields = [rng.normal(size=4) + 1j * rng.normal(size=4) for _ in range(4)]
        val = dyn.lagrangian_mass_term(*fields, 1.3)
        assert abs(val.imag) <= 1e-12 * max(1.0, abs(val))

    def test_chiral_invariance_random_fields(self, rng):
        for _ in range(10):
            alpha = float(rng.uniform(0, 2 * math.pi))
            gl = chiral_gauge_transform(alpha, "lambda")
            gr = chiral_gauge_transform(alpha, "rho")
            f = [rng.normal(size=4) + 1j * rng.normal(size=4) for _ in range(4)]
            before = dyn.lagrangian_mass_term(*f, 2.0)
            after = dyn.lagrangian_mass_term(gl @ f[0], gr @ f[1], gl @ f[2], gr @ f[3], 2.0)
            assert after == pytest.approx(before, abs=1e-12 * max(1, abs(before)))

    def test_su2_doublet_invariance(self, rng):
        for _ in range(10):
            phi = float(rng.uniform(0, 2 * math.pi))
            n = rng.normal(size=3)
            n /= np.linalg.norm(n)
            u = su2_phase_transform(math.cos(phi), n * math.sin(phi))
            d = tuple(rng.normal(size=4) + 1j * rng.normal(size=4) for _ in range(2))
            r = tuple(rng.normal(size=4) + 1j * rng.normal(size=4) for _ in range(2))
            before = dyn.doublet_mass_term(d, r, 1.0)
            after = dyn.doublet_mass_term(dyn.rotate_doublet(u, d),
                                          dyn.rotate_doublet(u, r), 1.0)
            assert after == pytest.approx(before, abs=1e-12 * max(1, abs(before)))

    def test_doublet_form_matches_lagrangian_pairing(self, random_momenta):
        p = random_momenta(1)[0]
        ls = sp.lambda_spinor(p, "S", "up")
        ra = sp.rho_spinor(p, "A", "up")
        la = sp.lambda_spinor(p, "A", "up")
        rs = sp.rho_spinor(p, "S", "up")
        direct = dyn.lagrangian_mass_term(ls, ra, la, rs, p.m)
        via_doublets = dyn.doublet_mass_term(
            (ls.components, la.components), (ra.components, -rs.components), p.m)
        assert via_doublets == pytest.approx(direct, abs=1e-12)
