"""Momentum-space residual checks for the wave equations: the coupled
lambda/rho first-order system, the doubled Dirac system and its chi/eta
superpositions, the two-mass equation, and the 8-component assembly with its
axial gauge structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import TOLERANCES
from .errors import DomainError
from .kinematics import FourMomentum
from .matrices import GAMMA, gamma5
from .operators import chiral_gauge_transform
from .spinors import Bispinor, bar_product, dirac_spinor, lambda_spinor, rho_spinor


@dataclass(frozen=True)
class FrequencyConvention:
    """Which plane-wave sign each sector carries.

    sign = +1: the (lambda^S, rho^A) pair evolves as e^{-i p.x} and the
    (lambda^A, rho^S) pair as e^{+i p.x}; sign = -1 swaps the roles.  Exactly
    one choice makes all four coupled equations vanish.
    """

    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"convention sign must be +-1, got {self.sign}")

    def sector_sign(self, sector: str) -> int:
        """Momentum-space sign of i gamma.d for the S or A sector."""
        if sector not in ("S", "A"):
            raise DomainError(f"sector must be 'S' or 'A', got {sector!r}")
        return self.sign if sector == "S" else -self.sign


@dataclass(frozen=True)
class EightSpinor:
    """(lambda-sector, rho-sector) stack sharing one momentum."""

    upper: Bispinor
    lower: Bispinor

    def __post_init__(self):
        pu, pl = self.upper.momentum, self.lower.momentum
        if (pu.px, pu.py, pu.pz, pu.m) != (pl.px, pl.py, pl.pz, pl.m):
            raise DomainError("both sectors of an EightSpinor share one momentum")

    @property
    def components(self) -> np.ndarray:
        return np.concatenate([self.upper.components, self.lower.components])


class MarkovPair(NamedTuple):
    chi: np.ndarray
    eta: np.ndarray


def slash(e: float, px: float, py: float, pz: float) -> np.ndarray:
    """gamma0 e - gamma1 px - gamma2 py - gamma3 pz for any four-vector."""
    return GAMMA[0] * e - GAMMA[1] * px - GAMMA[2] * py - GAMMA[3] * pz


def dirac_matrix(p: FourMomentum) -> np.ndarray:
    """gamma.p for an on-shell momentum; squares to m^2."""
    return slash(p.E, p.px, p.py, p.pz)


def coupled_system_residual(p: FourMomentum, conv: FrequencyConvention):
    """Norm residuals of the four coupled equations, max over both indices.

    Order: (lambda^S -> rho^A, rho^A -> lambda^S, lambda^A -> rho^S,
    rho^S -> lambda^A).  With the correct convention all four vanish; with
    the wrong one at least one is of order m at every momentum.
    """
    gp = dirac_matrix(p)
    m = p.m
    s_sign = conv.sector_sign("S")
    a_sign = conv.sector_sign("A")
    residuals = [0.0, 0.0, 0.0, 0.0]
    for index in ("up", "down"):
        ls = lambda_spinor(p, "S", index).components
        ra = rho_spinor(p, "A", index).components
        la = lambda_spinor(p, "A", index).components
        rs = rho_spinor(p, "S", index).components
        eqs = [
            s_sign * gp @ ls - m * ra,
            s_sign * gp @ ra - m * ls,
            a_sign * gp @ la + m * rs,
            a_sign * gp @ rs + m * la,
        ]
        for k, r in enumerate(eqs):
            residuals[k] = max(residuals[k], float(np.linalg.norm(r)))
    return tuple(residuals)


def discover_convention(momenta) -> FrequencyConvention:
    """Try both plane-wave assignments; exactly one must work."""
    tol = TOLERANCES["identity"]
    winners = []
    for sign in (1, -1):
        conv = FrequencyConvention(sign)
        worst = max(max(coupled_system_residual(p, conv)) for p in momenta)
        if worst <= tol:
            winners.append(conv)
    if len(winners) != 1:
        raise DomainError(f"expected exactly one working convention, found {len(winners)}")
    return winners[0]


def markov_superposition(p: FourMomentum, particle_weights=(1.0, 0.0),
                         antiparticle_weights=(1.0, 0.0)) -> MarkovPair:
    """chi = (psi1 + psi2)/sqrt(2), eta = (psi1 - psi2)/sqrt(2) from a
    positive-mass solution psi1 and a negative-mass solution psi2.

    The pair satisfies the cross-coupled system gamma.p chi = m eta,
    gamma.p eta = m chi, and the map (psi1, psi2) -> (chi, eta) is an
    isometry of the stacked norm.
    """
    w1, w2 = particle_weights, antiparticle_weights
    psi1 = (w1[0] * dirac_spinor(p, "particle", "up").components
            + w1[1] * dirac_spinor(p, "particle", "down").components)
    psi2 = (w2[0] * dirac_spinor(p, "antiparticle", "up").components
            + w2[1] * dirac_spinor(p, "antiparticle", "down").components)
    return MarkovPair((psi1 + psi2) / math.sqrt(2.0), (psi1 - psi2) / math.sqrt(2.0))


# ---------------------------------------------------------------------------
# two-mass (scalar + pseudoscalar mass) equation
# ---------------------------------------------------------------------------

def sen_gupta_operator(e, px, py, pz, m1, m2) -> np.ndarray:
    """gamma.p - m1 - m2 gamma5 for an arbitrary four-vector."""
    return slash(e, px, py, pz) - m1 * np.eye(4, dtype=complex) - m2 * gamma5


def sen_gupta_residual(p: FourMomentum, m1: float, m2: float, psi) -> float:
    """Norm of (gamma.p - m1 - m2 gamma5) psi at an on-shell momentum."""
    vec = psi.components if isinstance(psi, Bispinor) else np.asarray(psi, dtype=complex)
    return float(np.linalg.norm(sen_gupta_operator(p.E, p.px, p.py, p.pz, m1, m2) @ vec))


def sen_gupta_null_space(e, px, py, pz, m1, m2, rcond: float = 1e-9):
    """Null-space basis of the two-mass operator; empty off the generalised
    shell p^2 = m1^2 - m2^2 (no exception)."""
    op = sen_gupta_operator(e, px, py, pz, m1, m2)
    _, svals, vh = np.linalg.svd(op)
    cutoff = rcond * max(1.0, float(svals[0]))
    null = vh[svals < cutoff].conj()
    return [row for row in null]


def sen_gupta_equivalence(m1: float, m2: float) -> np.ndarray:
    """Invertible E with E (gamma.p - m1 - m2 gamma5) E = gamma.p - mu,
    mu = sqrt(m1^2 - m2^2); valid for |m2| < |m1|.

    E = exp(b gamma5) with tanh(2b) = -m2/m1: conjugating the kinetic term
    through gamma5 flips its sign twice while the mass matrix picks up
    exp(2 b gamma5), which is tuned to cancel the pseudoscalar part.  A
    solution psi of the two-mass equation maps to the Dirac solution
    E^-1 psi of mass mu.
    """
    if not abs(m2) < abs(m1):
        raise DomainError(f"equivalence transform needs |m2| < |m1|, got {m1}, {m2}")
    b = -0.5 * math.atanh(m2 / m1)
    return math.cosh(b) * np.eye(4, dtype=complex) + math.sinh(b) * gamma5


# ---------------------------------------------------------------------------
# 8-component assembly
# ---------------------------------------------------------------------------

_Z4 = np.zeros((4, 4), dtype=complex)


def lambda5() -> np.ndarray:
    """diag(gamma5, -gamma5): the axial charge matrix of the doubled system."""
    return np.block([[gamma5, _Z4], [_Z4, -gamma5]])


def eight_kinetic(p: FourMomentum) -> np.ndarray:
    """Off-diagonal kinetic block [[0, gamma.p], [gamma.p, 0]]; commutes with
    the axial matrix, so the axial-coupled covariant derivative is consistent."""
    gp = dirac_matrix(p)
    return np.block([[_Z4, gp], [gp, _Z4]])


def eight_stacks(p: FourMomentum, index: str):
    """The (lambda^S, rho^A) and (lambda^A, rho^S) stacks at one index."""
    s_stack = EightSpinor(lambda_spinor(p, "S", index), rho_spinor(p, "A", index))
    a_stack = EightSpinor(lambda_spinor(p, "A", index), rho_spinor(p, "S", index))
    return s_stack, a_stack


_MASS_SIGN = {"S": 1.0, "A": -1.0}


def eight_operator(p: FourMomentum, conv: FrequencyConvention, sector: str) -> np.ndarray:
    """Momentum-space 8x8 operator for one sector.

    The coordinate-space equations carry opposite mass signs in the two
    sectors; the plane-wave substitution contributes the convention's
    frequency sign to the kinetic part.
    """
    return (conv.sector_sign(sector) * eight_kinetic(p)
            - _MASS_SIGN[sector] * p.m * np.eye(8, dtype=complex))


def eight_component_residual(p: FourMomentum, conv: FrequencyConvention) -> float:
    """Max residual of the 8-component equation over both stacks and indices."""
    worst = 0.0
    for index in ("up", "down"):
        s_stack, a_stack = eight_stacks(p, index)
        for stack, sector in ((s_stack, "S"), (a_stack, "A")):
            op = eight_operator(p, conv, sector)
            worst = max(worst, float(np.linalg.norm(op @ stack.components)))
    return worst


def eight_gauge_transform(alpha: float) -> np.ndarray:
    """diag(G_lambda(alpha), G_rho(alpha)) acting on an 8-component stack."""
    return np.block(
        [[chiral_gauge_transform(alpha, "lambda"), _Z4],
         [_Z4, chiral_gauge_transform(alpha, "rho")]]
    )


# ---------------------------------------------------------------------------
# mass term of the Lagrangian
# ---------------------------------------------------------------------------

def lagrangian_mass_term(lambda_s, rho_a, lambda_a, rho_s, m: float) -> complex:
    """-m (lbar^S rho^A + rbar^A lambda^S - lbar^A rho^S - rbar^S lambda^A).

    Accepts Bispinors or bare 4-vectors; real whenever the two pairings are
    mutual conjugates, which they are for any field configuration.
    """
    return -m * (
        bar_product(lambda_s, rho_a)
        + bar_product(rho_a, lambda_s)
        - bar_product(lambda_a, rho_s)
        - bar_product(rho_s, lambda_a)
    )


def doublet_mass_term(d, r, m: float) -> complex:
    """-m sum_i (dbar_i r_i + rbar_i d_i) over a pair of doublets.

    With d = (lambda^S, lambda^A) and r = (rho^A, -rho^S) this equals the
    Lagrangian mass term; the doublet form is the one left invariant by a
    common SU(2) phase rotation of d and r.
    """
    total = 0.0 + 0.0j
    for di, ri in zip(d, r):
        total += bar_product(di, ri) + bar_product(ri, di)
    return -m * total


def rotate_doublet(u, doublet):
    """Apply a 2x2 phase-transformation matrix across a doublet of fields."""
    a = doublet[0].components if isinstance(doublet[0], Bispinor) else np.asarray(doublet[0])
    b = doublet[1].components if isinstance(doublet[1], Bispinor) else np.asarray(doublet[1])
    return (u[0, 0] * a + u[0, 1] * b, u[1, 0] * a + u[1, 1] * b)
