"""On-shell four-momenta, parity reflection and the spin-1/2 / spin-1 boosts.

Metric signature (+,-,-,-): gamma^mu p_mu = gamma0 E - gamma . p.  Boost
rapidity is arccosh(E/m) along n = p/|p|; at |p| = 0 every boost is the
identity by continuity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DirectionUndefinedError, DomainError
from .matrices import CMatrix, pauli_dot, spin1_dot


@dataclass(frozen=True)
class FourMomentum:
    """On-shell momentum; E is derived from (px, py, pz, m)."""

    px: float
    py: float
    pz: float
    m: float
    E: float

    @property
    def p_r(self) -> complex:
        return complex(self.px, self.py)

    @property
    def p_l(self) -> complex:
        return complex(self.px, -self.py)

    @property
    def p_plus(self) -> float:
        return self.E + self.pz

    @property
    def p_minus(self) -> float:
        return self.E - self.pz

    @property
    def p_abs(self) -> float:
        return math.sqrt(self.px * self.px + self.py * self.py + self.pz * self.pz)

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    def direction(self) -> np.ndarray:
        p = self.p_abs
        if p == 0.0:
            raise DirectionUndefinedError("momentum direction undefined at |p| = 0")
        return self.vec / p

    def angles(self) -> "AngularParams":
        """Polar/azimuthal angles of the direction; (0, 0) at rest."""
        p = self.p_abs
        if p == 0.0:
            return AngularParams(0.0, 0.0)
        theta = math.acos(max(-1.0, min(1.0, self.pz / p)))
        phi = math.atan2(self.py, self.px) % (2 * math.pi)
        return AngularParams(theta, phi)


@dataclass(frozen=True)
class AngularParams:
    """A point on the sphere: theta in [0, pi], phi in [0, 2 pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise DomainError(f"theta = {self.theta} outside [0, pi]")
        if not (0.0 <= self.phi < 2 * math.pi):
            raise DomainError(f"phi = {self.phi} outside [0, 2 pi)")

    def reflected(self) -> "AngularParams":
        """Image under space inversion: theta -> pi - theta, phi -> pi + phi."""
        return AngularParams(math.pi - self.theta, (math.pi + self.phi) % (2 * math.pi))


def make_momentum(px: float, py: float, pz: float, m: float) -> FourMomentum:
    """On-shell four-momentum with E = sqrt(p^2 + m^2); requires m > 0."""
    if not m > 0.0:
        raise DomainError(f"mass must be positive, got {m}")
    E = math.sqrt(px * px + py * py + pz * pz + m * m)
    return FourMomentum(float(px), float(py), float(pz), float(m), E)


def parity_reflect(p: FourMomentum) -> FourMomentum:
    """(E, p) -> (E, -p); an exact involution."""
    return FourMomentum(-p.px, -p.py, -p.pz, p.m, p.E)


def boost_half(p: FourMomentum, side: str) -> CMatrix:
    """Right/left-handed 2x2 boost from rest to p.

    Lambda_R = (E + m + sigma.p) / sqrt(2 m (E + m)) and Lambda_L likewise
    with -sigma.p; both are Hermitian positive with det = 1, and
    Lambda_L = Lambda_R^-1.
    """
    if side not in ("R", "L"):
        raise DomainError(f"side must be 'R' or 'L', got {side!r}")
    sign = 1.0 if side == "R" else -1.0
    num = (p.E + p.m) * np.eye(2, dtype=complex) + sign * pauli_dot(p.vec)
    return num / math.sqrt(2.0 * p.m * (p.E + p.m))


def boost_half_pair(p: FourMomentum) -> CMatrix:
    """4x4 block-diagonal boost diag(Lambda_R, Lambda_L) acting on bispinors."""
    from .matrices import block_diag2

    return block_diag2(boost_half(p, "R"), boost_half(p, "L"))


def _spin1_exp(k: CMatrix, x: float) -> CMatrix:
    # (J.n)^3 = J.n closes the exponential series
    return np.eye(3, dtype=complex) + k * math.sinh(x) + (k @ k) * (math.cosh(x) - 1.0)


def boost_one(p: FourMomentum, side: str) -> CMatrix:
    """3x3 boost exp(+-(J.n) arccosh(E/m)) for the spin-1 blocks."""
    if side not in ("R", "L"):
        raise DomainError(f"side must be 'R' or 'L', got {side!r}")
    pabs = p.p_abs
    if pabs == 0.0:
        return np.eye(3, dtype=complex)
    rapidity = math.acosh(p.E / p.m)
    k = spin1_dot(p.vec / pabs)
    return _spin1_exp(k, rapidity if side == "R" else -rapidity)
