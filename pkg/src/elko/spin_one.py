"""The six-component (spin-1) sector: Wigner matrix, conjugation operators,
chirality, helicity triplets, the lambda/rho six-spinors and the zeta-scan
that quantifies which conjugation requirement can be satisfied.

Key algebra: with Theta the antidiagonal (1, -1, 1) flip one has
Theta^2 = +1, so the antilinear block operator Sc = [[0, Theta],
[-Theta, 0]] K squares to -1 and no phase zeta makes a six-spinor
self/anti-self conjugate under it.  Twisting by the chirality matrix gives
(Gamma5 Sc)^2 = +1 and the requirement is satisfied exactly at zeta = +1
(self) and zeta = -1 (anti-self), for any helicity and any boost.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import TOLERANCES
from .errors import DomainError
from .kinematics import AngularParams, FourMomentum, boost_one
from .matrices import CMatrix, spin1_jy, spin1_jz, theta_one

_I3 = np.eye(3, dtype=complex)
_Z3 = np.zeros((3, 3), dtype=complex)


@dataclass(frozen=True)
class SixSpinor:
    """Six components; upper three right-handed, lower three left-handed."""

    components: np.ndarray
    zeta: complex

    def __post_init__(self):
        object.__setattr__(self, "components", np.asarray(self.components, dtype=complex))
        if self.components.shape != (6,):
            raise DomainError("a SixSpinor has exactly 6 components")

    @property
    def right_block(self) -> np.ndarray:
        return self.components[:3]

    @property
    def left_block(self) -> np.ndarray:
        return self.components[3:]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))


@dataclass(frozen=True)
class SpinOneOperator:
    """6x6 matrix part + antilinearity flag + unimodular phase."""

    matrix: CMatrix
    antilinear: bool = False
    phase: complex = 1.0 + 0.0j

    def __post_init__(self):
        if abs(abs(self.phase) - 1.0) > TOLERANCES["on_shell"]:
            raise DomainError(f"operator phase must be unimodular, got {self.phase}")
        object.__setattr__(self, "matrix", np.asarray(self.matrix, dtype=complex))

    def apply(self, components) -> np.ndarray:
        x = np.asarray(components, dtype=complex)
        if self.antilinear:
            x = np.conj(x)
        return self.phase * (self.matrix @ x)


def wigner_theta_one() -> CMatrix:
    """3x3 Wigner matrix: real, orthogonal, symmetric, squares to +1, and
    Theta J Theta^-1 = -J* for all three spin-1 generators."""
    return theta_one.copy()


def sc_one(phase: float = 0.0) -> SpinOneOperator:
    """Antilinear spin-1 charge conjugation; squares to -1 for every phase."""
    matrix = np.block([[_Z3, theta_one], [-theta_one, _Z3]])
    return SpinOneOperator(matrix, antilinear=True, phase=cmath.exp(1j * phase))


def ss_one(phase: float = 0.0) -> SpinOneOperator:
    """Linear block-swap e^{i phase} [[0, 1], [1, 0]] (squares to +1 at 0)."""
    matrix = np.block([[_Z3, _I3], [_I3, _Z3]])
    return SpinOneOperator(matrix, antilinear=False, phase=cmath.exp(1j * phase))


def gamma5_one() -> CMatrix:
    """Chirality of the six-component sector: diag(I3, -I3)."""
    return np.block([[_I3, _Z3], [_Z3, -_I3]])


def gamma5_sc_one(phase: float = 0.0) -> SpinOneOperator:
    """The chirality-twisted conjugation; squares to +1."""
    base = sc_one(phase)
    return SpinOneOperator(gamma5_one() @ base.matrix, antilinear=True, phase=base.phase)


# ---------------------------------------------------------------------------
# helicity triplet and six-spinor constructions
# ---------------------------------------------------------------------------

def _spin1_rotation(theta: float, phi: float) -> CMatrix:
    # exp(-i phi Jz) exp(-i theta Jy); closed form via J^3 = J for unit axes
    def rot(j, angle):
        return (np.eye(3, dtype=complex) - 1j * j * math.sin(angle)
                + (j @ j) * (math.cos(angle) - 1.0))

    return rot(spin1_jz, phi) @ rot(spin1_jy, theta)


def spin1_helicity_triplet(theta: float, phi: float, h: int, phase: float = 0.0) -> np.ndarray:
    """J.n eigen-3-spinor of eigenvalue h in {+1, 0, -1} at arbitrary angles."""
    if h not in (1, 0, -1):
        raise DomainError(f"spin-1 helicity must be +1, 0 or -1, got {h}")
    basis = {1: 0, 0: 1, -1: 2}[h]
    e = np.zeros(3, dtype=complex)
    e[basis] = 1.0
    return cmath.exp(1j * phase) * (_spin1_rotation(theta, phi) @ e)


def spin1_lambda(p: FourMomentum, zeta: complex, a: AngularParams, h: int = 1,
                 phase: float = 0.0) -> SixSpinor:
    """lambda-type six-spinor: boost((zeta Theta phi_L*, phi_L)) with the
    left 3-spinor taken from the helicity triplet at the given angles."""
    f = spin1_helicity_triplet(a.theta, a.phi, h, phase)
    upper = boost_one(p, "R") @ (zeta * (theta_one @ np.conj(f)))
    lower = boost_one(p, "L") @ f
    return SixSpinor(np.concatenate([upper, lower]), zeta)


def spin1_rho(p: FourMomentum, zeta: complex, a: AngularParams, h: int = 1,
              phase: float = 0.0) -> SixSpinor:
    """rho-type six-spinor: built from a right-handed triplet,
    boost((phi_R, zeta Theta phi_R*))."""
    f = spin1_helicity_triplet(a.theta, a.phi, h, phase)
    upper = boost_one(p, "R") @ f
    lower = boost_one(p, "L") @ (zeta * (theta_one @ np.conj(f)))
    return SixSpinor(np.concatenate([upper, lower]), zeta)


# ---------------------------------------------------------------------------
# zeta scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZetaMinimum:
    zeta: complex
    residual: float


@dataclass(frozen=True)
class ConjugacyScan:
    """Minimal self- and anti-self-conjugacy residuals over |zeta| = 1."""

    operator: str                  # "sc" | "g5sc"
    construction: str              # "lambda" | "rho"
    self_minimum: ZetaMinimum
    anti_minimum: ZetaMinimum
    floor_exceeded: bool           # True when neither sign admits a solution


def _scan_operator(name: str, phase: float) -> SpinOneOperator:
    if name == "sc":
        return sc_one(phase)
    if name == "g5sc":
        return gamma5_sc_one(phase)
    raise DomainError(f"operator must be 'sc' or 'g5sc', got {name!r}")


def _golden_section(fn, lo: float, hi: float, iterations: int = 60):
    g = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iterations):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = fn(d)
    x = (a + b) / 2.0
    return x, fn(x)


def spin1_conjugacy_scan(p: FourMomentum, operator: str, construction: str = "lambda",
                         h: int = 1, op_phase: float = 0.0, samples: int = 720) -> ConjugacyScan:
    """Sample zeta on the unit circle (then refine by golden-section search)
    and report the minimal residuals of Op psi(zeta) = +- psi(zeta).

    For the chirality-twisted operator the minima sit at zeta = +-1 and
    vanish to machine precision; for the bare conjugation both minima stay
    above the nonexistence floor for every zeta.

    The six-spinor is linear in zeta, s(zeta) = x + zeta y with x, y fixed,
    so Op s = a + zeta* b with a, b precomputed and the whole circle is
    scanned with vectorised arithmetic.
    """
    if construction not in ("lambda", "rho"):
        raise DomainError(f"construction must be 'lambda' or 'rho', got {construction!r}")
    a_ang = p.angles()
    op = _scan_operator(operator, op_phase)
    f = spin1_helicity_triplet(a_ang.theta, a_ang.phi, h)
    zero = np.zeros(3, dtype=complex)
    if construction == "lambda":
        x = np.concatenate([zero, boost_one(p, "L") @ f])
        y = np.concatenate([boost_one(p, "R") @ (theta_one @ np.conj(f)), zero])
    else:
        x = np.concatenate([boost_one(p, "R") @ f, zero])
        y = np.concatenate([zero, boost_one(p, "L") @ (theta_one @ np.conj(f))])
    a_vec = op.phase * (op.matrix @ np.conj(x))
    b_vec = op.phase * (op.matrix @ np.conj(y))
    norm = math.sqrt(float(np.linalg.norm(x) ** 2 + np.linalg.norm(y) ** 2))

    def residual(arg: float, sign: float) -> float:
        z = cmath.exp(1j * arg)
        return float(np.linalg.norm(a_vec + np.conj(z) * b_vec - sign * (x + z * y))) / norm

    args = 2.0 * math.pi * np.arange(samples) / samples
    zs = np.exp(1j * args)
    image = a_vec[None, :] + np.conj(zs)[:, None] * b_vec[None, :]
    minima = {}
    for sign in (1.0, -1.0):
        diffs = image - sign * (x[None, :] + zs[:, None] * y[None, :])
        residuals = np.linalg.norm(diffs, axis=1) / norm
        best = int(np.argmin(residuals))  # ties resolve to the smaller angle
        step = 2.0 * math.pi / samples
        arg, res = _golden_section(lambda t, s=sign: residual(t, s),
                                   args[best] - step, args[best] + step)
        minima[sign] = ZetaMinimum(cmath.exp(1j * arg), res)

    floor = TOLERANCES["floor"]
    return ConjugacyScan(
        operator=operator,
        construction=construction,
        self_minimum=minima[1.0],
        anti_minimum=minima[-1.0],
        floor_exceeded=minima[1.0].residual > floor and minima[-1.0].residual > floor,
    )
