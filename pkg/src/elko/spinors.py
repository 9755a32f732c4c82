"""Factories for every spin-1/2 object: the self/anti-self charge-conjugate
lambda and rho bispinors (rest-frame and boosted, fixed-axis and
helicity-adapted), Dirac particle/antiparticle spinors, and helicity
2-spinors with configurable phases.

Conventions, fixed once here and relied on by the whole verification suite:

* chiral basis with the right-handed block on top (see ``matrices``);
* fixed-axis ("spinorial") family: the closed forms below in terms of
  p_l, p_r, p+ = E + pz, p- = E - pz, equal to diag(Lambda_R, Lambda_L)
  applied to the rest spinors with global phase exactly 1;
* helicity family: lambda = boost((zeta Theta phi*, phi)) with zeta = +i for
  the self-conjugate kind and -i for the anti-self one; rho is built from a
  right-handed 2-spinor the same way with the opposite zeta;
* helicity 2-spinors
      phi_+ = e^{i theta1} (cos(t/2) e^{-i f/2},  sin(t/2) e^{i f/2})
      phi_- = e^{i theta2} (sin(t/2) e^{-i f/2}, -cos(t/2) e^{i f/2})
  chosen so the space-inversion images (t -> pi - t, f -> pi + f) satisfy
      R phi_-           = -i e^{i(theta2 - theta1)} phi_+
      R phi_+           = -i e^{i(theta1 - theta2)} phi_-
      R Theta (phi_-)*  = -i e^{-2 i theta2} phi_-
      R Theta (phi_+)*  = +i e^{-2 i theta1} phi_+
  identically in all angles and phases.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kinematics import AngularParams, FourMomentum, boost_half, boost_half_pair, make_momentum
from .matrices import gamma0, theta_half

FAMILIES = ("lambda", "rho", "u", "v")
KINDS_SELF = ("S", "A")
INDICES = ("up", "down")
BASES = ("spinorial", "helicity")


@dataclass(frozen=True)
class PhaseConfig:
    """Free phases of the construction; all default to zero.

    theta_c is the charge-conjugation phase; theta1/theta2 dress the +/-
    helicity 2-spinors; alpha/beta are the phases of the two 2-spinors
    entering the index-flip unitary.
    """

    theta_c: float = 0.0
    theta1: float = 0.0
    theta2: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0


@dataclass(frozen=True)
class Bispinor:
    """Four complex components tagged with their construction labels."""

    components: np.ndarray
    family: str            # lambda | rho | u | v
    kind: str              # S | A for lambda/rho, particle | antiparticle for u/v
    index: str             # up | down
    basis: str             # spinorial | helicity
    momentum: FourMomentum

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.basis not in BASES:
            raise DomainError(f"unknown basis {self.basis!r}")
        if self.index not in INDICES:
            raise DomainError(f"unknown index {self.index!r}")
        object.__setattr__(self, "components", np.asarray(self.components, dtype=complex))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))


@dataclass(frozen=True)
class TwoSpinor:
    """Unit-norm helicity eigen-2-spinor with its phase bookkeeping."""

    components: np.ndarray
    helicity: int          # +1 | -1
    theta1: float = 0.0
    theta2: float = 0.0


# ---------------------------------------------------------------------------
# rest frame
# ---------------------------------------------------------------------------

# Exact component patterns of the rest spinors; the physical spinor is the
# pattern times sqrt(m/2).
REST_LAMBDA_PATTERNS = {
    ("S", "up"): np.array([0, 1j, 1, 0], dtype=complex),
    ("S", "down"): np.array([-1j, 0, 0, 1], dtype=complex),
    ("A", "up"): np.array([0, -1j, 1, 0], dtype=complex),
    ("A", "down"): np.array([1j, 0, 0, 1], dtype=complex),
}

# rho^S_{up,down}(0) = (-i, +i) lambda^A_{down,up}(0);
# rho^A_{up,down}(0) = (+i, -i) lambda^S_{down,up}(0).
REST_RHO_PATTERNS = {
    ("S", "up"): -1j * REST_LAMBDA_PATTERNS[("A", "down")],
    ("S", "down"): 1j * REST_LAMBDA_PATTERNS[("A", "up")],
    ("A", "up"): 1j * REST_LAMBDA_PATTERNS[("S", "down")],
    ("A", "down"): -1j * REST_LAMBDA_PATTERNS[("S", "up")],
}


def _check_kind_index(kind: str, index: str):
    if kind not in KINDS_SELF:
        raise DomainError(f"kind must be 'S' or 'A', got {kind!r}")
    if index not in INDICES:
        raise DomainError(f"index must be 'up' or 'down', got {index!r}")


def rest_lambda(kind: str, index: str, m: float) -> Bispinor:
    """Rest-frame lambda spinor, sqrt(m/2) times an exact 0/±1/±i pattern."""
    _check_kind_index(kind, index)
    if not m > 0.0:
        raise DomainError(f"mass must be positive, got {m}")
    comps = math.sqrt(m / 2.0) * REST_LAMBDA_PATTERNS[(kind, index)]
    return Bispinor(comps, "lambda", kind, index, "spinorial", make_momentum(0, 0, 0, m))


def rest_rho(kind: str, index: str, m: float) -> Bispinor:
    """Rest-frame rho spinor, defined through the rest lambdas."""
    _check_kind_index(kind, index)
    if not m > 0.0:
        raise DomainError(f"mass must be positive, got {m}")
    comps = math.sqrt(m / 2.0) * REST_RHO_PATTERNS[(kind, index)]
    return Bispinor(comps, "rho", kind, index, "spinorial", make_momentum(0, 0, 0, m))


# ---------------------------------------------------------------------------
# boosted fixed-axis (spinorial) closed forms
# ---------------------------------------------------------------------------

def _lambda_components(p: FourMomentum, kind: str, index: str) -> np.ndarray:
    c = 1.0 / (2.0 * math.sqrt(p.E + p.m))
    pl, pr = p.p_l, p.p_r
    pp, pm = p.p_plus + p.m, p.p_minus + p.m
    if kind == "S" and index == "up":
        v = [1j * pl, 1j * pm, pm, -pr]
    elif kind == "S" and index == "down":
        v = [-1j * pp, -1j * pr, -pl, pp]
    elif kind == "A" and index == "up":
        v = [-1j * pl, -1j * pm, pm, -pr]
    else:
        v = [1j * pp, 1j * pr, -pl, pp]
    return c * np.array(v, dtype=complex)


def _rho_components(p: FourMomentum, kind: str, index: str) -> np.ndarray:
    c = 1.0 / (2.0 * math.sqrt(p.E + p.m))
    pl, pr = p.p_l, p.p_r
    pp, pm = p.p_plus + p.m, p.p_minus + p.m
    if kind == "S" and index == "up":
        v = [pp, pr, 1j * pl, -1j * pp]
    elif kind == "S" and index == "down":
        v = [pl, pm, 1j * pm, -1j * pr]
    elif kind == "A" and index == "up":
        v = [pp, pr, -1j * pl, 1j * pp]
    else:
        v = [pl, pm, -1j * pm, 1j * pr]
    return c * np.array(v, dtype=complex)


# ---------------------------------------------------------------------------
# helicity 2-spinors
# ---------------------------------------------------------------------------

def helicity_components(theta: float, phi: float, h: int,
                        theta1: float = 0.0, theta2: float = 0.0) -> np.ndarray:
    """Raw sigma.n eigen-2-spinor at arbitrary real angles (half-angle forms)."""
    ct, st = math.cos(theta / 2.0), math.sin(theta / 2.0)
    em, ep = cmath.exp(-1j * phi / 2.0), cmath.exp(1j * phi / 2.0)
    if h > 0:
        return cmath.exp(1j * theta1) * np.array([ct * em, st * ep])
    return cmath.exp(1j * theta2) * np.array([st * em, -ct * ep])


def helicity_two_spinor(a: AngularParams, h: int, cfg: PhaseConfig = PhaseConfig()) -> TwoSpinor:
    """sigma.n eigenstate with eigenvalue h = +-1 and the configured phases."""
    if h not in (1, -1):
        raise DomainError(f"helicity must be +1 or -1, got {h}")
    comps = helicity_components(a.theta, a.phi, h, cfg.theta1, cfg.theta2)
    return TwoSpinor(comps, h, cfg.theta1, cfg.theta2)


def index_flip_unitary(phi: float, alpha: float, beta: float) -> np.ndarray:
    """The unitary connecting the two helicity 2-spinors.

    U maps the +1 spinor (phase alpha) onto the -1 spinor (phase beta);
    its adjoint maps back.
    """
    return cmath.exp(1j * (beta - alpha)) * np.array(
        [[0, cmath.exp(-1j * phi)], [-cmath.exp(1j * phi), 0]], dtype=complex
    )


# ---------------------------------------------------------------------------
# boosted spinors, both bases
# ---------------------------------------------------------------------------

_INDEX_TO_H = {"up": 1, "down": -1}

# zeta phases making boost((zeta Theta phi*, phi)) self (S) / anti-self (A)
# charge conjugate; rho uses the right-handed block and the opposite phases.
_LAMBDA_ZETA = {"S": 1j, "A": -1j}
_RHO_ZETA = {"S": -1j, "A": 1j}


def _helicity_rest_lambda(theta, phi, kind, h, m, cfg):
    f = helicity_components(theta, phi, h, cfg.theta1, cfg.theta2)
    upper = _LAMBDA_ZETA[kind] * (theta_half @ np.conj(f))
    return math.sqrt(m / 2.0) * np.concatenate([upper, f])


def _helicity_rest_rho(theta, phi, kind, h, m, cfg):
    f = helicity_components(theta, phi, h, cfg.theta1, cfg.theta2)
    lower = _RHO_ZETA[kind] * (theta_half @ np.conj(f))
    return math.sqrt(m / 2.0) * np.concatenate([f, lower])


def lambda_spinor(p: FourMomentum, kind: str, index: str,
                  basis: str = "spinorial", cfg: PhaseConfig = PhaseConfig()) -> Bispinor:
    """Boosted lambda spinor.

    The spinorial basis uses the fixed-axis closed forms; the helicity basis
    boosts the self/anti-self conjugate combination built on the sigma.n
    eigen-2-spinor of p's direction (index up <-> h = +1).
    """
    _check_kind_index(kind, index)
    if basis == "spinorial":
        comps = _lambda_components(p, kind, index)
    elif basis == "helicity":
        a = p.angles()
        rest = _helicity_rest_lambda(a.theta, a.phi, kind, _INDEX_TO_H[index], p.m, cfg)
        comps = boost_half_pair(p) @ rest
    else:
        raise DomainError(f"unknown basis {basis!r}")
    return Bispinor(comps, "lambda", kind, index, basis, p)


def rho_spinor(p: FourMomentum, kind: str, index: str,
               basis: str = "spinorial", cfg: PhaseConfig = PhaseConfig()) -> Bispinor:
    """Boosted rho spinor (second self/anti-self conjugate family)."""
    _check_kind_index(kind, index)
    if basis == "spinorial":
        comps = _rho_components(p, kind, index)
    elif basis == "helicity":
        a = p.angles()
        rest = _helicity_rest_rho(a.theta, a.phi, kind, _INDEX_TO_H[index], p.m, cfg)
        comps = boost_half_pair(p) @ rest
    else:
        raise DomainError(f"unknown basis {basis!r}")
    return Bispinor(comps, "rho", kind, index, basis, p)


def helicity_lambda_at(p: FourMomentum, kind: str, h: int, theta: float, phi: float,
                       cfg: PhaseConfig = PhaseConfig()) -> np.ndarray:
    """Helicity-family lambda with explicitly supplied (possibly unwrapped)
    angles; used by the space-inversion checks, which substitute
    theta -> pi - theta, phi -> pi + phi without reducing mod 2 pi."""
    rest = _helicity_rest_lambda(theta, phi, kind, h, p.m, cfg)
    return boost_half_pair(p) @ rest


def dirac_spinor(p: FourMomentum, sign: str, index: str,
                 basis: str = "spinorial", cfg: PhaseConfig = PhaseConfig()) -> Bispinor:
    """Dirac particle/antiparticle spinor, normalised to u-bar u = 2m.

    The 2-spinor block is a fixed-axis J_z eigenvector (spinorial) or the
    sigma.n eigenvector of p's direction (helicity).
    """
    if sign not in ("particle", "antiparticle"):
        raise DomainError(f"sign must be 'particle' or 'antiparticle', got {sign!r}")
    if index not in INDICES:
        raise DomainError(f"index must be 'up' or 'down', got {index!r}")
    if basis == "spinorial":
        f = np.array([1.0, 0.0], dtype=complex) if index == "up" else np.array([0.0, 1.0], dtype=complex)
    elif basis == "helicity":
        a = p.angles()
        f = helicity_components(a.theta, a.phi, _INDEX_TO_H[index], cfg.theta1, cfg.theta2)
    else:
        raise DomainError(f"unknown basis {basis!r}")
    upper = boost_half(p, "R") @ f
    lower = boost_half(p, "L") @ f
    if sign == "antiparticle":
        lower = -lower
    comps = math.sqrt(p.m) * np.concatenate([upper, lower])
    family = "u" if sign == "particle" else "v"
    return Bispinor(comps, family, sign, index, basis, p)


def chiral_helicity_sign(family: str, index: str) -> int:
    """Sign of the chiral-helicity eigenvalue (in units of 1/2) carried by a
    helicity-family spinor.

    The lambda labels align with the eigenvalue (up -> +1/2); the rho family,
    being +-i times the index-flipped anti-family, anti-aligns (up -> -1/2).
    """
    if family not in ("lambda", "rho"):
        raise DomainError(f"family must be 'lambda' or 'rho', got {family!r}")
    if index not in INDICES:
        raise DomainError(f"index must be 'up' or 'down', got {index!r}")
    sign = 1 if index == "up" else -1
    return sign if family == "lambda" else -sign


def bar_product(a, b) -> complex:
    """Lorentz-invariant pairing a-bar b = a^dagger gamma0 b."""
    av = a.components if isinstance(a, Bispinor) else np.asarray(a, dtype=complex)
    bv = b.components if isinstance(b, Bispinor) else np.asarray(b, dtype=complex)
    if isinstance(a, Bispinor) and isinstance(b, Bispinor):
        pa, pb = a.momentum, b.momentum
        if (pa.px, pa.py, pa.pz, pa.m) != (pb.px, pb.py, pb.pz, pb.m):
            raise DomainError("bar_product requires both spinors at the same momentum")
    return complex(np.conj(av) @ gamma0 @ bv)


# ---------------------------------------------------------------------------
# golden-value file (regression anchor for the closed forms)
# ---------------------------------------------------------------------------

GOLDEN_HEADER = "spinor-golden v1"


def golden_records(momenta) -> list[str]:
    """One text record per fixed-axis spinor at each momentum."""
    lines = []
    for p in momenta:
        for family, fn in (("lambda", lambda_spinor), ("rho", rho_spinor)):
            for kind in KINDS_SELF:
                for index in INDICES:
                    comps = fn(p, kind, index).components
                    nums = " ".join(f"{x:.17g}" for c in comps for x in (c.real, c.imag))
                    lines.append(
                        f"{family} {kind} {index} "
                        f"{p.px:.17g} {p.py:.17g} {p.pz:.17g} {p.m:.17g} {nums}"
                    )
    return lines


def write_golden(path, momenta):
    with open(path, "w") as fh:
        fh.write(GOLDEN_HEADER + "\n")
        for line in golden_records(momenta):
            fh.write(line + "\n")


def read_golden(path):
    """Yields (family, kind, index, momentum, components) tuples."""
    with open(path) as fh:
        header = fh.readline().strip()
        if header != GOLDEN_HEADER:
            raise DomainError(f"unsupported golden file header {header!r}")
        out = []
        for line in fh:
            if not line.strip():
                continue
            parts = line.split()
            family, kind, index = parts[0], parts[1], parts[2]
            px, py, pz, m = (float(x) for x in parts[3:7])
            reals = [float(x) for x in parts[7:15]]
            comps = np.array([complex(reals[2 * i], reals[2 * i + 1]) for i in range(4)])
            out.append((family, kind, index, make_momentum(px, py, pz, m), comps))
        return out
