"""Discrete-symmetry and basis-rotation operators, and their composition
calculus with antilinearity and momentum-reflection bookkeeping.

A ``SymmetryOperator`` acts on a momentum-space state function psi as

    (O psi)(p) = phase * M * K^a [ psi(p') ]

where p' = parity_reflect(p) when the operator reflects momentum (else p),
K is complex conjugation applied a = 0/1 times, and M is a fixed matrix.
Composition therefore multiplies matrices (conjugating the inner one under
an antilinear outer factor), xors the two flags and multiplies phases
(conjugating the inner phase under an antilinear outer factor).  The generic
composition assumes momentum-independent matrices; momentum-dependent ones
(helicity) are composed explicitly where needed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import TOLERANCES
from .errors import (
    AmbiguousIntertwinerError,
    CoordinateSingularityError,
    DirectionUndefinedError,
    DomainError,
)
from .kinematics import FourMomentum, boost_half, parity_reflect
from .matrices import (
    CMatrix,
    block_diag2,
    gamma0,
    gamma2,
    gamma5,
    pauli_dot,
    sigma_x,
    sigma_y,
    sigma_z,
)
from .spinors import (
    PhaseConfig,
    dirac_spinor,
    helicity_components,
    lambda_spinor,
)


@dataclass(frozen=True)
class SymmetryOperator:
    """Matrix part + antilinearity flag + momentum-reflection flag + phase."""

    matrix: CMatrix
    antilinear: bool = False
    reflects_momentum: bool = False
    phase: complex = 1.0 + 0.0j

    def __post_init__(self):
        if abs(abs(self.phase) - 1.0) > TOLERANCES["on_shell"]:
            raise DomainError(f"operator phase must be unimodular, got {self.phase}")
        object.__setattr__(self, "matrix", np.asarray(self.matrix, dtype=complex))

    def apply(self, components) -> np.ndarray:
        """Act on explicit components; a reflecting operator requires the
        caller to have evaluated them at the reflected momentum already."""
        x = np.asarray(components, dtype=complex)
        if self.antilinear:
            x = np.conj(x)
        return self.phase * (self.matrix @ x)

    def apply_state(self, state, p: FourMomentum) -> np.ndarray:
        """Act on a state function p -> components."""
        q = parity_reflect(p) if self.reflects_momentum else p
        return self.apply(state(q))

    def compose(self, other: "SymmetryOperator") -> "SymmetryOperator":
        """self after other (operator product self . other)."""
        inner_matrix = np.conj(other.matrix) if self.antilinear else other.matrix
        inner_phase = np.conj(other.phase) if self.antilinear else other.phase
        return SymmetryOperator(
            self.matrix @ inner_matrix,
            antilinear=self.antilinear != other.antilinear,
            reflects_momentum=self.reflects_momentum != other.reflects_momentum,
            phase=self.phase * inner_phase,
        )


@dataclass(frozen=True)
class ActionClassification:
    """Outcome of probing whether two operators (anti)commute on a family."""

    relation: str             # commute | anticommute | neither
    max_residual: float       # residual of the winning relation
    commute_residual: float
    anticommute_residual: float


# ---------------------------------------------------------------------------
# the basic operators
# ---------------------------------------------------------------------------

def charge_conjugation(cfg: PhaseConfig = PhaseConfig()) -> SymmetryOperator:
    """Antilinear charge conjugation: -e^{i theta_c} gamma2 K."""
    return SymmetryOperator(-gamma2, antilinear=True, phase=cmath.exp(1j * cfg.theta_c))


def parity_operator(intrinsic_phase: complex = 1.0) -> SymmetryOperator:
    """Space inversion gamma0 R with an optional intrinsic phase.

    Truly neutral (self/anti-self conjugate) states require an imaginary
    intrinsic phase for space inversion to commute with charge conjugation;
    Dirac states use the real default.
    """
    return SymmetryOperator(gamma0, reflects_momentum=True, phase=intrinsic_phase)


def chirality() -> SymmetryOperator:
    return SymmetryOperator(gamma5)


def helicity_operator(p: FourMomentum) -> SymmetryOperator:
    """h = (1/2) diag(sigma.n, sigma.n); spectrum {+1/2, +1/2, -1/2, -1/2}."""
    n = p.direction()
    sn = pauli_dot(n)
    return SymmetryOperator(0.5 * block_diag2(sn, sn))


def chiral_helicity_operator(p: FourMomentum) -> SymmetryOperator:
    """eta = -gamma5 h = -(1/2) diag(sigma.n, -sigma.n)."""
    n = p.direction()
    sn = pauli_dot(n)
    return SymmetryOperator(-0.5 * block_diag2(sn, -sn))


# ---------------------------------------------------------------------------
# the unitary chain connecting helicity, chirality and chiral helicity
# ---------------------------------------------------------------------------

def u1(p: FourMomentum) -> CMatrix:
    """Block-doubled rotation diagonalising sigma.n, normalised to det 1.

    The raw 2x2 block [[1, p_l/(|p|+pz)], [-p_r/(|p|+pz), 1]] is unitary only
    up to sqrt((|p|+pz)/(2|p|)); the factor is included.  Momentum on the -z
    axis hits the coordinate singularity and is rejected.
    """
    pabs = p.p_abs
    if pabs == 0.0:
        raise DirectionUndefinedError("u1 needs a momentum direction")
    denom = pabs + p.pz
    if denom <= 1e-6 * pabs:
        raise CoordinateSingularityError(
            f"momentum along -z (|p|+pz = {denom:.3e}); rotate the frame first"
        )
    block = np.array([[1.0, p.p_l / denom], [-p.p_r / denom, 1.0]], dtype=complex)
    block *= math.sqrt(denom / (2.0 * pabs))
    return block_diag2(block, block)


def u2() -> CMatrix:
    """Permutation exchanging components 1 and 3 (det = -1)."""
    return np.array(
        [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex
    )


def u3() -> CMatrix:
    """Permutation exchanging components 1 and 2 (det = -1)."""
    return np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    )


# ---------------------------------------------------------------------------
# the 2x2 conjugation intertwiner and the bispinor transforms built from it
# ---------------------------------------------------------------------------

def helicity_frame(p: FourMomentum) -> CMatrix:
    """Unitary whose columns are the +/- helicity 2-spinors of p's direction."""
    a = p.angles()
    return np.column_stack(
        [helicity_components(a.theta, a.phi, 1), helicity_components(a.theta, a.phi, -1)]
    )


def xi_matrix(p: FourMomentum) -> CMatrix:
    """The 2x2 matrix intertwining both boosts with their conjugates:
    Xi Lambda_{R,L} Xi^-1 = Lambda_{R,L}^*.

    The intertwiner equation alone leaves a two-parameter family (any
    solution times the commutant of sigma.n), so the solution is pinned to
    the one representing complex conjugation in the helicity frame,
    Xi0 = U* U^dagger, then normalised deterministically (unit Frobenius
    norm, first nonzero entry real positive).  Residuals for both boost
    pairs are asserted before returning.
    """
    if p.p_abs == 0.0:
        raise DirectionUndefinedError("xi_matrix needs a momentum direction")
    frame = helicity_frame(p)
    xi0 = np.conj(frame) @ frame.conj().T
    from .matrices import normalize_intertwiner

    xi = normalize_intertwiner(xi0)
    tol = TOLERANCES["intertwiner"]
    for side in ("R", "L"):
        lam = boost_half(p, side)
        resid = np.linalg.norm(xi @ lam - np.conj(lam) @ xi)
        scale = np.linalg.norm(lam) + np.linalg.norm(np.conj(lam))
        if resid > tol * scale:
            raise AmbiguousIntertwinerError(
                2, f"pinned intertwiner failed the {side} pair at p = {p}"
            )
    return xi


def lambda_basis_transforms(p: FourMomentum) -> list[CMatrix]:
    """The four 4x4 block matrices built from Xi that map the self-conjugate
    helicity-family lambdas onto {lambda_A*, -i lambda_S*, i gamma0 lambda_A*,
    gamma0 lambda_S*} without leaving the self/anti-self conjugate spaces.

    Xi is rescaled to its unitary representative and phase-pinned so the
    first transform's coefficient is real positive (the block scale drops out
    of the intertwining relation, but the mapped-family identities fix it).
    """
    xi = math.sqrt(2.0) * xi_matrix(p)

    z = np.zeros((2, 2), dtype=complex)
    first = np.block([[xi, z], [z, xi]])
    lam_s = lambda_spinor(p, "S", "up", basis="helicity").components
    lam_a = lambda_spinor(p, "A", "up", basis="helicity").components
    target = np.conj(lam_a)
    coeff = np.vdot(target, first @ lam_s) / np.vdot(target, target)
    if abs(coeff) > 0:
        xi = xi * (np.conj(coeff) / abs(coeff))

    return [
        np.block([[xi, z], [z, xi]]),
        np.block([[1j * xi, z], [z, -1j * xi]]),
        np.block([[z, 1j * xi], [1j * xi, z]]),
        np.block([[z, xi], [-xi, z]]),
    ]


# ---------------------------------------------------------------------------
# continuous phase transforms
# ---------------------------------------------------------------------------

def chiral_gauge_transform(alpha: float, family: str) -> CMatrix:
    """cos(alpha) - i gamma5 sin(alpha) on the lambda family, conjugate sign
    on the rho family; unitary, preserves conjugacy and the mass pairing."""
    if family not in ("lambda", "rho"):
        raise DomainError(f"family must be 'lambda' or 'rho', got {family!r}")
    sign = -1.0 if family == "lambda" else 1.0
    return math.cos(alpha) * np.eye(4, dtype=complex) + sign * 1j * math.sin(alpha) * gamma5


def su2_phase_transform(c0: float, c) -> CMatrix:
    """c0 + i tau.c acting on a doublet of neutral field components.

    Requires c0^2 + |c|^2 = 1 (parametrise c0 = cos(phi), c = n sin(phi));
    the resulting matrices form the SU(2) phase-transformation group.
    """
    c = np.asarray(c, dtype=float)
    norm = c0 * c0 + float(c @ c)
    if abs(norm - 1.0) > 1e-12:
        raise DomainError(f"(c0, c) must satisfy c0^2 + |c|^2 = 1, got {norm}")
    return c0 * np.eye(2, dtype=complex) + 1j * (
        c[0] * sigma_x + c[1] * sigma_y + c[2] * sigma_z
    )


# ---------------------------------------------------------------------------
# commutation classification of C and P on state families
# ---------------------------------------------------------------------------

# Intrinsic space-inversion phase per family: real for Dirac states,
# imaginary for the truly neutral self/anti-self conjugate ones (without the
# i, inversion anticommutes with the antilinear conjugation identically).
_INTRINSIC_PARITY = {"dirac": 1.0 + 0.0j, "elko": 1.0j}


def _family_states(basis: str, family: str, cfg: PhaseConfig):
    if family == "dirac":
        return [
            (lambda q, s=s, i=i: dirac_spinor(q, s, i, basis, cfg).components)
            for s in ("particle", "antiparticle")
            for i in ("up", "down")
        ]
    if family == "elko":
        return [
            (lambda q, k=k, i=i: lambda_spinor(q, k, i, basis, cfg).components)
            for k in ("S", "A")
            for i in ("up", "down")
        ]
    raise DomainError(f"family must be 'dirac' or 'elko', got {family!r}")


def classify_cp_action(basis: str, family: str, seed: int = 1, n_momenta: int = 100,
                       cfg: PhaseConfig = PhaseConfig()) -> ActionClassification:
    """Probe C P +- P C on every member of the family over random momenta.

    Uses the family's intrinsic inversion phase; the classification is
    independent of the conjugation phase theta_c.
    """
    if basis not in ("spinorial", "helicity"):
        raise DomainError(f"unknown basis {basis!r}")
    c_op = charge_conjugation(cfg)
    p_op = parity_operator(_INTRINSIC_PARITY[family])
    cp = c_op.compose(p_op)
    pc = p_op.compose(c_op)

    rng = np.random.default_rng(seed)
    commute = 0.0
    anticommute = 0.0
    for _ in range(n_momenta):
        m = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        vec = rng.normal(size=3)
        vec *= rng.uniform(0.0, 10.0 * m) / max(np.linalg.norm(vec), 1e-300)
        from .kinematics import make_momentum

        q = make_momentum(vec[0], vec[1], vec[2], m)
        for state in _family_states(basis, family, cfg):
            a = cp.apply_state(state, q)
            b = pc.apply_state(state, q)
            scale = max(np.linalg.norm(state(q)), 1e-300)
            commute = max(commute, float(np.linalg.norm(a - b)) / scale)
            anticommute = max(anticommute, float(np.linalg.norm(a + b)) / scale)

    tol = TOLERANCES["identity"]
    if commute <= tol:
        relation, residual = "commute", commute
    elif anticommute <= tol:
        relation, residual = "anticommute", anticommute
    else:
        relation, residual = "neither", min(commute, anticommute)
    return ActionClassification(relation, residual, commute, anticommute)
