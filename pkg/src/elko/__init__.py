"""Self/anti-self charge-conjugate momentum-space spinors for spin 1/2 and
spin 1, their discrete-symmetry and basis-rotation operators, and a seeded
verification suite for every algebraic identity they satisfy."""

__version__ = "0.1.0"

from .config import TOLERANCES
from .errors import (
    AmbiguousIntertwinerError,
    CoordinateSingularityError,
    DimensionError,
    DirectionUndefinedError,
    DomainError,
    ElkoError,
    NoIntertwinerError,
    UsageError,
)
from .kinematics import (
    AngularParams,
    FourMomentum,
    boost_half,
    boost_half_pair,
    boost_one,
    make_momentum,
    parity_reflect,
)
from .matrices import (
    adjoint,
    conj,
    det,
    gamma0,
    gamma1,
    gamma2,
    gamma3,
    gamma5,
    intertwiner_null_space,
    mul,
    sigma_x,
    sigma_y,
    sigma_z,
    solve_intertwiner,
    theta_half,
    theta_one,
)
from .spinors import (
    Bispinor,
    PhaseConfig,
    TwoSpinor,
    bar_product,
    chiral_helicity_sign,
    dirac_spinor,
    helicity_two_spinor,
    index_flip_unitary,
    lambda_spinor,
    read_golden,
    rest_lambda,
    rest_rho,
    rho_spinor,
    write_golden,
)
from .operators import (
    ActionClassification,
    SymmetryOperator,
    charge_conjugation,
    chiral_gauge_transform,
    chiral_helicity_operator,
    chirality,
    classify_cp_action,
    helicity_operator,
    lambda_basis_transforms,
    parity_operator,
    su2_phase_transform,
    u1,
    u2,
    u3,
    xi_matrix,
)
from .dynamics import (
    EightSpinor,
    FrequencyConvention,
    coupled_system_residual,
    dirac_matrix,
    discover_convention,
    eight_component_residual,
    lagrangian_mass_term,
    markov_superposition,
    sen_gupta_equivalence,
    sen_gupta_null_space,
    sen_gupta_residual,
)
from .spin_one import (
    ConjugacyScan,
    SixSpinor,
    SpinOneOperator,
    gamma5_one,
    gamma5_sc_one,
    sc_one,
    spin1_conjugacy_scan,
    spin1_helicity_triplet,
    spin1_lambda,
    spin1_rho,
    ss_one,
    wigner_theta_one,
)
from .suite import VerificationReport, diff_reports, run_suite
