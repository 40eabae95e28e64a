"""Closed-form spectra of complex-contour Hamiltonians and their
finite-difference verification.

Three potential families (Eckart, Poschl-Teller, Hulthen) continued
along symmetric complex paths, with exact level formulas, eigenfunction
construction, a Liouville change of variables, and an independent
banded eigensolver for cross-checking.
"""

from .contour import (
    ArchContour,
    LiouvilleMap,
    ShiftedLine,
    arch_liouville_map,
    continuous_log,
    contour_derivative,
    identity_liouville_map,
    linear_liouville_map,
    liouville_potential,
    map_point,
    power_along_path,
    transport_wavefunction,
)
from .errors import (
    BoundaryLevelWarning,
    BranchDiscontinuity,
    DegenerateRecurrence,
    DegenerateSWarning,
    DerivativeInconsistency,
    InternalConsistencyError,
    InvalidParameters,
    MetricVanishing,
    NoConvergence,
    OutOfRange,
    PoleInC,
    QRStall,
    ShiftSingular,
    SingularPoint,
    SizeGuard,
    SpectraError,
)
from .numeric import (
    DiscretizedHamiltonian,
    EigenResult,
    Grid,
    LevelRecord,
    VerificationReport,
    build_hamiltonian,
    default_grid,
    pt_norm,
    residual,
    solve_dense,
    solve_targeted,
    verify_family,
)
from .potentials import (
    EckartParams,
    HulthenParams,
    PoschlTellerParams,
    eval_eckart,
    eval_hulthen,
    eval_rpt,
    pt_defect,
)
from .special import (
    HypergeometricReduction,
    gauss2f1_terminating,
    jacobi_p_hyp,
    jacobi_p_rec,
    pochhammer,
)
from .spectra import (
    Level,
    QuantumNumbers,
    eckart_spacing,
    eckart_spectrum,
    eckart_wavefunction,
    hulthen_spectrum,
    hulthen_wavefunction,
    rpt_real_energy_condition,
    rpt_spectrum,
    rpt_wavefunction,
)

__version__ = "0.1.0"

__all__ = [
    "ArchContour",
    "BoundaryLevelWarning",
    "BranchDiscontinuity",
    "DegenerateRecurrence",
    "DegenerateSWarning",
    "DerivativeInconsistency",
    "DiscretizedHamiltonian",
    "EckartParams",
    "EigenResult",
    "Grid",
    "HulthenParams",
    "HypergeometricReduction",
    "InternalConsistencyError",
    "InvalidParameters",
    "Level",
    "LevelRecord",
    "LiouvilleMap",
    "MetricVanishing",
    "NoConvergence",
    "OutOfRange",
    "PoleInC",
    "PoschlTellerParams",
    "QRStall",
    "QuantumNumbers",
    "ShiftSingular",
    "ShiftedLine",
    "SingularPoint",
    "SizeGuard",
    "SpectraError",
    "VerificationReport",
    "arch_liouville_map",
    "build_hamiltonian",
    "continuous_log",
    "contour_derivative",
    "default_grid",
    "eckart_spacing",
    "eckart_spectrum",
    "eckart_wavefunction",
    "eval_eckart",
    "eval_hulthen",
    "eval_rpt",
    "gauss2f1_terminating",
    "hulthen_spectrum",
    "hulthen_wavefunction",
    "identity_liouville_map",
    "jacobi_p_hyp",
    "jacobi_p_rec",
    "linear_liouville_map",
    "liouville_potential",
    "map_point",
    "pochhammer",
    "power_along_path",
    "pt_defect",
    "pt_norm",
    "residual",
    "rpt_real_energy_condition",
    "rpt_spectrum",
    "rpt_wavefunction",
    "solve_dense",
    "solve_targeted",
    "transport_wavefunction",
    "verify_family",
]
