"""qosc: tridiagonal representations of the q-oscillator relation A@B - q*B@A = I,
their big q-Jacobi / Askey-Wilson realizations, and numeric certification of the
algebraic identities they satisfy."""

from .errors import (
    InvalidNormalizationError,
    InvalidParameterError,
    NotAQOscillatorError,
    NotDecomposableError,
    NotMonicReducibleError,
    NumericFailureError,
    PoleError,
    QoscError,
    ReducibleRepresentationError,
    ResonanceError,
    SizeGuardError,
    SpectrumMismatchError,
    TooSmallError,
    UnsupportedFamilyError,
    UnsupportedSpectrumError,
)
from .numerics import (
    DEFAULT_ABS_TOL,
    LaurentPoly,
    TolerancePolicy,
    geometric_seq,
    laurent,
    laurent_add,
    laurent_eval,
    laurent_mul,
    laurent_scale,
    laurent_scale_arg,
)
from .opmatrix import (
    BandMatrix,
    ResidualReport,
    band_add,
    band_diagonal,
    band_identity,
    band_mul,
    band_scale,
    band_sub,
    band_tridiagonal,
    char_poly_eval,
    diag_similarity,
    eigenvalues,
    guard_size,
    inf_norm,
    max_entry_diff,
    q_commutator_residual,
    residual_report,
)
from .representation import (
    GeneralParams,
    GeneralSolutionTrace,
    StructuredParams,
    XiResiduals,
    build_general,
    canonical_pair,
    classify,
    decompose,
    xi_residuals,
)
from .families import (
    AWParams,
    MonicRecurrence,
    QHahnParams,
    QParaKrawtchoukParams,
    SpectrumLattice,
    askey_wilson,
    big_q_jacobi,
    claimed_spectrum,
    eval_monic,
    expand_monic,
    jacobi_matrix,
    q_hahn,
    q_para_krawtchouk,
    verify_spectrum,
)
from .tridiagonalization import (
    DiagonalOperator,
    PencilParams,
    WCoeffs,
    aw_parameter_map,
    build_B_from_A,
    build_W,
    build_Z,
    companion_b,
    companion_params,
    eigenvalue_sequence,
    pencil,
    qdiff_B_apply,
    qdiff_Z_apply,
    r_coefficients,
    to_monic,
)
from .algebra import (
    AWAlgebraConstants,
    AWAlgebraReport,
    BigQJacobiConstants,
    aw_algebra_residuals,
    aw_constants,
    big_qjacobi_algebra_residuals,
    big_qjacobi_constants,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "QoscError",
    "InvalidParameterError",
    "TooSmallError",
    "PoleError",
    "SizeGuardError",
    "ResonanceError",
    "ReducibleRepresentationError",
    "InvalidNormalizationError",
    "NotAQOscillatorError",
    "NumericFailureError",
    "UnsupportedSpectrumError",
    "NotMonicReducibleError",
    "SpectrumMismatchError",
    "NotDecomposableError",
    "UnsupportedFamilyError",
    # numerics
    "TolerancePolicy",
    "LaurentPoly",
    "DEFAULT_ABS_TOL",
    "geometric_seq",
    "laurent",
    "laurent_add",
    "laurent_mul",
    "laurent_scale",
    "laurent_scale_arg",
    "laurent_eval",
    # opmatrix
    "BandMatrix",
    "ResidualReport",
    "band_identity",
    "band_diagonal",
    "band_tridiagonal",
    "band_add",
    "band_sub",
    "band_scale",
    "band_mul",
    "inf_norm",
    "max_entry_diff",
    "residual_report",
    "q_commutator_residual",
    "diag_similarity",
    "char_poly_eval",
    "eigenvalues",
    "guard_size",
    # representation
    "GeneralParams",
    "StructuredParams",
    "GeneralSolutionTrace",
    "XiResiduals",
    "build_general",
    "xi_residuals",
    "classify",
    "canonical_pair",
    "decompose",
    # families
    "MonicRecurrence",
    "AWParams",
    "QHahnParams",
    "QParaKrawtchoukParams",
    "SpectrumLattice",
    "big_q_jacobi",
    "askey_wilson",
    "q_hahn",
    "q_para_krawtchouk",
    "jacobi_matrix",
    "eval_monic",
    "expand_monic",
    "claimed_spectrum",
    "verify_spectrum",
    # tridiagonalization
    "WCoeffs",
    "DiagonalOperator",
    "PencilParams",
    "eigenvalue_sequence",
    "build_Z",
    "r_coefficients",
    "companion_b",
    "companion_params",
    "build_B_from_A",
    "build_W",
    "to_monic",
    "aw_parameter_map",
    "pencil",
    "qdiff_Z_apply",
    "qdiff_B_apply",
    # algebra
    "BigQJacobiConstants",
    "AWAlgebraConstants",
    "AWAlgebraReport",
    "big_qjacobi_constants",
    "aw_constants",
    "big_qjacobi_algebra_residuals",
    "aw_algebra_residuals",
]
