"""Discrete Schrodinger eigenproblems on a lattice interval.

Transfer-matrix propagation, Gel'fand-Yaglom determinant ratios, Lommel
polynomials with their Bessel and Airy connections, and the self-contained
special functions the continuum comparisons need.
"""

from .errors import (
    DegenerateBoundaryError,
    DomainError,
    IllPosedRatioError,
    NoZeroModeError,
)
from .lattice import (
    MAX_COEFF_VERTICES,
    BoundaryCondition,
    CharPoly,
    LatticeInterval,
    PotentialTable,
    StateVector,
    TransferMatrix,
    bleich_melan_dirichlet,
    boundary_seed,
    casoratian,
    char_poly_coefficients,
    characteristic,
    characteristic_with_derivative,
    propagate,
    transfer_matrix,
)
from .lommel import (
    LommelParams,
    NormalizedCasoratian,
    lommel_bessel_residual,
    lommel_closed,
    lommel_eval,
    lommel_recurrence,
    lommel_transitional_asymptotic,
    normalized_casoratian,
)
from .potentials import (
    LinearPotentialParams,
    RosenMorseParams,
    discdet_p3_closed_form,
    linear_lattice_potential,
    load_potential_csv,
    rosen_morse_lattice_potential,
)
from .specfun import (
    TANH_HALF,
    AiryPair,
    airy,
    airy_with_derivatives,
    bessel_j,
    bessel_y,
    continuum_linear_det_ratio,
    continuum_rosen_morse_det_ratio,
    gamma,
    hyp2f1,
    legendre_p,
)
from .spectral import (
    ReducedDeterminant,
    Spectrum,
    christoffel_darboux_residual,
    det_ratio,
    eigenvalues,
    gram_matrix,
    reduced_determinant_zero_mode,
    sample_interpolate,
    zero_mode_eigenvalue_product,
)

__version__ = "0.1.0"

__all__ = [
    "AiryPair",
    "BoundaryCondition",
    "CharPoly",
    "DegenerateBoundaryError",
    "DomainError",
    "IllPosedRatioError",
    "LatticeInterval",
    "LinearPotentialParams",
    "LommelParams",
    "MAX_COEFF_VERTICES",
    "NoZeroModeError",
    "NormalizedCasoratian",
    "PotentialTable",
    "ReducedDeterminant",
    "RosenMorseParams",
    "Spectrum",
    "StateVector",
    "TANH_HALF",
    "TransferMatrix",
    "airy",
    "airy_with_derivatives",
    "bessel_j",
    "bessel_y",
    "bleich_melan_dirichlet",
    "boundary_seed",
    "casoratian",
    "char_poly_coefficients",
    "characteristic",
    "characteristic_with_derivative",
    "christoffel_darboux_residual",
    "continuum_linear_det_ratio",
    "continuum_rosen_morse_det_ratio",
    "det_ratio",
    "discdet_p3_closed_form",
    "eigenvalues",
    "gamma",
    "gram_matrix",
    "hyp2f1",
    "legendre_p",
    "linear_lattice_potential",
    "load_potential_csv",
    "lommel_bessel_residual",
    "lommel_closed",
    "lommel_eval",
    "lommel_recurrence",
    "lommel_transitional_asymptotic",
    "normalized_casoratian",
    "propagate",
    "reduced_determinant_zero_mode",
    "rosen_morse_lattice_potential",
    "sample_interpolate",
    "transfer_matrix",
    "zero_mode_eigenvalue_product",
]
