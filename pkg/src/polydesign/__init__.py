"""Optimal designs for single coefficients of polynomial regression
through the origin on [-1, 1].

The library computes, in closed form, the probability measure minimizing
the variance of the least-squares estimate of one coefficient of the model
y = theta_1 x + ... + theta_n x**n, certifies optimality independently via
an equioscillating certificate polynomial, and cross-checks the optimal
variance against a linear-programming oracle on a discretized design space.

>>> from polydesign import DesignProblem, solve
>>> result = solve(DesignProblem(n=3, p=3))
>>> result.variance
16.0
"""

from .design import (
    Design,
    DesignProblem,
    information_matrix,
    is_admissible,
    phi_c,
    pseudo_inverse,
    regression_vector,
)
from .document import DesignDocument, document_from_result, parse_design_file, parse_document, render_document
from .elfving import ElfvingReport, certificate_for, verify
from .errors import (
    DegenerateCoefficientError,
    DocumentError,
    InvalidCertificateError,
    InvalidDegreeError,
    InvalidDesignError,
    InvalidNodesError,
    InvalidOrderError,
    InvalidProblemError,
    NumericalDegeneracyError,
    OracleFailureError,
    PolydesignError,
)
from .oracle import OracleResult, elfving_lp, oracle_variance
from .points import SupportFamily, s_points, t_points, x_points
from .polynomial import Polynomial, chebyshev_t, coefficient, e_polynomial, lagrange_no_intercept
from .solver import (
    OptimalResult,
    case_certificate,
    classify,
    optimal_supports,
    solve,
    symmetric_system_check,
    weights_from_lagrange,
)

__version__ = "0.1.0"

__all__ = [
    "Design",
    "DesignDocument",
    "DesignProblem",
    "ElfvingReport",
    "OptimalResult",
    "OracleResult",
    "Polynomial",
    "SupportFamily",
    "case_certificate",
    "certificate_for",
    "chebyshev_t",
    "classify",
    "coefficient",
    "document_from_result",
    "e_polynomial",
    "elfving_lp",
    "information_matrix",
    "is_admissible",
    "lagrange_no_intercept",
    "optimal_supports",
    "oracle_variance",
    "parse_design_file",
    "parse_document",
    "phi_c",
    "pseudo_inverse",
    "regression_vector",
    "render_document",
    "s_points",
    "solve",
    "symmetric_system_check",
    "t_points",
    "verify",
    "weights_from_lagrange",
    "x_points",
    # errors
    "PolydesignError",
    "DegenerateCoefficientError",
    "DocumentError",
    "InvalidCertificateError",
    "InvalidDegreeError",
    "InvalidDesignError",
    "InvalidNodesError",
    "InvalidOrderError",
    "InvalidProblemError",
    "NumericalDegeneracyError",
    "OracleFailureError",
]
