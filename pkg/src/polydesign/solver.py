"""Closed-form minimum-variance designs for a single coefficient.

For the degree-n polynomial model without intercept on [-1, 1] the design
minimizing the variance of the estimate of coefficient p falls into one of
three cases, keyed on the parities of n and p (k = n // 2 throughout):

* case "A" (p even): one design on the 2k extrema of the even
  equioscillating polynomial of degree 2k;
* case "B" (n even, p odd): one design on the 2k extrema of the Chebyshev
  polynomial of degree 2k - 1;
* case "C" (n odd, p odd): exactly two mirror-image designs, each on 2k + 1
  of the 2k + 2 extrema of the Chebyshev polynomial of degree 2k + 1.

In every case the weights have the same closed form: with a_{i,p} the
coefficient of x**p in the i-th intercept-free Lagrange basis polynomial of
the support, w_i = |a_{i,p}| / sum_j |a_{j,p}|. The scaling constant
h = sum_j |a_{j,p}| gives the optimal variance h**2, and the equioscillating
polynomial of the case acts as the optimality certificate: it is bounded by
1 on [-1, 1], equals +-1 on the support, and reproduces the unit vector e_p
as h * sum_i f(x_i) w_i P(x_i).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import Design, DesignProblem
from .errors import (
    DegenerateCoefficientError,
    InvalidProblemError,
    NumericalDegeneracyError,
)
from .points import s_points, t_points, x_points
from .polynomial import Polynomial, chebyshev_t, coefficient, e_polynomial, lagrange_no_intercept

CASE_A = "A"
CASE_B = "B"
CASE_C = "C"

#: tolerance of the solver's internal certificate check, scaled by max(1, h)
_SELF_CHECK_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class OptimalResult:
    """Solved design problem: one design (cases A, B) or two (case C).

    ``variance`` equals ``h**2`` exactly; all designs share it. The
    certificate polynomial is oriented so that
    h * sum_i f(x_i) w_i certificate(x_i) = e_p with h positive.
    """

    problem: DesignProblem
    designs: tuple[Design, ...]
    h: float
    variance: float
    certificate: Polynomial
    case_tag: str


def classify(problem: DesignProblem) -> tuple[str, int]:
    """Case tag ("A", "B" or "C") and the order k = n // 2."""
    n, p = problem.n, problem.p
    k = n // 2
    if p % 2 == 0:
        return CASE_A, k
    if n % 2 == 0:
        return CASE_B, k
    return CASE_C, k


def _certificate_values(case_tag: str, k: int, support: np.ndarray) -> np.ndarray:
    """Exact values (all +-1) of the case certificate at family support points.

    The support families are extremal points of their certificate, where the
    value alternates with the point index; using the closed-form pattern
    avoids evaluating a high-degree polynomial from monomial coefficients,
    which loses several digits beyond degree ~20.
    """
    if case_tag == CASE_A:
        half = (-1.0) ** np.arange(k)  # value at the i-th negative point
        return np.concatenate([half, half[::-1]])
    if case_tag == CASE_B:
        return (-1.0) ** np.arange(1, 2 * k + 1)
    xs = x_points(k).points
    idx = np.searchsorted(xs, support)  # supports are subsets of the family
    return (-1.0) ** (idx + 1)


def _sign_consistent(support: np.ndarray, p: int, cert_values: np.ndarray) -> bool:
    # the closed-form weights solve the certificate identity with positive
    # masses iff sign(a_{i,p}) * sign(P(t_i)) is constant over the support
    try:
        _, _, signs = weights_from_lagrange(support, p)
    except DegenerateCoefficientError:
        return False
    s = signs * cert_values
    return bool(np.all(s == s[0]))


def optimal_supports(problem: DesignProblem) -> list[np.ndarray]:
    """Support point sets of the optimal designs, sorted ascending.

    Case C drops one point from the 2k + 2 candidates, giving two
    mirror-image supports in a fixed order. The usual pairs are: for p = 1
    drop the largest candidate, then the smallest; for odd p > 1 drop the
    candidate just left of 0, then the one just right of 0. The central
    pair stops admitting positive weights for some small odd p at large k
    (first at degree 9, coefficient 3), so each pair is validated against
    the sign criterion and, when it fails, the unique consistent pair is
    found by scanning all 2k + 2 candidates (largest dropped index first).
    """
    tag, k = classify(problem)
    if tag == CASE_A:
        return [t_points(k).points]
    if tag == CASE_B:
        return [s_points(k).points]
    xs = x_points(k).points  # 2k + 2 candidates
    values = (-1.0) ** np.arange(1, 2 * k + 3)  # certificate values at xs
    drops = [2 * k + 1, 0] if problem.p == 1 else [k, k + 1]
    if not all(
        _sign_consistent(np.delete(xs, d), problem.p, np.delete(values, d)) for d in drops
    ):
        drops = [
            d
            for d in range(2 * k + 2)
            if _sign_consistent(np.delete(xs, d), problem.p, np.delete(values, d))
        ][::-1]
        if len(drops) != 2:
            raise NumericalDegeneracyError(
                f"expected exactly two consistent supports for {problem}, found {len(drops)}"
            )
    return [np.delete(xs, d) for d in drops]


def weights_from_lagrange(support, p: int) -> tuple[np.ndarray, float, np.ndarray]:
    """Closed-form weights for a support, plus the scaling constant h.

    Computes a_{i,p} = coefficient of x**p in the i-th intercept-free
    Lagrange basis polynomial of the support and returns
    (|a| / sum|a|, sum|a|, sign(a)). Raises
    :class:`DegenerateCoefficientError` when any coefficient is numerically
    zero, which signals a support/index combination with no positive-weight
    solution of this form.
    """
    t = np.atleast_1d(np.asarray(support, dtype=float))
    m = t.size
    if not 1 <= p <= m:
        raise InvalidProblemError(f"coefficient index {p} not in 1..{m}")
    if t[0] < -1.0 or t[-1] > 1.0:
        raise ValueError("support must lie in [-1, 1]")
    a = np.array([coefficient(lagrange_no_intercept(t, i), p) for i in range(1, m + 1)])
    abs_a = np.abs(a)
    if np.any(abs_a <= 1e-12 * abs_a.max()):
        raise DegenerateCoefficientError(
            f"basis coefficient for x**{p} vanishes at some support point"
        )
    h = float(abs_a.sum())
    return abs_a / h, h, np.sign(a)


def case_certificate(case_tag: str, k: int, n: int) -> Polynomial:
    """Canonical certificate polynomial of a case, padded to degree n."""
    if case_tag == CASE_A:
        cert = e_polynomial(k)
    elif case_tag == CASE_B:
        cert = chebyshev_t(2 * k - 1)
    elif case_tag == CASE_C:
        cert = chebyshev_t(2 * k + 1)
    else:
        raise InvalidProblemError(f"unknown case tag {case_tag!r}")
    return cert.padded(n)


def _symmetrized(w: np.ndarray) -> np.ndarray:
    # pairwise sums are commutative, so the result is symmetric bit-for-bit
    v = w + w[::-1]
    return v / v.sum()


def _condition3_residual(
    design: Design, problem: DesignProblem, cert_values: np.ndarray, h: float
) -> float:
    powers = np.vstack([design.support**q for q in range(1, problem.n + 1)])
    achieved = h * (powers @ (design.weights * cert_values))
    return float(np.abs(achieved - problem.unit_vector()).max())


def solve(problem: DesignProblem) -> OptimalResult:
    """Optimal design(s), scaling constant h, variance h**2 and certificate.

    Every output is checked internally against the certificate identity
    h * sum f w P = e_p before it is returned; a violation raises
    :class:`NumericalDegeneracyError` instead of returning a bad design.
    """
    tag, k = classify(problem)
    supports = optimal_supports(problem)
    cert0 = case_certificate(tag, k, problem.n)

    designs: list[Design] = []
    cert_values: list[np.ndarray] = []
    h = 0.0
    sigma = 0.0
    for support in supports:
        w, h_s, signs = weights_from_lagrange(support, problem.p)
        if tag in (CASE_A, CASE_B):
            w = _symmetrized(w)
        values = _certificate_values(tag, k, support)
        s = signs * values
        if np.any(s == 0.0) or not np.all(s == s[0]):
            raise NumericalDegeneracyError(
                f"certificate/coefficient sign pattern is not constant for {problem}"
            )
        if not designs:
            h, sigma = h_s, float(s[0])
        else:
            if abs(h_s - h) > 1e-10 * max(1.0, h):
                raise NumericalDegeneracyError("mirror designs disagree on the scaling constant")
            if s[0] != sigma:
                raise NumericalDegeneracyError("mirror designs disagree on certificate orientation")
        designs.append(Design(support, w))
        cert_values.append(sigma * values)

    certificate = Polynomial(sigma * cert0.coeffs + 0.0)  # +0.0 clears negative zeros
    for design, values in zip(designs, cert_values):
        resid = _condition3_residual(design, problem, values, h)
        if resid > _SELF_CHECK_TOL * max(1.0, h):
            raise NumericalDegeneracyError(
                f"certificate identity violated (residual {resid:.3e}) for {problem}"
            )
    return OptimalResult(
        problem=problem,
        designs=tuple(designs),
        h=h,
        variance=h * h,
        certificate=certificate,
        case_tag=tag,
    )


def symmetric_system_check(problem: DesignProblem, design: Design) -> bool:
    """Re-derive case A/B weights from the half-range moment system.

    The certificate identity restricted to the k negative support points
    reads F beta = e~ with F = (t_i**(2q)) for case A or (t_i**(2q-1)) for
    case B, and e~ carrying a single entry 1/2 at the row matching the
    target coefficient. The solution must alternate in sign, divide by the
    certificate values to a constant-sign vector, and reproduce the design
    weights via w_i = |beta_i| / (2 sum |beta|). Returns True iff the
    reproduced weights match ``design.weights`` within 1e-8.
    """
    tag, k = classify(problem)
    if tag == CASE_C:
        raise InvalidProblemError("the half-range system applies to cases A and B only")
    if design.size != 2 * k:
        raise InvalidProblemError(f"expected a design on {2 * k} points, got {design.size}")
    t_neg = design.support[:k]
    if tag == CASE_A:
        rows = [t_neg ** (2 * q) for q in range(1, k + 1)]
        row = problem.p // 2
    else:
        rows = [t_neg ** (2 * q - 1) for q in range(1, k + 1)]
        row = (problem.p + 1) // 2
    f_mat = np.vstack(rows)
    rhs = np.zeros(k)
    rhs[row - 1] = 0.5
    try:
        beta = np.linalg.solve(f_mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise NumericalDegeneracyError("half-range moment system is singular") from exc

    signs = np.sign(beta)
    if np.any(signs == 0.0) or not np.all(signs[1:] == -signs[:-1]):
        return False
    ratio = beta / _certificate_values(tag, k, design.support)[:k]
    if not np.all(np.sign(ratio) == np.sign(ratio[0])):
        return False
    half = np.abs(ratio)
    weights = np.concatenate([half, half[::-1]]) / (2.0 * half.sum())
    return bool(np.abs(weights - design.weights).max() <= 1e-8)
