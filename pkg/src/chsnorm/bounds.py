"""Executable verifiers for the norm inequalities and their equality cases.

Each check returns a :class:`BoundReport` carrying the bound, the actual
value, a satisfied flag (with a small tolerance in the favorable direction),
the slack, and whether the theoretical equality case was hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .dispatch import chs_norm
from .matrices import Matrix, hermitian_eigenvalues

EQUALITY_REL_TOL = 1e-8
SLACK_TOL = 1e-10


@dataclass(frozen=True)
class BoundReport:
    bound_value: float
    actual_value: float
    satisfied: bool
    slack: float
    equality_case: bool


def _report_lower(bound: float, actual: float) -> BoundReport:
    """actual >= bound, up to tolerance."""
    slack = actual - bound
    eq = abs(slack) <= EQUALITY_REL_TOL * max(1.0, abs(bound))
    return BoundReport(bound, actual, slack >= -SLACK_TOL * max(1.0, abs(bound)), slack, eq)


def _report_upper(bound: float, actual: float) -> BoundReport:
    """actual <= bound, up to tolerance."""
    slack = bound - actual
    eq = abs(slack) <= EQUALITY_REL_TOL * max(1.0, abs(bound))
    return BoundReport(bound, actual, slack >= -SLACK_TOL * max(1.0, abs(bound)), slack, eq)


def _norm_value(A: Matrix, d: int) -> float:
    """Backend per input kind: spectrum/charpoly for Hermitian, words for
    small degree, determinantal series beyond."""
    if A.is_hermitian():
        return chs_norm(A, d, method="charpoly" if A.exact else "spectrum").value
    return chs_norm(A, d, method="words" if d <= 8 else "detseries").value


def operator_norm(A: Matrix) -> float:
    """Largest singular value, via the Hermitian eigensolver on A*A."""
    B = A.to_approx()
    eig = hermitian_eigenvalues(B.adjoint() @ B)
    return float(max(eig[0], 0.0)) ** 0.5


def tracial_lower_bound(A: Matrix, d: int) -> BoundReport:
    """norm_d(A) >= binom(n+d-1, d)^(1/d) |tr A| / n, equality iff A = cI."""
    n = A.n
    t = complex(A.trace())
    bound = comb(n + d - 1, d) ** (1.0 / d) * abs(t) / n
    return _report_lower(bound, _norm_value(A, d))


def equivalence_bounds(A: Matrix, d: int) -> tuple[BoundReport | None, BoundReport]:
    """Sandwich of the norm by multiples of the operator norm.

    Hermitian input: (2^(d/2) (d/2)!)^(-1/d) opnorm <= norm_d <= binom(n+d-1,d)^(1/d) opnorm,
    the upper one sharp exactly at multiples of the identity.  General input:
    only the complexified upper bound 2 (binom(n+d-1,d)/binom(d,d/2))^(1/d) opnorm
    is available, and the lower slot is None.
    """
    n = A.n
    op = operator_norm(A)
    actual = _norm_value(A, d)
    if A.is_hermitian():
        lower = (1.0 / (2 ** (d // 2) * factorial(d // 2))) ** (1.0 / d) * op
        upper = comb(n + d - 1, d) ** (1.0 / d) * op
        return _report_lower(lower, actual), _report_upper(upper, actual)
    upper = 2.0 * (comb(n + d - 1, d) / comb(d, d // 2)) ** (1.0 / d) * op
    return None, _report_upper(upper, actual)


def monotonicity_check(A: Matrix, p: int, q: int, hermitian_path: bool | None = None) -> BoundReport:
    """Degree comparison with factorial weights.

    Hermitian path: (p!)^(1/p) norm_p <= (q!)^(1/q) norm_q.  General path:
    the same with an extra central binomial factor inside each root.
    """
    if not (2 <= p < q) or p % 2 or q % 2:
        raise ValueError("need even 2 <= p < q")
    if hermitian_path is None:
        hermitian_path = A.is_hermitian()
    if hermitian_path and not A.is_hermitian():
        raise ValueError("hermitian_path requested for a non-Hermitian matrix")
    if hermitian_path:
        lhs = factorial(p) ** (1.0 / p) * _norm_value(A, p)
        rhs = factorial(q) ** (1.0 / q) * _norm_value(A, q)
    else:
        lhs = (comb(p, p // 2) * factorial(p)) ** (1.0 / p) * _norm_value(A, p)
        rhs = (comb(q, q // 2) * factorial(q)) ** (1.0 / q) * _norm_value(A, q)
    return _report_upper(rhs, lhs)


def parallelogram_defect(A: Matrix, B: Matrix, d: int) -> float:
    """norm(A+B)^2 + norm(A-B)^2 - 2 norm(A)^2 - 2 norm(B)^2.

    Zero for all pairs iff d = 2 or n = 1 (inner-product cases).
    """
    plus = _norm_value(A + B, d)
    minus = _norm_value(A - B, d)
    return plus**2 + minus**2 - 2.0 * (_norm_value(A, d) ** 2 + _norm_value(B, d) ** 2)


def submult_check_d2(A: Matrix, B: Matrix) -> BoundReport:
    """2 norm_2(AB) <= (2 norm_2(A)) (2 norm_2(B)); 2 is optimal over all n."""
    lhs = 2.0 * _norm_value(A @ B, 2)
    rhs = 2.0 * _norm_value(A, 2) * 2.0 * _norm_value(B, 2)
    return _report_upper(rhs, lhs)
