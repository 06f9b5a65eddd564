"""Norms on Hermitian matrices: the d-th root of the complete homogeneous
symmetric polynomial evaluated on the eigenvalues, for even d.

Three independent routes compute the same d-th power:

* ``spectrum``   - eigenvalues from the Jacobi solver, then the partition
  expansion (approx path only);
* ``charpoly``   - coefficient d of the reciprocal characteristic
  polynomial's series inverse (exact on rational input);
* ``recursion``  - Newton-Girard on the power traces tr(H^i) (exact on
  rational input).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chs import h_newton_girard, h_powersum
from .matrices import Matrix, char_poly, hermitian_eigenvalues
from .scalars import GaussianRational

IMAG_TOL = 1e-10


@dataclass(frozen=True)
class NormResult:
    d: int
    value: float
    dth_power: object  # Fraction on the exact path, float otherwise
    method: str


def _require_even(d: int) -> None:
    if d < 2 or d % 2 != 0:
        raise ValueError(f"norms are defined for even d >= 2, got {d}")


def _require_hermitian(A: Matrix) -> None:
    if not A.is_hermitian():
        raise ValueError("this route needs a Hermitian matrix")


def _real_part(t, scale: float = 1.0):
    """Strip a provably-zero imaginary part, complaining if it is not small."""
    if isinstance(t, GaussianRational):
        if t.im != 0:
            raise ArithmeticError(f"expected a real exact value, got {t}")
        return t.re
    t = complex(t)
    if abs(t.imag) > IMAG_TOL * max(1.0, scale):
        raise ArithmeticError(f"expected a real value, got imaginary part {t.imag:g}")
    return t.real


def dth_root(power, d: int) -> float:
    v = float(power)
    if v < 0:
        if v > -1e-12:
            v = 0.0
        else:
            raise ArithmeticError(f"negative d-th power {v!r}; input violates the norm theory")
    return v ** (1.0 / d)


def reciprocal_series(A: Matrix, d_max: int) -> list:
    """Taylor coefficients 0..d_max of 1/det(I - xA) via the characteristic polynomial.

    The reciprocal polynomial x^n p_A(1/x) has constant term 1 (monicity), so
    its series inverse follows the linear recurrence
    b_k = -sum_{j=1..min(k,n)} a_j b_{k-j}, exact over rationals.
    """
    n = A.n
    coeffs = char_poly(A)
    scale = A.frobenius()
    if A.exact:
        a = [_real_part(coeffs[n - k]) for k in range(n + 1)]
        b = [Fraction(1)]
    else:
        a = [_real_part(coeffs[n - k], scale=max(1.0, scale) ** max(k, 1)) for k in range(n + 1)]
        b = [1.0]
    for k in range(1, d_max + 1):
        s = sum(a[j] * b[k - j] for j in range(1, min(k, n) + 1))
        b.append(-s)
    return b


def norm_via_spectrum(H: Matrix, d: int) -> NormResult:
    _require_even(d)
    _require_hermitian(H)
    eig = hermitian_eigenvalues(H)
    power = h_powersum(d, [float(v) for v in eig])
    return NormResult(d, dth_root(power, d), power, "spectrum")


def norm_via_charpoly(H: Matrix, d: int) -> NormResult:
    _require_even(d)
    _require_hermitian(H)
    power = reciprocal_series(H, d)[d]
    return NormResult(d, dth_root(power, d), power, "charpoly")


def norm_via_trace_recursion(H: Matrix, d: int) -> NormResult:
    _require_even(d)
    _require_hermitian(H)
    power = h_newton_girard(d, power_traces(H, d))
    return NormResult(d, dth_root(power, d), power, "recursion")


def power_traces(A: Matrix, d_max: int) -> list:
    """[tr A, tr A^2, ..., tr A^d_max] by repeated multiplication; real parts."""
    scale = max(1.0, A.frobenius())
    traces = []
    M = A
    for k in range(1, d_max + 1):
        traces.append(_real_part(M.trace(), scale=scale**k))
        if k < d_max:
            M = M @ A
    return traces


def norm_series(H: Matrix, d_max: int) -> list:
    """d-th powers for d = 0..d_max from the characteristic-polynomial route.

    Even entries are d-th powers of the norms; odd entries are the odd-degree
    symmetric-polynomial values of the spectrum (reported, but not norms).
    """
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    _require_hermitian(H)
    return reciprocal_series(H, d_max)
