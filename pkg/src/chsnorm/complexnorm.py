"""Extension of the Hermitian norms to all complex square matrices.

Three independent routes for the d-th power (d even):

* ``words``      - average the trace products over all placements of d/2
  adjoints among d factor slots, split into blocks by each partition of d,
  then combine with the partition weights (exact on rational input);
* ``quadrature`` - periodic trapezoidal average of the Hermitian norm powers
  of ``e^{it}A + e^{-it}A*`` (the integrand is a trigonometric polynomial of
  degree <= d, so few nodes are exact up to eigensolver error);
* ``detseries``  - coefficient of bidegree (d/2, d/2) in the inverse
  determinantal series of ``I - zA - zbar A*`` (exact on rational input).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from itertools import combinations
from math import comb, pi

from .bivariate import BivariateSeries
from .chs import h_powersum
from .hermitian import NormResult, dth_root, _require_even
from .matrices import Matrix, hermitian_eigenvalues
from .partitions import partitions_of, z_weight
from .scalars import GaussianRational

MASK_DEGREE_LIMIT = 16
WORDS_DEGREE_LIMIT = 12
T_PI_IMAG_TOL = 1e-12


def star_placements(d: int) -> list[tuple[bool, ...]]:
    """All length-d masks with exactly d/2 stars (True), in lexicographic
    order of the star position sets."""
    _require_even(d)
    if d > MASK_DEGREE_LIMIT:
        raise ValueError(f"mask enumeration is limited to d <= {MASK_DEGREE_LIMIT}")
    masks = []
    for stars in combinations(range(d), d // 2):
        mask = [False] * d
        for i in stars:
            mask[i] = True
        masks.append(tuple(mask))
    return masks


def evaluate_word(A: Matrix, letters) -> Matrix:
    """Product of A / A* factors following the letter sequence (True = star)."""
    if len(letters) == 0:
        raise ValueError("words must have length >= 1")
    Astar = A.adjoint()
    out = None
    for starred in letters:
        f = Astar if starred else A
        out = f if out is None else out @ f
    return out


class _WordTraces:
    """Trace of each word on a fixed matrix, memoized by letter tuple.

    Each uncached word costs one running matrix product; the cache stores
    scalars only, so memory stays at one matrix plus O(#words) numbers.
    """

    def __init__(self, A: Matrix):
        self._a = A.data
        self._astar = A.adjoint().data
        self._cache: dict[tuple[bool, ...], object] = {}

    def trace(self, letters: tuple[bool, ...]):
        t = self._cache.get(letters)
        if t is None:
            m = self._astar if letters[0] else self._a
            for starred in letters[1:]:
                m = m.dot(self._astar if starred else self._a)
            t = m.trace()
            self._cache[letters] = t
        return t


def _real_scalar(value, exact: bool):
    if exact:
        if value.im != 0:
            raise ArithmeticError(f"trace-polynomial value is not real: {value}")
        return value.re
    value = complex(value)
    if abs(value.imag) > T_PI_IMAG_TOL * max(1.0, abs(value.real)):
        raise ArithmeticError(
            f"trace-polynomial value has imaginary part {value.imag:g}"
        )
    return value.real


def _masked_trace_sum(traces: _WordTraces, parts, masks, exact: bool):
    """Sum over masks of the block trace products, blocks cut by the parts."""
    bounds = []
    start = 0
    for size in parts:
        bounds.append((start, start + size))
        start += size
    total = None
    for mask in masks:
        term = None
        for lo, hi in bounds:
            t = traces.trace(mask[lo:hi])
            term = t if term is None else term * t
        total = term if total is None else total + term
    return total


def T_pi(A: Matrix, parts, _traces: _WordTraces | None = None):
    """Average of the block trace products over all adjoint placements.

    The result is real: exact zero imaginary part on the exact path, and
    below ``T_PI_IMAG_TOL`` (relative) on the approx path.
    """
    parts = tuple(parts)
    d = sum(parts)
    _require_even(d)
    traces = _traces if _traces is not None else _WordTraces(A)
    masks = star_placements(d)
    total = _masked_trace_sum(traces, parts, masks, A.exact)
    t = _real_scalar(total, A.exact)
    return Fraction(t, comb(d, d // 2)) if A.exact else t / comb(d, d // 2)


def norm_via_words(A: Matrix, d: int, max_d: int = WORDS_DEGREE_LIMIT) -> NormResult:
    _require_even(d)
    if d > max_d:
        raise ValueError(
            f"word enumeration guard: d={d} exceeds {max_d}; use the detseries route"
        )
    traces = _WordTraces(A)
    masks = star_placements(d)
    power = Fraction(0) if A.exact else 0.0
    for parts in partitions_of(d):
        total = _masked_trace_sum(traces, parts, masks, A.exact)
        t = _real_scalar(total, A.exact)
        z = z_weight(parts)
        if A.exact:
            power += Fraction(t, z)
        else:
            power += t / z
    denom = comb(d, d // 2)
    power = Fraction(power, denom) if A.exact else power / denom
    return NormResult(d, dth_root(power, d), power, "words")


def norm_via_quadrature(A: Matrix, d: int, nodes: int | None = None) -> NormResult:
    """Periodic trapezoidal evaluation of the complexified norm integral.

    The integrand t -> h_d(spectrum(e^{it}A + e^{-it}A*)) is a trigonometric
    polynomial of degree <= d, so any node count above d integrates it
    exactly; the default 2d+2 leaves a safety margin.
    """
    _require_even(d)
    if A.exact:
        raise TypeError("quadrature runs on the approx path; call to_approx() first")
    N = 2 * d + 2 if nodes is None else int(nodes)
    if N < d + 1:
        raise ValueError(f"need at least d+1={d + 1} nodes, got {N}")
    acc = 0.0
    for k in range(N):
        phase = cmath.exp(2j * pi * k / N)
        B = A.scale(phase) + A.adjoint().scale(phase.conjugate())
        eig = hermitian_eigenvalues(B)
        acc += h_powersum(d, [float(v) for v in eig])
    power = acc / N / comb(d, d // 2)
    return NormResult(d, dth_root(power, d), power, "quadrature")


def det_inverse_series(A: Matrix, total_degree: int) -> BivariateSeries:
    """Taylor coefficients of 1/det(I - zA - zbar A*) through a total degree.

    Uses log-then-exp on the trace series: with M = zA + zbar A*, the log of
    the inverse determinant is sum_k tr(M^k)/k, and tr(M^k) splits over
    bidegrees via the two-sided word sum Q[a,b] = A Q[a-1,b] + A* Q[a,b-1].
    Exact over rational entries.
    """
    if total_degree < 0:
        raise ValueError("total degree must be nonnegative")
    n = A.n
    exact = A.exact
    Astar = A.adjoint()
    Q: dict[tuple[int, int], Matrix] = {(0, 0): Matrix.identity(n, exact=exact)}
    log_series = BivariateSeries(total_degree, exact=exact)
    for k in range(1, total_degree + 1):
        for a in range(k, -1, -1):
            b = k - a
            acc = None
            if a >= 1 and (a - 1, b) in Q:
                acc = A @ Q[(a - 1, b)]
            if b >= 1 and (a, b - 1) in Q:
                term = Astar @ Q[(a, b - 1)]
                acc = term if acc is None else acc + term
            Q[(a, b)] = acc
            t = acc.trace()
            if exact:
                log_series._set(a, b, t / k)
            else:
                log_series._set(a, b, complex(t) / k)
        # Entries of total degree k-1 are no longer needed.
        for key in [key for key in Q if key[0] + key[1] == k - 1]:
            del Q[key]
    return log_series.exp()


def norm_via_det_series(A: Matrix, d: int) -> NormResult:
    _require_even(d)
    series = det_inverse_series(A, d)
    c = series.coefficient(d // 2, d // 2)
    t = _real_scalar(c, A.exact)
    if A.exact:
        power = Fraction(t, comb(d, d // 2))
    else:
        power = t / comb(d, d // 2)
    return NormResult(d, dth_root(power, d), power, "detseries")
