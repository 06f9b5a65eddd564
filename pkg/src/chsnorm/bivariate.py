"""Truncated bivariate power series in two commuting formal variables.

Coefficients live in a dict keyed by bidegree ``(a, b)``; keys above the
truncation total degree are dropped by every operation, and absent keys mean
zero.  Entries are Gaussian rationals on the exact path and complex floats
otherwise.  The exponential uses the coefficient recurrence obtained from
F' = S'F in each variable, so it is exact over rationals.
"""

from __future__ import annotations

from .scalars import GaussianRational


class BivariateSeries:
    __slots__ = ("max_total_degree", "coeffs", "exact")

    def __init__(self, max_total_degree: int, coeffs: dict | None = None, exact: bool = False):
        if max_total_degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.max_total_degree = int(max_total_degree)
        self.exact = bool(exact)
        self.coeffs = {}
        if coeffs:
            for (a, b), c in coeffs.items():
                self._set(a, b, c)

    # -- helpers -------------------------------------------------------------

    def _zero(self):
        return GaussianRational(0) if self.exact else complex(0.0)

    def _is_zero(self, c) -> bool:
        return not bool(c) if self.exact else c == 0

    def _set(self, a: int, b: int, c) -> None:
        if a < 0 or b < 0:
            raise ValueError("bidegrees must be nonnegative")
        if a + b > self.max_total_degree:
            return
        if self._is_zero(c):
            self.coeffs.pop((a, b), None)
        else:
            self.coeffs[(a, b)] = c

    def coefficient(self, a: int, b: int):
        return self.coeffs.get((a, b), self._zero())

    def _check(self, other: "BivariateSeries") -> None:
        if self.exact != other.exact:
            raise TypeError("cannot mix exact and approx series")
        if self.max_total_degree != other.max_total_degree:
            raise ValueError("truncation degrees differ")

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        out = BivariateSeries(self.max_total_degree, exact=self.exact)
        for key in sorted(set(self.coeffs) | set(other.coeffs)):
            out._set(*key, self.coefficient(*key) + other.coefficient(*key))
        return out

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        out = BivariateSeries(self.max_total_degree, exact=self.exact)
        for key in sorted(set(self.coeffs) | set(other.coeffs)):
            out._set(*key, self.coefficient(*key) - other.coefficient(*key))
        return out

    def scale(self, c) -> "BivariateSeries":
        out = BivariateSeries(self.max_total_degree, exact=self.exact)
        for key in sorted(self.coeffs):
            out._set(*key, self.coeffs[key] * c)
        return out

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        T = self.max_total_degree
        acc: dict[tuple[int, int], object] = {}
        for (a1, b1) in sorted(self.coeffs):
            c1 = self.coeffs[(a1, b1)]
            for (a2, b2) in sorted(other.coeffs):
                a, b = a1 + a2, b1 + b2
                if a + b > T:
                    continue
                prod = c1 * other.coeffs[(a2, b2)]
                if (a, b) in acc:
                    acc[(a, b)] = acc[(a, b)] + prod
                else:
                    acc[(a, b)] = prod
        return BivariateSeries(T, acc, exact=self.exact)

    def exp(self) -> "BivariateSeries":
        """Series exponential; requires a vanishing constant term.

        Coefficients follow from matching dF/dz = (dS/dz) F (and dF/dzbar for
        the pure-zbar column):

            a * F[a,b] = sum_{1<=j<=a, 0<=l<=b} j * S[j,l] * F[a-j, b-l]
            b * F[0,b] = sum_{1<=l<=b}          l * S[0,l] * F[0, b-l]
        """
        if not self._is_zero(self.coefficient(0, 0)):
            raise ValueError("exp needs a series with zero constant term")
        T = self.max_total_degree
        one = GaussianRational(1) if self.exact else complex(1.0)
        F: dict[tuple[int, int], object] = {(0, 0): one}

        def fget(a, b):
            return F.get((a, b), self._zero())

        for g in range(1, T + 1):
            for a in range(g, -1, -1):
                b = g - a
                if a >= 1:
                    s = self._zero()
                    for j in range(1, a + 1):
                        for l in range(0, b + 1):
                            c = self.coeffs.get((j, l))
                            if c is not None:
                                s = s + (j * c) * fget(a - j, b - l)
                    val = s / a
                else:
                    s = self._zero()
                    for l in range(1, b + 1):
                        c = self.coeffs.get((0, l))
                        if c is not None:
                            s = s + (l * c) * fget(0, b - l)
                    val = s / b
                if not self._is_zero(val):
                    F[(a, b)] = val
        return BivariateSeries(T, F, exact=self.exact)

    # -- comparison / display ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        if self.exact != other.exact or self.max_total_degree != other.max_total_degree:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(*k) == other.coefficient(*k) for k in keys)

    __hash__ = None

    def __repr__(self):
        kind = "exact" if self.exact else "approx"
        return (
            f"BivariateSeries(T={self.max_total_degree}, {kind}, "
            f"{len(self.coeffs)} nonzero coefficients)"
        )
