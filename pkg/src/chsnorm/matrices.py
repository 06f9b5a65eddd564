"""Dense square complex matrices over the two scalar kinds, plus the exact
characteristic polynomial and a complex Jacobi eigensolver for Hermitian input.

A :class:`Matrix` stores either a ``complex128`` ndarray (approx path) or an
``object`` ndarray of :class:`~chsnorm.scalars.GaussianRational` (exact path).
The two paths never mix inside one arithmetic pipeline; binary operations
raise on mixed operands.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .scalars import GaussianRational

TOL_HERM_REL = 1e-10
TOL_EIG_REL = 1e-12
MAX_SWEEPS = 64


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi sweep limit is hit before the residual target."""


def _to_exact_entry(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, complex):
        raise TypeError("cannot place a float complex in an exact matrix")
    raise TypeError(f"not an exact scalar: {type(x).__name__}")


class Matrix:
    """Square matrix; ``exact`` selects Gaussian-rational vs complex-float entries."""

    __slots__ = ("data", "exact")

    def __init__(self, data, exact: bool | None = None):
        arr = np.asarray(data)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"matrix must be square and nonempty, got shape {arr.shape}")
        if exact is None:
            exact = arr.dtype == object
        if exact:
            out = np.empty(arr.shape, dtype=object)
            for i in range(arr.shape[0]):
                for j in range(arr.shape[1]):
                    out[i, j] = _to_exact_entry(arr[i, j])
            arr = out
        else:
            arr = arr.astype(np.complex128)
        self.data = arr
        self.exact = bool(exact)

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, n: int, exact: bool = False) -> "Matrix":
        if exact:
            rows = [[GaussianRational(int(i == j)) for j in range(n)] for i in range(n)]
            return cls(np.array(rows, dtype=object), exact=True)
        return cls(np.eye(n, dtype=np.complex128), exact=False)

    @classmethod
    def zeros(cls, n: int, exact: bool = False) -> "Matrix":
        if exact:
            rows = [[GaussianRational(0) for _ in range(n)] for _ in range(n)]
            return cls(np.array(rows, dtype=object), exact=True)
        return cls(np.zeros((n, n), dtype=np.complex128), exact=False)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    # -- ring operations -------------------------------------------------------

    def _check_compatible(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix operand")
        if self.exact != other.exact:
            raise TypeError("cannot mix exact and approx matrices in one operation")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        return Matrix(self.data + other.data, exact=self.exact)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        return Matrix(self.data - other.data, exact=self.exact)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.data, exact=self.exact)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        return Matrix(np.dot(self.data, other.data), exact=self.exact)

    def scale(self, c) -> "Matrix":
        if self.exact:
            c = _to_exact_entry(c)
        else:
            if isinstance(c, GaussianRational):
                raise TypeError("cannot scale an approx matrix by an exact scalar")
            c = complex(c)
        return Matrix(self.data * c, exact=self.exact)

    def __mul__(self, c) -> "Matrix":
        return self.scale(c)

    __rmul__ = __mul__

    def power(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.n, exact=self.exact)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    # -- involution / trace ---------------------------------------------------

    def adjoint(self) -> "Matrix":
        return Matrix(np.conjugate(self.data).T.copy(), exact=self.exact)

    def trace(self):
        t = self.data.trace()
        return t if self.exact else complex(t)

    def frobenius(self) -> float:
        if self.exact:
            return math.sqrt(
                sum(float(e.re) ** 2 + float(e.im) ** 2 for e in self.data.flat)
            )
        return float(np.linalg.norm(self.data, "fro"))

    # -- predicates / conversions ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix) or other.exact != self.exact:
            return NotImplemented
        if self.n != other.n:
            return False
        return bool(np.all(self.data == other.data))

    __hash__ = None  # mutable payload, unhashable on purpose

    def is_hermitian(self, tol: float | None = None) -> bool:
        if self.exact:
            return bool(np.all(self.data == np.conjugate(self.data).T))
        if tol is None:
            tol = TOL_HERM_REL * max(1.0, self.frobenius())
        return bool(np.max(np.abs(self.data - self.data.conj().T)) <= tol)

    def to_approx(self) -> "Matrix":
        if not self.exact:
            return self
        out = np.empty(self.data.shape, dtype=np.complex128)
        for i in range(self.n):
            for j in range(self.n):
                out[i, j] = complex(self.data[i, j])
        return Matrix(out, exact=False)

    def __repr__(self):
        kind = "exact" if self.exact else "approx"
        return f"Matrix(n={self.n}, {kind})"


class HermitianMatrix(Matrix):
    """Matrix validated to equal its conjugate transpose on construction.

    Exact inputs must match exactly; approx inputs entrywise within
    ``TOL_HERM_REL * max(1, frobenius)``.
    """

    __slots__ = ()

    def __init__(self, data, exact: bool | None = None, tol: float | None = None):
        super().__init__(data, exact=exact)
        if not self.is_hermitian(tol=tol):
            raise ValueError("matrix is not Hermitian within tolerance")


def adjoint(A: Matrix) -> Matrix:
    return A.adjoint()


def trace(A: Matrix):
    return A.trace()


def matmul(A: Matrix, B: Matrix) -> Matrix:
    return A @ B


def add(A: Matrix, B: Matrix) -> Matrix:
    return A + B


def scale(c, A: Matrix) -> Matrix:
    return A.scale(c)


def hermitian_eigenvalues(
    H: Matrix,
    tol: float | None = None,
    max_sweeps: int = MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending (approx path only).

    Cyclic Jacobi with complex plane rotations.  Stops when the off-diagonal
    Frobenius residual drops below ``TOL_EIG_REL * frobenius(H)``; raises
    :class:`ConvergenceError` after ``max_sweeps`` full sweeps.
    """
    if H.exact:
        raise TypeError("eigensolver runs on the approx path; call to_approx() first")
    n = H.n
    # Hermitize the working copy so tol-level input asymmetry cannot bias sweeps.
    W = 0.5 * (H.data + H.data.conj().T)
    if tol is None:
        tol = TOL_EIG_REL * max(np.linalg.norm(W, "fro"), 1e-300)
    if n == 1:
        return np.array([W[0, 0].real])

    for _ in range(max_sweeps):
        off = math.sqrt(max(np.linalg.norm(W, "fro") ** 2 - np.linalg.norm(np.diag(W)) ** 2, 0.0))
        if off <= tol:
            return np.sort(np.real(np.diag(W)))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = W[p, q]
                ag = abs(g)
                if ag == 0.0:
                    continue
                w = g / ag
                a = W[p, p].real
                b = W[q, q].real
                tau = (a - b) / (2.0 * ag)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = W[:, p].copy()
                colq = W[:, q].copy()
                W[:, p] = c * colp + s * np.conj(w) * colq
                W[:, q] = -s * w * colp + c * colq
                rowp = W[p, :].copy()
                rowq = W[q, :].copy()
                W[p, :] = c * rowp + s * w * rowq
                W[q, :] = -s * np.conj(w) * rowp + c * rowq
                W[p, q] = 0.0
                W[q, p] = 0.0
                W[p, p] = W[p, p].real
                W[q, q] = W[q, q].real
    off = math.sqrt(max(np.linalg.norm(W, "fro") ** 2 - np.linalg.norm(np.diag(W)) ** 2, 0.0))
    if off <= tol:
        return np.sort(np.real(np.diag(W)))[::-1]
    raise ConvergenceError(
        f"Jacobi sweeps exhausted (off-diagonal residual {off:.3e} > tol {tol:.3e})"
    )


def char_poly(A: Matrix) -> list:
    """Monic characteristic polynomial of A by the Faddeev-LeVerrier recursion.

    Returns coefficients ascending by power: ``c[0] + c[1] x + ... + c[n] x^n``
    with ``c[n] = 1``.  Exact (rational) on the exact path; the only divisions
    are by the integers 1..n.
    """
    n = A.n
    if A.exact:
        one = GaussianRational(1)
        zero = GaussianRational(0)
    else:
        one = complex(1.0)
        zero = complex(0.0)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    I = Matrix.identity(n, exact=A.exact)
    M = Matrix.zeros(n, exact=A.exact)
    for k in range(1, n + 1):
        M = A @ M + I.scale(coeffs[n - k + 1])
        AM = A @ M
        t = AM.trace()
        if A.exact:
            coeffs[n - k] = -t / k
        else:
            coeffs[n - k] = -t / complex(k)
    return coeffs
