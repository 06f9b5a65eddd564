"""Symmetric tensor powers as an independent oracle for the Hermitian norms.

The k-th symmetric power of an n x n matrix acts on the span of size-k
multisets over {1..n}; in the normalized symmetrized basis its entries are
permanents of row/column-repeated submatrices.  Its trace equals the degree-k
complete homogeneous symmetric polynomial of the eigenvalues, which for even
k is the k-th norm power.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial

import numpy as np

from .hermitian import NormResult, dth_root, _real_part
from .matrices import Matrix
from .scalars import GaussianRational

PERMANENT_SIZE_LIMIT = 10
SYM_DIM_LIMIT = 2000


def multiset_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """All size-k multisets over {0..n-1} as nondecreasing tuples, lex order."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return list(combinations_with_replacement(range(n), k))


def multiplicity_factor(multiset: tuple[int, ...]) -> int:
    """Product of factorials of the element multiplicities."""
    out = 1
    for m in Counter(multiset).values():
        out *= factorial(m)
    return out


def permanent(M) -> object:
    """Matrix permanent by Ryser's inclusion-exclusion formula, O(2^k k^2).

    Accepts a Matrix or a square ndarray over either scalar kind.
    """
    data = M.data if isinstance(M, Matrix) else np.asarray(M)
    k = data.shape[0]
    if data.ndim != 2 or data.shape[1] != k:
        raise ValueError("permanent needs a square matrix")
    if k > PERMANENT_SIZE_LIMIT:
        raise ValueError(f"permanent size guard: k={k} > {PERMANENT_SIZE_LIMIT}")
    if k == 0:
        return GaussianRational(1) if data.dtype == object else complex(1.0)
    rows = [list(data[i, :]) for i in range(k)]
    total = None
    for sub in range(1, 1 << k):
        cols = [j for j in range(k) if sub >> j & 1]
        prod = None
        for row in rows:
            s = row[cols[0]]
            for j in cols[1:]:
                s = s + row[j]
            prod = s if prod is None else prod * s
        signed = prod if (k - len(cols)) % 2 == 0 else -prod
        total = signed if total is None else total + signed
    return total


def _submatrix(A: Matrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> np.ndarray:
    return A.data[np.ix_(rows, cols)]


def sym_power_matrix(A: Matrix, k: int) -> Matrix:
    """Matrix of the k-th symmetric tensor power in the normalized basis.

    Entry (alpha, beta) is per(A[alpha|beta]) / sqrt(mu(alpha) mu(beta)) with
    rows/columns repeated per multiplicity.  Approx path only: the
    normalization involves square roots.
    """
    if A.exact:
        raise TypeError(
            "sym_power_matrix needs the approx path (the basis normalization "
            "is irrational); sym_power_trace handles exact input"
        )
    basis = multiset_basis(A.n, k)
    dim = len(basis)
    if dim > SYM_DIM_LIMIT:
        raise ValueError(f"symmetric power dimension {dim} exceeds {SYM_DIM_LIMIT}")
    mu = [multiplicity_factor(ms) for ms in basis]
    out = np.empty((dim, dim), dtype=np.complex128)
    for i, alpha in enumerate(basis):
        for j, beta in enumerate(basis):
            out[i, j] = complex(permanent(_submatrix(A, alpha, beta))) / math.sqrt(
                mu[i] * mu[j]
            )
    return Matrix(out, exact=False)


def sym_power_trace(A: Matrix, k: int):
    """Trace of the k-th symmetric power: sum of per(A[alpha|alpha]) / mu(alpha).

    Exact rational for exact input.  Equals the degree-k complete homogeneous
    symmetric polynomial of the spectrum when A is Hermitian.
    """
    basis = multiset_basis(A.n, k)
    if len(basis) > SYM_DIM_LIMIT:
        raise ValueError(f"symmetric power dimension {len(basis)} exceeds {SYM_DIM_LIMIT}")
    total = Fraction(0) if A.exact else 0.0
    for alpha in basis:
        p = permanent(_submatrix(A, alpha, alpha))
        p = _real_part(p, scale=max(1.0, A.frobenius()) ** max(k, 1))
        total += Fraction(p, multiplicity_factor(alpha)) if A.exact else p / multiplicity_factor(alpha)
    return total


def norm_via_tensor(A: Matrix, d: int) -> NormResult:
    """Norm d-th power as the symmetric-power trace (Hermitian input, even d)."""
    if d < 2 or d % 2 != 0:
        raise ValueError(f"norms are defined for even d >= 2, got {d}")
    if not A.is_hermitian():
        raise ValueError("the tensor route needs a Hermitian matrix")
    power = sym_power_trace(A, d)
    return NormResult(d, dth_root(power, d), power, "tensor")
