"""Adjacency matrices, cospectrality tests, and norm-based graph comparison.

Graph matrices default to the exact path, so distinguishing norm powers of
integer-spectrum graphs come out as exact integers rather than floats.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermitian import norm_via_charpoly, norm_via_spectrum
from .matrices import HermitianMatrix, Matrix, hermitian_eigenvalues
from .scalars import GaussianRational

SPECTRUM_TOL = 1e-10


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # frozenset of (u, v) tuples with u < v

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graphs need at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for {self.n} vertices")


def graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of vertex pairs; loops are rejected."""
    canon = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        canon.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(canon))


def complete_graph(n: int) -> Graph:
    return graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return graph(n, [])


def adjacency(g: Graph, exact: bool = True) -> HermitianMatrix:
    """Symmetric 0/1 adjacency matrix (exact path by default)."""
    if exact:
        rows = [[GaussianRational(0)] * g.n for _ in range(g.n)]
        one = GaussianRational(1)
        for u, v in g.edges:
            rows[u][v] = one
            rows[v][u] = one
        return HermitianMatrix(np.array(rows, dtype=object), exact=True)
    arr = np.zeros((g.n, g.n), dtype=np.complex128)
    for u, v in g.edges:
        arr[u, v] = 1.0
        arr[v, u] = 1.0
    return HermitianMatrix(arr, exact=False)


def block_diag(A: Matrix, B: Matrix) -> Matrix:
    """[[A, 0], [0, B]]."""
    A._check_compatible(B)
    n = A.n
    out = Matrix.zeros(2 * n, exact=A.exact)
    out.data[:n, :n] = A.data
    out.data[n:, n:] = B.data
    return out


def anti_diag(A: Matrix, B: Matrix) -> Matrix:
    """[[0, A], [B, 0]]."""
    A._check_compatible(B)
    n = A.n
    out = Matrix.zeros(2 * n, exact=A.exact)
    out.data[:n, n:] = A.data
    out.data[n:, :n] = B.data
    return out


def _sorted_spectrum(A: Matrix) -> np.ndarray:
    return hermitian_eigenvalues(A.to_approx())


def cospectral(A: Matrix, B: Matrix, tol: float = SPECTRUM_TOL) -> bool:
    """Equal eigenvalue multisets (sorted comparison within tol)."""
    if A.n != B.n:
        return False
    return bool(np.max(np.abs(_sorted_spectrum(A) - _sorted_spectrum(B))) <= tol)


def singularly_cospectral(A: Matrix, B: Matrix, tol: float = SPECTRUM_TOL) -> bool:
    """Equal singular-value multisets; for Hermitian input these are the
    absolute eigenvalues."""
    if A.n != B.n:
        return False
    sa = np.sort(np.abs(_sorted_spectrum(A)))[::-1]
    sb = np.sort(np.abs(_sorted_spectrum(B)))[::-1]
    return bool(np.max(np.abs(sa - sb)) <= tol)


@dataclass(frozen=True)
class DistinguishRow:
    d: int
    power_a: object
    power_b: object
    distinguished: bool


@dataclass(frozen=True)
class DistinguishReport:
    rows: tuple
    first_distinguishing_d: int | None


def chs_distinguish(A: Matrix, B: Matrix, d_list) -> DistinguishReport:
    """Norm d-th powers of both matrices over d_list; exact values when the
    inputs are exact.  Flags the first degree whose powers differ."""
    rows = []
    first = None
    for d in d_list:
        if d % 2 or d < 2:
            raise ValueError(f"even d >= 2 required, got {d}")
        if A.exact and B.exact:
            pa: object = norm_via_charpoly(A, d).dth_power
            pb: object = norm_via_charpoly(B, d).dth_power
            differ = pa != pb
        else:
            pa = norm_via_spectrum(A.to_approx(), d).dth_power
            pb = norm_via_spectrum(B.to_approx(), d).dth_power
            differ = abs(pa - pb) > 1e-9 * max(1.0, abs(pa), abs(pb))
        if differ and first is None:
            first = d
        rows.append(DistinguishRow(d, pa, pb, differ))
    return DistinguishReport(tuple(rows), first)
