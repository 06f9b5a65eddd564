"""Single entry point for computing a norm by any of the named methods.

Method tags: spectrum, charpoly, recursion, words, quadrature, detseries,
tensor.  The first three and tensor need Hermitian input; spectrum,
quadrature, and tensor-as-matrix run on the approx path (exact input is
converted).  ``method="auto"`` picks charpoly for exact Hermitian, spectrum
for approx Hermitian, and words / detseries (by degree) for general input.
"""

from __future__ import annotations

from math import comb

from .complexnorm import (
    WORDS_DEGREE_LIMIT,
    norm_via_det_series,
    norm_via_quadrature,
    norm_via_words,
)
from .hermitian import (
    NormResult,
    norm_via_charpoly,
    norm_via_spectrum,
    norm_via_trace_recursion,
)
from .matrices import Matrix
from .tensorpower import SYM_DIM_LIMIT, norm_via_tensor

HERMITIAN_ONLY = ("spectrum", "charpoly", "recursion", "tensor")
METHOD_NAMES = ("spectrum", "charpoly", "recursion", "words", "quadrature", "detseries", "tensor")


def chs_norm(A: Matrix, d: int, method: str = "auto", nodes: int | None = None) -> NormResult:
    if method == "auto":
        if A.is_hermitian():
            method = "charpoly" if A.exact else "spectrum"
        else:
            method = "words" if d <= 8 else "detseries"
    if method not in METHOD_NAMES:
        raise ValueError(f"unknown method {method!r}; expected one of {METHOD_NAMES}")
    if method in HERMITIAN_ONLY and not A.is_hermitian():
        raise ValueError(f"method {method!r} needs a Hermitian matrix")
    if method == "spectrum":
        return norm_via_spectrum(A.to_approx(), d)
    if method == "charpoly":
        return norm_via_charpoly(A, d)
    if method == "recursion":
        return norm_via_trace_recursion(A, d)
    if method == "words":
        return norm_via_words(A, d)
    if method == "quadrature":
        return norm_via_quadrature(A.to_approx(), d, nodes=nodes)
    if method == "detseries":
        return norm_via_det_series(A, d)
    return norm_via_tensor(A, d)


def applicable_methods(A: Matrix, d: int) -> list[str]:
    """Method tags valid for this input and degree, in registry order."""
    hermitian = A.is_hermitian()
    out = []
    for name in METHOD_NAMES:
        if name in HERMITIAN_ONLY and not hermitian:
            continue
        if name == "words" and d > WORDS_DEGREE_LIMIT:
            continue
        if name == "tensor" and comb(A.n + d - 1, d) > SYM_DIM_LIMIT:
            continue
        out.append(name)
    return out
