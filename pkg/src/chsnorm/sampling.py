"""Seeded random inputs for the property suites: vectors, complex and
Hermitian matrices (both scalar kinds), and unitaries built from rotations."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .matrices import Matrix
from .scalars import GaussianRational


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_real_vector(rng: np.random.Generator, n: int, span: float = 2.0) -> list[float]:
    return [float(v) for v in rng.uniform(-span, span, size=n)]


def random_exact_vector(rng: np.random.Generator, n: int, span: int = 5) -> list[Fraction]:
    nums = rng.integers(-span, span + 1, size=n)
    dens = rng.integers(1, 4, size=n)
    return [Fraction(int(a), int(b)) for a, b in zip(nums, dens)]


def random_complex_matrix(rng: np.random.Generator, n: int, span: float = 1.0) -> Matrix:
    data = rng.uniform(-span, span, size=(n, n)) + 1j * rng.uniform(-span, span, size=(n, n))
    return Matrix(data, exact=False)


def random_hermitian(rng: np.random.Generator, n: int, span: float = 1.0) -> Matrix:
    M = random_complex_matrix(rng, n, span)
    return Matrix(0.5 * (M.data + M.data.conj().T), exact=False)


def random_exact_matrix(rng: np.random.Generator, n: int, span: int = 3) -> Matrix:
    re = rng.integers(-span, span + 1, size=(n, n))
    im = rng.integers(-span, span + 1, size=(n, n))
    arr = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            arr[i, j] = GaussianRational(int(re[i, j]), int(im[i, j]))
    return Matrix(arr, exact=True)


def random_exact_hermitian(rng: np.random.Generator, n: int, span: int = 2) -> Matrix:
    M = random_exact_matrix(rng, n, span)
    return M + M.adjoint()


def random_unitary(rng: np.random.Generator, n: int) -> Matrix:
    """Product of complex plane rotations with random angles and phases."""
    U = np.eye(n, dtype=np.complex128)
    for p in range(n - 1):
        for q in range(p + 1, n):
            theta = rng.uniform(0.0, 2.0 * math.pi)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            c, s = math.cos(theta), math.sin(theta)
            w = cmath.exp(1j * phi)
            R = np.eye(n, dtype=np.complex128)
            R[p, p] = c
            R[p, q] = -s * w
            R[q, p] = s * w.conjugate()
            R[q, q] = c
            U = U @ R
    # Random diagonal phases keep the determinant generic.
    D = np.diag(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, size=n)))
    return Matrix(U @ D, exact=False)
