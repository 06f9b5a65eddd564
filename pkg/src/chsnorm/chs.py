"""Complete homogeneous symmetric polynomial evaluation on real vectors.

Three independent evaluators are provided: the defining monomial sum
(`h_direct`), the partition/power-sum expansion (`h_powersum`), and the
Newton-Girard recursion (`h_newton_girard`).  All three accept exact
rational components (int / Fraction, results stay Fraction) or floats.

`expectation_estimate` is the probabilistic route: for even d, the value
h_d(x) equals E[|<xi, x>|^d] / d! with xi a vector of independent standard
exponential variables, estimated here by seeded Monte Carlo.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial, sqrt

import numpy as np

from .partitions import partitions_of, z_weight

DIRECT_TERM_LIMIT = 10**8


def _is_exact_vector(x) -> bool:
    return all(isinstance(c, (int, Fraction)) and not isinstance(c, bool) for c in x)


def power_sums(x, d_max: int) -> list:
    """[p_1, ..., p_d_max] with p_k = sum of k-th powers of the components."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    exact = _is_exact_vector(x)
    powers = [Fraction(c) if exact else float(c) for c in x]
    out = []
    for k in range(1, d_max + 1):
        out.append(sum(powers))
        if k < d_max:
            powers = [p * (Fraction(c) if exact else float(c)) for p, c in zip(powers, x)]
    return out


def h_direct(d: int, x):
    """Sum of all degree-d monomials in the components of x (the definition)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = len(x)
    exact = _is_exact_vector(x)
    if d == 0:
        return Fraction(1) if exact else 1.0
    if comb(n + d - 1, d) > DIRECT_TERM_LIMIT:
        raise ValueError(
            f"direct evaluation would sum {comb(n + d - 1, d)} monomials "
            f"(limit {DIRECT_TERM_LIMIT})"
        )
    comps = [Fraction(c) if exact else float(c) for c in x]
    total = Fraction(0) if exact else 0.0
    for idx in combinations_with_replacement(range(n), d):
        term = comps[idx[0]]
        for i in idx[1:]:
            term = term * comps[i]
        total += term
    return total


def h_powersum(d: int, x):
    """h_d via the partition expansion sum_{parts of d} p_parts / z_parts."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    exact = _is_exact_vector(x)
    p = power_sums(x, d)
    total = Fraction(0) if exact else 0.0
    for parts in partitions_of(d):
        term = Fraction(1) if exact else 1.0
        for size in parts:
            term = term * p[size - 1]
        z = z_weight(parts)
        total += Fraction(term, z) if exact else term / z
    return total


def h_newton_girard(d: int, psums):
    """h_d from p_1..p_d by the recursion d*h_d = sum_i h_{d-i} p_i, h_0 = 1.

    ``psums[k-1]`` must hold the k-th power sum of one fixed vector.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if len(psums) < d:
        raise ValueError(f"need power sums up to order {d}, got {len(psums)}")
    exact = _is_exact_vector(psums[:d])
    h = [Fraction(1) if exact else 1.0]
    for k in range(1, d + 1):
        s = sum(h[k - i] * psums[i - 1] for i in range(1, k + 1))
        h.append(Fraction(s, k) if exact else s / k)
    return h[d]


def expectation_estimate(
    d: int, x, samples: int = 10**6, seed: int = 0
) -> tuple[float, float]:
    """Monte Carlo estimate of E[|<xi, x>|^d] / d! with its standard error.

    xi has independent standard exponential components drawn by inverse CDF
    (-log1p(-u)) from numpy's PCG64 stream, so a fixed seed fixes the result.
    """
    if d % 2 != 0 or d < 2:
        raise ValueError("d must be a positive even integer")
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    xs = np.asarray([float(c) for c in x])
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random((samples, xs.size))
    xi = -np.log1p(-u)
    vals = np.abs(xi @ xs) ** d / factorial(d)
    mean = float(vals.mean())
    stderr = float(vals.std(ddof=1) / sqrt(samples))
    return mean, stderr


def hunter_bound(d: int, x):
    """Classical lower bound for even d: h_d(x) >= (sum x_i^2)^(d/2) / (2^(d/2) (d/2)!)."""
    if d % 2 != 0 or d < 2:
        raise ValueError("d must be a positive even integer")
    p = d // 2
    exact = _is_exact_vector(x)
    sq = sum((Fraction(c) if exact else float(c)) ** 2 for c in x)
    denom = 2**p * factorial(p)
    return Fraction(sq**p, denom) if exact else sq**p / denom


def baston_bound(d: int, x):
    """Hunter's bound sharpened by a positive multiple of (sum x_i)^d.

    Equality holds iff d = 2, or d >= 4 and all components are equal.
    """
    if d % 2 != 0 or d < 2:
        raise ValueError("d must be a positive even integer")
    p = d // 2
    n = len(x)
    exact = _is_exact_vector(x)
    hunter = hunter_bound(d, x)
    lam = Fraction(comb(n + d - 1, d), n**p) - Fraction(1, 2**p * factorial(p))
    lam = lam / n**p
    s = sum(Fraction(c) if exact else float(c) for c in x)
    extra = lam * s ** (2 * p) if exact else float(lam) * s ** (2 * p)
    return hunter + extra
