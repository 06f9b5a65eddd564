"""Integer partitions and their cycle-type weights.

Partitions are plain tuples of weakly decreasing positive integers.  The
weight ``z`` of a partition with part multiplicities ``m_i`` is the product
of ``i**m_i * m_i!`` over distinct part sizes ``i``; it shows up as the
denominator when complete homogeneous symmetric polynomials are written in
the power-sum basis.
"""

from __future__ import annotations

from collections import Counter
from math import factorial


def partitions_of(d: int) -> list[tuple[int, ...]]:
    """All partitions of d, each exactly once, in reverse-lexicographic order."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    result: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], d, d)
    return result


def check_partition(parts: tuple[int, ...]) -> None:
    if len(parts) == 0:
        raise ValueError("partition must be nonempty")
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"parts must be positive, got {p}")
        if i and parts[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {parts}")


def z_weight(parts: tuple[int, ...]) -> int:
    """Weight prod_i i**m_i * m_i! over the multiplicities m_i of the parts."""
    check_partition(tuple(parts))
    z = 1
    for size, mult in Counter(parts).items():
        z *= size**mult * factorial(mult)
    return z
