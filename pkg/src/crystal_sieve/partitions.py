"""Integer partition helpers shared by the weight, q-dimension, and tableau layers."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize to a tuple of weakly decreasing positive parts.

    Trailing zeros are stripped; anything else out of order or nonpositive
    raises ValueError.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for k, part in enumerate(p):
        if part <= 0:
            raise ValueError(f"part {part} is not positive in {p}")
        if k and p[k - 1] < part:
            raise ValueError(f"parts not weakly decreasing in {p}")
    return p


def partition_size(lam: Partition) -> int:
    return sum(lam)


def dominates(lam: Partition, mu: Iterable[int]) -> bool:
    """Dominance order: every prefix sum of lam is at least that of mu.

    Compares sequences of the same total size; different totals are
    incomparable and give False.
    """
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return False
    acc_l = acc_m = 0
    for k in range(max(len(lam), len(mu))):
        acc_l += lam[k] if k < len(lam) else 0
        acc_m += mu[k] if k < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, weakly decreasing, lexicographically descending."""
    if n < 0:
        return
    bound_parts = n if max_parts is None else max_parts
    bound_part = n if max_part is None else max_part

    def rec(remaining: int, cap: int, room: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(acc)
            return
        if room == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, room - 1, acc)
            acc.pop()

    yield from rec(n, bound_part, bound_parts, [])


def partitions_up_to(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of sizes 0 through n inclusive (the empty one first)."""
    for size in range(n + 1):
        yield from partitions_of(size, max_parts=max_parts, max_part=max_part)
