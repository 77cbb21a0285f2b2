"""Exhaustive generation of involutions and restricted permutations.

This is the brute-force ground truth that every closed form is checked
against. Involutions are built directly as partial matchings, so n = 12
(140,152 involutions) stays cheap; full symmetric groups are only walked
with prefix pruning.
"""
from __future__ import annotations

import os
from collections import Counter
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .perm_core import (
    CycleType,
    Pattern,
    Permutation,
    _standardize,
    as_pattern,
    cycle_type,
    occurrences,
)

#: default oracle depths; override with REFINV_ORACLE_DEPTH / REFINV_SN_DEPTH
ORACLE_DEPTH = int(os.environ.get("REFINV_ORACLE_DEPTH", "10"))
SN_DEPTH = int(os.environ.get("REFINV_SN_DEPTH", "8"))


def involutions(n: int, k: int | None = None) -> Iterator[Permutation]:
    """Yield every involution of S_n (with exactly ``k`` fixed points if given).

    Output is in lexicographic order of the one-line form.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k is not None and (n - k) % 2:
        return
    values = [0] * (n + 1)

    def extend(pos: int, fixed: int, free: int):
        while pos <= n and values[pos]:
            pos += 1
        if pos > n:
            yield Permutation(values[1:])
            return
        # choosing p(pos) = pos first, then larger partners, keeps lex order
        if k is None or fixed < k:
            values[pos] = pos
            yield from extend(pos + 1, fixed + 1, free - 1)
            values[pos] = 0
        if k is None or free - (k - fixed) >= 2:
            for j in range(pos + 1, n + 1):
                if values[j]:
                    continue
                values[pos], values[j] = j, pos
                yield from extend(pos + 1, fixed, free - 2)
                values[pos] = values[j] = 0

    yield from extend(1, 0, n)


def telephone(n: int) -> int:
    """Number of involutions of S_n: t(n) = t(n-1) + (n-1) t(n-2)."""
    a, b = 1, 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b if n >= 1 else 1


def count_avoiding(n: int, k: int, a: Pattern | str) -> int:
    a = as_pattern(a)
    return sum(1 for p in involutions(n, k) if occurrences(p, a) == 0)


def count_containing_once(n: int, k: int, a: Pattern | str) -> int:
    a = as_pattern(a)
    return sum(1 for p in involutions(n, k) if occurrences(p, a) == 1)


def count(stat: str, n: int, k: int, a: Pattern | str) -> int:
    """``stat`` is ``"avoid"`` or ``"once"``."""
    if stat == "avoid":
        return count_avoiding(n, k, a)
    if stat == "once":
        return count_containing_once(n, k, a)
    raise ValueError(f"unknown statistic {stat!r}")


def _ends_in_pattern(prefix: list[int], patterns: list[tuple[int, ...]]) -> bool:
    """True if some occurrence of a pattern uses the last entry of ``prefix``."""
    last = prefix[-1]
    head = prefix[:-1]
    for pat in patterns:
        m = len(pat)
        if m > len(prefix):
            continue
        for sub in combinations(head, m - 1):
            if _standardize(sub + (last,)) == pat:
                return True
    return False


def permutations_avoiding(n: int, patterns: Iterable[Pattern | str]) -> Iterator[Permutation]:
    """All of S_n avoiding every pattern given, in lexicographic order.

    Avoidance is inherited by prefixes (as sequences), so a prefix that
    already contains a pattern is pruned.
    """
    pats = [as_pattern(a).values for a in patterns]
    if not pats:
        yield from (Permutation(v) for v in permutations(range(1, n + 1)))
        return
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend():
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if not _ends_in_pattern(prefix, pats):
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    yield from extend()


def count_avoiding_set(n: int, k: int, patterns: Iterable[Pattern | str]) -> int:
    """Permutations of S_n (not only involutions) with ``k`` fixed points avoiding all ``patterns``."""
    patterns = list(patterns)
    if not patterns:
        raise ValueError("need at least one pattern")
    total = 0
    for p in permutations_avoiding(n, patterns):
        if sum(1 for i, v in enumerate(p.values, 1) if i == v) == k:
            total += 1
    return total


def cycle_class_counts(n: int, a: Pattern | str) -> dict[CycleType, int]:
    """Number of ``a``-avoiding permutations of S_n of each cycle type."""
    counts: Counter = Counter({CycleType(parts): 0 for parts in partitions(n)})
    for p in permutations_avoiding(n, [a]):
        counts[cycle_type(p)] += 1
    return dict(counts)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest
