"""Permutations in one-line notation, patterns, and occurrence statistics.

Positions and values are 1-indexed throughout, so ``p(i)`` is the image of
``i`` and ``p.values[i - 1]`` is the same thing.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable


def _check_rearrangement(values: tuple[int, ...], what: str) -> None:
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"{what} {values} is not a rearrangement of 1..{len(values)}")


@dataclass(frozen=True, order=True)
class Permutation:
    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        _check_rearrangement(values, "permutation")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"3 4 1 2"`` (or a bare digit string ``"3412"`` when n <= 9)."""
        text = text.strip()
        if not text:
            return cls(())
        if " " in text or "," in text:
            return cls(int(tok) for tok in text.replace(",", " ").split())
        return cls(int(ch) for ch in text)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.values, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles, each starting from its smallest element, ordered by that element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        if self.n == 0:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        values = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                values[a - 1] = b
        return cls(values)


@dataclass(frozen=True, order=True)
class Pattern:
    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] | str):
        if isinstance(values, str):
            values = [int(ch) for ch in values.strip()]
        values = tuple(int(v) for v in values)
        if len(values) < 2:
            raise ValueError(f"pattern must have length >= 2, got {values}")
        _check_rearrangement(values, "pattern")
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        if self.m <= 9:
            return "".join(map(str, self.values))
        return " ".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Pattern({str(self)!r})"


S3 = tuple(Pattern(s) for s in ("123", "132", "213", "231", "312", "321"))


def as_pattern(a: Pattern | str | Iterable[int]) -> Pattern:
    return a if isinstance(a, Pattern) else Pattern(a)


@dataclass(frozen=True)
class CycleType:
    """Cycle lengths of a permutation, sorted in decreasing order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def __str__(self) -> str:
        # a^b means b cycles of length a, listed by increasing length
        if not self.parts:
            return "()"
        return "".join(f"{a}^{b}" for a, b in self.multiplicities().items())


def fixed_points(p: Permutation) -> set[int]:
    return {i for i, v in enumerate(p.values, 1) if v == i}


def is_involution(p: Permutation) -> bool:
    vals = p.values
    return all(vals[v - 1] == i for i, v in enumerate(vals, 1))


def _standardize(seq) -> tuple[int, ...]:
    order = sorted(range(len(seq)), key=seq.__getitem__)
    ranks = [0] * len(seq)
    for r, idx in enumerate(order, 1):
        ranks[idx] = r
    return tuple(ranks)


@lru_cache(maxsize=1 << 16)
def _profile(values: tuple[int, ...], m: int) -> Counter:
    return Counter(_standardize(sub) for sub in combinations(values, m))


def pattern_profile(p: Permutation, m: int = 3) -> Counter:
    """Occurrence counts of every pattern of length ``m`` in ``p``, keyed by value tuple."""
    return Counter(_profile(p.values, m))


def occurrences(p: Permutation, a: Pattern | str) -> int:
    """Number of index subsequences of ``p`` order-isomorphic to ``a``."""
    a = as_pattern(a)
    if a.m > p.n:
        return 0
    if a.m <= 4:
        # cached per (values, m); shared across every pattern of that length
        return _profile(p.values, a.m)[a.values]
    target = a.values
    return sum(1 for sub in combinations(p.values, a.m) if _standardize(sub) == target)


def avoids(p: Permutation, a: Pattern | str) -> bool:
    return occurrences(p, a) == 0


def contains_once(p: Permutation, a: Pattern | str) -> bool:
    return occurrences(p, a) == 1


def reverse_conjugate(p: Permutation) -> Permutation:
    """Conjugate by the reversal: i -> n + 1 - p(n + 1 - i)."""
    n = p.n
    return Permutation(n + 1 - p(n + 1 - i) for i in range(1, n + 1))


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(len(c) for c in p.cycles())
