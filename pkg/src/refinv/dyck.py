"""Partial Dyck paths D(n, k) and modified Dyck paths with a single drop.

Paths are words over ``U`` (up-step) and ``D`` (down-step). D(n, k) holds the
n-step words that never dip below the x-axis and end at height k; k = 0 gives
ordinary Dyck paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .numbers import as_integer, binom

UP, DOWN = "U", "D"


@dataclass(frozen=True, order=True)
class PartialDyckPath:
    steps: str

    def __init__(self, steps: str = ""):
        steps = steps.strip().upper()
        height = 0
        for i, s in enumerate(steps, 1):
            if s == UP:
                height += 1
            elif s == DOWN:
                height -= 1
                if height < 0:
                    raise ValueError(f"path {steps!r} falls below the x-axis at step {i}")
            else:
                raise ValueError(f"path {steps!r} has a step {s!r} that is neither U nor D")
        object.__setattr__(self, "steps", steps)

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def k(self) -> int:
        return self.steps.count(UP) - self.steps.count(DOWN)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __add__(self, other: "PartialDyckPath | str") -> "PartialDyckPath":
        return PartialDyckPath(self.steps + str(other))

    def heights(self) -> list[int]:
        """Heights after 0, 1, ..., n steps."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s == UP else -1))
        return out


def enumerate_paths(n: int, k: int) -> Iterator[PartialDyckPath]:
    """All of D(n, k), with up-steps tried before down-steps."""
    if k < 0 or k > n or (n + k) % 2:
        return
    word: list[str] = []

    def extend(height: int):
        left = n - len(word)
        if left == 0:
            yield PartialDyckPath("".join(word))
            return
        if height + 1 - k <= left - 1:
            word.append(UP)
            yield from extend(height + 1)
            word.pop()
        if height > 0 and abs(height - 1 - k) <= left - 1:
            word.append(DOWN)
            yield from extend(height - 1)
            word.pop()

    yield from extend(0)


def count_paths(n: int, k: int) -> int:
    """|D(n, k)| = (k+1)/(n+1) * C(n+1, (n-k)/2)."""
    if k < 0 or k > n or (n + k) % 2:
        return 0
    return as_integer(Fraction(k + 1, n + 1) * binom(n + 1, (n - k) // 2), f"|D({n},{k})|")


def d_count(n: int, j: int) -> int:
    """d(n, j) = |D(2n - j - 1, j - 1)|, the number of 123-avoiders of S_n with n in position j."""
    if j < 1:
        raise ValueError("d(n, j) needs j >= 1")
    return count_paths(2 * n - j - 1, j - 1)


def peaks(p: PartialDyckPath) -> int:
    return p.steps.count(UP + DOWN)


def is_symmetric(p: PartialDyckPath) -> bool:
    """Mirror symmetry about the vertical line through the midpoint."""
    if p.k != 0:
        raise ValueError(f"symmetry is only defined for Dyck paths, {p} ends at height {p.k}")
    mirrored = "".join(UP if s == DOWN else DOWN for s in reversed(p.steps))
    return mirrored == p.steps


@dataclass(frozen=True, order=True)
class ModifiedDyckPath:
    """A partial path to height k, then a drop to the ground and a nonempty Dyck path."""

    head: PartialDyckPath
    tail: PartialDyckPath

    def __post_init__(self):
        if not isinstance(self.head, PartialDyckPath):
            object.__setattr__(self, "head", PartialDyckPath(self.head))
        if not isinstance(self.tail, PartialDyckPath):
            object.__setattr__(self, "tail", PartialDyckPath(self.tail))
        if self.tail.k != 0 or self.tail.n == 0:
            raise ValueError(f"tail {self.tail} must be a nonempty Dyck path")

    @property
    def n(self) -> int:
        return self.head.n + self.tail.n

    @property
    def k(self) -> int:
        return self.head.k

    @property
    def i(self) -> int:
        return self.tail.n // 2

    def __str__(self) -> str:
        return f"{self.head}|{self.tail}"

    @classmethod
    def parse(cls, text: str) -> "ModifiedDyckPath":
        if text.count("|") != 1:
            raise ValueError(f"expected 'head|tail', got {text!r}")
        head, tail = text.split("|")
        return cls(PartialDyckPath(head), PartialDyckPath(tail))


def enumerate_mdp(n: int, k: int) -> Iterator[ModifiedDyckPath]:
    if k < 0 or (n + k) % 2:
        return
    for i in range(1, (n - k) // 2 + 1):
        tails = list(enumerate_paths(2 * i, 0))
        for head in enumerate_paths(n - 2 * i, k):
            for tail in tails:
                yield ModifiedDyckPath(head, tail)


def count_mdp(n: int, k: int) -> int:
    """|MDP(n; k)| = (k+3)/(n+1) * C(n+1, (n-k)/2 - 1)."""
    if k < 0 or k > n or (n + k) % 2:
        return 0
    return as_integer(Fraction(k + 3, n + 1) * binom(n + 1, (n - k) // 2 - 1), f"|MDP({n};{k})|")


def render(path: PartialDyckPath | ModifiedDyckPath | str) -> str:
    """ASCII drawing with '/' and '\\', one text row per unit of height."""
    if isinstance(path, str):
        path = ModifiedDyckPath.parse(path) if "|" in path else PartialDyckPath(path)
    if isinstance(path, ModifiedDyckPath):
        # the tail restarts at ground level after the drop
        segments = [path.head.steps, path.tail.steps]
    else:
        segments = [path.steps]
    cells: dict[tuple[int, int], str] = {}
    x = 0
    top = 0
    for steps in segments:
        h = 0
        for s in steps:
            if s == UP:
                cells[(h, x)] = "/"
                h += 1
            else:
                h -= 1
                cells[(h, x)] = "\\"
            top = max(top, h)
            x += 1
    width = x
    lines = []
    for row in range(max(top, 1) - 1, -1, -1):
        lines.append("".join(cells.get((row, col), " ") for col in range(width)).rstrip())
    lines.append("_" * width)
    return "\n".join(lines)

