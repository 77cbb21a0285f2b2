"""Row-insertion tableaux of involutions and the two-column move on them.

For an involution the insertion and recording tableaux coincide, so a
single standard Young tableau encodes it and only that one is kept.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator

from .perm_core import Permutation, is_involution


@dataclass(frozen=True, order=True)
class StandardYoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(r for r in map(tuple, rows) if r)
        object.__setattr__(self, "rows", rows)
        self._validate()

    def _validate(self) -> None:
        rows = self.rows
        entries = sorted(v for r in rows for v in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries of {rows} are not 1..n")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError(f"row lengths of {rows} are not weakly decreasing")
            if any(b <= a for a, b in zip(upper, lower)):
                raise ValueError(f"columns of {rows} are not strictly increasing")
        for r in rows:
            if any(b <= a for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]]) -> "StandardYoungTableau":
        columns = [c for c in map(tuple, columns) if c]
        height = max((len(c) for c in columns), default=0)
        return cls(tuple(c[i] for c in columns if i < len(c)) for i in range(height))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(r[j] for r in self.rows if j < len(r)) for j in range(width))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)

    def column_str(self) -> str:
        """Column-major display, one column per text column, as in hand-drawn figures."""
        cols = self.columns
        width = max((len(str(v)) for r in self.rows for v in r), default=1)
        lines = []
        for i in range(max((len(c) for c in cols), default=0)):
            cells = [str(c[i]).rjust(width) if i < len(c) else " " * width for c in cols]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> "StandardYoungTableau":
        """Row form: one row per line (or rows separated by '/'), entries space-separated."""
        lines = text.replace("/", "\n").splitlines()
        return cls([int(tok) for tok in line.split()] for line in lines if line.strip())


def insert(rows: list[list[int]], x: int) -> None:
    """Schensted row insertion of ``x`` into ``rows`` in place."""
    for row in rows:
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return
        row[j], x = x, row[j]
    rows.append([x])


def tableau_of(p: Permutation) -> StandardYoungTableau:
    """Insertion tableau of an involution."""
    if not is_involution(p):
        raise ValueError(f"{p} is not an involution; its insertion tableau alone does not determine it")
    rows: list[list[int]] = []
    for v in p.values:
        insert(rows, v)
    return StandardYoungTableau(rows)


def involution_of(t: StandardYoungTableau) -> Permutation:
    """The involution whose insertion tableau is ``t`` (reverse bumping)."""
    n = t.n
    p_rows = [list(r) for r in t.rows]
    # recording tableau equals t; locate entries there to know which cell to evict
    where = {v: i for i, r in enumerate(t.rows) for v in r}
    values = [0] * n
    for step in range(n, 0, -1):
        r = where[step]
        x = p_rows[r].pop()
        if not p_rows[r]:
            p_rows.pop()
        for up in range(r - 1, -1, -1):
            row = p_rows[up]
            j = bisect_right(row, x) - 1
            row[j], x = x, row[j]
        values[step - 1] = x
    return Permutation(values)


def longest_increasing(p: Permutation) -> int:
    tails: list[int] = []
    for v in p.values:
        j = bisect_right(tails, v)
        if j == len(tails):
            tails.append(v)
        else:
            tails[j] = v
    return len(tails)


def longest_decreasing(p: Permutation) -> int:
    return longest_increasing(Permutation(reversed(p.values)))


def odd_columns(t: StandardYoungTableau) -> int:
    return sum(1 for c in t.columns if len(c) % 2)


def gamma_move(t: StandardYoungTableau) -> StandardYoungTableau:
    """Move the largest entry to the bottom of the other column.

    Defined on tableaux with at most two columns whose lengths share a parity.
    """
    cols = [list(c) for c in t.columns]
    n = t.n
    if n == 0:
        raise ValueError("empty tableau has no largest entry to move")
    if len(cols) > 2:
        raise ValueError(f"tableau has {len(cols)} columns; the move needs at most 2")
    while len(cols) < 2:
        cols.append([])
    if len(cols[0]) % 2 != len(cols[1]) % 2:
        raise ValueError("column lengths differ in parity")
    src = 0 if cols[0] and cols[0][-1] == n else 1
    if not cols[src] or cols[src][-1] != n:
        raise ValueError(f"{n} is not at the bottom of a column")
    cols[src].pop()
    cols[1 - src].append(n)
    if len(cols[1]) > len(cols[0]):
        raise ValueError("moving the largest entry would not leave a tableau shape")
    return StandardYoungTableau.from_columns(cols)


def gamma(p: Permutation) -> Permutation:
    """The tableau move transported to involutions."""
    return involution_of(gamma_move(tableau_of(p)))


def enumerate_syt(shape: Iterable[int]) -> Iterator[StandardYoungTableau]:
    """All standard Young tableaux of ``shape``.

    Values 1..n are placed in turn, trying rows top to bottom, so tableaux come
    out in lexicographic order of their row-index (Yamanouchi) words.
    """
    shape = tuple(shape)
    if any(s < 0 for s in shape) or any(b > a for a, b in zip(shape, shape[1:])):
        raise ValueError(f"{shape} is not a partition")
    shape = tuple(s for s in shape if s)
    n = sum(shape)
    grid: list[list[int]] = [[] for _ in shape]

    def place(v: int):
        if v > n:
            yield StandardYoungTableau(grid)
            return
        for i, length in enumerate(shape):
            if len(grid[i]) < length and (i == 0 or len(grid[i - 1]) > len(grid[i])):
                grid[i].append(v)
                yield from place(v + 1)
                grid[i].pop()

    yield from place(1)
