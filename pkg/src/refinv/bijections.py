"""Explicit bijections between restricted involutions and lattice paths.

Every map checks its domain up front and raises ``DomainError`` on bad input;
an out-of-domain answer would silently corrupt the exhaustive checks.
"""
from __future__ import annotations

from typing import NamedTuple

from .dyck import DOWN, UP, ModifiedDyckPath, PartialDyckPath, is_symmetric
from .perm_core import Permutation, is_involution, occurrences


class DomainError(ValueError):
    """Input lies outside the domain of a bijection."""


def _require_involution(p: Permutation) -> None:
    if not is_involution(p):
        raise DomainError(f"{p} is not an involution")


def _require_avoids(p: Permutation, pattern: str) -> None:
    if occurrences(p, pattern):
        raise DomainError(f"{p} contains the pattern {pattern}")


def _as_path(d: PartialDyckPath | str) -> PartialDyckPath:
    return d if isinstance(d, PartialDyckPath) else PartialDyckPath(d)


# -- Krattenthaler: S_n(123) -> D(2n, 0) ------------------------------------

def right_to_left_maxima(p: Permutation) -> list[int]:
    """Positions (1-indexed, right to left) of the right-to-left maxima."""
    out = []
    best = 0
    for i in range(p.n, 0, -1):
        if p(i) > best:
            best = p(i)
            out.append(i)
    return out


def krattenthaler(p: Permutation) -> PartialDyckPath:
    """Read ``p`` right to left; each maximum m_i gives m_i - m_{i-1} up-steps,
    each block w_i before it gives |w_i| + 1 down-steps."""
    _require_avoids(p, "123")
    steps = []
    prev_val = 0
    maxima = right_to_left_maxima(p)
    for idx, pos in enumerate(maxima):
        val = p(pos)
        steps.append(UP * (val - prev_val))
        next_pos = maxima[idx + 1] if idx + 1 < len(maxima) else 0
        # block w_i sits strictly between this maximum and the next one to the left
        steps.append(DOWN * (pos - next_pos))
        prev_val = val
    return PartialDyckPath("".join(steps))


def krattenthaler_inv(d: PartialDyckPath | str) -> Permutation:
    d = _as_path(d)
    if d.k != 0:
        raise DomainError(f"{d} is not a Dyck path (ends at height {d.k})")
    if d.n % 2:
        raise DomainError(f"{d} has odd length")
    n = d.n // 2
    runs = []
    s = d.steps
    i = 0
    while i < len(s):
        j = i
        while j < len(s) and s[j] == UP:
            j += 1
        ups = j - i
        i = j
        while j < len(s) and s[j] == DOWN:
            j += 1
        runs.append((ups, j - i))
        i = j
    values = [0] * (n + 1)
    pos = n
    level = 0
    maxima = set()
    for ups, downs in runs:
        level += ups
        values[pos] = level
        maxima.add(level)
        pos -= downs
    # the remaining values fill the block positions in decreasing order, left to right
    rest = iter(sorted(set(range(1, n + 1)) - maxima, reverse=True))
    for i in range(1, n + 1):
        if not values[i]:
            values[i] = next(rest)
    p = Permutation(values[1:])
    if krattenthaler(p) != d:
        raise DomainError(f"{d} has no 123-avoiding preimage")
    return p


# -- Gamma: I_n^0(123) -> I_n^2(123) via a valley/peak flip ------------------

def big_gamma(d: PartialDyckPath | str) -> PartialDyckPath:
    """Flip the valley at the midpoint of a symmetric Dyck path into a peak."""
    d = _as_path(d)
    if d.k != 0 or d.n % 2 or not is_symmetric(d):
        raise DomainError(f"{d} is not a symmetric Dyck path")
    n = d.n // 2
    s = d.steps
    if n == 0 or s[n - 1] != DOWN or s[n] != UP:
        raise DomainError(f"{d} has no valley at x = {n}")
    return PartialDyckPath(s[: n - 1] + UP + DOWN + s[n + 1:])


def big_gamma_inv(d: PartialDyckPath | str) -> PartialDyckPath:
    """Flip the peak at the midpoint back into a valley."""
    d = _as_path(d)
    if d.k != 0 or d.n % 2 or not is_symmetric(d):
        raise DomainError(f"{d} is not a symmetric Dyck path")
    n = d.n // 2
    s = d.steps
    if n == 0 or s[n - 1] != UP or s[n] != DOWN:
        raise DomainError(f"{d} has no peak at x = {n}")
    flipped = s[: n - 1] + DOWN + UP + s[n + 1:]
    try:
        return PartialDyckPath(flipped)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def big_gamma_perm(p: Permutation) -> Permutation:
    """Gamma on involutions: K^-1 . flip . K, from I_n^0(123) to I_n^2(123)."""
    _require_involution(p)
    if any(p(i) == i for i in range(1, p.n + 1)):
        raise DomainError(f"{p} has fixed points; the map starts from fixed-point-free involutions")
    return krattenthaler_inv(big_gamma(krattenthaler(p)))


def big_gamma_perm_inv(p: Permutation) -> Permutation:
    _require_involution(p)
    if sum(1 for i in range(1, p.n + 1) if p(i) == i) != 2:
        raise DomainError(f"{p} does not have exactly two fixed points")
    return krattenthaler_inv(big_gamma_inv(krattenthaler(p)))


# -- delta: I_n^k(321) -> D(n, k) ------------------------------------------

def delta(p: Permutation) -> PartialDyckPath:
    """Step i is up exactly when p(i) >= i."""
    _require_involution(p)
    _require_avoids(p, "321")
    return PartialDyckPath("".join(UP if p(i) >= i else DOWN for i in range(1, p.n + 1)))


def delta_inv(d: PartialDyckPath | str) -> Permutation:
    """Going right to left, pair each down-step with the nearest free up-step on its left."""
    d = _as_path(d)
    s = d.steps
    n = d.n
    values = list(range(1, n + 1))
    taken = [False] * n
    for j in range(n - 1, -1, -1):
        if s[j] != DOWN:
            continue
        i = j - 1
        while i >= 0 and (s[i] != UP or taken[i]):
            i -= 1
        if i < 0:
            raise DomainError(f"down-step {j + 1} of {d} has no free up-step to its left")
        taken[i] = True
        values[i], values[j] = j + 1, i + 1
    return Permutation(values)


# -- zeta: I_n^k(213) -> D(n, k) -------------------------------------------

class ZetaRows(NamedTuple):
    up: tuple[int, ...]
    down: tuple[int, ...]
    up_rows: tuple[tuple[int, ...], ...]
    down_rows: tuple[tuple[int, ...], ...]


def zeta_rows(p: Permutation) -> ZetaRows:
    """Fill the up column and down column for ``p`` and report the row contents."""
    _require_involution(p)
    _require_avoids(p, "213")
    uc: list[list[int]] = [[]]
    dc: list[list[int]] = [[]]
    row = 0
    for i in range(1, p.n + 1):
        v = p(i)
        if v == i:
            uc += [[i], []]
            dc += [[], []]
            row += 2
        elif v > i:
            x = max(dc[row], default=0)
            if v > x:
                dc[row].append(v)
                uc[row].append(i)
            else:
                uc.append([i])
                dc.append([v])
                row += 1
                moved = []
                for r in range(row):
                    keep = [y for y in dc[r] if y > v]
                    moved += [y for y in dc[r] if y < v]
                    dc[r] = keep
                dc[row] = sorted(moved + dc[row])
        # v < i: already placed when its partner was read
    rows = [(u, w) for u, w in zip(uc, dc) if u or w]
    return ZetaRows(
        up=tuple(len(u) for u, _ in rows),
        down=tuple(len(w) for _, w in rows),
        up_rows=tuple(tuple(u) for u, _ in rows),
        down_rows=tuple(tuple(w) for _, w in rows),
    )


def zeta(p: Permutation) -> PartialDyckPath:
    rows = zeta_rows(p)
    return PartialDyckPath("".join(UP * u + DOWN * w for u, w in zip(rows.up, rows.down)))


def tunnel_matching(d: PartialDyckPath) -> dict[int, int]:
    """Map each matched up-step index to its down-step index (0-indexed).

    A down-step matches the latest unmatched up-step starting at the height it
    returns to; unmatched up-steps are the ones the path never comes back below.
    """
    stack: list[int] = []
    out = {}
    for j, s in enumerate(d.steps):
        if s == UP:
            stack.append(j)
        else:
            out[stack.pop()] = j
    return out


def zeta_inv(d: PartialDyckPath | str) -> Permutation:
    d = _as_path(d)
    s = d.steps
    n = d.n
    label = [0] * n
    nxt = 1
    for j, step in enumerate(s):
        if step == UP:
            label[j] = nxt
            nxt += 1
    for j in range(n - 1, -1, -1):
        if s[j] == DOWN:
            label[j] = nxt
            nxt += 1
    values = list(range(1, n + 1))
    for i, j in tunnel_matching(d).items():
        a, b = label[i], label[j]
        values[a - 1], values[b - 1] = b, a
    return Permutation(values)


# -- modified Dyck paths MDP(n; k) <-> D(n, k + 2) --------------------------

def mdp_to_partial(m: ModifiedDyckPath) -> PartialDyckPath:
    """Head, one extra up-step, then the tail without its final down-step."""
    return PartialDyckPath(m.head.steps + UP + m.tail.steps[:-1])


def partial_to_mdp(d: PartialDyckPath | str) -> ModifiedDyckPath:
    d = _as_path(d)
    k = d.k - 2
    if k < 0:
        raise DomainError(f"{d} ends at height {d.k}; need at least 2")
    s = d.steps + DOWN
    h = d.heights()
    # last double up-step whose second step ends on y = k + 2
    cut = None
    for j in range(1, len(d.steps)):
        if s[j - 1] == UP and s[j] == UP and h[j + 1] == k + 2:
            cut = j - 1
    assert cut is not None, f"no double up-step reaching height {k + 2} in {d}"
    return ModifiedDyckPath(PartialDyckPath(s[:cut]), PartialDyckPath(s[cut + 1:]))
