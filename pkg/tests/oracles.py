"""Slow, obviously-correct re-implementations used only to check the library."""
from itertools import permutations, product


def occurrences_by_triples(values, pattern):
    """Count length-3 occurrences with explicit index loops and pairwise comparisons."""
    n = len(values)
    a, b, c = pattern
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                x, y, z = values[i], values[j], values[k]
                if (x < y) == (a < b) and (x < z) == (a < c) and (y < z) == (b < c):
                    count += 1
    return count


def all_involutions(n):
    """Filter all of S_n; only usable for small n."""
    return [p for p in permutations(range(1, n + 1)) if all(p[p[i] - 1] == i + 1 for i in range(n))]


def all_paths(n, k):
    """Every U/D word of length n that stays weakly above 0 and ends at k."""
    out = []
    for word in product("UD", repeat=n):
        h = 0
        ok = True
        for s in word:
            h += 1 if s == "U" else -1
            if h < 0:
                ok = False
                break
        if ok and h == k:
            out.append("".join(word))
    return out


def syt_count_by_fillings(shape):
    """Count standard fillings of ``shape`` by trying every arrangement of 1..n."""
    n = sum(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    total = 0
    for perm in permutations(range(1, n + 1)):
        fill = dict(zip(cells, perm))
        if all(
            (c == 0 or fill[(r, c - 1)] < v) and (r == 0 or fill[(r - 1, c)] < v)
            for (r, c), v in fill.items()
        ):
            total += 1
    return total


def telephone_by_recurrence(n):
    t = [1, 1]
    for m in range(2, n + 1):
        t.append(t[-1] + (m - 1) * t[-2])
    return t[n]
