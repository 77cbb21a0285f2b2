"""Refined counts of pattern-restricted involutions, by fixed points.

Run with ``python3 demos/tables.py``.
"""
# %%
# Every involution is a product of disjoint transpositions and fixed points,
# so for a given n only k with n + k even can occur.
from refinv.enumerate import count_avoiding, involutions, telephone
from refinv.formulas import i_avoid, i_once, i_avoid_total

for n in range(7):
    print(n, telephone(n), sum(1 for _ in involutions(n)))

# %%
# The closed forms and a brute-force count side by side, for the involutions
# avoiding 231 (equivalently 312).
n = 8
print("k  formula  brute force")
for k in range(n % 2, n + 1, 2):
    print(f"{k}  {i_avoid(n, k, '231'):7d}  {count_avoiding(n, k, '231'):11d}")
print("total", i_avoid_total(n, "231"), "= 2^(n-1)")

# %%
# Avoiding 132, 213 or 321 gives the same triangle, a ballot-number table.
for n in range(9):
    row = [i_avoid(n, k, "321") for k in range(n + 1)]
    assert row == [i_avoid(n, k, "132") for k in range(n + 1)]
    print(" ".join(f"{v:3d}" for v in row))

# %%
# Containing 123 exactly once forces exactly three fixed points.
for n in range(3, 12, 2):
    print(n, [i_once(n, k, "123") for k in range(n + 1)])
