"""Recurrences, convolution identities and generating functions, checked exactly.

Run with ``python3 demos/identities.py``.
"""
# %%
from refinv.formulas import identity_checks, series_A, series_B, series_checks, i_once

# %%
for check in identity_checks(16):
    print(check)

# %%
# The generating function of involutions containing 231 once, with k fixed points.
order = 14
for k in range(1, 5):
    A = series_A(k, order)
    print(k, [int(A[n]) for n in range(order + 1)])
    assert all(A[n] == i_once(n, k, "231") for n in range(order + 1))

# %%
print(series_B(2, 10))
for check in series_checks(16, 8):
    print(check)
