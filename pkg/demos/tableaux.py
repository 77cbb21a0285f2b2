"""Row insertion for involutions and the two-column tableau move.

Run with ``python3 demos/tableaux.py``.
"""
# %%
from refinv.enumerate import involutions
from refinv.perm_core import occurrences
from refinv.syt import gamma, gamma_move, odd_columns, tableau_of, StandardYoungTableau

# %%
# For an involution the insertion and recording tableaux agree, and the number
# of odd-length columns equals the number of fixed points.
p = next(iter(involutions(6, 2)))
t = tableau_of(p)
print(p, "\n" + str(t))
print("odd columns:", odd_columns(t))

# %%
# Avoiding 123 means at most two columns. Moving n to the bottom of the
# other column changes the fixed-point count between 0 and 2.
t = StandardYoungTableau.from_columns([(1, 2, 5, 6), (3, 4)])
print(t.column_str())
print()
print(gamma_move(t).column_str())

# %%
for p in involutions(6, 0):
    if occurrences(p, "123") == 0:
        print(p, "->", gamma(p))
