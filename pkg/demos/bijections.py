"""Restricted involutions as lattice paths.

Run with ``python3 demos/bijections.py``.
"""
# %%
from refinv.bijections import delta, delta_inv, zeta, zeta_inv, zeta_rows, mdp_to_partial, partial_to_mdp
from refinv.dyck import ModifiedDyckPath, render
from refinv.perm_core import Permutation

# %%
# A 321-avoiding involution: step i goes up when p(i) >= i.
p = Permutation.parse("3 4 1 2 5 7 6 8")
d = delta(p)
print(p.cycle_notation(), "->", d)
print(render(d))
print("back:", delta_inv(d))

# %%
# A 213-avoiding involution goes through the up/down column construction.
q = Permutation.parse("6 8 9 7 5 1 4 2 3")
rows = zeta_rows(q)
print("up columns", rows.up_rows)
print("down columns", rows.down_rows)
print(zeta(q), "->", zeta_inv(zeta(q)).cycle_notation())

# %%
# A modified Dyck path drops to the ground and finishes with a Dyck path.
# Adding one up-step at the drop lands in D(n, k + 2).
m = ModifiedDyckPath.parse("UUDU|UUDDUD")
print(render(m))
e = mdp_to_partial(m)
print(render(e))
print(partial_to_mdp(e) == m)
