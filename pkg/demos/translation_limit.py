"""
From principal subspaces to integrable modules
==============================================

Translating a principal subspace by N in every direction gives a growing
chain of subspaces.  Their characters converge to the integrable one.
"""

# %%
# Watch the multiplicities at weight 0 of the level-2 sl3 module grow with N.

from fermionic import char_V_rect, char_W_rect_translated
from fermionic.weights import RankedWeight

D = 4
zero = RankedWeight((0, 0))
for N in range(D + 2):
    ch = char_W_rect_translated(2, 2, 0, 1, N, D)
    print(N, [ch.multiplicity(zero, d) for d in range(D + 1)])

# %%
# The limit, computed directly.

V = char_V_rect(2, 2, 0, 1, D)
print("V ", [V.multiplicity(zero, d) for d in range(D + 1)])
