"""
Characters at low level
=======================

Fermionic sums for rectangular highest weights compared with the Weyl-Kac
formula, and the string functions hiding inside them.
"""

# %%
# The level-1 vacuum module of affine sl2.  Each weight carries a q-series;
# weight 0 carries the partition generating function.

from fermionic import char_V_rect, string_functions, weyl_kac_char
from fermionic.weights import RankedWeight

D = 6
ch = char_V_rect(1, 1, 0, 1, D)
print(ch.render())

# %%
# The Weyl-Kac side is computed from an alternating sum over the affine Weyl
# group divided by the denominator.  The two agree term by term.

wk = weyl_kac_char(1, 1, RankedWeight((0,)), D)
print(ch.differences(wk, D) == [])

# %%
# At level 2 the q-power in front of a string function is fractional, so
# each one is reported as an offset plus an integral series.

for w, s in sorted(string_functions(char_V_rect(1, 2, 0, 1, D)).items()):
    print(w, s)

# %%
# An sl3 example: the top layer reproduces the finite-dimensional module.

ch = char_V_rect(2, 2, 2, 1, 3)
print(sum(ch.layer(0).values()))
