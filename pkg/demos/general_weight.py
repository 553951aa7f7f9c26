"""
A weight that is not a rectangle
================================

The integrable character of highest weight ``(1,2,1)`` at level 4 is an
alternating combination of fusion characters.  The coefficients live in
``Z[1/q]`` yet the total has no negative powers.
"""

# %%
# The coefficients come from one column of the inverse Kostka matrix with
# q replaced by 1/q.

from fermionic import char_fusion_V, char_V_general, inverse_kostka_column
from fermionic.weights import RankedWeight, partition_to_weight

lam = RankedWeight((1, 2, 1))
for nu, c in inverse_kostka_column(3, lam).items():
    if c:
        print(partition_to_weight(3, nu), c)

# %%
# A single fusion character is a Laurent series.

print(char_fusion_V(3, 4, (1, 2, 1), 1).min_exponent())

# %%
# After assembly every coefficient is a nonnegative integer and the lowest
# power is q^0.  Two degrees keep the run short.

ch = char_V_general(3, 4, lam, 2)
print(ch.min_exponent(), ch.is_nonnegative(), ch.weyl_violations() == [])
print(ch.series(lam))
