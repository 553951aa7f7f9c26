"""
The sl4 Kostka matrix
=====================

Generalized Kostka polynomials for sequences of rectangles, collected into
a unitriangular matrix and inverted exactly.
"""

# %%
# Rows and columns share one index set: partitions with at most three parts,
# width at most 4, size at most 12, size divisible by 4.  Labels are printed
# as weights, so ``[1,2,1]`` is the partition ``(4,3,1)``.

from fermionic import build_kostka_matrix, invert_unitriangular, kostka_poly
from fermionic.weights import RankedWeight, RectangularSequence, nu_concat

K = build_kostka_matrix(3, 4, 12, 0)
print(K.render())

# %%
# Each entry is a single polynomial.  The column labelled ``[1,2,1]`` is the
# tensor product of one box, a 2x2 square and a column of three boxes.

n = RectangularSequence((1, 2, 1))
print(nu_concat(n))
print(kostka_poly(3, RankedWeight((0, 2, 0)), n))

# %%
# Back-substitution stays inside the polynomial ring because the diagonal is 1.

Kinv = invert_unitriangular(K)
print(Kinv.render())

# %%
# Multiplying back gives the identity exactly.

prod = K @ Kinv
print(all(prod[i][j] == (1 if i == j else 0) for i in range(len(K)) for j in range(len(K))))
