"""Walk through the change-of-basis matrix pair for two frames.

Given frames e and f with every f_j in the span of e, there is an
invertible matrix A with f_j = sum_i A[i][j] e_i, and its inverse
expresses e back in terms of f.  Both products are checked against the
identity with exact arithmetic.
"""

from exactspan import GF, QQ, Frame, change_of_basis, mat_product, sequence

# Over the rationals: a skewed basis of the plane.
e = Frame(sequence(QQ, [[1, 0], [0, 1]]))
f = Frame(sequence(QQ, [[2, 1], [1, 1]]))

a, a_inv = change_of_basis(e, f)
print("A =")
print(a)
print("A_inv =")
print(a_inv)
print("A * A_inv is identity:", mat_product(a, a_inv).is_identity())
print()

# Over GF(5): frames need not live in the full space, only share a span.
g5 = GF(5)
e5 = Frame(sequence(g5, [[1, 2, 0], [0, 1, 1]]))
f5 = Frame(sequence(g5, [[1, 3, 1], [2, 4, 0]]))  # combinations of e5
a5, a5_inv = change_of_basis(e5, f5)
print("GF(5) example, A =")
print(a5)
print("A_inv =")
print(a5_inv)
print("products are identities:",
      mat_product(a5, a5_inv).is_identity() and mat_product(a5_inv, a5).is_identity())
