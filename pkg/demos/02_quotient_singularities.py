"""
Cyclic quotient singularities X(n, q)
=====================================

HJ data, embedding dimension and the invariant monomials x^i y^j.
"""

from cqs_milnor import QuotientSingularity, embedding_dimension, hilbert_basis_oracle, hj_data, invariant_exponents

X = QuotientSingularity(7, 3)
print(X, "a =", hj_data(X), "e =", embedding_dimension(X))

# recursion vs brute-force semigroup generators
table = invariant_exponents(X)
print(table)
print(table == hilbert_basis_oracle(X))

# the cone over the rational normal curve of degree 4
print(invariant_exponents((4, 1)))
