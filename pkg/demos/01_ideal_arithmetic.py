"""
Ideal arithmetic in a quadratic order
=====================================

Ideals of Z[sqrt(-5)] in canonical HNF: products, containment, colon ideals.
"""

# %%
# The ring Z + Z*w with w = sqrt(-5). Ideals are lattices Z*a + Z*(b + c*w).
from cdring import make_ring, from_generators, principal, mul, contains, colon, divide_exact

R = make_ring(-5)
print(R, "T =", R.T, "Nc =", R.Nc, "disc =", R.disc)

# %%
# (2, 1+w) is the prime above 2. It is not principal, but its square is (2).
P2 = from_generators(R, [(2, 0), (1, 1)])
print("P2 =", P2, "norm", P2.norm)
print("P2^2 =", mul(P2, P2), "==", principal(R, (2, 0)))

# %%
# Containment and exact division go together in a maximal order.
two = principal(R, (2, 0))
print("(2) inside P2:", contains(P2, two))
print("(2) : P2 =", colon(two, P2))
print("(2) / P2 =", divide_exact(two, P2))

# %%
# (6) has two different factorizations into irreducible elements,
# 6 = 2*3 = (1+w)(1-w), but one factorization into prime ideals.
P3, Q3 = from_generators(R, [(3, 0), (1, 1)]), from_generators(R, [(3, 0), (2, 1)])
print(mul(mul(P2, P2), mul(P3, Q3)) == principal(R, (6, 0)))
print(mul(P2, P3) == principal(R, (1, 1)), mul(P2, Q3) == principal(R, (1, -1)))
