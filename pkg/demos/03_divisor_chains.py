"""
Factoring ideals one prime at a time
====================================

Each step writes I_k = I_{k+1} * P: an ascending chain that is also a divisor chain.
"""

# %%
from cdring import make_ring, principal, factor_ideal, check_dicc_chain, unit_ideal, from_generators
from cdring.errors import NotDivisible

G = make_ring(-1)
factors, chain = factor_ideal(principal(G, (60, 0)))
print("(60) =", " * ".join(map(str, factors)))
for k, I in enumerate(chain.ideals):
    print(f"  I{k} = {I}  norm {I.norm}")

# %%
# Padding with the unit ideal makes the finite chain visibly stationary.
U = unit_ideal(G)
print(check_dicc_chain(chain.ideals + [U, U]))

# %%
# In a non-maximal order the procedure stops at the first failed division.
E = make_ring(-3, 2)
try:
    factor_ideal(principal(E, (2, 0)))
except NotDivisible as e:
    print(e)
