"""
Where containment-division fails
================================

Maximal orders pass the bounded check; orders with conductor f > 1 do not.
"""

# %%
from cdring import make_ring, check_cdr, classify_ring, from_generators, principal, colon, mul

for d in (-1, -5, -7, 2, 13):
    r = check_cdr(make_ring(d), 30)
    print(f"d={d:>3}, f=1: {r.universe_size:>3} ideals -> {r.verdict}")

# %%
# In Z[2*omega] (d=-3, f=2) the ideal P = (2, w) contains (2), yet no ideal H
# gives (2) = H*P: the largest candidate (2) : P is P itself, and P*P = 2P.
E = make_ring(-3, 2)
P, two = from_generators(E, [(2, 0), (0, 1)]), principal(E, (2, 0))
H = colon(two, P)
print("colon:", H, " H*P =", mul(H, P), " target (2) =", two)

r = check_cdr(E, 50)
print(r.verdict, "first violation:", *map(str, r.violations[0]))

# %%
# classify_ring compares the verdict with "f == 1" (maximal, hence Dedekind).
for d, f in [(-5, 1), (-3, 2), (-1, 2), (5, 2)]:
    cl = classify_ring(make_ring(d, f))
    print(f"d={d}, f={f}: dedekind={cl.dedekind} verdict={cl.cdr_verdict} consistent={cl.consistent}")
