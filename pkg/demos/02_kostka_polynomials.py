"""Partition polynomials and orthosymplectic Kostka polynomials.

L_alpha(q) counts multiset decompositions of a lattice vector into
positive odd roots, graded by the number of parts.  K is the Weyl-group
alternating sum of L over shifted arguments; on the dominance cone it is
nonzero with nonnegative coefficients and zero constant term off the
diagonal.
"""

from ospkostka import (
    biweight,
    dominance_ge,
    dominant_weights,
    kostka,
    l_poly,
    osp_root_data,
)

data = osp_root_data(4)

# ------------------------------------------------------- L by hand at N=4
print("N=4 partition polynomials:")
for alpha in (
    biweight((0, 0), (0,)),
    biweight((1, 0), (1,)),
    biweight((1, 1), (0,)),
    biweight((2, 0), (0,)),
    biweight((0, 0), (2,)),
):
    print(f"  L[{alpha}] = {l_poly(data, alpha)}")

# ----------------------------------------------------- a small K table
mu = ((0, 0), (0,))
print("\nN=4 Kostka polynomials against mu = 0 (dominant lambda, entries <= 2):")
for lam0 in dominant_weights(data.type0, 2):
    for lam1 in dominant_weights(data.type1, 2):
        lam = (lam0, lam1)
        if not dominance_ge(data, lam, mu):
            continue
        poly = kostka(data, lam, mu)
        print(f"  K[{lam0};{lam1}] = {poly}")

# --------------------------------------------- the N=3 closed form
# For N=3 the two odd roots are eps+delta and delta-eps, so a difference
# (a; b) has exactly one decomposition (of size b) when b >= |a| with the
# same parity, and none otherwise.  The Weyl correction term never fires
# on dominant data, giving K = q^(lam1-mu1) or 0.
d3 = osp_root_data(3)
print("\nN=3 closed form check:")
for lam in (((2,), (2,)), ((0,), (2,)), ((1,), (3,)), ((1,), (0,))):
    print(f"  K[{lam} vs 0] = {kostka(d3, lam, ((0,), (0,)))}")
