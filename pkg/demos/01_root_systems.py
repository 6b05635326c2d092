"""Tour of the root data underlying everything else.

Two classical factors appear throughout: a type D factor acting on the
eps coordinates (the special orthogonal side) and a type C factor acting
on the delta coordinates (the symplectic side).  On top of them sits the
odd root system of the distinguished mixed Borel, indexed only by N.
"""

from ospkostka import (
    GroupType,
    act,
    odd_positive_roots,
    osp_root_data,
    positive_roots,
    rho,
    shuffle,
    sign,
    simple_odd_roots,
    simple_root_coordinates,
    weyl_elements,
)

# ------------------------------------------------------------------ D and C
for gtype in (GroupType("D", 2), GroupType("C", 2)):
    print(f"type {gtype}: positive roots {positive_roots(gtype)}")
    print(f"  rho = {rho(gtype)}")
    elements = list(weyl_elements(gtype))
    print(f"  |W| = {len(elements)}, signs {sorted(set(sign(w) for w in elements))}")

# the degenerate rank-1 torus: no roots, trivial Weyl group
D1 = GroupType("D", 1)
print(f"\ntype {D1}: roots {positive_roots(D1)}, rho = {rho(D1)}")

# a Weyl element acts by signed permutation of coordinates
w = next(iter(weyl_elements(GroupType("C", 2))))
print(f"\nidentity acts trivially: {act(w, (3, 1))}")

# ------------------------------------------------------------- odd roots
print()
for N in (3, 4, 5, 6):
    data = osp_root_data(N)
    roots = odd_positive_roots(data)
    print(f"N={N} ({data.parity}): shuffle {shuffle(data)}, {len(roots)} odd roots")
    print("  roots:", ", ".join(str(b) for b in roots))
    print("  simple:", ", ".join(str(b) for b in simple_odd_roots(data)))

# every odd root expands nonnegatively over the simple ones; the expansion
# can be tall: for N=5 the root eps1+delta1 needs five simple roots
data = osp_root_data(5)
root = odd_positive_roots(data)[0]
print(f"\nN=5: {root} has simple coordinates {simple_root_coordinates(data, root)}")

# the sum of all odd positive roots is 2*rho0 + 2*rho1, which is the
# canonical-class cancellation that makes the whole story work
total = data.zero()
for beta in odd_positive_roots(data):
    total = total + beta
print(f"sum of odd roots = {total}  (2*rho0, 2*rho1) = "
      f"{tuple(2 * x for x in data.rho0)}, {tuple(2 * x for x in data.rho1)}")
