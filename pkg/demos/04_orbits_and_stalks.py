"""Orbit combinatorics: closure order, dimensions, IC stalks, lattice
representatives and stabilizer data.

Orbits are labeled by pairs of dominant coweights (lam_s for the smaller
orthogonal group, lam_b for the bigger one).  The closure order is the
dominance order of the odd root system after the parity-dependent
repackaging, stalk tables come from Kostka polynomials shifted by orbit
dimension, and each orbit has an explicit lattice representative whose
stabilizer reductive quotient is read off a shuffled signature sequence.
"""

from ospkostka import (
    OrbitLabel,
    closure_le,
    embed_signatures,
    lattice_representative,
    orbit_dim,
    orbit_labels_in_box,
    osp_root_data,
    shuffled_alpha_beta,
    stalk_poincare,
)

data = osp_root_data(3)

# ------------------------------------------------ the poset on a box
labels = orbit_labels_in_box(data, 2)
print(f"N=3 orbits with entries <= 2: {len(labels)}")
for label in labels:
    ups = [str(o) for o in labels if o != label and closure_le(data, label, o)]
    print(f"  {label} (dim {orbit_dim(data, label)})"
          + (f" < {', '.join(ups)}" if ups else ""))

# ------------------------------------------------ stalk tables
print("\nIC stalk Poincare tables (lambda-orbit sheaf at mu-orbit):")
for lam, mu in (
    (OrbitLabel((1,), (1,)), OrbitLabel((0,), (0,))),
    (OrbitLabel((2,), (2,)), OrbitLabel((0,), (0,))),
    (OrbitLabel((2,), (2,)), OrbitLabel((1,), (1,))),
):
    table = stalk_poincare(data, lam, mu)
    cells = ", ".join(f"dim H^{deg} = {m}" for deg, m in table)
    print(f"  IC[{lam}] at {mu}: {cells}")

# ------------------------------------------------ representatives
print("\nlattice representatives and stabilizers:")
for label in (OrbitLabel((0,), (0,)), OrbitLabel((1,), (1,)), OrbitLabel((-1,), (2,))):
    mu_seq, nu_seq = embed_signatures(data, label)
    model = lattice_representative(mu_seq, nu_seq)
    stab = shuffled_alpha_beta(data, mu_seq, nu_seq)
    print(f"  orbit {label}: mu {mu_seq.entries}, nu {nu_seq.entries}")
    for row in model.rows:
        print(f"    {row}")
    print(f"    beta {stab.beta}, reductive quotient of stabilizer: {stab.reductive}")
