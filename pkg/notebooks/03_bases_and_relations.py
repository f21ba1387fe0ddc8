"""
Bases of T(n, r), linear relations, and Brylawski's identities
==============================================================

The Tutte polynomials of (n, r) freedom matroids span a space of dimension
r(n - r) + 1.  Join- and meet-irreducible sequences index two bases; the
remaining polynomials satisfy explicit linear relations.
"""

from tuttespan.brylawski import CoeffGrid, girth_relation_check, verify_sat
from tuttespan.linbases import (
    BasisKind,
    express_in_basis,
    gamma_matrix,
    girth_subspace,
    relation_generators,
    tutte_space_dim,
)
from tuttespan.tutte import tutte_freedom

# %%
# Coefficient matrix of the join-irreducible basis, block triangular.
print(gamma_matrix(5, 3).to_csv())
print("dim T(5,3) =", tutte_space_dim(5, 3))

# %%
# Expressing a non-irreducible polynomial in the meet basis.
coords = express_in_basis(tutte_freedom("10101"), BasisKind.MEET, 5, 3)
print({str(s): str(c) for s, c in coords.items()})

# %%
# One relation per diamond of the dominance lattice.
for rel in relation_generators(5, 3):
    print(rel.to_text(), " holds:", rel.holds())

# %%
# Brylawski's relations J_m vanish on every Tutte coefficient grid.
grid = CoeffGrid.from_poly(tutte_freedom("10110"), 5, 3)
print(verify_sat(grid).to_json())

# %%
# Restricting to matroids of girth at least k cuts the dimension to
# (n - r)(r - k + 1) + 1.
for k in range(1, 4):
    seqs, dim = girth_subspace(6, 3, k)
    print(f"k={k}: dim {dim}, basis {[str(s) for s in seqs]}", girth_relation_check(6, 3, k).ok)
