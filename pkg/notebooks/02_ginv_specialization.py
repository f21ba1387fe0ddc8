"""
The G-invariant and its Tutte specialization
============================================

G(M) counts the rank sequences of all n! orderings of the ground set.  A
linear map Sp sends each symbol [s] to a rational polynomial, and
Sp(G(M)) is the Tutte polynomial.
"""

from tuttespan.ginv import g_invariant, g_matrix, sp, sp_symbol, sz
from tuttespan.linbases import kernel_check
from tuttespan.matroid import FreedomMatroid
from tuttespan.seqlat import height2_intervals

# %%
M = FreedomMatroid("10110")
v = g_invariant(M)
print("G(F(10110)) =", v.to_text())
print("Sp(G)       =", sp(v))

# %%
# Single symbols specialize to non-integral polynomials.
print("Sp([10]) =", sp_symbol(2, 1, "10"))
print("Sp([01]) =", sp_symbol(2, 1, "01"))

# %%
# The matrix (g_t(F(s))) over S(4, 2) is triangular for dominance, so the
# freedom G-invariants form a basis of G(4, 2).
G, Ginv = g_matrix(4, 2)
print(G.to_csv())
print(Ginv.to_csv())

# %%
# Each height-2 interval of the dominance lattice gives a four-term
# combination sz(I) in the kernel of Sp, and these span the kernel.
for iv in height2_intervals(5, 3):
    print(sz(iv).to_text(), " ->  Sp =", sp(sz(iv)))
for n, r in [(5, 3), (6, 3), (7, 3)]:
    rep = kernel_check(n, r)
    print(f"({n},{r}) ker Sp dim {rep.kernel_dim}, sz span dim {rep.sz_span_dim}")
