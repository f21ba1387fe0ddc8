"""
Tutte polynomials of freedom matroids
=====================================

A freedom matroid F(s) is built from a 0/1 sequence s: a 1 adds a new
independent element, a 0 adds an element placed freely in the current span.
Its Tutte polynomial can be read off the descent tree of s.
"""

from tuttespan.matroid import FreedomMatroid, bases
from tuttespan.seqlat import descent_leaves, enumerate_seqs
from tuttespan.tutte import freedom_routes, tutte_oracle

# %%
# Resolving a descent "10" into its two children until no descents remain
# leaves sequences 0^a 1^b; each contributes x^b y^a.
s = "01010"
for leaf, mult in sorted(descent_leaves(s).items(), key=lambda kv: str(kv[0])):
    print(f"leaf {leaf}  ->  x^{leaf.r} y^{leaf.n - leaf.r}  (x{mult})")

# %%
# Every applicable route gives the same polynomial.  The brute-force subset
# sum is the independent check.
for name, poly in freedom_routes("11010").items():
    print(f"{name:18s} {poly}")
print(f"{'oracle':18s} {tutte_oracle(FreedomMatroid('11010'))}")

# %%
# The ten rank-3 freedom matroids on five elements.
for t in enumerate_seqs(5, 3):
    M = FreedomMatroid(t)
    print(t, len(bases(M)), "bases ", freedom_routes(t)["descent-tree"])
