"""Tutte polynomials and G-invariants of freedom matroids over exact rationals.

The submodules build on each other in this order: ``seqlat`` (bit sequences
and the dominance lattice), ``bipoly`` (polynomials in x, y), ``matroid``
(rank oracles), ``ginv`` (G-invariants and their specialization),
``tutte`` (Tutte polynomials by several routes), ``linbases`` (exact linear
algebra and the irreducible bases), ``brylawski`` (linear relations on
coefficients).  ``corpus`` and ``verify`` support the test suites and the
command line.
"""

from .bipoly import CURVE, BiPoly, parse_poly
from .brylawski import CoeffGrid, J, centered_hook, hook, relation_nullspace_check, verify_sat
from .ginv import GInv, Side, g_invariant, g_matrix, sp, sp_symbol, straighten_symbol, sz
from .linbases import (
    BasisKind,
    NotInSpanError,
    RatMatrix,
    express_in_basis,
    gamma_matrix,
    girth_subspace,
    kernel_check,
    relation_generators,
    straighten_matroid,
    tutte_space_dim,
)
from .matroid import BasisListMatroid, FreedomMatroid, Matroid, uniform
from .seqlat import BitSeq, Interval2, dominates, enumerate_seqs, height2_intervals, join, meet
from .tutte import TuttePoly, tutte_freedom, tutte_meet_irr, tutte_oracle, tutte_uniform

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "CURVE",
    "parse_poly",
    "CoeffGrid",
    "J",
    "hook",
    "centered_hook",
    "verify_sat",
    "relation_nullspace_check",
    "GInv",
    "Side",
    "g_invariant",
    "g_matrix",
    "sp",
    "sp_symbol",
    "sz",
    "straighten_symbol",
    "BasisKind",
    "NotInSpanError",
    "RatMatrix",
    "express_in_basis",
    "gamma_matrix",
    "girth_subspace",
    "kernel_check",
    "relation_generators",
    "straighten_matroid",
    "tutte_space_dim",
    "Matroid",
    "FreedomMatroid",
    "BasisListMatroid",
    "uniform",
    "BitSeq",
    "Interval2",
    "dominates",
    "join",
    "meet",
    "enumerate_seqs",
    "height2_intervals",
    "TuttePoly",
    "tutte_freedom",
    "tutte_oracle",
    "tutte_uniform",
    "tutte_meet_irr",
]
