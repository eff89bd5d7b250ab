"""Lex ideals, generic initial ideals and local cohomology tables of graded quotients."""
from .cohomology import (
    BWPolynomial,
    CohomologyTable,
    bw_polynomial,
    cohomology_ext,
    cohomology_layers,
    cohomology_table,
    is_i_scm,
    is_scm,
)
from .corpus import CorpusSpec, generate_corpus
from .groebner import GinCertificationError, PolyIdeal, gin, saturate
from .hilbert import HilbertSeries, hilbert_numerator, lex_ideal
from .io import IdealFile, parse_ideal_file, parse_ideal_files
from .monomial_ideal import MonomialIdeal, is_weakly_stable, saturate_m
from .ring import GF32003, QQ, Field, Polynomial, RingContext, RingError, TermOrder
from .rigidity import (
    Invariants,
    bw_maximality_check,
    corollary_4_3_check,
    corollary_4_5_check,
    theorem_1_4_check,
    theorem_4_4_check,
)

__version__ = "0.1.0"

__all__ = [
    "BWPolynomial", "CohomologyTable", "CorpusSpec", "Field", "GF32003", "GinCertificationError",
    "HilbertSeries", "IdealFile", "Invariants", "MonomialIdeal", "PolyIdeal", "Polynomial", "QQ",
    "RingContext", "RingError", "TermOrder", "bw_maximality_check", "bw_polynomial", "cohomology_ext",
    "cohomology_layers", "cohomology_table", "corollary_4_3_check", "corollary_4_5_check",
    "generate_corpus", "gin", "hilbert_numerator", "is_i_scm", "is_scm", "is_weakly_stable",
    "lex_ideal", "parse_ideal_file", "parse_ideal_files", "saturate", "saturate_m",
    "theorem_1_4_check", "theorem_4_4_check",
]
