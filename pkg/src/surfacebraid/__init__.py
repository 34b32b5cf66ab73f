"""Symbolic workbench for surface singular braid words.

Submodules:

    words         generator/word values, the word grammar, half twists
    laurent       integer Laurent polynomials in A
    matchings     crossingless planar matchings (Temperley-Lieb diagrams)
    tangles       resolved tangle words over sigma / sigma^-1 / e
    diagrams      planar diagrams (PD codes), closures, components
    bracket       Kauffman bracket: transfer evaluation and state-sum oracle
    reidemeister  face-level Reidemeister moves, simplifier, triviality
    rewrite       relation catalog, rule application, certificates
    search        certified equivalence search, replay, 2-strand normal form
    surfaces      marker resolutions, Euler characteristic, twist spins
    classify      2-strand classification report
    cli           command-line interface
"""

from .words import (
    ClosedSurfaceWord,
    Generator,
    Kind,
    SurfaceBraidWord,
    WordSyntaxError,
    build_half_twist,
    crossing_permutation,
    formal_inverse,
    format_closed_word,
    format_word,
    mirror_word,
    parse_closed_word,
    parse_word,
)
from .laurent import LaurentPolynomial

__all__ = [
    "ClosedSurfaceWord",
    "Generator",
    "Kind",
    "LaurentPolynomial",
    "SurfaceBraidWord",
    "WordSyntaxError",
    "build_half_twist",
    "crossing_permutation",
    "formal_inverse",
    "format_closed_word",
    "format_word",
    "mirror_word",
    "parse_closed_word",
    "parse_word",
]
