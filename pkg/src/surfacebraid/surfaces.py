"""
Surface-level semantics of closed words: marker resolutions and what they
certify.

A closed word on m strands presents a knotted surface exactly when both of
its marker resolutions close up to trivial classical links.  The positive
resolution deletes every a-vertex and turns every b-vertex into a cup-cap;
the negative resolution does the opposite; crossings stay crossings in both.
That convention is calibrated by the worked invariants below (the standard
torus [a1 b1]_2 gets Euler characteristic 0, the unknotted projective plane
[c1 a1]_2 gets 1) and by [a1]_2 destabilizing to the sphere.

The Euler characteristic comes from Morse counting on the level decomposition
of the surface: minima are circles of the negative resolution's closure,
maxima circles of the positive one, and every marked vertex is one saddle:

    chi = components(L+) + components(L-) - number of a/b letters.
"""

from __future__ import annotations

import dataclasses
from enum import Enum

from .diagrams import PlanarDiagram, count_components, plat_closure, trace_closure
from .reidemeister import TrivialityVerdict, triviality_verdict
from .tangles import TangleKind, TangleLetter, TangleWord
from .words import (
    ClosedSurfaceWord,
    Generator,
    Kind,
    SurfaceBraidWord,
    build_half_twist,
    formal_inverse,
    mirror_word,
)


class ResolutionSign(Enum):
    PLUS = "+"
    MINUS = "-"


def resolve(w: SurfaceBraidWord, sign: ResolutionSign) -> TangleWord:
    """Smooth every marked vertex; crossings are kept with their signs."""
    letters: list[TangleLetter] = []
    for g in w.letters:
        if g.kind is Kind.C:
            letters.append(TangleLetter(TangleKind.SPOS, g.index))
        elif g.kind is Kind.CINV:
            letters.append(TangleLetter(TangleKind.SNEG, g.index))
        elif g.kind is Kind.A:
            if sign is ResolutionSign.MINUS:
                letters.append(TangleLetter(TangleKind.E, g.index))
        else:  # Kind.B
            if sign is ResolutionSign.PLUS:
                letters.append(TangleLetter(TangleKind.E, g.index))
    return TangleWord(w.strands, tuple(letters))


def csb_membership(
    w: ClosedSurfaceWord,
    max_expansions: int = 20000,
    max_crossings: int | None = None,
) -> tuple[TrivialityVerdict, TrivialityVerdict]:
    """Triviality verdicts for the closures of both resolutions.

    The word presents a surface exactly when both verdicts are trivial.
    """
    plus = triviality_verdict(
        resolve(w.word, ResolutionSign.PLUS),
        "trace",
        max_crossings=max_crossings,
        max_expansions=max_expansions,
    )
    minus = triviality_verdict(
        resolve(w.word, ResolutionSign.MINUS),
        "trace",
        max_crossings=max_crossings,
        max_expansions=max_expansions,
    )
    return plus, minus


def is_surface_word(w: ClosedSurfaceWord, max_expansions: int = 20000) -> bool:
    plus, minus = csb_membership(w, max_expansions)
    return plus.is_trivial and minus.is_trivial


def resolution_components(w: ClosedSurfaceWord) -> tuple[int, int]:
    plus = count_components(trace_closure(resolve(w.word, ResolutionSign.PLUS)))
    minus = count_components(trace_closure(resolve(w.word, ResolutionSign.MINUS)))
    return plus, minus


def euler_characteristic(w: ClosedSurfaceWord) -> int:
    plus, minus = resolution_components(w)
    return plus + minus - w.word.saddle_count()


@dataclasses.dataclass(frozen=True)
class SurfaceInvariants:
    components_plus: int
    components_minus: int
    saddle_count: int
    euler_characteristic: int
    csb: tuple[TrivialityVerdict, TrivialityVerdict] | None = None

    def as_record(self) -> dict:
        rec = {
            "components_plus": self.components_plus,
            "components_minus": self.components_minus,
            "saddle_count": self.saddle_count,
            "euler_characteristic": self.euler_characteristic,
        }
        if self.csb is not None:
            rec["csb"] = [v.status for v in self.csb]
        return rec


def surface_invariants(
    w: ClosedSurfaceWord, check_membership: bool = False, max_expansions: int = 20000
) -> SurfaceInvariants:
    plus, minus = resolution_components(w)
    saddles = w.word.saddle_count()
    csb = csb_membership(w, max_expansions) if check_membership else None
    return SurfaceInvariants(plus, minus, saddles, plus + minus - saddles, csb)


def twist_spin(k_tangle: SurfaceBraidWord, twists: int) -> ClosedSurfaceWord:
    """Closed word of the n-twist spin of the plat closure of a braid.

    `k_tangle` must be a crossing-only word on an odd strand count 2m+1.  The
    result is (prod_{i<=m} a_{2i}) K (prod b_{2i}) K^-1 Delta^{2n} closed on
    2m+1 strands, with the half twist spanning all strands and negative twist
    counts using its formal inverse.
    """
    strands = k_tangle.strands
    if strands % 2 == 0:
        raise ValueError(f"twist spinning needs an odd strand count, got {strands}")
    if not k_tangle.is_crossing_only():
        raise ValueError("the spun tangle must contain only crossings")
    m = (strands - 1) // 2
    a_block = SurfaceBraidWord(strands, tuple(Generator(Kind.A, 2 * i) for i in range(1, m + 1)))
    b_block = SurfaceBraidWord(strands, tuple(Generator(Kind.B, 2 * i) for i in range(1, m + 1)))
    delta = build_half_twist(strands, 1, strands)
    word = a_block * k_tangle * b_block * formal_inverse(k_tangle) * (delta ** (2 * twists))
    return ClosedSurfaceWord(word)


def mirror_closure(w: ClosedSurfaceWord) -> ClosedSurfaceWord:
    """Mirror image of the closed word: reversed letters, inverted crossings."""
    return ClosedSurfaceWord(mirror_word(w.word))


def dnk_word(n: int, k: int) -> TangleWord:
    """The two-component family: sigma_1^k Delta^{2n} sigma_1^-k on 3 strands.

    Its modified plat closure has 6n + 2k crossings and 2 components.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and >= 3, got {k}")
    word = (
        SurfaceBraidWord(3, (Generator(Kind.C, 1),) * k)
        * build_half_twist(3, 1, 3) ** (2 * n)
        * SurfaceBraidWord(3, (Generator(Kind.CINV, 1),) * k)
    )
    return resolve(word, ResolutionSign.PLUS)


def dnk_diagram(n: int, k: int) -> PlanarDiagram:
    return plat_closure(dnk_word(n, k))


def index_upper_bound(
    w: ClosedSurfaceWord,
    max_word_length: int | None = None,
    max_expansions: int = 5000,
) -> int:
    """Smallest closure strand count reached by bounded destabilization search.

    An upper bound on the singular braid index; never claimed minimal.
    """
    from .search import destabilization_search

    return destabilization_search(w, max_word_length, max_expansions)
