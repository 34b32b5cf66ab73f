"""
Kauffman bracket of closed tangle words, normalized to 1 on the unknot.

Two independent evaluators:

  * `kauffman_bracket` runs a transfer over the word in the planar-matching
    basis (dimension Catalan(strands)).  A crossing contributes
    A * identity + A^-1 * e (inverse crossings swap the weights), an e letter
    composes directly, and every circle closed along the way multiplies by
    the loop value -A^2 - A^-2.
  * `bracket_bruteforce` expands all 2^c smoothings of the finished planar
    diagram and counts circles by union-find; it never touches the matching
    basis and serves as the oracle for the transfer path.
"""

from __future__ import annotations

from .diagrams import PlanarDiagram, close_tangle
from .laurent import LOOP, ONE, LaurentPolynomial
from .matchings import (
    Matching,
    compose_matchings,
    e_matching,
    identity_matching,
    plat_closure_loops,
    trace_closure_loops,
)
from .tangles import TangleKind, TangleWord

_A = LaurentPolynomial({1: 1})
_AINV = LaurentPolynomial({-1: 1})


def _loop_power(k: int) -> LaurentPolynomial:
    return LOOP**k


def kauffman_bracket(t: TangleWord, closure: str = "trace") -> LaurentPolynomial:
    """Bracket of the closed diagram of `t` under the given closure."""
    n = t.strands
    state: dict[Matching, LaurentPolynomial] = {identity_matching(n): ONE}
    for letter in t.letters:
        em = e_matching(letter.index, n)
        new: dict[Matching, LaurentPolynomial] = {}

        def add(m: Matching, coeff: LaurentPolynomial) -> None:
            if coeff:
                prev = new.get(m)
                total = coeff if prev is None else prev + coeff
                if total:
                    new[m] = total
                elif prev is not None:
                    del new[m]

        if letter.kind is TangleKind.E:
            for m, coeff in state.items():
                composed, loops = compose_matchings(m, em)
                add(composed, coeff * _loop_power(loops))
        else:
            straight, tl = (_A, _AINV) if letter.kind is TangleKind.SPOS else (_AINV, _A)
            for m, coeff in state.items():
                add(m, coeff * straight)
                composed, loops = compose_matchings(m, em)
                add(composed, coeff * tl * _loop_power(loops))
        state = new

    count_loops = trace_closure_loops if closure == "trace" else plat_closure_loops
    if closure not in ("trace", "plat"):
        raise ValueError(f"unknown closure {closure!r}")
    total = LaurentPolynomial()
    for m, coeff in state.items():
        total = total + coeff * _loop_power(count_loops(m) - 1)
    return total


def bracket_of_diagram(d: PlanarDiagram, max_crossings: int = 20) -> LaurentPolynomial:
    """Full state-sum bracket of a planar diagram (2^c states)."""
    c = d.crossing_count
    if c > max_crossings:
        raise ValueError(f"{c} crossings exceeds the state-sum budget {max_crossings}")
    arcs = d.arcs()
    arc_pos = {arc: i for i, arc in enumerate(arcs)}
    total = LaurentPolynomial()
    for mask in range(1 << c):
        parent = list(range(len(arcs)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = d.free_loops
        for ci, (a, b, cc, dd) in enumerate(d.crossings):
            if (mask >> ci) & 1:  # B-smoothing: a-d, b-c
                pairs = ((a, dd), (b, cc))
            else:  # A-smoothing: a-b, c-d
                pairs = ((a, b), (cc, dd))
            for x, y in pairs:
                rx, ry = find(arc_pos[x]), find(arc_pos[y])
                if rx == ry:
                    loops += 1
                else:
                    parent[rx] = ry
        a_count = c - bin(mask).count("1")
        exp = a_count - (c - a_count)
        total = total + LaurentPolynomial({exp: 1}) * _loop_power(loops - 1)
    return total


def bracket_bruteforce(
    t: TangleWord, closure: str = "trace", max_crossings: int = 20
) -> LaurentPolynomial:
    """State-sum oracle; identical value to `kauffman_bracket`."""
    return bracket_of_diagram(close_tangle(t, closure), max_crossings)
