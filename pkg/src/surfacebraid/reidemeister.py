"""
Reidemeister moves on planar diagrams, a bounded simplifier, and triviality.

Moves are detected on faces of the diagram's combinatorial map (darts are
(crossing, slot) pairs; a face is an orbit of rotate-after-crossing-the-arc):

    R1  a monogon: an arc occupying two adjacent slots of one crossing
    R2  a bigon between two crossings whose two sides are one strand passing
        over at both ends and one passing under at both ends
    R3  a trigon between three crossings with one side passing over at both
        of its ends (equivalently, one of the three strands crosses over the
        two others); the move flips the triangle to the other side

Crossing-increasing moves (kink insertion, pushing one arc over another
across a shared face) are available to the search under a crossing cap.
Every produced diagram is checked to stay a sphere-embeddable map.

The simplifier is a deterministic best-first search over diagrams keyed by a
label-independent canonical form, reducing moves first; reaching a diagram
with no crossings proves the link trivial.  `triviality_verdict` combines a
necessary invariant test (writhe-normalized bracket against the unlink value)
with that constructive search; the bracket test alone never certifies
triviality.
"""

from __future__ import annotations

import dataclasses
import heapq
from collections import deque
from typing import Iterable, Sequence

from .bracket import kauffman_bracket
from .diagrams import (
    PlanarDiagram,
    close_tangle,
    count_components,
    writhes_over_orientations,
)
from .laurent import KINK_POS, LOOP, LaurentPolynomial, unit_power
from .tangles import TangleWord

Dart = tuple[int, int]


def _arc_ends(pd: PlanarDiagram) -> dict[int, list[Dart]]:
    ends: dict[int, list[Dart]] = {}
    for ci, t in enumerate(pd.crossings):
        for slot, arc in enumerate(t):
            ends.setdefault(arc, []).append((ci, slot))
    return ends


def _other_end(ends: dict[int, list[Dart]], arc: int, dart: Dart) -> Dart:
    e1, e2 = ends[arc]
    return e2 if e1 == dart else e1


def faces(pd: PlanarDiagram) -> list[list[Dart]]:
    """Face orbits of the combinatorial map, as dart lists."""
    ends = _arc_ends(pd)
    seen: set[Dart] = set()
    out: list[list[Dart]] = []
    for ci in range(len(pd.crossings)):
        for s in range(4):
            if (ci, s) in seen:
                continue
            orbit: list[Dart] = []
            d = (ci, s)
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                arc = pd.crossings[d[0]][d[1]]
                c2, s2 = _other_end(ends, arc, d)
                d = (c2, (s2 + 1) % 4)
            out.append(orbit)
    return out


def _graph_components(pd: PlanarDiagram) -> list[set[int]]:
    ends = _arc_ends(pd)
    seen: set[int] = set()
    comps = []
    for start in range(len(pd.crossings)):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            ci = queue.popleft()
            for arc in pd.crossings[ci]:
                for c2, _ in ends[arc]:
                    if c2 not in seen:
                        seen.add(c2)
                        comp.add(c2)
                        queue.append(c2)
        comps.append(comp)
    return comps


def is_spherical(pd: PlanarDiagram) -> bool:
    """Euler check: every connected component satisfies f = v + 2."""
    if not pd.crossings:
        return True
    face_count: dict[int, int] = {}
    comp_of: dict[int, int] = {}
    comps = _graph_components(pd)
    for idx, comp in enumerate(comps):
        for ci in comp:
            comp_of[ci] = idx
    for orbit in faces(pd):
        face_count[comp_of[orbit[0][0]]] = face_count.get(comp_of[orbit[0][0]], 0) + 1
    return all(face_count.get(idx, 0) == len(comp) + 2 for idx, comp in enumerate(comps))


# -- canonical form ----------------------------------------------------------

def canonical_form(pd: PlanarDiagram) -> tuple:
    """Label-independent value identifying the diagram.

    Minimum over starting darts of a breadth-first relabelling walk, taken
    per connected component; tuples are rotated only by 0 or 2 so the
    under/over structure is preserved.
    """
    ends = _arc_ends(pd)
    comps = _graph_components(pd)
    canons = []
    for comp in comps:
        best = None
        for ci in sorted(comp):
            for s in range(4):
                cand = _canon_walk(pd, ends, (ci, s))
                if best is None or cand < best:
                    best = cand
        canons.append(best)
    return (tuple(sorted(canons)), pd.free_loops)


def _canon_walk(pd: PlanarDiagram, ends: dict[int, list[Dart]], start: Dart) -> tuple:
    arc_label: dict[int, int] = {}
    seen: set[int] = set()
    out = []
    queue = deque([start])
    while queue:
        ci, s = queue.popleft()
        if ci in seen:
            continue
        seen.add(ci)
        rot = 2 if s >= 2 else 0
        t = pd.crossings[ci]
        tup = []
        for k in range(4):
            arc = t[(rot + k) % 4]
            if arc not in arc_label:
                arc_label[arc] = len(arc_label) + 1
            tup.append(arc_label[arc])
        out.append(tuple(tup))
        for k in range(4):
            slot = (rot + k) % 4
            for c2, s2 in ends[t[slot]]:
                if c2 not in seen:
                    queue.append((c2, s2))
    return tuple(out)


# -- move application --------------------------------------------------------

def _remove_crossings(pd: PlanarDiagram, gone: set[int]) -> PlanarDiagram:
    """Delete crossings, joining each one's pass-through strands."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ci in gone:
        a, b, c, d = pd.crossings[ci]
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    kept = [t for ci, t in enumerate(pd.crossings) if ci not in gone]
    new_crossings = [tuple(find(arc) for arc in t) for t in kept]
    all_classes = {find(arc) for t in pd.crossings for arc in t}
    used_classes = {arc for t in new_crossings for arc in t}
    loops = pd.free_loops + len(all_classes - used_classes)
    return PlanarDiagram(tuple(new_crossings), loops)


@dataclasses.dataclass(frozen=True)
class Move:
    kind: str  # "R1", "R2", "R3"
    grows: bool
    detail: tuple

    def __str__(self) -> str:
        arrow = "+" if self.grows else ("-" if self.kind != "R3" else "")
        return f"{self.kind}{arrow}{self.detail}"


def _fresh_arcs(pd: PlanarDiagram, n: int) -> list[int]:
    top = max((arc for t in pd.crossings for arc in t), default=0)
    return [top + 1 + k for k in range(n)]


def _apply_r1_down(pd: PlanarDiagram, ci: int) -> PlanarDiagram:
    return _remove_crossings(pd, {ci})

def _apply_r2_down(pd: PlanarDiagram, c1: int, c2: int) -> PlanarDiagram:
    return _remove_crossings(pd, {c1, c2})


def _apply_r3(pd: PlanarDiagram, orbit: Sequence[Dart]) -> PlanarDiagram:
    ends = _arc_ends(pd)
    new = [list(t) for t in pd.crossings]
    sides = []
    for d in orbit:
        arc = pd.crossings[d[0]][d[1]]
        sides.append((arc, d, _other_end(ends, arc, d)))
    for arc, (cu, su), (cv, sv) in sides:
        new[cu][(su + 2) % 4] = arc
        new[cu][su] = pd.crossings[cv][(sv + 2) % 4]
        new[cv][(sv + 2) % 4] = arc
        new[cv][sv] = pd.crossings[cu][(su + 2) % 4]
    return PlanarDiagram(tuple(tuple(t) for t in new), pd.free_loops)


def _apply_r1_up(pd: PlanarDiagram, arc: int, sign: int) -> PlanarDiagram:
    ends = _arc_ends(pd)
    crossings = [list(t) for t in pd.crossings]
    if arc < 0:  # kink a free loop
        l1, l2 = _fresh_arcs(pd, 2)
        tup = [l1, l1, l2, l2] if sign > 0 else [l1, l2, l2, l1]
        return PlanarDiagram(tuple(tuple(t) for t in crossings) + (tuple(tup),), pd.free_loops - 1)
    a1, loop, a2 = _fresh_arcs(pd, 3)
    (e1c, e1s), (e2c, e2s) = ends[arc]
    crossings[e1c][e1s] = a1
    crossings[e2c][e2s] = a2
    tup = [loop, loop, a2, a1] if sign > 0 else [a1, loop, loop, a2]
    return PlanarDiagram(tuple(tuple(t) for t in crossings) + (tuple(tup),), pd.free_loops)


def _apply_r2_up(pd: PlanarDiagram, d_under: Dart, d_over: Dart) -> PlanarDiagram | None:
    """Push the arc at d_over across their shared face over the arc at d_under."""
    ends = _arc_ends(pd)
    arc_a = pd.crossings[d_under[0]][d_under[1]]
    arc_b = pd.crossings[d_over[0]][d_over[1]]
    if arc_a == arc_b:
        return None
    a1, am, a2, b1, bm, b2 = _fresh_arcs(pd, 6)
    ea1, ea2 = ends[arc_a]
    eb1, eb2 = ends[arc_b]
    for flip in (False, True):
        crossings = [list(t) for t in pd.crossings]
        pairs = [(ea1, a1), (ea2, a2)]
        pairs += [(eb1, b2), (eb2, b1)] if flip else [(eb1, b1), (eb2, b2)]
        for (ci, s), new_arc in pairs:
            crossings[ci][s] = new_arc
        x = (a1, bm, am, b1)
        y = (am, bm, a2, b2)
        cand = PlanarDiagram(tuple(tuple(t) for t in crossings) + (x, y), pd.free_loops)
        if is_spherical(cand):
            return cand
    return None


# -- move detection ----------------------------------------------------------

def available_moves(
    pd: PlanarDiagram,
    allowed: Iterable[str] = ("R1", "R2", "R3"),
    max_crossings: int | None = None,
    grow: bool = False,
) -> list[tuple[Move, PlanarDiagram]]:
    """All single-move successors, in a deterministic order."""
    allowed = set(allowed)
    out: list[tuple[Move, PlanarDiagram]] = []
    n = pd.crossing_count

    if "R1" in allowed:
        for ci, t in enumerate(pd.crossings):
            for s in range(4):
                if t[s] == t[(s + 1) % 4]:
                    out.append((Move("R1", False, (ci, s)), _apply_r1_down(pd, ci)))
                    break

    face_list = faces(pd) if ("R2" in allowed or "R3" in allowed) else []

    if "R2" in allowed:
        ends = _arc_ends(pd)
        for orbit in face_list:
            if len(orbit) != 2:
                continue
            (c1, s1), (c2, s2) = orbit
            if c1 == c2:
                continue
            a1 = pd.crossings[c1][s1]
            a2 = pd.crossings[c2][s2]
            if a1 == a2:
                continue
            o1 = _other_end(ends, a1, (c1, s1))[1]
            o2 = _other_end(ends, a2, (c2, s2))[1]
            if s1 % 2 == o1 % 2 and s2 % 2 == o2 % 2 and s1 % 2 != s2 % 2:
                out.append((Move("R2", False, (c1, c2)), _apply_r2_down(pd, c1, c2)))

    if "R3" in allowed:
        ends = _arc_ends(pd)
        for orbit in face_list:
            if len(orbit) != 3:
                continue
            if len({d[0] for d in orbit}) != 3:
                continue
            arcs = [pd.crossings[d[0]][d[1]] for d in orbit]
            if len(set(arcs)) != 3:
                continue
            parities = []
            for d, arc in zip(orbit, arcs):
                o = _other_end(ends, arc, d)[1]
                parities.append((d[1] % 2, o % 2))
            if any(p == (1, 1) for p in parities):
                cand = _apply_r3(pd, orbit)
                if is_spherical(cand):
                    out.append((Move("R3", False, tuple(orbit)), cand))

    if grow and max_crossings is not None:
        if "R1" in allowed and n + 1 <= max_crossings:
            for arc in pd.arcs():
                for sign in (1, -1):
                    out.append((Move("R1", True, (arc, sign)), _apply_r1_up(pd, arc, sign)))
            if pd.free_loops:
                for sign in (1, -1):
                    out.append((Move("R1", True, (-1, sign)), _apply_r1_up(pd, -1, sign)))
        if "R2" in allowed and n + 2 <= max_crossings:
            for orbit in faces(pd):
                for i in range(len(orbit)):
                    for j in range(len(orbit)):
                        if i == j:
                            continue
                        cand = _apply_r2_up(pd, orbit[i], orbit[j])
                        if cand is not None:
                            out.append((Move("R2", True, (orbit[i], orbit[j])), cand))
    return out


# -- simplifier --------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SimplifyResult:
    trivial: bool
    moves: tuple[str, ...]
    counts: dict[str, int]
    final: PlanarDiagram
    expansions: int

    @property
    def move_counts(self) -> tuple[int, int, int]:
        return (self.counts.get("R1", 0), self.counts.get("R2", 0), self.counts.get("R3", 0))


def reidemeister_simplify(
    pd: PlanarDiagram,
    allowed: Iterable[str] = ("R1", "R2", "R3"),
    max_crossings: int | None = None,
    max_expansions: int = 20000,
    allow_growing: bool = True,
) -> SimplifyResult:
    """Bounded best-first search for a crossing-free diagram.

    Reducing moves are explored first (the queue is keyed by crossing count);
    growing moves stay within `max_crossings` and are generated only from
    diagrams that admit no reducing move.  Returns trivial=True with the move
    trace on success, otherwise trivial=False with the best diagram seen.
    """
    allowed = tuple(allowed)
    if max_crossings is None:
        max_crossings = pd.crossing_count + 4
    start_key = canonical_form(pd)
    parent: dict[tuple, tuple[tuple, str] | None] = {start_key: None}
    heap: list[tuple[int, int, int]] = [(pd.crossing_count, 0, 0)]
    states: list[tuple[PlanarDiagram, tuple]] = [(pd, start_key)]
    expansions = 0
    best = (pd.crossing_count, 0)
    counter = 0

    while heap and expansions < max_expansions:
        crossings, _, idx = heapq.heappop(heap)
        cur, cur_key = states[idx]
        expansions += 1
        if crossings == 0:
            moves: list[str] = []
            key = cur_key
            while parent[key] is not None:
                key, label = parent[key]
                moves.append(label)
            moves.reverse()
            counts: dict[str, int] = {}
            for label in moves:
                counts[label[:2]] = counts.get(label[:2], 0) + 1
            return SimplifyResult(True, tuple(moves), counts, cur, expansions)
        if crossings < best[0]:
            best = (crossings, idx)
        succ = available_moves(cur, allowed, max_crossings, grow=False)
        if not succ and allow_growing:
            succ = available_moves(cur, allowed, max_crossings, grow=True)
        for move, nxt in succ:
            if nxt.crossing_count > max_crossings:
                continue
            key = canonical_form(nxt)
            if key in parent:
                continue
            parent[key] = (cur_key, f"{move.kind}{'+' if move.grows else '-'}")
            counter += 1
            states.append((nxt, key))
            heapq.heappush(heap, (nxt.crossing_count, counter, len(states) - 1))

    return SimplifyResult(False, (), {}, states[best[1]][0], expansions)


# -- triviality --------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class TrivialityVerdict:
    status: str  # "trivial" | "nontrivial" | "unknown"
    components: int
    moves: tuple[str, ...] = ()
    counts: dict[str, int] = dataclasses.field(default_factory=dict)
    witness: str = ""

    @property
    def is_trivial(self) -> bool:
        return self.status == "trivial"

    def __str__(self) -> str:
        if self.status == "trivial":
            return f"trivial ({len(self.moves)} moves)"
        if self.status == "nontrivial":
            return f"nontrivial ({self.witness})"
        return "unknown"


def unlink_bracket(components: int) -> LaurentPolynomial:
    return LOOP ** (components - 1)


def triviality_of_diagram(
    pd: PlanarDiagram,
    bracket: LaurentPolynomial | None = None,
    allowed: Iterable[str] = ("R1", "R2", "R3"),
    max_crossings: int | None = None,
    max_expansions: int = 20000,
) -> TrivialityVerdict:
    comps = count_components(pd)
    if bracket is None:
        from .bracket import bracket_of_diagram

        bracket = bracket_of_diagram(pd, max_crossings=20) if pd.crossing_count <= 20 else None
    if bracket is not None:
        expected = unlink_bracket(comps)
        normalized = [
            unit_power(KINK_POS, -w) * bracket for w in writhes_over_orientations(pd)
        ]
        if expected not in normalized:
            return TrivialityVerdict(
                "nontrivial",
                comps,
                witness=f"normalized bracket {normalized[0]} != unlink value {expected}",
            )
    result = reidemeister_simplify(pd, allowed, max_crossings, max_expansions)
    if result.trivial:
        return TrivialityVerdict("trivial", comps, result.moves, result.counts)
    return TrivialityVerdict("unknown", comps)


def triviality_verdict(
    t: TangleWord,
    closure: str = "trace",
    allowed: Iterable[str] = ("R1", "R2", "R3"),
    max_crossings: int | None = None,
    max_expansions: int = 20000,
) -> TrivialityVerdict:
    """Triviality of the closed diagram of a tangle word.

    The writhe-normalized bracket against the unlink value is a necessary
    condition only: a match never certifies triviality, a mismatch certifies
    nontriviality.  Trivial verdicts always carry a constructive reduction.
    """
    pd = close_tangle(t, closure)
    bracket = kauffman_bracket(t, closure)
    return triviality_of_diagram(pd, bracket, allowed, max_crossings, max_expansions)
