"""
Planar link diagrams as PD codes, built from tangle words and their closures.

Each crossing is a 4-tuple of arc labels listed counterclockwise starting
from the incoming under-strand arc (strands read bottom to top during
construction).  Slots 0 and 2 therefore hold the under-strand, slots 1 and 3
the over-strand, and a strand always passes between opposite slots.  Circles
that touch no crossing are counted separately in `free_loops`.

For a positive crossing between strands i, i+1 the tuple is
(right-in, right-out, left-out, left-in); for a negative crossing it is
(left-in, right-in, right-out, left-out).  With this convention the Kauffman
A-smoothing of any tuple (a, b, c, d) joins a-b and c-d, and the B-smoothing
joins a-d and b-c, independent of orientation.

Arc labels are deterministic: 1, 2, ... in order of first appearance when the
crossing list is scanned in construction order (left-to-right in each row,
rows bottom to top), so equal constructions yield equal values.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

from .tangles import TangleKind, TangleWord

Crossing = tuple[int, int, int, int]


class _ArcUnion:
    """Union-find over provisional arc ids; unions that close a circle are counted."""

    def __init__(self):
        self.parent: list[int] = []
        self.loops = 0

    def fresh(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.loops += 1
        else:
            self.parent[rx] = ry


@dataclasses.dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(x) for x in self.crossings))
        counts: dict[int, int] = {}
        for t in self.crossings:
            for arc in t:
                counts[arc] = counts.get(arc, 0) + 1
        bad = [arc for arc, k in counts.items() if k != 2]
        if bad:
            raise ValueError(f"arc labels must appear exactly twice, bad: {sorted(bad)}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def arcs(self) -> tuple[int, ...]:
        seen: dict[int, None] = {}
        for t in self.crossings:
            for arc in t:
                seen.setdefault(arc)
        return tuple(seen)

    def __str__(self) -> str:
        return pd_export(self)


def _relabel(crossings: Sequence[Sequence[int]], free_loops: int) -> PlanarDiagram:
    label: dict[int, int] = {}
    out = []
    for t in crossings:
        out.append(tuple(label.setdefault(arc, len(label) + 1) for arc in t))
    return PlanarDiagram(tuple(out), free_loops)


def _build(t: TangleWord) -> tuple[list[list[int]], list[int], list[int], _ArcUnion]:
    """Raw crossings plus the bottom and top open arc per strand."""
    uf = _ArcUnion()
    init = [uf.fresh() for _ in range(t.strands)]
    cur = list(init)
    crossings: list[list[int]] = []
    for letter in t.letters:
        j = letter.index - 1
        if letter.kind is TangleKind.E:
            uf.union(cur[j], cur[j + 1])
            z = uf.fresh()
            cur[j] = cur[j + 1] = z
        else:
            l_in, r_in = cur[j], cur[j + 1]
            l_out, r_out = uf.fresh(), uf.fresh()
            if letter.kind is TangleKind.SPOS:
                crossings.append([r_in, r_out, l_out, l_in])
            else:
                crossings.append([l_in, r_in, r_out, l_out])
            cur[j], cur[j + 1] = l_out, r_out
    return crossings, init, cur, uf


def _finish(crossings: list[list[int]], uf: _ArcUnion) -> PlanarDiagram:
    resolved = [[uf.find(arc) for arc in t] for t in crossings]
    return _relabel(resolved, uf.loops)


def trace_closure(t: TangleWord) -> PlanarDiagram:
    """Join strand i's top to strand i's bottom around the braid axis."""
    crossings, init, cur, uf = _build(t)
    for j in range(t.strands):
        uf.union(cur[j], init[j])
    return _finish(crossings, uf)


def plat_closure(t: TangleWord) -> PlanarDiagram:
    """Modified plat closure on an odd strand count.

    Caps join strand pairs (2, 3), (4, 5), ... at top and at bottom; strand 1
    is joined top-to-bottom around the side.
    """
    if t.strands % 2 == 0:
        raise ValueError(f"plat closure needs an odd strand count, got {t.strands}")
    crossings, init, cur, uf = _build(t)
    uf.union(cur[0], init[0])
    for j in range(1, t.strands - 1, 2):
        uf.union(init[j], init[j + 1])
        uf.union(cur[j], cur[j + 1])
    return _finish(crossings, uf)


def close_tangle(t: TangleWord, closure: str) -> PlanarDiagram:
    if closure == "trace":
        return trace_closure(t)
    if closure == "plat":
        return plat_closure(t)
    raise ValueError(f"unknown closure {closure!r}")


def count_components(d: PlanarDiagram) -> int:
    """Link components: follow arcs through both strands of every crossing."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for a, b, c, dd in d.crossings:
        union(a, c)
        union(b, dd)
    classes = {find(arc) for arc in d.arcs()}
    return len(classes) + d.free_loops


# -- orientations and writhe -------------------------------------------------

def _arc_ends(d: PlanarDiagram) -> dict[int, list[tuple[int, int]]]:
    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(d.crossings):
        for slot, arc in enumerate(t):
            ends.setdefault(arc, []).append((ci, slot))
    return ends


def _components_as_dart_cycles(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Each component as the cyclic list of (crossing, entry slot) it visits."""
    ends = _arc_ends(d)
    visited: set[tuple[int, int]] = set()
    cycles = []
    for ci in range(len(d.crossings)):
        for slot in range(4):
            if (ci, slot) in visited:
                continue
            cycle = []
            cur = (ci, slot)
            while cur not in visited:
                visited.add(cur)
                cycle.append(cur)
                cci, cslot = cur
                out_slot = (cslot + 2) % 4
                visited.add((cci, out_slot))
                arc = d.crossings[cci][out_slot]
                e1, e2 = ends[arc]
                cur = e2 if e1 == (cci, out_slot) else e1
            cycles.append(cycle)
    return cycles


def writhes_over_orientations(d: PlanarDiagram) -> tuple[int, ...]:
    """Sorted writhes over all orientations (one global reversal quotiented)."""
    cycles = _components_as_dart_cycles(d)
    if not d.crossings:
        return (0,)
    n = len(cycles)
    writhes = []
    for mask in range(1 << max(n - 1, 0)):
        entry: set[tuple[int, int]] = set()
        for k, cy in enumerate(cycles):
            flip = k > 0 and (mask >> (k - 1)) & 1
            if not flip:
                entry.update(cy)
            else:
                # reversing the component makes its exit darts the entries
                entry.update(((ci, (s + 2) % 4) for ci, s in cy))
        w = 0
        for ci in range(len(d.crossings)):
            under_in = 0 if (ci, 0) in entry else 2
            over_in = 1 if (ci, 1) in entry else 3
            w += 1 if (over_in - under_in) % 4 == 3 else -1
        writhes.append(w)
    return tuple(sorted(writhes))


# -- PD text form ------------------------------------------------------------

_PD_TERM_RE = re.compile(r"X\[(\d+),(\d+),(\d+),(\d+)\]")
_PD_LOOPS_RE = re.compile(r"loops\s*=\s*(\d+)")


def pd_export(d: PlanarDiagram) -> str:
    terms = ", ".join(f"X[{a},{b},{c},{dd}]" for a, b, c, dd in d.crossings)
    if terms:
        return f"{terms} | loops={d.free_loops}"
    return f"loops={d.free_loops}"


def pd_import(text: str) -> PlanarDiagram:
    crossings = [tuple(int(x) for x in m.groups()) for m in _PD_TERM_RE.finditer(text)]
    m = _PD_LOOPS_RE.search(text)
    free_loops = int(m.group(1)) if m else 0
    return PlanarDiagram(tuple(crossings), free_loops)
