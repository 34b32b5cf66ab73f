"""
Crossingless planar matchings of n bottom and n top points.

A matching is a tuple M of length 2n with M[M[p]] == p and M[p] != p.
Points 0..n-1 are the bottom boundary read left to right; points n..2n-1 are
the top boundary, point n+j sitting above bottom point j.  Around the disk
boundary the points appear in the order bottom 0..n-1 then top n-1..0, and a
matching is planar exactly when it is non-crossing in that cyclic order.

These are the diagram basis of the Temperley-Lieb algebra on n strands
(Catalan(n) of them); vertical stacking is `compose_matchings`, which also
reports how many closed circles the stacking produced.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Matching = tuple[int, ...]


def identity_matching(n: int) -> Matching:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def e_matching(i: int, n: int) -> Matching:
    """Cup-cap generator joining strand pair (i, i+1), 1-based i <= n-1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"e index {i} out of range for {n} strands")
    m = list(identity_matching(n))
    j = i - 1
    m[j], m[j + 1] = j + 1, j
    m[n + j], m[n + j + 1] = n + j + 1, n + j
    return tuple(m)


def is_planar_matching(m: Matching) -> bool:
    n2 = len(m)
    if n2 % 2:
        return False
    n = n2 // 2
    if not all(0 <= m[p] < n2 and m[p] != p and m[m[p]] == p for p in range(n2)):
        return False
    # boundary position of a point: bottom j sits at j, top point n+j at 2n-1-j
    pos_of = [p if p < n else 2 * n - 1 - (p - n) for p in range(n2)]
    point_at = [0] * n2
    for p in range(n2):
        point_at[pos_of[p]] = p
    stack: list[int] = []
    opened: set[int] = set()
    for pos in range(n2):
        p = point_at[pos]
        if m[p] in opened:
            if not stack or stack[-1] != p:
                return False
            stack.pop()
        else:
            opened.add(p)
            stack.append(m[p])
    return not stack


def compose_matchings(lower: Matching, upper: Matching) -> tuple[Matching, int]:
    """Stack `upper` on top of `lower`; return (matching, closed circles)."""
    if len(lower) != len(upper):
        raise ValueError("cannot compose matchings on different strand counts")
    n = len(lower) // 2
    result = [-1] * (2 * n)
    seen_mid = [False] * n

    def walk(side: int, pt: int) -> int:
        # side 0: in lower at point pt; side 1: in upper at point pt.
        while True:
            if side == 0:
                q = lower[pt]
                if q < n:
                    return q  # result bottom point
                mid = q - n
                seen_mid[mid] = True
                side, pt = 1, mid
            else:
                q = upper[pt]
                if q >= n:
                    return q  # result top point
                seen_mid[q] = True
                side, pt = 0, n + q

    for p in range(n):
        if result[p] == -1:
            q = walk(0, p)
            result[p], result[q] = q, p
    for p in range(n, 2 * n):
        if result[p] == -1:
            q = walk(1, p)
            result[p], result[q] = q, p

    loops = 0
    for p in range(n):
        if seen_mid[p]:
            continue
        loops += 1
        q = p
        while not seen_mid[q]:
            seen_mid[q] = True
            q2 = upper[q]
            seen_mid[q2] = True
            q = lower[n + q2] - n
    return tuple(result), loops


def _closure_loops(m: Matching, closure: Matching) -> int:
    seen = [False] * len(m)
    loops = 0
    for start in range(len(m)):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = m[p]
            seen[q] = True
            p = closure[q]
    return loops


def trace_closure_loops(m: Matching) -> int:
    """Circles after joining top point j to bottom point j for every j."""
    n = len(m) // 2
    return _closure_loops(m, identity_matching(n))


def plat_closure_loops(m: Matching) -> int:
    """Circles after the modified plat closure on odd strand count.

    Caps join strand pairs (2, 3), (4, 5), ... at top and bottom; strand 1
    closes around the side.
    """
    n = len(m) // 2
    if n % 2 == 0:
        raise ValueError(f"plat closure needs an odd strand count, got {n}")
    cl = [-1] * (2 * n)
    cl[0], cl[n] = n, 0
    for j in range(1, n, 2):
        cl[j], cl[j + 1] = j + 1, j
        cl[n + j], cl[n + j + 1] = n + j + 1, n + j
    return _closure_loops(m, tuple(cl))


@lru_cache(maxsize=None)
def all_matchings(n: int) -> tuple[Matching, ...]:
    """Every planar matching on n+n points, lexicographically sorted."""

    def gen(points: tuple[int, ...]) -> Iterator[dict[int, int]]:
        if not points:
            yield {}
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            partner = points[idx]
            inner, outer = points[1:idx], points[idx + 1 :]
            for mi in gen(inner):
                for mo in gen(outer):
                    yield {first: partner, partner: first, **mi, **mo}

    # boundary cyclic order: bottom 0..n-1, then top 2n-1 down to n
    boundary = tuple(range(n)) + tuple(range(2 * n - 1, n - 1, -1))
    out = []
    for pairing in gen(boundary):
        out.append(tuple(pairing[p] for p in range(2 * n)))
    return tuple(sorted(out))
