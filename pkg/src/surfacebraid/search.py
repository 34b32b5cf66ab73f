"""
Certified equivalence search over the relation catalog.

`equiv_search` runs a bidirectional best-first search between two words,
expanding whichever frontier is smaller; the queue is ordered by (word
length, depth, letters) so shorter words are explored first, and the visited
maps fix parent pointers at first insertion, which makes the returned
certificate deterministic.  On success the two half-paths are joined into a
replayable `RewriteCertificate`; exhausting the budget returns None, which
means unknown, never inequivalent.

Closure moves carry side conditions (the rotated or stabilized word must
present a surface).  In strict mode those conditions are checked when a
certificate is assembled, once per closure step, with verdicts cached; every
catalog rule preserves the resolved-link invariants, so a search rooted at a
word that presents a surface can only visit words that do.  When either
endpoint's resolution is certified nontrivial, closure moves are disabled
outright, since no reachable word can satisfy their side condition.  In lax
mode the conditions are skipped and the certificate is flagged.

Words are packed into bytes (one letter per byte, closed words prefixed by
their strand count) and every rule instance is pre-compiled to a literal
pattern/replacement pair, bucketed by first letter.
"""

from __future__ import annotations

import dataclasses
import heapq
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .rewrite import (
    RewriteCertificate,
    RewriteRule,
    RewriteStep,
    apply_rule_at,
    instantiate,
    replay_steps,
    rule_catalog,
)
from .surfaces import csb_membership
from .words import ClosedSurfaceWord, Generator, Kind, SurfaceBraidWord

_C2_KINDS = ("a", "b", "c", "C")


@dataclasses.dataclass(frozen=True)
class _Entry:
    pattern: bytes
    replacement: bytes
    rule: RewriteRule
    direction: str


class _Compiled:
    __slots__ = ("by_first", "insertions", "c1", "c2", "max_index")

    def __init__(self, m: int, rule_ids: frozenset[str] | None):
        self.by_first: dict[int, list[_Entry]] = {}
        self.insertions: list[_Entry] = []
        self.c1: RewriteRule | None = None
        self.c2: list[RewriteRule] = []
        for rule in rule_catalog(m):
            if rule_ids is not None and rule.rule_id not in rule_ids:
                continue
            if rule.rule_id == "C1":
                self.c1 = rule
                continue
            if rule.rule_id == "C2":
                self.c2.append(rule)
                continue
            lhs = bytes(g.packed() for g in rule.lhs)
            rhs = bytes(g.packed() for g in rule.rhs)
            for pattern, replacement, direction in ((lhs, rhs, "LR"), (rhs, lhs, "RL")):
                entry = _Entry(pattern, replacement, rule, direction)
                if pattern:
                    self.by_first.setdefault(pattern[0], []).append(entry)
                else:
                    self.insertions.append(entry)


@lru_cache(maxsize=None)
def _compiled(m: int, rule_ids: frozenset[str] | None) -> _Compiled:
    return _Compiled(m, rule_ids)


def _pattern_successors(wb: bytes, comp: _Compiled, max_len: int, out: list) -> None:
    n = len(wb)
    by_first = comp.by_first
    for p in range(n):
        bucket = by_first.get(wb[p])
        if bucket is None:
            continue
        for entry in bucket:
            pat = entry.pattern
            lp = len(pat)
            if p + lp <= n and wb.startswith(pat, p):
                if n - lp + len(entry.replacement) <= max_len:
                    out.append((wb[:p] + entry.replacement + wb[p + lp :], entry, p))
    for entry in comp.insertions:
        if n + len(entry.replacement) <= max_len:
            rep = entry.replacement
            for p in range(n + 1):
                out.append((wb[:p] + rep + wb[p:], entry, p))


# A closed state is bytes([strands]) + packed letters.

def _closed_successors(
    state: bytes,
    rule_ids: frozenset[str] | None,
    max_len: int,
    max_strands: int,
    allow_c: bool,
) -> list[tuple[bytes, RewriteStep]]:
    strands, wb = state[0], state[1:]
    comp = _compiled(strands, rule_ids)
    raw: list = []
    _pattern_successors(wb, comp, max_len, raw)
    head = bytes([strands])
    out = [
        (
            head + nw,
            RewriteStep(e.rule, e.direction, p, len(wb), len(nw)),
        )
        for nw, e, p in raw
    ]
    n = len(wb)
    if allow_c and comp.c1 is not None and n >= 2:
        rotated = wb[1:] + wb[:1]
        if rotated != wb:
            out.append((head + rotated, RewriteStep(comp.c1, "LR", 0, n, n)))
            out.append(
                (head + wb[-1:] + wb[:-1], RewriteStep(comp.c1, "RL", n - 1, n, n))
            )
    if allow_c and comp.c2:
        if strands + 1 <= max_strands and n + 1 <= max_len:
            nhead = bytes([strands + 1])
            for rule in comp.c2:
                kind = {"a": 0, "b": 1, "c": 2, "C": 3}[rule.param("x")]
                letter = (strands << 2) | kind
                out.append(
                    (nhead + wb + bytes([letter]), RewriteStep(rule, "LR", n, n, n + 1))
                )
        if strands >= 2 and n >= 1:
            last = wb[-1]
            if last >> 2 == strands - 1 and all(x >> 2 <= strands - 2 for x in wb[:-1]):
                kind_char = "abcC"[last & 3]
                rule = next(r for r in comp.c2 if r.param("x") == kind_char)
                out.append(
                    (bytes([strands - 1]) + wb[:-1], RewriteStep(rule, "RL", n - 1, n, n - 1))
                )
    return out


def _open_successors(
    state: bytes, strands: int, rule_ids: frozenset[str] | None, max_len: int
) -> list[tuple[bytes, RewriteStep]]:
    comp = _compiled(strands, rule_ids)
    raw: list = []
    _pattern_successors(state, comp, max_len, raw)
    return [
        (nw, RewriteStep(e.rule, e.direction, p, len(state), len(nw)))
        for nw, e, p in raw
    ]


# -- membership cache --------------------------------------------------------

_membership_cache: dict[tuple[int, bytes], str] = {}


def _membership_status(strands: int, wb: bytes, max_expansions: int = 20000) -> str:
    """"member", "nonmember" or "unknown" for the closed word."""
    key = (strands, wb)
    hit = _membership_cache.get(key)
    if hit is not None:
        return hit
    word = ClosedSurfaceWord(SurfaceBraidWord.from_packed(strands, wb))
    plus, minus = csb_membership(word, max_expansions=max_expansions)
    if plus.is_trivial and minus.is_trivial:
        status = "member"
    elif plus.status == "nontrivial" or minus.status == "nontrivial":
        status = "nonmember"
    else:
        status = "unknown"
    _membership_cache[key] = status
    return status


def clear_membership_cache() -> None:
    _membership_cache.clear()


# -- the search --------------------------------------------------------------

def _state_of(w, closed: bool) -> bytes:
    if closed:
        return bytes([w.word.strands]) + w.word.packed()
    return w.packed()


def _assemble(
    closed: bool,
    strands_open: int,
    fwd: dict,
    bwd: dict,
    meet: bytes,
    start_word: SurfaceBraidWord,
    end_word: SurfaceBraidWord,
    strictness: str,
) -> RewriteCertificate:
    fsteps: list[RewriteStep] = []
    cur = meet
    while fwd[cur] is not None:
        prev, step, _ = fwd[cur]
        fsteps.append(step)
        cur = prev
    fsteps.reverse()
    bsteps: list[RewriteStep] = []
    cur = meet
    while bwd[cur] is not None:
        prev, step, _ = bwd[cur]
        bsteps.append(step.inverted())
        cur = prev
    return RewriteCertificate(
        start_word, end_word, tuple(fsteps) + tuple(bsteps), closed, strictness
    )


def _verify_closure_conditions(cert: RewriteCertificate, max_expansions: int) -> bool:
    """Check every C1/C2 side condition along the chain; True if all hold."""
    words = [ClosedSurfaceWord(cert.start)]
    words.extend(replay_steps(cert))
    for idx, step in enumerate(cert.steps):
        if step.rule.rule_id == "C1":
            subject = words[idx]
        elif step.rule.rule_id == "C2":
            subject = words[idx] if step.direction == "LR" else words[idx + 1]
        else:
            continue
        status = _membership_status(
            subject.closure_strands, subject.word.packed(), max_expansions
        )
        if status != "member":
            return False
    return True


def equiv_search(
    u,
    v,
    max_word_length: int | None = None,
    max_expansions: int = 200_000,
    rules: Iterable[str] | None = None,
    strictness: str = "strict",
    max_strands: int | None = None,
    membership_expansions: int = 20000,
) -> RewriteCertificate | None:
    """Search for a certificate connecting two words; None means unknown.

    Both arguments closed: the full catalog applies.  Both open: closure
    moves are excluded and matching is positional only.  `rules` restricts
    the catalog to the given rule ids.
    """
    closed = isinstance(u, ClosedSurfaceWord)
    if closed != isinstance(v, ClosedSurfaceWord):
        raise ValueError("cannot mix open and closed words")
    if strictness not in ("strict", "lax"):
        raise ValueError(f"strictness must be strict or lax, got {strictness!r}")
    uw = u.word if closed else u
    vw = v.word if closed else v
    if not closed and uw.strands != vw.strands:
        return None
    rule_ids = None if rules is None else frozenset(rules)
    if max_word_length is None:
        max_word_length = max(len(uw), len(vw)) + 6
    if max_strands is None:
        max_strands = max(uw.strands, vw.strands) + 1

    allow_c = closed
    if closed and strictness == "strict" and allow_c:
        for w in (uw, vw):
            if _membership_status(w.strands, w.packed(), membership_expansions) == "nonmember":
                allow_c = False
                break

    su, sv = _state_of(u, closed), _state_of(v, closed)
    if su == sv:
        return RewriteCertificate(uw, vw, (), closed, strictness)

    if closed:
        succ = lambda s: _closed_successors(s, rule_ids, max_word_length, max_strands, allow_c)  # noqa: E731
    else:
        succ = lambda s: _open_successors(s, uw.strands, rule_ids, max_word_length)  # noqa: E731

    trees: list[dict[bytes, tuple | None]] = [{su: None}, {sv: None}]
    heaps: list[list[tuple[int, int, bytes]]] = [
        [(len(su), 0, su)],
        [(len(sv), 0, sv)],
    ]
    expansions = 0
    meet: bytes | None = None

    while heaps[0] and heaps[1] and expansions < max_expansions and meet is None:
        side = 0 if len(heaps[0]) <= len(heaps[1]) else 1
        _, depth, state = heapq.heappop(heaps[side])
        expansions += 1
        for nstate, step in succ(state):
            if nstate in trees[side]:
                continue
            trees[side][nstate] = (state, step, depth + 1)
            if nstate in trees[1 - side]:
                meet = nstate
                break
            heapq.heappush(heaps[side], (len(nstate), depth + 1, nstate))

    if meet is None:
        return None
    cert = _assemble(closed, uw.strands, trees[0], trees[1], meet, uw, vw, strictness)
    if closed and strictness == "strict":
        if not _verify_closure_conditions(cert, membership_expansions):
            return None
    return cert


# -- replay ------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ReplayResult:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def replay_certificate(cert: RewriteCertificate, membership_expansions: int = 20000) -> ReplayResult:
    """Re-run every step; strict certificates re-verify closure conditions."""
    w = ClosedSurfaceWord(cert.start) if cert.closed else cert.start
    for idx, step in enumerate(cert.steps):
        if len(w.letters) != step.len_before:
            return ReplayResult(False, idx, f"expected length {step.len_before}")
        if step.rule.is_closure_move and not cert.closed:
            return ReplayResult(False, idx, "closure move in an open certificate")
        if cert.closed and cert.strictness == "strict" and step.rule.is_closure_move:
            if step.rule.rule_id == "C1" or step.direction == "LR":
                subject = w
            else:
                subject = None  # checked after applying
        else:
            subject = None
        try:
            nxt = apply_rule_at(w, step.rule, step.position, step.direction)
        except ValueError as exc:
            return ReplayResult(False, idx, str(exc))
        if cert.closed and cert.strictness == "strict" and step.rule.is_closure_move:
            check = subject if subject is not None else nxt
            status = _membership_status(
                check.closure_strands, check.word.packed(), membership_expansions
            )
            if status != "member":
                return ReplayResult(
                    False, idx, f"closure-move side condition not certified ({status})"
                )
        w = nxt
        if len(w.letters) != step.len_after:
            return ReplayResult(False, idx, "unexpected length after step")
    final = w.word if cert.closed else w
    if (final.strands, final.letters) != (cert.end.strands, cert.end.letters):
        return ReplayResult(False, len(cert.steps), "chain does not end at the stated word")
    return ReplayResult(True)


# -- two-strand normal form --------------------------------------------------

_KIND_ORDER = {Kind.A: 0, Kind.B: 1, Kind.C: 2, Kind.CINV: 3}
_KIND_CHAR = {Kind.A: "a", Kind.B: "b", Kind.C: "c", Kind.CINV: "C"}


def normalize_csb2(
    w: ClosedSurfaceWord, membership_expansions: int = 20000
) -> tuple[ClosedSurfaceWord, RewriteCertificate]:
    """Deterministic normal form of a surface-presenting 2-strand word.

    Sorts the letters a, b, c, c^-1 by same-pair commutation, collapses
    duplicate vertices, cancels inverse crossing pairs, and reduces crossing
    powers next to an a b pair; the certificate replays every step.
    """
    if w.closure_strands != 2:
        raise ValueError("normal form is defined on 2-strand closed words")
    status = _membership_status(2, w.word.packed(), membership_expansions)
    if status != "member":
        raise ValueError(f"word does not present a surface (membership: {status})")

    steps: list[RewriteStep] = []
    cur = w

    def apply(rule: RewriteRule, direction: str, position: int) -> None:
        nonlocal cur
        before = len(cur.letters)
        cur = apply_rule_at(cur, rule, position, direction)
        steps.append(RewriteStep(rule, direction, position, before, len(cur.letters)))

    # bubble sort by kind: every 2-strand pair shares the strand pair (1, 2)
    changed = True
    while changed:
        changed = False
        letters = cur.letters
        for p in range(len(letters) - 1):
            x, y = letters[p], letters[p + 1]
            if _KIND_ORDER[x.kind] > _KIND_ORDER[y.kind]:
                rule = instantiate(
                    "A2", i=1, x=_KIND_CHAR[y.kind], n=1, y=_KIND_CHAR[x.kind]
                )
                apply(rule, "RL", p)
                changed = True
                break

    def counts() -> dict[Kind, int]:
        out = {k: 0 for k in Kind}
        for g in cur.letters:
            out[g.kind] += 1
        return out

    def block_start(kind: Kind) -> int:
        return sum(1 for g in cur.letters if _KIND_ORDER[g.kind] < _KIND_ORDER[kind])

    a9 = instantiate("A9", i=1)
    a10 = instantiate("A10", i=1)
    a1 = instantiate("A1", i=1, order=1)
    a11 = instantiate("A11", i=1)

    while counts()[Kind.A] > 1:
        apply(a9, "LR", block_start(Kind.A))
    while counts()[Kind.B] > 1:
        apply(a10, "LR", block_start(Kind.B))
    while counts()[Kind.C] > 0 and counts()[Kind.CINV] > 0:
        apply(a1, "LR", block_start(Kind.CINV) - 1)

    c = counts()
    if c[Kind.A] == 1 and c[Kind.B] == 1:
        while counts()[Kind.CINV] >= 1:
            # insert c1 c1 after the a b pair, cancel one against the block:
            # each round turns one inverse crossing into a positive one
            apply(a11, "RL", block_start(Kind.A))
            apply(a1, "LR", block_start(Kind.CINV) - 1)
        while counts()[Kind.C] >= 2:
            apply(a11, "LR", block_start(Kind.A))
    else:
        if c[Kind.C] + c[Kind.CINV] > 1:
            raise ValueError(
                "crossing power too large for a surface-presenting 2-strand word"
            )
    return cur, RewriteCertificate(w.word, cur.word, tuple(steps), True, "strict")


# -- destabilization ---------------------------------------------------------

def destabilization_search(
    w: ClosedSurfaceWord,
    max_word_length: int | None = None,
    max_expansions: int = 5000,
    membership_expansions: int = 20000,
) -> int:
    """Smallest closure strand count seen in a bounded forward search.

    Only meaningful for words that present a surface; if the word's
    membership cannot be certified the input strand count is returned.
    """
    start_strands = w.closure_strands
    if _membership_status(start_strands, w.word.packed(), membership_expansions) != "member":
        return start_strands
    if max_word_length is None:
        max_word_length = len(w.letters) + 6
    su = bytes([start_strands]) + w.word.packed()
    best = start_strands
    seen = {su}
    heap = [(start_strands, len(su), 0, su)]
    expansions = 0
    while heap and expansions < max_expansions and best > 1:
        strands, _, depth, state = heapq.heappop(heap)
        expansions += 1
        best = min(best, strands)
        for nstate, _step in _closed_successors(
            state, None, max_word_length, start_strands + 1, True
        ):
            if nstate in seen:
                continue
            seen.add(nstate)
            heapq.heappush(heap, (nstate[0], len(nstate), depth + 1, nstate))
    return min(best, min(s[0] for s in seen))
