"""
The relation catalog on surface braid words, as local rewrite rules, and
replayable certificates of rule application.

Every rule is a bidirectional local replacement.  Pattern rules A1-A14 act on
a letter window anywhere in a word; the closure moves C1 (rotating one letter
across the closure) and C2 (stabilizing by one strand) act on closed words
only.  Concrete instances are pre-expanded per strand count: each instance
carries its literal left and right word, so matching is a slice comparison.

Catalog (x, y range over all four letter kinds; Delta is the fixed
ascending-block positive half twist, Delta(3, base) = c_base c_{base+1} c_base):

    A1   c_i c_i^-1 = 1  and  c_i^-1 c_i = 1
    A2   x_i y_n = y_n x_i   whenever n is not adjacent to i
    A3   c_i x_k c_i^-1 = c_k^-1 x_i c_k          |k-i| = 1
    A4   x_i c_k c_i   = c_k c_i x_k              |k-i| = 1
    A5   x_i c_k^-1 c_i^-1 = c_k^-1 c_i^-1 x_k    |k-i| = 1
    A6   a_i b_k = b_k a_i                        |k-i| = 1
    A7   a_i b_{i-2} (c_{i-1} c_{i-2} c_i c_{i-1})^2 = a_i b_{i-2}   i > 2
    A8   b_i a_{i-2} (c_{i-1} c_{i-2} c_i c_{i-1})^2 = b_i a_{i-2}   i > 2
    A9   a_i a_i = a_i
    A10  b_i b_i = b_i
    A11  a_i b_i c_i c_i = a_i b_i
    A12  a_i b_k Delta(3) = a_i b_k Delta(3)^-1   |k-i| = 1, based at min(i,k)
    A13  x_i Delta(w, base)^s = Delta(w, base)^s x_i'   window size w >= 3,
         s = +-1, i inside the window, i' = 2*base + w - 2 - i
    A14  a_i c_k^-1 b_i c_k Delta(3)^2 = a_i c_k^-1 b_i c_k   |k-i| = 1
    C1   [x S]_n = [S x]_n          while the word presents a surface
    C2   [S]_n = [S x_n]_{n+1}      while S presents a surface

A2 commutes letters whose indices are equal or at distance >= 2; only
adjacent indices interact.  A13 covers the half twist and its formal inverse:
dragging a letter through either twist reflects its index across the window.
A13 and A14 are consequences of the earlier rules, kept as accelerators; the
test suite re-derives A14 from A1-A13 alone.
"""

from __future__ import annotations

import dataclasses
import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .words import (
    ClosedSurfaceWord,
    Generator,
    Kind,
    SurfaceBraidWord,
    build_half_twist,
    formal_inverse,
    format_word,
    parse_word,
)

RULE_IDS = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10",
    "A11", "A12", "A13", "A14", "C1", "C2",
)

_KIND_CODE = {"a": Kind.A, "b": Kind.B, "c": Kind.C, "C": Kind.CINV}
_CODE_KIND = {v: k for k, v in _KIND_CODE.items()}
_ALL_KINDS = ("a", "b", "c", "C")


@dataclasses.dataclass(frozen=True, order=True)
class RewriteRule:
    """One concrete relation instance; lhs/rhs are None for closure moves."""

    rule_id: str
    params: tuple[tuple[str, object], ...]
    lhs: tuple[Generator, ...] | None = None
    rhs: tuple[Generator, ...] | None = None

    @property
    def is_closure_move(self) -> bool:
        return self.rule_id in ("C1", "C2")

    def param(self, name: str):
        return dict(self.params)[name]

    def __str__(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.rule_id}({ps})"


def _gens(*pairs: tuple[str, int]) -> tuple[Generator, ...]:
    return tuple(Generator(_KIND_CODE[k], i) for k, i in pairs)


def _delta_letters(size: int, base: int, sign: int = 1) -> tuple[Generator, ...]:
    w = build_half_twist(size, base)
    return (formal_inverse(w) if sign < 0 else w).letters


def instantiate(rule_id: str, **params) -> RewriteRule:
    """Build the concrete rule for the given parameters."""
    p = params
    key = tuple(sorted(params.items()))
    if rule_id == "A1":
        i, order = p["i"], p["order"]
        lhs = _gens(("c", i), ("C", i)) if order > 0 else _gens(("C", i), ("c", i))
        return RewriteRule("A1", key, lhs, ())
    if rule_id == "A2":
        i, x, n, y = p["i"], p["x"], p["n"], p["y"]
        if abs(n - i) == 1:
            raise ValueError("A2 does not commute adjacent indices")
        return RewriteRule("A2", key, _gens((x, i), (y, n)), _gens((y, n), (x, i)))
    if rule_id == "A3":
        i, k, x = p["i"], p["k"], p["x"]
        return RewriteRule(
            "A3", key, _gens(("c", i), (x, k), ("C", i)), _gens(("C", k), (x, i), ("c", k))
        )
    if rule_id == "A4":
        i, k, x = p["i"], p["k"], p["x"]
        return RewriteRule(
            "A4", key, _gens((x, i), ("c", k), ("c", i)), _gens(("c", k), ("c", i), (x, k))
        )
    if rule_id == "A5":
        i, k, x = p["i"], p["k"], p["x"]
        return RewriteRule(
            "A5", key, _gens((x, i), ("C", k), ("C", i)), _gens(("C", k), ("C", i), (x, k))
        )
    if rule_id == "A6":
        i, k = p["i"], p["k"]
        return RewriteRule("A6", key, _gens(("a", i), ("b", k)), _gens(("b", k), ("a", i)))
    if rule_id in ("A7", "A8"):
        i = p["i"]
        if i <= 2:
            raise ValueError(f"{rule_id} requires i > 2")
        first, second = ("a", "b") if rule_id == "A7" else ("b", "a")
        head = _gens((first, i), (second, i - 2))
        block = _gens(("c", i - 1), ("c", i - 2), ("c", i), ("c", i - 1))
        return RewriteRule(rule_id, key, head + block + block, head)
    if rule_id == "A9":
        i = p["i"]
        return RewriteRule("A9", key, _gens(("a", i), ("a", i)), _gens(("a", i)))
    if rule_id == "A10":
        i = p["i"]
        return RewriteRule("A10", key, _gens(("b", i), ("b", i)), _gens(("b", i)))
    if rule_id == "A11":
        i = p["i"]
        return RewriteRule(
            "A11", key, _gens(("a", i), ("b", i), ("c", i), ("c", i)), _gens(("a", i), ("b", i))
        )
    if rule_id == "A12":
        i, k = p["i"], p["k"]
        base = min(i, k)
        head = _gens(("a", i), ("b", k))
        return RewriteRule(
            "A12", key, head + _delta_letters(3, base), head + _delta_letters(3, base, -1)
        )
    if rule_id == "A13":
        window, base, i, sign, x = p["window"], p["base"], p["i"], p["sign"], p["x"]
        if window < 3:
            raise ValueError("A13 windows smaller than 3 strands are covered by A2")
        if not base <= i <= base + window - 2:
            raise ValueError(f"index {i} outside window {base}..{base + window - 1}")
        mirror = 2 * base + window - 2 - i
        delta = _delta_letters(window, base, sign)
        return RewriteRule(
            "A13", key, _gens((x, i)) + delta, delta + _gens((x, mirror))
        )
    if rule_id == "A14":
        i, k = p["i"], p["k"]
        base = min(i, k)
        head = _gens(("a", i), ("C", k), ("b", i), ("c", k))
        return RewriteRule("A14", key, head + _delta_letters(3, base) * 2, head)
    if rule_id == "C1":
        return RewriteRule("C1", key)
    if rule_id == "C2":
        if p["x"] not in _ALL_KINDS:
            raise ValueError(f"unknown letter kind {p['x']!r}")
        return RewriteRule("C2", key)
    raise ValueError(f"unknown rule id {rule_id!r}")


@lru_cache(maxsize=None)
def rule_catalog(m: int) -> tuple[RewriteRule, ...]:
    """All concrete rule instances valid on m strands."""
    if m < 1:
        raise ValueError(f"strand count must be >= 1, got {m}")
    idx = range(1, m)
    rules: list[RewriteRule] = []
    for i in idx:
        rules.append(instantiate("A1", i=i, order=1))
        rules.append(instantiate("A1", i=i, order=-1))
    for i in idx:
        for n in idx:
            if abs(n - i) == 1 or n < i:
                continue
            for x in _ALL_KINDS:
                for y in _ALL_KINDS:
                    if n == i and _KIND_CODE[y] <= _KIND_CODE[x]:
                        continue
                    rules.append(instantiate("A2", i=i, x=x, n=n, y=y))
    for i in idx:
        for k in idx:
            if abs(k - i) != 1:
                continue
            for x in _ALL_KINDS:
                rules.append(instantiate("A3", i=i, k=k, x=x))
                rules.append(instantiate("A4", i=i, k=k, x=x))
                rules.append(instantiate("A5", i=i, k=k, x=x))
            rules.append(instantiate("A6", i=i, k=k))
            rules.append(instantiate("A12", i=i, k=k))
            rules.append(instantiate("A14", i=i, k=k))
    for i in idx:
        if i > 2:
            rules.append(instantiate("A7", i=i))
            rules.append(instantiate("A8", i=i))
        rules.append(instantiate("A9", i=i))
        rules.append(instantiate("A10", i=i))
        rules.append(instantiate("A11", i=i))
    for window in range(3, m + 1):
        for base in range(1, m - window + 2):
            for i in range(base, base + window - 1):
                for sign in (1, -1):
                    for x in _ALL_KINDS:
                        rules.append(
                            instantiate("A13", window=window, base=base, i=i, sign=sign, x=x)
                        )
    rules.append(instantiate("C1"))
    for x in _ALL_KINDS:
        rules.append(instantiate("C2", x=x))
    return tuple(rules)


def catalog_by_id(m: int) -> dict[str, list[RewriteRule]]:
    out: dict[str, list[RewriteRule]] = {rid: [] for rid in RULE_IDS}
    for r in rule_catalog(m):
        out[r.rule_id].append(r)
    return out


# -- application -------------------------------------------------------------

def _letters_of(w) -> tuple[Generator, ...]:
    return w.letters


def apply_rule_at(
    w: SurfaceBraidWord | ClosedSurfaceWord,
    rule: RewriteRule,
    position: int,
    direction: str = "LR",
):
    """Apply one rule instance at a letter offset; returns a new word.

    Pattern rules accept open or closed words.  C1 rotates the first letter
    to the back (LR, position 0) or the last to the front (RL, position
    len-1).  C2 appends one letter on a new strand (LR, position len) or
    removes a trailing top-strand letter (RL, position len-1); side
    conditions on closure moves are the caller's concern (see search.replay).
    """
    if direction not in ("LR", "RL"):
        raise ValueError(f"direction must be LR or RL, got {direction!r}")
    closed = isinstance(w, ClosedSurfaceWord)
    word = w.word if closed else w
    letters = word.letters
    n = len(letters)

    if rule.rule_id == "C1":
        if not closed:
            raise ValueError("C1 applies to closed words only")
        if direction == "LR":
            if position != 0 or n == 0:
                raise ValueError("C1 LR rotates the letter at position 0")
            return ClosedSurfaceWord(SurfaceBraidWord(word.strands, letters[1:] + letters[:1]))
        if position != n - 1 or n == 0:
            raise ValueError("C1 RL rotates the letter at the last position")
        return ClosedSurfaceWord(SurfaceBraidWord(word.strands, letters[-1:] + letters[:-1]))

    if rule.rule_id == "C2":
        if not closed:
            raise ValueError("C2 applies to closed words only")
        kind = _KIND_CODE[rule.param("x")]
        if direction == "LR":
            if position != n:
                raise ValueError("C2 LR appends at position len(word)")
            new = SurfaceBraidWord(
                word.strands + 1, letters + (Generator(kind, word.strands),)
            )
            return ClosedSurfaceWord(new)
        if position != n - 1 or n == 0:
            raise ValueError("C2 RL removes the letter at the last position")
        last = letters[-1]
        if last.kind is not kind or last.index != word.strands - 1:
            raise ValueError(
                f"C2 RL expects trailing letter {_CODE_KIND[kind]}{word.strands - 1}, found {last}"
            )
        if word.strands < 2:
            raise ValueError("cannot destabilize below one strand")
        try:
            new = SurfaceBraidWord(word.strands - 1, letters[:-1])
        except ValueError:
            raise ValueError(
                "C2 RL needs the remaining letters to fit on one strand fewer"
            ) from None
        return ClosedSurfaceWord(new)

    src, dst = (rule.lhs, rule.rhs) if direction == "LR" else (rule.rhs, rule.lhs)
    if src is None:
        raise ValueError(f"{rule.rule_id} is not a pattern rule")
    if not 0 <= position <= n - len(src):
        raise ValueError(f"no room for {rule} at position {position}")
    if letters[position : position + len(src)] != src:
        raise ValueError(f"{rule} ({direction}) does not match at position {position}")
    new_letters = letters[:position] + dst + letters[position + len(src) :]
    new_word = SurfaceBraidWord(word.strands, new_letters)
    return ClosedSurfaceWord(new_word) if closed else new_word


# -- certificates ------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class RewriteStep:
    rule: RewriteRule
    direction: str
    position: int
    len_before: int
    len_after: int

    def inverted(self) -> "RewriteStep":
        direction = "RL" if self.direction == "LR" else "LR"
        position = self.position
        if self.rule.rule_id == "C1":
            position = 0 if direction == "LR" else self.len_before - 1
        return RewriteStep(self.rule, direction, position, self.len_after, self.len_before)

    def __str__(self) -> str:
        return f"{self.rule}:{self.direction}@{self.position}"


@dataclasses.dataclass(frozen=True)
class RewriteCertificate:
    """A replayable witness that `start` rewrites to `end`."""

    start: SurfaceBraidWord
    end: SurfaceBraidWord
    steps: tuple[RewriteStep, ...]
    closed: bool = True
    strictness: str = "strict"

    def __len__(self) -> int:
        return len(self.steps)

    def rule_ids(self) -> tuple[str, ...]:
        return tuple(s.rule.rule_id for s in self.steps)

    def inverted(self) -> "RewriteCertificate":
        return RewriteCertificate(
            self.end,
            self.start,
            tuple(s.inverted() for s in reversed(self.steps)),
            self.closed,
            self.strictness,
        )

    def joined(self, other: "RewriteCertificate") -> "RewriteCertificate":
        if self.closed != other.closed:
            raise ValueError("cannot join open and closed certificates")
        if (self.end.strands, self.end.letters) != (other.start.strands, other.start.letters):
            raise ValueError("certificates do not meet")
        strict = "strict" if self.strictness == other.strictness == "strict" else "lax"
        return RewriteCertificate(
            self.start, other.end, self.steps + other.steps, self.closed, strict
        )


def replay_steps(cert: RewriteCertificate):
    """Yield the word after every step, raising on the first mismatch."""
    w = ClosedSurfaceWord(cert.start) if cert.closed else cert.start
    for idx, step in enumerate(cert.steps):
        if len(w.letters) != step.len_before:
            raise ValueError(
                f"step {idx} ({step}) expects length {step.len_before}, word has {len(w.letters)}"
            )
        w = apply_rule_at(w, step.rule, step.position, step.direction)
        if len(w.letters) != step.len_after:
            raise ValueError(f"step {idx} ({step}) produced unexpected length")
        yield w


# -- serialization -----------------------------------------------------------

def certificate_to_json(cert: RewriteCertificate) -> str:
    def word_rec(w: SurfaceBraidWord) -> dict:
        return {"strands": w.strands, "word": format_word(w)}

    return json.dumps(
        {
            "format": "ssb-cert/1",
            "closed": cert.closed,
            "strictness": cert.strictness,
            "start": word_rec(cert.start),
            "end": word_rec(cert.end),
            "steps": [
                {
                    "rule": s.rule.rule_id,
                    "params": dict(s.rule.params),
                    "direction": s.direction,
                    "position": s.position,
                    "len_before": s.len_before,
                    "len_after": s.len_after,
                }
                for s in cert.steps
            ],
        },
        indent=2,
    )


def certificate_from_json(text: str) -> RewriteCertificate:
    data = json.loads(text)
    if data.get("format") != "ssb-cert/1":
        raise ValueError("not a rewrite certificate payload")
    start = parse_word(data["start"]["word"], data["start"]["strands"])
    end = parse_word(data["end"]["word"], data["end"]["strands"])
    steps = tuple(
        RewriteStep(
            instantiate(s["rule"], **s["params"]),
            s["direction"],
            s["position"],
            s["len_before"],
            s["len_after"],
        )
        for s in data["steps"]
    )
    return RewriteCertificate(start, end, steps, data["closed"], data["strictness"])
