"""
Resolved tangle words: classical diagrams written over sigma, sigma^-1, e.

After every marked vertex of a surface word is smoothed, what remains is a
word in positive crossings (sigma_i), negative crossings (sigma_i^-1) and
cup-cap pairs (e_i), each acting on strand pair (i, i+1).  Text tokens are
"s1", "S1" (inverse) and "e1", whitespace-separated, with optional positive
"^k" repetition.
"""

from __future__ import annotations

import dataclasses
import re
from enum import IntEnum
from typing import Iterator


class TangleKind(IntEnum):
    SPOS = 0
    SNEG = 1
    E = 2


_TKIND_CHAR = {TangleKind.SPOS: "s", TangleKind.SNEG: "S", TangleKind.E: "e"}
_CHAR_TKIND = {v: k for k, v in _TKIND_CHAR.items()}


@dataclasses.dataclass(frozen=True, order=True)
class TangleLetter:
    kind: TangleKind
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"tangle letter index must be >= 1, got {self.index}")

    @property
    def is_crossing(self) -> bool:
        return self.kind is not TangleKind.E

    def __str__(self) -> str:
        return f"{_TKIND_CHAR[self.kind]}{self.index}"


def sigma(i: int) -> TangleLetter:
    return TangleLetter(TangleKind.SPOS, i)


def sigma_inv(i: int) -> TangleLetter:
    return TangleLetter(TangleKind.SNEG, i)


def e(i: int) -> TangleLetter:
    return TangleLetter(TangleKind.E, i)


@dataclasses.dataclass(frozen=True)
class TangleWord:
    strands: int
    letters: tuple[TangleLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for t in self.letters:
            if t.index > self.strands - 1:
                raise ValueError(f"letter {t} does not fit on {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[TangleLetter]:
        return iter(self.letters)

    def __mul__(self, other: "TangleWord") -> "TangleWord":
        if not isinstance(other, TangleWord):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError("cannot concatenate tangles on different strand counts")
        return TangleWord(self.strands, self.letters + other.letters)

    def crossing_count(self) -> int:
        return sum(1 for t in self.letters if t.is_crossing)

    def __str__(self) -> str:
        return format_tangle(self)


_TTOKEN_RE = re.compile(r"(?P<letter>[sSe])(?P<index>\d+)(\^(?P<power>\d+))?$")


def parse_tangle(text: str, strands: int) -> TangleWord:
    letters: list[TangleLetter] = []
    for tok in text.split():
        m = _TTOKEN_RE.match(tok)
        if m is None:
            raise ValueError(f"unrecognized tangle token {tok!r}")
        t = TangleLetter(_CHAR_TKIND[m.group("letter")], int(m.group("index")))
        letters.extend([t] * int(m.group("power") or 1))
    return TangleWord(strands, tuple(letters))


def format_tangle(t: TangleWord) -> str:
    return " ".join(str(x) for x in t.letters)
