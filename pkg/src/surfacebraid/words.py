"""
Words in the surface singular braid monoid on m numbered strands.

Generators, one family per adjacent strand pair (i, i+1) for 1 <= i <= m-1:

    a_i, b_i      the two kinds of marked (singular) vertices; not invertible
    c_i, c_i^-1   positive and negative braid crossings

A word is a finite generator sequence; the empty word is the monoid identity.
Words are immutable values, safe to share; every operation returns a new word.
A closed word additionally remembers that its m strands are joined around the
braid axis, written [w]_m.

Text form (whitespace-separated tokens):

    token := atom ['^' SIGNED_INT]
    atom  := ('a'|'b'|'c') INT | 'C' INT | 'delta(' INT ',' INT ')'

"C3" abbreviates "c3^-1".  Negative powers are legal only for crossings and
for delta.  "delta(s,base)" is the positive half twist of the s consecutive
strands base..base+s-1, fixed as the ascending-block positive word
(c_base)(c_{base+1} c_base)(c_{base+2} c_{base+1} c_base)...; a negative power
expands to copies of its formal inverse.  A closed word reads "[ tokens ]_m".

Parsing performs no rewriting: "c1 C1" is a word of length two.
"""

from __future__ import annotations

import dataclasses
import re
from enum import IntEnum
from typing import Iterator, Sequence


class Kind(IntEnum):
    A = 0
    B = 1
    C = 2
    CINV = 3


_KIND_CHAR = {Kind.A: "a", Kind.B: "b", Kind.C: "c", Kind.CINV: "C"}
_CHAR_KIND = {v: k for k, v in _KIND_CHAR.items()}

#: Kinds that are invertible (crossings).
CROSSING_KINDS = (Kind.C, Kind.CINV)


class WordSyntaxError(ValueError):
    """Raised on malformed word text; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclasses.dataclass(frozen=True, order=True)
class Generator:
    """One letter: a kind and the lower strand index of the pair it acts on."""

    kind: Kind
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")

    @property
    def is_crossing(self) -> bool:
        return self.kind in CROSSING_KINDS

    def inverse(self) -> "Generator":
        if self.kind is Kind.C:
            return Generator(Kind.CINV, self.index)
        if self.kind is Kind.CINV:
            return Generator(Kind.C, self.index)
        raise ValueError(f"{self} is not invertible")

    def packed(self) -> int:
        return (self.index << 2) | int(self.kind)

    @classmethod
    def from_packed(cls, code: int) -> "Generator":
        return cls(Kind(code & 3), code >> 2)

    def __str__(self) -> str:
        return f"{_KIND_CHAR[self.kind]}{self.index}"


def a(i: int) -> Generator:
    return Generator(Kind.A, i)


def b(i: int) -> Generator:
    return Generator(Kind.B, i)


def c(i: int) -> Generator:
    return Generator(Kind.C, i)


def cinv(i: int) -> Generator:
    return Generator(Kind.CINV, i)


@dataclasses.dataclass(frozen=True)
class SurfaceBraidWord:
    """A word on `strands` strands.  Empty letter sequence is the identity."""

    strands: int
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g.index > self.strands - 1:
                raise ValueError(
                    f"letter {g} does not fit on {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __mul__(self, other: "SurfaceBraidWord") -> "SurfaceBraidWord":
        if not isinstance(other, SurfaceBraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return SurfaceBraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, exp: int) -> "SurfaceBraidWord":
        if exp < 0:
            return formal_inverse(self) ** (-exp)
        return SurfaceBraidWord(self.strands, self.letters * exp)

    def on_strands(self, strands: int) -> "SurfaceBraidWord":
        """The same letter sequence re-read on a different strand count."""
        return SurfaceBraidWord(strands, self.letters)

    def is_crossing_only(self) -> bool:
        return all(g.is_crossing for g in self.letters)

    def saddle_count(self) -> int:
        """Number of marked-vertex letters (kinds a and b)."""
        return sum(1 for g in self.letters if not g.is_crossing)

    def packed(self) -> bytes:
        return bytes(g.packed() for g in self.letters)

    @classmethod
    def from_packed(cls, strands: int, data: bytes) -> "SurfaceBraidWord":
        return cls(strands, tuple(Generator.from_packed(x) for x in data))

    def closed(self) -> "ClosedSurfaceWord":
        return ClosedSurfaceWord(self)

    def __str__(self) -> str:
        return format_word(self)


@dataclasses.dataclass(frozen=True)
class ClosedSurfaceWord:
    """A word together with the closure joining all its strands around."""

    word: SurfaceBraidWord

    @property
    def closure_strands(self) -> int:
        return self.word.strands

    @property
    def letters(self) -> tuple[Generator, ...]:
        return self.word.letters

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_closed_word(self)


def mirror_word(w: SurfaceBraidWord) -> SurfaceBraidWord:
    """Reverse the word and invert every crossing; marked vertices keep kind."""
    out = tuple(
        g.inverse() if g.is_crossing else g for g in reversed(w.letters)
    )
    return SurfaceBraidWord(w.strands, out)


def formal_inverse(w: SurfaceBraidWord) -> SurfaceBraidWord:
    """Inverse of a crossing-only word: reversed, every crossing inverted.

    Marked vertices are not invertible, so their presence is an error.
    """
    for g in w.letters:
        if not g.is_crossing:
            raise ValueError(f"word contains non-invertible letter {g}")
    return mirror_word(w)


def build_half_twist(s: int, base: int = 1, strands: int | None = None) -> SurfaceBraidWord:
    """Positive half twist of s consecutive strands anchored at `base`.

    Spelled as the ascending-block positive word, length s(s-1)/2; the induced
    strand permutation reverses the window base..base+s-1.
    """
    if s < 1:
        raise ValueError(f"half twist needs at least one strand, got s={s}")
    if base < 1:
        raise ValueError(f"base strand must be >= 1, got {base}")
    m = strands if strands is not None else max(base + s - 1, 1)
    if base + s - 1 > m:
        raise ValueError(
            f"half twist window {base}..{base + s - 1} exceeds {m} strands"
        )
    letters = []
    for r in range(1, s):
        for j in range(r, 0, -1):
            letters.append(Generator(Kind.C, base + j - 1))
    return SurfaceBraidWord(m, tuple(letters))


def crossing_permutation(w: SurfaceBraidWord) -> tuple[int, ...]:
    """Strand permutation induced by the crossings, as images of 1..m.

    Each c/c^-1 letter acts as the transposition of its strand pair; marked
    vertices do not permute strands.
    """
    pos = list(range(w.strands + 1))  # pos[p] = current position of strand p
    for g in w.letters:
        if g.is_crossing:
            i = g.index
            for p in range(1, w.strands + 1):
                if pos[p] == i:
                    pos[p] = i + 1
                elif pos[p] == i + 1:
                    pos[p] = i
    return tuple(pos[1:])


_TOKEN_RE = re.compile(
    r"(?P<letter>[abcC])(?P<index>\d+)|delta\((?P<size>\d+),(?P<base>\d+)\)"
)
_POWER_RE = re.compile(r"\^(?P<power>-?\d+)")


def parse_word(text: str, strands: int) -> SurfaceBraidWord:
    """Parse the word grammar; macros (powers, delta) are expanded."""
    if strands < 1:
        raise ValueError(f"strand count must be >= 1, got {strands}")
    letters: list[Generator] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unrecognized token {text[pos:].split()[0]!r}", pos)
        atom_end = m.end()
        power = 1
        pm = _POWER_RE.match(text, atom_end)
        if pm is not None:
            power = int(pm.group("power"))
            atom_end = pm.end()
        if atom_end < n and not text[atom_end].isspace():
            raise WordSyntaxError(f"junk after token {text[pos:atom_end]!r}", atom_end)

        if m.group("letter") is not None:
            kind = _CHAR_KIND[m.group("letter")]
            index = int(m.group("index"))
            if not 1 <= index <= strands - 1:
                raise WordSyntaxError(
                    f"index {index} out of range for {strands} strands", pos
                )
            g = Generator(kind, index)
            if power < 0:
                if not g.is_crossing:
                    raise WordSyntaxError(
                        f"negative power on non-invertible letter {g}", pos
                    )
                g = g.inverse()
                power = -power
            letters.extend([g] * power)
        else:
            size = int(m.group("size"))
            base = int(m.group("base"))
            try:
                block = build_half_twist(size, base, strands)
            except ValueError as exc:
                raise WordSyntaxError(str(exc), pos) from None
            if power < 0:
                block = formal_inverse(block)
                power = -power
            letters.extend(block.letters * power)
        pos = atom_end
    return SurfaceBraidWord(strands, tuple(letters))


def format_word(w: SurfaceBraidWord) -> str:
    """Canonical text form: one plain token per letter."""
    return " ".join(str(g) for g in w.letters)


_CLOSED_RE = re.compile(r"^\s*\[(?P<body>.*)\]_(?P<strands>\d+)\s*$", re.DOTALL)


def parse_closed_word(text: str) -> ClosedSurfaceWord:
    """Parse the closure syntax "[ tokens ]_m"."""
    m = _CLOSED_RE.match(text)
    if m is None:
        raise WordSyntaxError('closed word must look like "[ tokens ]_m"', 0)
    strands = int(m.group("strands"))
    return ClosedSurfaceWord(parse_word(m.group("body"), strands))


def format_closed_word(w: ClosedSurfaceWord) -> str:
    return f"[{format_word(w.word)}]_{w.closure_strands}"
