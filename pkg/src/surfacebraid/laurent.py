"""Integer Laurent polynomials in one variable A."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """An integer-coefficient polynomial in A and A^-1.

    Immutable.  Zero coefficients are never stored, so equality and hashing
    are structural.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, coef in items:
            acc[exp] = acc.get(exp, 0) + coef
        object.__setattr__(self, "_coeffs", {e: c for e, c in acc.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def monomial(cls, coef: int, exp: int = 0) -> "LaurentPolynomial":
        return cls({exp: coef})

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs with exponents ascending."""
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exp(self) -> int:
        return min(self._coeffs)

    def max_exp(self) -> int:
        return max(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        return self + (-other if isinstance(other, LaurentPolynomial) else -LaurentPolynomial({0: other}))

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "LaurentPolynomial":
        if exp < 0:
            raise ValueError("negative powers of a general Laurent polynomial are not defined")
        acc = ONE
        base = self
        while exp:
            if exp & 1:
                acc = acc * base
            exp >>= 1
            base = base * base
        return acc

    def shifted(self, by: int) -> "LaurentPolynomial":
        """Multiply by A^by."""
        return LaurentPolynomial({e + by: c for e, c in self._coeffs.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.pairs():
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}A^{e}"
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self.pairs())!r})"


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial({0: 1})

#: Value of a disjoint unknotted circle.
LOOP = LaurentPolynomial({2: -1, -2: -1})

#: Effect of an R1 kink of the given sign on the bracket.
KINK_POS = LaurentPolynomial({3: -1})
KINK_NEG = LaurentPolynomial({-3: -1})


def unit_power(unit: LaurentPolynomial, exp: int) -> LaurentPolynomial:
    """unit**exp for exp of either sign, where unit is ±A^k."""
    ((e, c),) = unit.pairs()
    if c not in (1, -1):
        raise ValueError("not a unit")
    sign = c if exp % 2 else 1
    return LaurentPolynomial({e * exp: sign})
