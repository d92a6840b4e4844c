"""
Sparse Laurent polynomials in one indeterminate ``v`` with integer coefficients.

Hecke algebra parameters are stored as ``q_s = v^(2 L(s))``; the numerical
algebra over the complex numbers is recovered by ``v -> sqrt(q)``.

>>> v = LaurentInt.monomial(1)
>>> (v**2 - 1) * (v**2 + 1)
v^4 - 1
>>> LaurentInt.monomial(-2).evaluate(1)
1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["LaurentInt"]

Scalar = Union[int, "LaurentInt"]


class LaurentInt:
    """An element of Z[v, v^-1]; immutable, zero coefficients never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # construction -----------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentInt":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentInt":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentInt":
        return cls._raw({exponent: coeff} if coeff else {})

    @staticmethod
    def coerce(x: Scalar) -> "LaurentInt":
        if isinstance(x, LaurentInt):
            return x
        if isinstance(x, int):
            return LaurentInt.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentInt")

    # inspection -------------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_unit(self) -> bool:
        """Units of Z[v, v^-1] are exactly the monomials with coefficient +-1."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def evaluate(self, value):
        """Evaluate at ``value``; integer results when ``value`` is +-1."""
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * value**e
            else:
                total += c * Fraction(1, 1) / Fraction(value) ** (-e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            other = LaurentInt.constant(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            other = LaurentInt.constant(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentInt":
        return LaurentInt.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            if other == 0:
                return LaurentInt._raw({})
            return LaurentInt._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) == 1:
            ((ea, ca),) = a.items()
            return LaurentInt._raw({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentInt._raw({e + eb: c * cb for e, c in a.items()})
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentInt._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentInt":
        if n < 0:
            inv = self.inverse()
            return inv ** (-n)
        result = LaurentInt.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in Z[v, v^-1]")
        ((e, c),) = self._terms.items()
        return LaurentInt._raw({-e: c})

    def shift(self, k: int) -> "LaurentInt":
        """Multiply by ``v^k``."""
        if k == 0:
            return self
        return LaurentInt._raw({e + k: c for e, c in self._terms.items()})

    # comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentInt.constant(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # rendering --------------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        return [[e, self._terms[e]] for e in sorted(self._terms, reverse=True)]

    @classmethod
    def from_json(cls, data) -> "LaurentInt":
        return cls((int(e), int(c)) for e, c in data)

    def is_compound(self) -> bool:
        return len(self._terms) > 1

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                mono = str(abs(c))
            else:
                var = "v" if e == 1 else f"v^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    __str__ = __repr__
