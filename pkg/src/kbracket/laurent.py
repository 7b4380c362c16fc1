"""Exact Laurent polynomial arithmetic over the integers.

The single variable is written ``A`` everywhere.  A polynomial is a finite
sum ``sum_e c_e * A**e`` with arbitrary-precision integer coefficients and
integer exponents of either sign.  Values are immutable after construction
and safe to share between threads; every operation returns a new value.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import DegreeUndefinedError

TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class IntLaurent:
    """An integer Laurent polynomial, stored as {exponent: coefficient}.

    Zero coefficients are never stored; the zero polynomial is the empty
    map.  Instances compare by value and are hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[int, int] = {}
        for e, c in items:
            c = data.get(e, 0) + c
            if c:
                data[e] = c
            else:
                data.pop(e, None)
        object.__setattr__(self, "_terms", data)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "IntLaurent":
        return _ZERO

    @staticmethod
    def one() -> "IntLaurent":
        return _ONE

    @staticmethod
    def monomial(coeff: int = 1, exp: int = 0) -> "IntLaurent":
        return IntLaurent({exp: coeff} if coeff else {})

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: "IntLaurent") -> "IntLaurent":
        if not isinstance(other, IntLaurent):
            return NotImplemented
        big, small = self._terms, other._terms
        if len(big) < len(small):
            big, small = small, big
        data = dict(big)
        for e, c in small.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                del data[e]
        return _wrap(data)

    def __neg__(self) -> "IntLaurent":
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "IntLaurent") -> "IntLaurent":
        if not isinstance(other, IntLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["IntLaurent", int]) -> "IntLaurent":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return _wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, IntLaurent):
            return NotImplemented
        data: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    del data[e]
        return _wrap(data)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntLaurent":
        if k < 0:
            raise ValueError("negative powers are not defined for IntLaurent")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntLaurent) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def maxdeg(self) -> int:
        if not self._terms:
            raise DegreeUndefinedError("degree of the zero polynomial is undefined")
        return max(self._terms)

    def mindeg(self) -> int:
        if not self._terms:
            raise DegreeUndefinedError("degree of the zero polynomial is undefined")
        return min(self._terms)

    def spread(self) -> int:
        return self.maxdeg() - self.mindeg()

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in decreasing exponent order."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def exponents(self) -> list[int]:
        return sorted(self._terms, reverse=True)

    # -- variable games -----------------------------------------------------

    def shifted(self, k: int) -> "IntLaurent":
        """Multiply by A**k."""
        return _wrap({e + k: c for e, c in self._terms.items()})

    def mirrored(self) -> "IntLaurent":
        """Substitute A -> A**-1 (exponent negation)."""
        return _wrap({-e: c for e, c in self._terms.items()})

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (e, c) in enumerate(self.terms()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntLaurent({self})"

    # -- serialization --------------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [exponent, coefficient] pairs, decreasing exponents."""
        return [[e, c] for e, c in self.terms()]

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[int]]) -> "IntLaurent":
        return IntLaurent((int(e), int(c)) for e, c in pairs)


def _wrap(data: dict[int, int]) -> IntLaurent:
    p = IntLaurent.__new__(IntLaurent)
    object.__setattr__(p, "_terms", data)
    return p


_ZERO = IntLaurent()
_ONE = IntLaurent({0: 1})

#: The variable itself, for building polynomials in tests and scripts.
A = IntLaurent.monomial(1, 1)

#: -A^2 - A^-2, the weight of one extra state circle.
DELTA = IntLaurent({2: -1, -2: -1})


@lru_cache(maxsize=None)
def delta_power(k: int) -> IntLaurent:
    """Return (-A^2 - A^-2)**k; k must be nonnegative."""
    if k < 0:
        raise ValueError("delta_power needs k >= 0")
    if k == 0:
        return _ONE
    return delta_power(k - 1) * DELTA
