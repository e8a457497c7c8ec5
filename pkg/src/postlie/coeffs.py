"""Exact coefficients: rationals and Laurent polynomials in the weight.

Rational coefficients are plain :class:`fractions.Fraction` (or ``int``).
:class:`Laurent` is a sparse Laurent polynomial in a single formal
variable, written ``L`` in text output and ``\\lambda`` in LaTeX, with
rational coefficients.  It mixes freely with ``int`` and ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Laurent", "LAMBDA", "as_fraction", "specialize", "is_zero"]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Laurent:
    """Immutable sparse Laurent polynomial ``sum c_k L^k``.

    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = as_fraction(c)
                if c:
                    clean[int(k)] = clean.get(int(k), 0) + c
                    if not clean[int(k)]:
                        del clean[int(k)]
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Laurent is immutable")

    @classmethod
    def constant(cls, c) -> "Laurent":
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c=1) -> "Laurent":
        return cls({k: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    @property
    def min_exponent(self):
        return min(self._terms) if self._terms else None

    @property
    def max_exponent(self):
        return max(self._terms) if self._terms else None

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def subs(self, value) -> Fraction:
        """Evaluate at a nonzero rational."""
        value = as_fraction(value)
        if not value and any(k < 0 for k in self._terms):
            raise ZeroDivisionError("negative power of L evaluated at 0")
        return sum((c * value**k for k, c in self._terms.items()), Fraction(0))

    # arithmetic ----------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return _from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return _from_clean({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Laurent):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return _from_clean({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, Laurent):
            if len(other._terms) != 1:
                raise ZeroDivisionError("can only divide by a nonzero monomial")
            (k, c), = other._terms.items()
            return _from_clean({e - k: v / c for e, v in self._terms.items()})
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("negative power of a non-monomial")
            (k, c), = self._terms.items()
            return _from_clean({k * n: Fraction(c) ** n})
        out = Laurent({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                h = hash(self._terms.get(0, 0))
            else:
                h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        return f"Laurent({dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        from .formats import coeff_text

        return coeff_text(self)


def _from_clean(terms: dict) -> Laurent:
    obj = Laurent.__new__(Laurent)
    object.__setattr__(obj, "_terms", terms)
    object.__setattr__(obj, "_hash", None)
    return obj


_ZERO = Laurent()

#: The formal weight variable.
LAMBDA = Laurent({1: 1})


def is_zero(c) -> bool:
    return not c


def specialize(c, value) -> Fraction:
    """Substitute a rational for the weight in ``c``."""
    if isinstance(c, Laurent):
        return c.subs(value)
    return as_fraction(c)
