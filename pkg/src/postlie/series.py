"""Truncated series of planar forests and the Hopf-algebra operations on them.

A :class:`Series` is a finite linear combination of forests, all of degree
at most ``order``.  Products truncate eagerly at the smaller operand order;
higher terms are dropped.

Two associative products live on the same space:

* concatenation of forests (:func:`concat`), with the unshuffle coproduct
  making every tree primitive;
* the Grossman-Larson product ``X * Y = X_(1) (X_(2) |> Y)``
  (:func:`gl_product`), built from extended left grafting :func:`graft`.

Lie elements (primitive series) use the concatenation commutator as bracket.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .trees import (
    DEFAULT_LABEL,
    Tree,
    forest_degree,
    forest_key,
    graft_forests,
    parse,
    unshuffle_forest,
)

__all__ = [
    "Series",
    "concat",
    "commutator",
    "unshuffle",
    "counit",
    "graft",
    "gl_product",
    "gl_product_via_bplus",
    "gl_antipode",
    "exp_concat",
    "log_concat",
    "exp_gl",
    "log_gl",
    "is_primitive",
    "is_grouplike",
]

DEFAULT_ORDER = 8


class Series:
    """Immutable truncated linear combination ``{forest: coefficient}``."""

    __slots__ = ("_terms", "order")

    def __init__(self, terms=None, order: int = DEFAULT_ORDER):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for f, c in items:
                if isinstance(f, Tree):
                    f = (f,)
                elif isinstance(f, str):
                    f = parse(f)
                else:
                    f = tuple(f)
                if forest_degree(f) > order or not c:
                    continue
                s = clean.get(f, 0) + c
                if s:
                    clean[f] = s
                else:
                    clean.pop(f, None)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _raw(cls, terms: dict, order: int) -> "Series":
        # trusted constructor: terms already clean and within order
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "order", order)
        return obj

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls._raw({}, order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls._raw({(): Fraction(1)}, order)

    @classmethod
    def generator(cls, order: int = DEFAULT_ORDER, label: str = DEFAULT_LABEL) -> "Series":
        """The single-vertex tree as a series."""
        return cls({(Tree(label),): Fraction(1)}, order)

    # access --------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, forest):
        if isinstance(forest, Tree):
            forest = (forest,)
        elif isinstance(forest, str):
            forest = parse(forest)
        return self._terms.get(tuple(forest), 0)

    def __bool__(self):
        return bool(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: forest_key(kv[0]))

    def degrees(self) -> set:
        return {forest_degree(f) for f in self._terms}

    def part(self, n: int) -> "Series":
        """Homogeneous component of degree ``n``."""
        return Series._raw(
            {f: c for f, c in self._terms.items() if forest_degree(f) == n}, self.order
        )

    def truncate(self, order: int) -> "Series":
        return Series._raw(
            {f: c for f, c in self._terms.items() if forest_degree(f) <= order}, order
        )

    def with_order(self, order: int) -> "Series":
        return self.truncate(order)

    def map_coefficients(self, fn) -> "Series":
        return Series(((f, fn(c)) for f, c in self._terms.items()), self.order)

    # linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        out = dict(self._terms)
        for f, c in other._terms.items():
            s = out.get(f, 0) + c
            if s:
                out[f] = s
            else:
                out.pop(f, None)
        return Series._raw(out, max(self.order, other.order))

    def __neg__(self):
        return Series._raw({f: -c for f, c in self._terms.items()}, self.order)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Series):
            return NotImplemented
        if not scalar:
            return Series.zero(self.order)
        out = {}
        for f, c in self._terms.items():
            v = c * scalar
            if v:
                out[f] = v
        return Series._raw(out, self.order)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return Series._raw({f: c / scalar for f, c in self._terms.items()}, self.order)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Series({self}, order={self.order})"

    def __str__(self):
        from .formats import series_text

        return series_text(self)


def _bilinear(x: Series, y: Series, forest_op) -> Series:
    """Extend ``forest_op(f, g) -> {forest: mult}`` bilinearly with truncation."""
    order = min(x.order, y.order)
    ydeg = [(g, d, forest_degree(g)) for g, d in y._terms.items()]
    out: dict = {}
    for f, c in x._terms.items():
        df = forest_degree(f)
        if df > order:
            continue
        for g, d, dg in ydeg:
            if df + dg > order:
                continue
            cd = c * d
            for h, m in forest_op(f, g).items():
                out[h] = out.get(h, 0) + cd * m
    return Series._raw({h: v for h, v in out.items() if v}, order)


def _concat_forests(f, g):
    return {f + g: 1}


def concat(x: Series, y: Series) -> Series:
    """Concatenation product, extended bilinearly."""
    return _bilinear(x, y, _concat_forests)


def commutator(x: Series, y: Series) -> Series:
    """The Lie bracket ``xy - yx`` of the free post-Lie algebra."""
    return concat(x, y) - concat(y, x)


def unshuffle(x: Series) -> list:
    """Unshuffle coproduct as a list of ``(left, right, coefficient)`` triples.

    Pairs are not merged; equal pairs can repeat.
    """
    out = []
    for f, c in x._terms.items():
        for a, b in unshuffle_forest(f):
            out.append((a, b, c))
    return out


def _tensor(triples) -> dict:
    acc: dict = {}
    for a, b, c in triples:
        acc[(a, b)] = acc.get((a, b), 0) + c
    return {k: v for k, v in acc.items() if v}


def counit(x: Series):
    return x._terms.get((), 0)


def graft(x: Series, y: Series) -> Series:
    """Extended post-Lie product ``x |> y`` (left grafting of forests)."""
    return _bilinear(x, y, graft_forests)


@lru_cache(maxsize=None)
def _gl_forests(f, g):
    out: dict = {}
    for a, b in unshuffle_forest(f):
        for h, m in graft_forests(b, g).items():
            k = a + h
            out[k] = out.get(k, 0) + m
    return out


def gl_product(x: Series, y: Series) -> Series:
    """Grossman-Larson product ``x_(1) (x_(2) |> y)``."""
    return _bilinear(x, y, _gl_forests)


def _gl_bplus_forests(f, g):
    root = Tree(DEFAULT_LABEL, g)
    out: dict = {}
    for (t,), m in graft_forests(f, (root,)).items():
        out[t.children] = out.get(t.children, 0) + m
    return out


def gl_product_via_bplus(x: Series, y: Series) -> Series:
    """Grossman-Larson product computed as ``B-(f |> B+(g))`` on forests."""
    return _bilinear(x, y, _gl_bplus_forests)


@lru_cache(maxsize=None)
def _antipode_forest(f) -> dict:
    if not f:
        out = {(): 1}
    else:
        # sum_{(f)} f_(1) * S(f_(2)) = 0 with the f_(1) = 1 term isolated
        acc: dict = {}
        for a, b in unshuffle_forest(f):
            if not a:
                continue
            for s, c in _antipode_forest(b).items():
                for h, m in _gl_forests(a, s).items():
                    acc[h] = acc.get(h, 0) - c * m
        out = {h: v for h, v in acc.items() if v}
    return out


def gl_antipode(x: Series) -> Series:
    """Antipode of the Grossman-Larson Hopf algebra."""
    out: dict = {}
    for f, c in x._terms.items():
        for h, m in _antipode_forest(f).items():
            out[h] = out.get(h, 0) + c * m
    return Series._raw({h: v for h, v in out.items() if v}, x.order)


# exponentials and logarithms ---------------------------------------------


def _exp(x: Series, mul) -> Series:
    if counit(x):
        raise ValueError("exp needs a series with zero constant term")
    order = x.order
    one = Series.one(order)
    acc = one
    for k in range(order, 0, -1):
        acc = one + mul(x, acc) / k
    return acc


def _log(x: Series, mul) -> Series:
    if counit(x) != 1:
        raise ValueError("log needs a series with constant term 1")
    order = x.order
    y = x - Series.one(order)
    if order == 0:
        return Series.zero(order)
    one = Series.one(order)
    acc = one / order
    for k in range(order - 1, 0, -1):
        acc = one / k - mul(y, acc)
    return mul(y, acc)


def exp_concat(x: Series) -> Series:
    return _exp(x, concat)


def log_concat(x: Series) -> Series:
    return _log(x, concat)


def exp_gl(x: Series) -> Series:
    return _exp(x, gl_product)


def log_gl(x: Series) -> Series:
    return _log(x, gl_product)


# primitive / group-like tests --------------------------------------------


def is_primitive(x: Series) -> bool:
    expected = _tensor([(f, (), c) for f, c in x._terms.items()] + [((), f, c) for f, c in x._terms.items()])
    return _tensor(unshuffle(x)) == expected


def is_grouplike(x: Series) -> bool:
    order = x.order
    expected = _tensor(
        (f, g, c * d)
        for f, c in x._terms.items()
        for g, d in x._terms.items()
        if forest_degree(f) + forest_degree(g) <= order
    )
    return _tensor(unshuffle(x)) == expected
