"""Baker-Campbell-Hausdorff series over two abstract letters.

The series is computed as ``log(exp(a) exp(b))`` in the free associative
algebra on the letters ``a`` and ``b`` (words are plain strings), then each
homogeneous component is turned into nested brackets by the
Dynkin-Specht-Wever projection.  The bracket expressions can be evaluated
in any Lie algebra given a bracket callback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "BracketExpr",
    "BchTable",
    "word_mul",
    "word_exp",
    "word_log",
    "bch_words",
    "dynkin_project",
    "bch_table",
    "bch_tilde",
    "evaluate",
    "NotLieError",
]

LETTERS = ("a", "b")


class NotLieError(ValueError):
    """The word polynomial handed to the Dynkin projection is not a Lie element."""


# word polynomials: dict[str, Fraction] ------------------------------------


def _clean(p: dict) -> dict:
    return {w: c for w, c in p.items() if c}


def word_add(p: dict, q: dict, scale=1) -> dict:
    out = dict(p)
    for w, c in q.items():
        out[w] = out.get(w, 0) + scale * c
    return _clean(out)


def word_mul(p: dict, q: dict, order: int) -> dict:
    out: dict = {}
    for u, c in p.items():
        for v, d in q.items():
            if len(u) + len(v) <= order:
                out[u + v] = out.get(u + v, 0) + c * d
    return _clean(out)


def word_exp(p: dict, order: int) -> dict:
    if p.get(""):
        raise ValueError("exp needs zero constant term")
    acc = {"": Fraction(1)}
    for k in range(order, 0, -1):
        acc = word_add({"": Fraction(1)}, word_mul(p, acc, order), Fraction(1, k))
    return acc


def word_log(p: dict, order: int) -> dict:
    if p.get("") != 1:
        raise ValueError("log needs constant term 1")
    y = {w: c for w, c in p.items() if w}
    acc = {"": Fraction(1, order)} if order else {}
    for k in range(order - 1, 0, -1):
        acc = word_add({"": Fraction(1, k)}, word_mul(y, acc, order), -1)
    return word_mul(y, acc, order)


def bch_words(order: int) -> dict:
    """``log(exp(a) exp(b))`` up to word length ``order``."""
    return word_log(word_mul(word_exp({"a": Fraction(1)}, order), word_exp({"b": Fraction(1)}, order), order), order)


# brackets -----------------------------------------------------------------
#
# A bracket is a letter (str) or a pair (left, right) meaning [left, right].


def bracket_degree(br) -> int:
    return 1 if isinstance(br, str) else bracket_degree(br[0]) + bracket_degree(br[1])


def bracket_text(br) -> str:
    if isinstance(br, str):
        return br
    return f"[{bracket_text(br[0])},{bracket_text(br[1])}]"


def _bracket_key(br):
    return (bracket_degree(br), bracket_text(br))


@lru_cache(maxsize=None)
def expand_bracket(br) -> dict:
    """Expand a bracket into words using ``[x, y] = xy - yx``."""
    if isinstance(br, str):
        return {br: 1}
    left, right = expand_bracket(br[0]), expand_bracket(br[1])
    out: dict = {}
    for u, c in left.items():
        for v, d in right.items():
            out[u + v] = out.get(u + v, 0) + c * d
            out[v + u] = out.get(v + u, 0) - c * d
    return _clean(out)


def _canonical(br):
    """Normalize by antisymmetry; returns ``(sign, bracket)`` or ``(0, None)``."""
    if isinstance(br, str):
        return 1, br
    s1, left = _canonical(br[0])
    s2, right = _canonical(br[1])
    if not s1 or not s2:
        return 0, None
    if left == right:
        return 0, None
    if _bracket_key(left) > _bracket_key(right):
        return -s1 * s2, (right, left)
    return s1 * s2, (left, right)


class BracketExpr:
    """Rational linear combination of formal Lie brackets in ``a`` and ``b``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict = {}
        for br, c in (terms or {}).items():
            sign, br = _canonical(br)
            if sign and c:
                out[br] = out.get(br, 0) + sign * Fraction(c)
        self.terms = {br: c for br, c in out.items() if c}

    def degree(self):
        degs = {bracket_degree(br) for br in self.terms}
        if len(degs) > 1:
            raise ValueError("bracket expression is not homogeneous")
        return degs.pop() if degs else None

    def expand(self) -> dict:
        out: dict = {}
        for br, c in self.terms.items():
            for w, m in expand_bracket(br).items():
                out[w] = out.get(w, 0) + c * m
        return _clean(out)

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: _bracket_key(kv[0]))

    def __add__(self, other):
        out = dict(self.terms)
        for br, c in other.terms.items():
            out[br] = out.get(br, 0) + c
        return BracketExpr(out)

    def __neg__(self):
        return BracketExpr({br: -c for br, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return BracketExpr({br: c * scalar for br, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BracketExpr):
            return NotImplemented
        # compare as Lie elements, not as bracket spellings
        return self.expand() == other.expand()

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .formats import coeff_text

        if not self.terms:
            return "0"
        parts = []
        for br, c in self.sorted_items():
            ct = coeff_text(c)
            body = bracket_text(br)
            parts.append(body if ct == "1" else f"{ct} {body}")
        return " + ".join(parts)

    def latex(self) -> str:
        from .formats import coeff_latex

        if not self.terms:
            return "0"
        out = []
        for i, (br, c) in enumerate(self.sorted_items()):
            sign, mag = coeff_latex(c)
            body = bracket_text(br).replace(",", ", ")
            term = f"{mag}{body}" if mag else body
            out.append(f"{sign}{term}" if i == 0 else f" {'-' if sign else '+'} {term}")
        return "".join(out)

    def __repr__(self):
        return f"BracketExpr({self})"


def _right_normed(word: str):
    br = word[-1]
    for letter in reversed(word[:-1]):
        br = (letter, br)
    return br


def _merge_proportional(expr: BracketExpr) -> BracketExpr:
    """Fold brackets that are scalar multiples of each other as Lie elements.

    The first bracket in sorted order is kept as the representative.
    """
    groups: dict = {}
    out: dict = {}
    for br, c in expr.sorted_items():
        words = expand_bracket(br)
        if not words:
            continue
        lead = min(words)
        scale = Fraction(words[lead])
        key = frozenset((w, Fraction(m) / scale) for w, m in words.items())
        rep = groups.get(key)
        if rep is None:
            groups[key] = rep = (br, scale)
        out[rep[0]] = out.get(rep[0], 0) + c * scale / rep[1]
    return BracketExpr(out)


def dynkin_project(poly: dict, check: bool = True) -> BracketExpr:
    """Dynkin-Specht-Wever map ``l1...ln -> (1/n) [l1,[l2,[...,ln]]]``.

    Brackets that come out proportional as Lie elements are then merged.

    ``poly`` must be homogeneous.  With ``check`` the result is expanded
    back into words and compared with ``poly``; a mismatch means the input
    was not a Lie element.
    """
    terms: dict = {}
    degrees = {len(w) for w in poly}
    if len(degrees) > 1:
        raise ValueError("word polynomial is not homogeneous")
    if "" in poly:
        raise NotLieError("constant term is not a Lie element")
    for w, c in poly.items():
        br = _right_normed(w)
        terms[br] = terms.get(br, 0) + Fraction(c) / len(w)
    out = _merge_proportional(BracketExpr(terms))
    if check and out.expand() != _clean(dict(poly)):
        raise NotLieError("input is not a Lie element")
    return out


@dataclass(frozen=True)
class BchTable:
    """Homogeneous components of ``BCH(a, b)`` in bracket form, degrees 1..max_degree."""

    max_degree: int
    components: tuple  # BracketExpr for degrees 1..max_degree

    def __getitem__(self, n: int) -> BracketExpr:
        if not 1 <= n <= self.max_degree:
            raise KeyError(n)
        return self.components[n - 1]

    def __iter__(self):
        return iter(range(1, self.max_degree + 1))

    def items(self):
        return [(n, self[n]) for n in self]

    def tilde(self) -> "BchTable":
        """The same table with the linear part ``a + b`` removed."""
        return BchTable(self.max_degree, (BracketExpr(),) + self.components[1:])


@lru_cache(maxsize=None)
def bch_table(order: int = 7) -> BchTable:
    """Bracketized BCH series up to degree ``order``.

    Cost grows like ``2**order``; degree 8 and above are slow but allowed.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    words = bch_words(order)
    comps = []
    for n in range(1, order + 1):
        comps.append(dynkin_project({w: c for w, c in words.items() if len(w) == n}))
    return BchTable(order, tuple(comps))


def bch_tilde(order: int = 7) -> BchTable:
    """BCH remainder after the linear terms."""
    return bch_table(order).tilde()


def evaluate(expr: BracketExpr, a, b, bracket, cache: dict | None = None):
    """Substitute ``a`` and ``b`` and evaluate brackets with ``bracket(x, y)``.

    Client elements must support ``+`` and multiplication by a ``Fraction``.
    Pass the same ``cache`` dict across calls with the same bindings to
    share sub-bracket evaluations.  Returns ``None`` for an empty expression.
    """
    if cache is None:
        cache = {}
    bindings = {"a": a, "b": b}

    def ev(br):
        hit = cache.get(br)
        if hit is not None:
            return hit
        if isinstance(br, str):
            val = bindings[br]
        else:
            val = bracket(ev(br[0]), ev(br[1]))
        cache[br] = val
        return val

    total = None
    for br, c in expr.sorted_items():
        term = ev(br) * c
        total = term if total is None else total + term
    return total
