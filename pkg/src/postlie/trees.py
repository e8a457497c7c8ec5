"""Planar decorated rooted trees and forests.

A :class:`Tree` is a root label plus an ordered tuple of child trees.
Trees are interned, so structurally equal trees are the same object and
can be compared with ``is`` and hashed cheaply.  A forest is a plain
tuple of trees; the empty tuple is the unit forest.

Vertices of a tree are indexed in depth-first pre-order: the root is 0,
then each child subtree in turn from left to right.

Text grammar::

    tree   := label [ "(" tree { " " tree } ")" ]
    label  := [a-z][a-z0-9]*
    forest := tree { " " tree }  |  "1"
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product

__all__ = [
    "Tree",
    "Forest",
    "DEFAULT_LABEL",
    "DOT",
    "ParseError",
    "b_plus",
    "b_minus",
    "butcher_product",
    "graft_at",
    "left_graft",
    "graft_forests",
    "psi",
    "psi_inverse",
    "enumerate_trees",
    "enumerate_forests",
    "forest_degree",
    "forest_key",
    "serialize",
    "parse",
    "parse_tree",
]

DEFAULT_LABEL = "o"
_LABEL_RE = re.compile(r"[a-z][a-z0-9]*\Z")

Forest = tuple  # tuple[Tree, ...]


class Tree:
    """An immutable, interned planar rooted tree."""

    __slots__ = ("label", "children", "degree", "_text", "__weakref__")
    _interned: dict = {}

    def __new__(cls, label: str = DEFAULT_LABEL, children=()):
        children = tuple(children)
        key = (label, children)
        tree = cls._interned.get(key)
        if tree is not None:
            return tree
        if not _LABEL_RE.match(label):
            raise ValueError(f"invalid label {label!r}")
        for c in children:
            if not isinstance(c, Tree):
                raise TypeError(f"child is not a Tree: {c!r}")
        tree = object.__new__(cls)
        object.__setattr__(tree, "label", label)
        object.__setattr__(tree, "children", children)
        object.__setattr__(tree, "degree", 1 + sum(c.degree for c in children))
        object.__setattr__(tree, "_text", None)
        return cls._interned.setdefault(key, tree)

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def __reduce__(self):
        return (Tree, (self.label, self.children))

    def __str__(self):
        text = self._text
        if text is None:
            if self.children:
                inner = " ".join(str(c) for c in self.children)
                text = f"{self.label}({inner})"
            else:
                text = self.label
            object.__setattr__(self, "_text", text)
        return text

    def __repr__(self):
        return f"Tree<{self}>"

    def sort_key(self):
        return (self.degree, str(self))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def vertices(self):
        """Yield the subtrees rooted at each vertex, in pre-order."""
        yield self
        for c in self.children:
            yield from c.vertices()


DOT = Tree(DEFAULT_LABEL)


def forest_degree(forest) -> int:
    return sum(t.degree for t in forest)


def forest_key(forest):
    """Canonical sort key of a forest: (degree, serialized text)."""
    return (forest_degree(forest), serialize(forest))


def b_plus(forest=(), label: str = DEFAULT_LABEL) -> Tree:
    """Graft the trees of ``forest`` onto a new common root."""
    return Tree(label, forest)


def b_minus(tree: Tree) -> tuple:
    """Remove the root, leaving the forest of its branches."""
    return tree.children


def butcher_product(sigma: Tree, tau: Tree) -> Tree:
    """Left Butcher product: ``sigma`` becomes the leftmost branch of ``tau``'s root."""
    return Tree(tau.label, (sigma,) + tau.children)


def graft_at(sigma: Tree, tau: Tree, v: int) -> Tree:
    """Graft ``sigma`` as the leftmost branch at pre-order vertex ``v`` of ``tau``."""
    if not 0 <= v < tau.degree:
        raise IndexError(f"vertex index {v} out of range for a tree of degree {tau.degree}")

    def rec(node: Tree, v: int) -> Tree:
        if v == 0:
            return butcher_product(sigma, node)
        v -= 1
        kids = list(node.children)
        for i, c in enumerate(kids):
            if v < c.degree:
                kids[i] = rec(c, v)
                return Tree(node.label, kids)
            v -= c.degree
        raise AssertionError("unreachable")

    return rec(tau, v)


# Grafting of forests ------------------------------------------------------
#
# X |> Y sums over every map sending the trees of X to vertices of Y; trees
# landing on the same vertex become its leftmost branches, keeping their
# relative order from X.  Results are dicts {Forest: multiplicity}.


def _subsets(n: int):
    """All splits of range(n) into (chosen, rest), order preserved."""
    for mask in range(1 << n):
        yield (
            tuple(i for i in range(n) if mask >> i & 1),
            tuple(i for i in range(n) if not mask >> i & 1),
        )


@lru_cache(maxsize=None)
def _splits(n: int):
    return tuple(_subsets(n))


def unshuffle_forest(forest):
    """Yield ``(left, right)`` pairs of the unshuffle coproduct of a forest."""
    for a, b in _splits(len(forest)):
        yield tuple(forest[i] for i in a), tuple(forest[i] for i in b)


@lru_cache(maxsize=None)
def _graft_on_tree(xs: tuple, tau: Tree):
    out: dict = {}
    for a, b in _splits(len(xs)):
        front = tuple(xs[i] for i in a)
        for g, m in graft_forests(tuple(xs[i] for i in b), tau.children).items():
            t = Tree(tau.label, front + g)
            out[t] = out.get(t, 0) + m
    return out


@lru_cache(maxsize=None)
def graft_forests(xs: tuple, ys: tuple) -> dict:
    """Extended left grafting of forest ``xs`` onto forest ``ys``.

    Returns ``{forest: multiplicity}``.  Grafting onto the empty forest is
    zero unless ``xs`` is empty too.
    """
    if not xs:
        return {ys: 1}
    if not ys:
        return {}
    if len(ys) == 1:
        return {(t,): m for t, m in _graft_on_tree(xs, ys[0]).items()}
    head, rest = ys[0], ys[1:]
    out: dict = {}
    for a, b in _splits(len(xs)):
        left = _graft_on_tree(tuple(xs[i] for i in a), head)
        right = graft_forests(tuple(xs[i] for i in b), rest)
        for t, m1 in left.items():
            for g, m2 in right.items():
                f = (t,) + g
                out[f] = out.get(f, 0) + m1 * m2
    return out


def left_graft(sigma: Tree, tau: Tree) -> dict:
    """Left grafting ``sigma ↘ tau``: the sum of ``graft_at`` over all vertices."""
    return dict(_graft_on_tree((sigma,), tau))


# The magma isomorphism ----------------------------------------------------


def _lin_graft(xs: dict, ys: dict) -> dict:
    out: dict = {}
    for s, c1 in xs.items():
        for t, c2 in ys.items():
            for u, m in _graft_on_tree((s,), t).items():
                out[u] = out.get(u, 0) + c1 * c2 * m
    return {u: c for u, c in out.items() if c}


@lru_cache(maxsize=None)
def _psi(tau: Tree):
    if not tau.children:
        return {tau: 1}
    sigma = tau.children[0]
    rest = Tree(tau.label, tau.children[1:])
    return _lin_graft(_psi(sigma), _psi(rest))


def psi(tau: Tree) -> dict:
    """Image of ``tau`` under the magma morphism taking the left Butcher
    product to left grafting and fixing single vertices.

    Returns a linear combination ``{Tree: int}`` of trees of the same degree.
    """
    return dict(_psi(tau))


@lru_cache(maxsize=None)
def _psi_inverse_table(n: int, alphabet: tuple) -> dict:
    # psi is not triangular in the canonical order, so invert the full
    # degree-n block exactly.
    import sympy

    basis = sorted(_trees(n, alphabet), key=Tree.sort_key)
    index = {t: i for i, t in enumerate(basis)}
    m = sympy.zeros(len(basis), len(basis))
    for j, t in enumerate(basis):
        for s, c in _psi(t).items():
            m[index[s], j] = c
    inv = m.inv()
    out = {}
    for j, t in enumerate(basis):
        col = {}
        for i, s in enumerate(basis):
            if inv[i, j] != 0:
                col[s] = Fraction(int(inv[i, j].p), int(inv[i, j].q))
        out[t] = col
    return out


def _alphabet_of(tau: Tree) -> tuple:
    return tuple(sorted({v.label for v in tau.vertices()}))


def psi_inverse(tau: Tree) -> dict:
    """Preimage of the single tree ``tau`` under :func:`psi`, as ``{Tree: Fraction}``."""
    return dict(_psi_inverse_table(tau.degree, _alphabet_of(tau))[tau])


# Enumeration --------------------------------------------------------------


@lru_cache(maxsize=None)
def _trees(n: int, alphabet: tuple) -> tuple:
    if n < 1:
        return ()
    return tuple(
        Tree(e, f) for e in alphabet for f in _forests(n - 1, alphabet)
    )


@lru_cache(maxsize=None)
def _forests(n: int, alphabet: tuple) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for t, f in product(_trees(k, alphabet), _forests(n - k, alphabet)):
            out.append((t,) + f)
    return tuple(out)


def enumerate_trees(n: int, alphabet=(DEFAULT_LABEL,)) -> list:
    """All planar trees with ``n`` vertices, canonically ordered."""
    return sorted(_trees(n, tuple(alphabet)), key=Tree.sort_key)


def enumerate_forests(n: int, alphabet=(DEFAULT_LABEL,)) -> list:
    """All planar forests of total degree ``n``, canonically ordered."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return sorted(_forests(n, tuple(alphabet)), key=forest_key)


# Text form ----------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def serialize(obj) -> str:
    if isinstance(obj, Tree):
        return str(obj)
    if not obj:
        return "1"
    return " ".join(str(t) for t in obj)


_TOKEN_LABEL = re.compile(r"[a-z][a-z0-9]*")


def parse(text: str) -> tuple:
    """Parse a forest (``"1"`` is the empty forest)."""
    if text == "1":
        return ()
    pos = 0
    trees = []

    def tree(pos):
        m = _TOKEN_LABEL.match(text, pos)
        if not m:
            raise ParseError("expected a label", pos)
        label, pos = m.group(), m.end()
        kids = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            while True:
                kid, pos = tree(pos)
                kids.append(kid)
                if pos < len(text) and text[pos] == " ":
                    pos += 1
                elif pos < len(text) and text[pos] == ")":
                    pos += 1
                    break
                else:
                    raise ParseError("expected ' ' or ')'", pos)
        return Tree(label, kids), pos

    while True:
        t, pos = tree(pos)
        trees.append(t)
        if pos == len(text):
            return tuple(trees)
        if text[pos] != " ":
            raise ParseError("expected ' ' between trees", pos)
        pos += 1


def parse_tree(text: str) -> Tree:
    forest = parse(text)
    if len(forest) != 1:
        raise ParseError("expected exactly one tree", 0)
    return forest[0]
