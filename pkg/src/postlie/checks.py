"""Exhaustive checks of the Hopf and post-Lie identities on basis forests.

Every routine runs over all forests (or trees) whose total degree stays
within a bound and returns a :class:`~postlie.report.Report` with one
entry per identity, recording the number of cases and the first failure.
"""

from __future__ import annotations

from itertools import product

from .report import Report
from .series import (
    Series,
    _tensor,
    commutator,
    concat,
    counit,
    gl_antipode,
    gl_product,
    gl_product_via_bplus,
    graft,
    unshuffle,
)
from .trees import enumerate_forests, enumerate_trees, serialize

__all__ = [
    "basis",
    "check_graft_extension",
    "check_hopf_compatibility",
    "check_gl",
    "check_postlie_axioms",
    "hopf_suite",
    "glf_suite",
]


def basis(max_degree: int, min_degree: int = 0, trees_only: bool = False) -> list:
    """Basis series, one per forest of degree ``min_degree..max_degree``."""
    out = []
    for n in range(min_degree, max_degree + 1):
        items = enumerate_trees(n) if trees_only else enumerate_forests(n)
        for f in items:
            out.append(Series({f: 1}, max_degree))
    return out


def _degree(s: Series) -> int:
    return max((sum(t.degree for t in f) for f in s), default=0)


def _tuples(max_total: int, k: int, min_degree=0, trees_only=False):
    """All ``k``-tuples of basis elements with total degree ``<= max_total``."""
    elems = basis(max_total, min_degree, trees_only)
    deg = [_degree(e) for e in elems]
    for idx in product(range(len(elems)), repeat=k):
        if sum(deg[i] for i in idx) <= max_total:
            yield tuple(elems[i] for i in idx)


def _name(s: Series) -> str:
    return " ".join(serialize(f) or "1" for f in s)


class _Tally:
    def __init__(self, report: Report, label: str):
        self.report, self.label = report, label
        self.count, self.witness = 0, None

    def __call__(self, ok: bool, *args):
        self.count += 1
        if not ok and self.witness is None:
            self.witness = ", ".join(_name(a) for a in args)

    def done(self):
        detail = f"{self.count} cases" if self.witness is None else f"first failure at {self.witness}"
        self.report.add(self.label, self.witness is None, detail)


def _coproduct_of_pair(x: Series, y: Series) -> dict:
    # (X_(1) |> Y_(1)) (x) (X_(2) |> Y_(2)) as a merged tensor
    triples = []
    for a1, a2, c in unshuffle(x):
        for b1, b2, d in unshuffle(y):
            left = graft(Series({a1: 1}, x.order), Series({b1: 1}, y.order))
            right = graft(Series({a2: 1}, x.order), Series({b2: 1}, y.order))
            for f, m in left.items():
                for g, n in right.items():
                    triples.append((f, g, c * d * m * n))
    return _tensor(triples)


def check_graft_extension(max_degree: int = 6) -> Report:
    """Unit, ``xX |> Y`` and ``X |> YZ`` rules for the extended grafting."""
    report = Report("graft-extension")
    one = Series.one(max_degree)

    tally = _Tally(report, "1 |> Y = Y")
    for (y,) in _tuples(max_degree, 1):
        tally(graft(one, y) == y, y)
    tally.done()

    tally = _Tally(report, "X |> 1 = e(X) 1")
    for (x,) in _tuples(max_degree, 1):
        tally(graft(x, one) == one * counit(x), x)
    tally.done()

    tally = _Tally(report, "xX |> Y = x |> (X |> Y) - (x |> X) |> Y")
    trees = basis(max_degree, 1, trees_only=True)
    for x in trees:
        dx = _degree(x)
        for X, Y in _tuples(max_degree - dx, 2):
            lhs = graft(concat(x, X), Y)
            rhs = graft(x, graft(X, Y)) - graft(graft(x, X), Y)
            tally(lhs == rhs, x, X, Y)
    tally.done()

    tally = _Tally(report, "X |> YZ = (X_(1) |> Y)(X_(2) |> Z)")
    for X, Y, Z in _tuples(max_degree, 3):
        lhs = graft(X, concat(Y, Z))
        rhs = Series.zero(max_degree)
        for a, b, c in unshuffle(X):
            rhs = rhs + concat(graft(Series({a: c}, max_degree), Y), graft(Series({b: 1}, max_degree), Z))
        tally(lhs == rhs, X, Y, Z)
    tally.done()
    return report


def check_hopf_compatibility(max_degree: int = 5, assoc_degree: int = 6) -> Report:
    """Coproduct and counit compatibility of ``|>``, and ``X |> (Y |> Z) = (X * Y) |> Z``."""
    report = Report("hopf")
    t_cop = _Tally(report, "D(X |> Y) = (X_(1) |> Y_(1)) (x) (X_(2) |> Y_(2))")
    t_eps = _Tally(report, "e(X |> Y) = e(X) e(Y)")
    for X, Y in _tuples(max_degree, 2):
        xy = graft(X, Y)
        t_cop(_tensor(unshuffle(xy)) == _coproduct_of_pair(X, Y), X, Y)
        t_eps(counit(xy) == counit(X) * counit(Y), X, Y)
    t_cop.done()
    t_eps.done()

    tally = _Tally(report, "X |> (Y |> Z) = (X_(1)(X_(2) |> Y)) |> Z")
    for X, Y, Z in _tuples(assoc_degree, 3):
        tally(graft(X, graft(Y, Z)) == graft(gl_product(X, Y), Z), X, Y, Z)
    tally.done()
    return report


def check_gl(max_degree: int = 6) -> Report:
    """Associativity, agreement of the two GL constructions, and the antipode identity."""
    report = Report("grossman-larson")
    one = Series.one(max_degree)

    tally = _Tally(report, "(X * Y) * Z = X * (Y * Z)")
    for X, Y, Z in _tuples(max_degree, 3, min_degree=1):
        tally(gl_product(gl_product(X, Y), Z) == gl_product(X, gl_product(Y, Z)), X, Y, Z)
    tally.done()

    tally = _Tally(report, "X_(1)(X_(2) |> Y) = B-(X |> B+(Y))")
    for X, Y in _tuples(max_degree, 2):
        tally(gl_product(X, Y) == gl_product_via_bplus(X, Y), X, Y)
    tally.done()

    tally = _Tally(report, "X_(1) * S(X_(2)) = e(X) 1")
    for (X,) in _tuples(max_degree, 1):
        acc = Series.zero(max_degree)
        for a, b, c in unshuffle(X):
            acc = acc + gl_product(Series({a: c}, max_degree), gl_antipode(Series({b: 1}, max_degree)))
        tally(acc == one * counit(X), X)
    tally.done()

    tally = _Tally(report, "XY = X_(1) * (S(X_(2)) |> Y)")
    for X, Y in _tuples(max_degree, 2):
        rhs = Series.zero(max_degree)
        for a, b, c in unshuffle(X):
            s = gl_antipode(Series({b: 1}, max_degree))
            rhs = rhs + gl_product(Series({a: c}, max_degree), graft(s, Y))
        tally(concat(X, Y) == rhs, X, Y)
    tally.done()
    return report


def check_postlie_axioms(max_degree: int = 6) -> Report:
    """The two post-Lie axioms on all tree triples, bracket = commutator."""
    report = Report("post-lie")

    def assoc(x, y, z):
        return graft(x, graft(y, z)) - graft(graft(x, y), z)

    t1 = _Tally(report, "x |> [y,z] = [x |> y, z] + [y, x |> z]")
    t2 = _Tally(report, "[x,y] |> z = a(x,y,z) - a(y,x,z)")
    for x, y, z in _tuples(max_degree, 3, min_degree=1, trees_only=True):
        t1(graft(x, commutator(y, z)) == commutator(graft(x, y), z) + commutator(y, graft(x, z)), x, y, z)
        t2(graft(commutator(x, y), z) == assoc(x, y, z) - assoc(y, x, z), x, y, z)
    t1.done()
    t2.done()
    return report


def hopf_suite(max_degree: int = 6) -> Report:
    """Everything above, merged into one report."""
    report = Report("hopf-suite")
    report.merge(check_graft_extension(max_degree))
    report.merge(check_hopf_compatibility(min(max_degree, 5), max_degree))
    report.merge(check_gl(max_degree))
    report.merge(check_postlie_axioms(max_degree))
    return report


def glf_suite(max_degree: int = 6) -> Report:
    report = Report("glf")
    tally = _Tally(report, "X_(1)(X_(2) |> Y) = B-(X |> B+(Y))")
    for X, Y in _tuples(max_degree, 2):
        tally(gl_product(X, Y) == gl_product_via_bplus(X, Y), X, Y)
    tally.done()
    return report


