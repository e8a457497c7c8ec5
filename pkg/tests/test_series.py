from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postlie.coeffs import LAMBDA, Laurent
from postlie.formats import (
    coeff_latex,
    emit_latex,
    series_from_json,
    series_latex,
    series_text,
    series_to_json,
)
from postlie.series import (
    Series,
    commutator,
    concat,
    counit,
    exp_concat,
    exp_gl,
    gl_antipode,
    gl_product,
    gl_product_via_bplus,
    graft,
    is_grouplike,
    is_primitive,
    log_concat,
    log_gl,
    unshuffle,
)
from postlie.series import _tensor
from postlie.trees import enumerate_forests

N = 6
one = Series.one(N)
f = Series.generator(N)


def S(*pairs, order=N):
    return Series(list(pairs), order)


# basics -----------------------------------------------------------------------


def test_series_invariants():
    s = S(("o", 1), ("o", -1), ("o(o)", 2))
    assert s.terms == {S(("o(o)", 1)).sorted_items()[0][0]: 2}
    assert len(Series({"o(o(o))": 1}, 2)) == 0  # above the order
    assert (f + Series.generator(3)).order == N
    assert concat(f, Series.generator(3)).order == 3


def test_concat_examples():
    assert concat(one, f) == f
    assert concat(f, f) == S(("o o", 1))
    assert concat(f + S(("o(o)", 1)), f) == S(("o o", 1), ("o(o) o", 1))


def test_unshuffle_examples():
    assert _tensor(unshuffle(f)) == {((f_ := next(iter(f))), ()): 1, ((), f_): 1}
    assert _tensor(unshuffle(one)) == {((), ()): 1}
    ff = next(iter(S(("o o", 1))))
    dot = next(iter(f))
    assert _tensor(unshuffle(S(("o o", 1)))) == {(ff, ()): 1, (dot, dot): 2, ((), ff): 1}


def test_counit():
    assert counit(one) == 1
    assert counit(f) == 0
    assert counit(3 * one + 2 * f) == 3


def test_graft_examples():
    assert graft(f, f) == S(("o(o)", 1))
    assert graft(S(("o o(o)", 1)), one) == Series.zero(N)
    assert graft(5 * one, f) == 5 * f
    ff = S(("o o", 1))
    assert graft(ff, f) == graft(f, graft(f, f)) - graft(graft(f, f), f)
    # both trees land on the root, in order: a single planar tree
    assert graft(ff, f) == S(("o(o o)", 1))


def test_gl_examples():
    for y in (f, S(("o(o)", 1)), S(("o o", 1))):
        assert gl_product(f, y) == graft(f, y) + concat(f, y)
    assert gl_product(f, f) == S(("o(o)", 1), ("o o", 1))
    assert gl_product(one, S(("o(o) o", 3))) == S(("o(o) o", 3))
    assert gl_product_via_bplus(f, f) == gl_product(f, f)
    g = S(("o(o) o", 1))
    assert gl_product_via_bplus(one, g) == g
    assert gl_product_via_bplus(g, one) == g


def test_antipode_examples():
    assert gl_antipode(one) == one
    assert gl_antipode(f) == -f
    lhs = concat(f, f)
    rhs = Series.zero(N)
    for a, b, c in unshuffle(f):
        rhs = rhs + gl_product(Series({a: c}, N), graft(gl_antipode(Series({b: 1}, N)), f))
    assert lhs == rhs == S(("o o", 1))


def test_exp_log_examples():
    assert exp_concat(Series.zero(3)) == Series.one(3)
    assert exp_concat(Series.generator(2)) == S(("1", 1), ("o", 1), ("o o", Fraction(1, 2)), order=2)
    assert exp_gl(Series.generator(2)) == S(("1", 1), ("o", 1), ("o o", Fraction(1, 2)), ("o(o)", Fraction(1, 2)), order=2)
    assert log_concat(exp_concat(f)) == f
    assert log_gl(exp_gl(f)) == f
    assert log_gl(one) == Series.zero(N)
    with pytest.raises(ValueError):
        exp_concat(one)
    with pytest.raises(ValueError):
        log_gl(f)


def test_primitive_and_grouplike():
    assert is_primitive(f)
    assert not is_primitive(S(("o o", 1)))
    assert is_primitive(commutator(f, S(("o(o)", 1))))
    assert is_grouplike(exp_concat(f))
    assert is_grouplike(exp_gl(f))
    assert not is_grouplike(one + f)


# properties on random series ---------------------------------------------------

_forests = [fo for n in range(1, 4) for fo in enumerate_forests(n)]
_trees = [fo for fo in _forests if len(fo) == 1]


@st.composite
def series(draw, max_terms=3, order=N):
    terms = draw(st.lists(st.tuples(st.sampled_from(_forests), st.integers(-3, 3)), max_size=max_terms))
    return Series(terms, order)


@settings(max_examples=30, deadline=None)
@given(series(), series(), series())
def test_gl_associative_random(x, y, z):
    assert gl_product(gl_product(x, y), z) == gl_product(x, gl_product(y, z))


@settings(max_examples=30, deadline=None)
@given(series(), series())
def test_gl_routes_agree_random(x, y):
    assert gl_product(x, y) == gl_product_via_bplus(x, y)


@settings(max_examples=25, deadline=None)
@given(series(max_terms=2), series(max_terms=2), series(max_terms=2))
def test_graft_module_property(x, y, z):
    assert graft(x, graft(y, z)) == graft(gl_product(x, y), z)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(_trees), st.integers(-2, 2)), max_size=3))
def test_exponentials_of_primitives_are_grouplike(terms):
    # commutators of trees are primitive
    base = Series(terms, 5)
    p = commutator(f.truncate(5), base) + f.truncate(5)
    assert is_primitive(p)
    assert is_grouplike(exp_concat(p))
    assert is_grouplike(exp_gl(p))
    assert log_concat(exp_concat(p)) == p
    assert log_gl(exp_gl(p)) == p


# formats ------------------------------------------------------------------------


def test_text_format():
    assert series_text(Series.zero(3)) == "0"
    assert series_text(Fraction(-1, 2) * S(("o(o)", 1))) == "-1/2 * o(o)"
    s = S(("o", 1), ("o o(o)", Fraction(1, 12)))
    assert series_text(s) == "o + 1/12 * o o(o)"
    lam = S(("o(o)", (LAMBDA - 1) / 24))
    assert series_text(lam) == "((1/24)*L^1 + (-1/24)*L^0) * o(o)"


def test_latex_format():
    assert series_latex(S(("o o", Fraction(1, 2)))) == r"\frac{1}{2}\, o\, o"
    assert series_latex(Series.zero(2)) == "0"
    assert emit_latex(Series.zero(2)) == "0"
    assert coeff_latex((LAMBDA - 1) / 24) == ("", r"\frac{\lambda-1}{24}")
    assert coeff_latex(-(LAMBDA + 1) / 24) == ("-", r"\frac{\lambda+1}{24}")
    assert coeff_latex(Fraction(-3)) == ("-", "3")


def test_json_round_trip():
    s = S(("o", 1), ("o o(o)", Fraction(-1, 12)), ("1", 2))
    text = series_to_json(s)
    assert '"forest": "o o(o)"' in text and '"num": -1' in text
    back = series_from_json(text)
    assert back == s and back.order == s.order
    lam = S(("o(o)", (LAMBDA - 3) / 24))
    assert series_from_json(series_to_json(lam)) == lam
    assert isinstance(series_from_json(series_to_json(lam))["o(o)"], Laurent)
