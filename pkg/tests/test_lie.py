from fractions import Fraction

import pytest

from postlie.lie import (
    BracketExpr,
    NotLieError,
    bch_table,
    bch_tilde,
    bch_words,
    dynkin_project,
    evaluate,
    word_exp,
    word_log,
    word_mul,
)
from postlie.series import Series, commutator, concat, is_primitive

F = Fraction


def test_bch_low_degrees():
    t = bch_table(6)
    assert t[1] == BracketExpr({"a": 1, "b": 1})
    assert t[2] == BracketExpr({("a", "b"): F(1, 2)})
    assert t[3] == BracketExpr({("a", ("a", "b")): F(1, 12), ("b", ("a", "b")): F(-1, 12)})
    assert t[4] == BracketExpr({("a", ("b", ("a", "b"))): F(-1, 24)})
    # the degree-4 component is stored as a single bracket
    assert len(t[4].terms) == 1
    assert str(t[2]) == "1/2 [a,b]"


def test_bch_tilde():
    t = bch_tilde(5)
    assert not t[1]
    assert t[2] == BracketExpr({("a", "b"): F(1, 2)})
    assert t[4] == BracketExpr({("a", ("b", ("a", "b"))): F(-1, 24)})


def test_exp_of_bch_reproduces_product():
    n = 6
    words = bch_words(n)
    product = word_mul(word_exp({"a": F(1)}, n), word_exp({"b": F(1)}, n), n)
    assert word_exp(words, n) == product
    assert word_log(product, n) == words


def test_dynkin_examples():
    assert dynkin_project({"ab": 1, "ba": -1}) == BracketExpr({("a", "b"): 1})
    assert dynkin_project({"a": 1}) == BracketExpr({"a": 1})
    with pytest.raises(NotLieError):
        dynkin_project({"ab": 1})
    with pytest.raises(ValueError):
        dynkin_project({"a": 1, "ab": 1})


def test_dynkin_round_trip_every_component():
    t = bch_table(7)
    words = bch_words(7)
    for n in t:
        assert t[n].expand() == {w: c for w, c in words.items() if len(w) == n}


def test_bracket_expr_normalizes_antisymmetry():
    e = BracketExpr({("b", "a"): 1, ("a", "a"): 5})
    assert e.terms == {("a", "b"): -1}
    assert e == -BracketExpr({("a", "b"): 1})


# two single-vertex trees a, b span a free associative algebra under concatenation


def _letter(label, order=8):
    return Series.generator(order, label)


def test_bch_with_zero_and_opposite():
    order = 7
    t = bch_table(order)
    a, b, zero = _letter("a"), _letter("b"), Series.zero(8)
    total_opposite = zero
    for n in t:
        assert evaluate(t[n], a, zero, commutator) == (a if n == 1 else zero)
        assert evaluate(t[n], zero, b, commutator) == (b if n == 1 else zero)
        total_opposite = total_opposite + evaluate(t[n], a, -a, commutator)
    assert total_opposite == zero


def test_evaluate_alternating():
    x = _letter("a") + 2 * _letter("b")
    assert not evaluate(BracketExpr({("a", "b"): 1}), x, x, commutator)
    assert not evaluate(bch_table(2)[2], x, -x, commutator)
    assert evaluate(BracketExpr(), x, x, commutator) is None


def test_evaluate_in_forest_algebra():
    # independent route: substitute into the word form of the component
    order = 5
    a = Series.generator(order)
    b = Series({"o(o)": 1}, order)
    comp = bch_table(3)[3]
    ours = evaluate(comp, a, b, commutator)
    ref = Series.zero(order)
    for w, c in comp.expand().items():
        term = Series.one(order)
        for letter in w:
            term = concat(term, a if letter == "a" else b)
        ref = ref + term * c
    assert ours == ref
    assert is_primitive(ours)
    assert {sum(t.degree for t in f) for f in ours} == {4, 5}
