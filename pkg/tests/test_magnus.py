from fractions import Fraction

import pytest

from postlie.magnus import (
    bernoulli,
    compositions,
    inverse_magnus_by_log,
    inverse_magnus_by_recursion,
    inverse_postlie_magnus,
    magnus_by_log,
    magnus_by_recursion,
    postlie_magnus,
)
from postlie.reference import inverse_magnus_table, magnus_table
from postlie.series import (
    Series,
    commutator,
    concat,
    exp_concat,
    exp_gl,
    graft,
    is_primitive,
)

F = Fraction


def test_bernoulli():
    assert [bernoulli(n) for n in range(7)] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30), 0, F(1, 42)]
    assert bernoulli(1, plus=True) == F(1, 2)
    assert bernoulli(2, plus=True) == F(1, 6)
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_bernoulli_generating_function():
    # sum_k B_k x^k / k! * (e^x - 1) = x, coefficientwise
    from math import factorial

    for n in range(1, 10):
        s = sum(bernoulli(k) / factorial(k) / factorial(n - k) for k in range(n))
        assert s == (1 if n == 1 else 0)


def test_compositions():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert len(list(compositions(6, 3))) == 10
    assert list(compositions(0, 0)) == [()]


def test_low_order_components():
    f = Series.generator(5)
    chi = postlie_magnus(3)
    assert chi[1] == f.truncate(3)
    assert chi[2] == Fraction(-1, 2) * graft(f, f)
    theta = inverse_postlie_magnus(3)
    assert theta[2] == Fraction(1, 2) * graft(f, f)
    ff = graft(f, f)
    assert theta[3] == F(1, 6) * graft(f, ff) + F(1, 12) * commutator(f, ff)


def test_reference_tables():
    chi, theta = postlie_magnus(5), inverse_postlie_magnus(5)
    A, B = magnus_table(), inverse_magnus_table()
    for n in range(1, 6):
        assert chi[n] == A[n]
        assert theta[n] == B[n]


@pytest.mark.parametrize("order", [1, 3, 6])
def test_both_routes(order):
    r, l = magnus_by_recursion(order), magnus_by_log(order)
    ir, il = inverse_magnus_by_recursion(order), inverse_magnus_by_log(order)
    for n in range(1, order + 1):
        assert r[n] == l[n]
        assert ir[n] == il[n]


def test_components_primitive_and_homogeneous():
    for exp in (postlie_magnus(6), inverse_postlie_magnus(6)):
        for n, c in exp.items():
            assert is_primitive(c)
            assert {sum(t.degree for t in f) for f in c} == {n}


def test_defining_identities():
    N = 6
    f = Series.generator(N)
    chi = postlie_magnus(N).total()
    theta = inverse_postlie_magnus(N).total()
    assert exp_gl(chi) == exp_concat(f)
    assert exp_concat(theta) == exp_gl(f)


def test_bernoulli_sign_matters():
    # with B_1 = -1/2 the inverse recursion would put -1/12 on [f, f |> f]
    theta3 = inverse_magnus_by_recursion(3)[3]
    f = Series.generator(3)
    assert theta3[next(iter(concat(f, graft(f, f))))] == F(1, 12)


def test_labelled_generator():
    chi = postlie_magnus(3, label="x")
    assert str(next(iter(chi[2]))[0]) == "x(x)"


def test_order_validation():
    with pytest.raises(ValueError):
        postlie_magnus(0)
    with pytest.raises(ValueError):
        inverse_postlie_magnus(0)
