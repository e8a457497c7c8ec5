"""Post-Lie Magnus expansion and its inverse on the single generator ``o``.

``chi`` is defined by ``exp*(chi(f)) = exp(f)`` and ``theta`` by
``exp(theta(f)) = exp*(f)``, where ``exp*`` uses the Grossman-Larson
product.  Each is computed two ways: by its degree recursion and by taking
the logarithm of the other exponential directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .series import (
    Series,
    commutator,
    concat,
    exp_concat,
    exp_gl,
    gl_product,
    graft,
    log_concat,
    log_gl,
)
from .trees import DEFAULT_LABEL

__all__ = [
    "MagnusExpansion",
    "bernoulli",
    "compositions",
    "magnus_by_recursion",
    "magnus_by_log",
    "postlie_magnus",
    "inverse_magnus_by_recursion",
    "inverse_magnus_by_log",
    "inverse_postlie_magnus",
]


@lru_cache(maxsize=None)
def _bernoulli_minus(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, k) * _bernoulli_minus(k) for k in range(n)) / Fraction(n + 1)


def bernoulli(n: int, plus: bool = False) -> Fraction:
    """Bernoulli number ``B_n``.

    The default follows ``x / (e^x - 1)`` so ``B_1 = -1/2``; ``plus=True``
    gives the ``x / (1 - e^-x)`` convention with ``B_1 = +1/2``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    b = _bernoulli_minus(n)
    return -b if plus and n == 1 else b


def compositions(n: int, k: int):
    """Ordered tuples of ``k`` positive integers summing to ``n``."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class MagnusExpansion:
    """Homogeneous components ``1..order`` of an expansion in the generator."""

    order: int
    components: tuple  # Series, degree n at index n-1

    def __getitem__(self, n: int) -> Series:
        if not 1 <= n <= self.order:
            raise KeyError(n)
        return self.components[n - 1]

    def __iter__(self):
        return iter(range(1, self.order + 1))

    def items(self):
        return [(n, self[n]) for n in self]

    def total(self) -> Series:
        out = Series.zero(self.order)
        for c in self.components:
            out = out + c
        return out.truncate(self.order)

    def map_coefficients(self, fn) -> "MagnusExpansion":
        return MagnusExpansion(self.order, tuple(c.map_coefficients(fn) for c in self.components))

    @classmethod
    def from_series(cls, s: Series, order: int | None = None) -> "MagnusExpansion":
        order = s.order if order is None else order
        return cls(order, tuple(s.part(n).truncate(order) for n in range(1, order + 1)))


def _gen(order, label):
    return Series.generator(order, label)


# chi ------------------------------------------------------------------------


def magnus_by_recursion(order: int, label: str = DEFAULT_LABEL) -> MagnusExpansion:
    r"""``chi^(n) = f^n/n! - sum_{k>=2} 1/k! sum_{p1+..+pk=n} chi^(p1) * ... * chi^(pk)``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    f = _gen(order, label)
    power = [Series.one(order), f]
    for n in range(2, order + 1):
        power.append(concat(power[-1], f))
    chi: dict[int, Series] = {1: f}
    # prods[k][n]: sum over compositions of n into k parts of the GL product
    prods: dict[int, dict[int, Series]] = {1: {1: f}}
    for n in range(2, order + 1):
        total = power[n] / factorial(n)
        for k in range(2, n + 1):
            acc = Series.zero(order)
            for p in range(1, n - k + 2):
                tail = prods[k - 1].get(n - p)
                if tail:
                    acc = acc + gl_product(chi[p], tail)
            prods.setdefault(k, {})[n] = acc
            total = total - acc / factorial(k)
        chi[n] = total
        prods[1][n] = total
    return MagnusExpansion(order, tuple(chi[n] for n in range(1, order + 1)))


def magnus_by_log(order: int, label: str = DEFAULT_LABEL) -> MagnusExpansion:
    """``chi(f) = log*(exp(f))``."""
    return MagnusExpansion.from_series(log_gl(exp_concat(_gen(order, label))), order)


def postlie_magnus(order: int, label: str = DEFAULT_LABEL, cross_check: bool = True) -> MagnusExpansion:
    """Post-Lie Magnus expansion by recursion, optionally checked against the log route."""
    chi = magnus_by_recursion(order, label)
    if cross_check:
        other = magnus_by_log(order, label)
        for n in chi:
            if chi[n] != other[n]:
                raise ArithmeticError(f"Magnus routes disagree in degree {n}")
    return chi


# theta ----------------------------------------------------------------------


def inverse_magnus_by_recursion(order: int, label: str = DEFAULT_LABEL) -> MagnusExpansion:
    """Degree recursion for ``theta`` built from grafted products and adjoint actions.

    The Bernoulli numbers enter with ``B_1 = +1/2``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    f = _gen(order, label)
    theta: dict[int, Series] = {1: f}

    def bern(j):
        return bernoulli(j, plus=True)

    # products[p][m]: sum over compositions of m into p parts of theta^(k1)...theta^(kp)
    products: dict[int, dict[int, Series]] = {}

    def product_sum(p: int, m: int) -> Series:
        table = products.setdefault(p, {})
        if m not in table:
            if p == 1:
                table[m] = theta[m]
            else:
                acc = Series.zero(order)
                for k in range(1, m - p + 2):
                    acc = acc + concat(theta[k], product_sum(p - 1, m - k))
                table[m] = acc
        return table[m]

    def grafted(m: int) -> Series:
        # sum_{p=1}^{m} 1/p! sum_{k1+..+kp=m} (theta^(k1)...theta^(kp)) |> f
        acc = Series.zero(order)
        for p in range(1, m + 1):
            acc = acc + graft(product_sum(p, m), f) / factorial(p)
        return acc

    def ad_chain(m: int, arg: Series) -> Series:
        # sum_{q=1}^{m} B_q/q! sum_{k1+..+kq=m} ad_theta^(k1) ... ad_theta^(kq) (arg)
        # ad_sum[q][s] = sum over compositions of s into q parts of the ad-product applied to arg
        ad_sum: dict[int, dict[int, Series]] = {0: {0: arg}}
        acc = Series.zero(order)
        for q in range(1, m + 1):
            layer = {}
            for s in range(q, m + 1):
                term = Series.zero(order)
                for k in range(1, s - q + 2):
                    inner = ad_sum[q - 1].get(s - k)
                    if inner is not None and inner:
                        term = term + commutator(theta[k], inner)
                layer[s] = term
            ad_sum[q] = layer
            b = bern(q)
            if b:
                acc = acc + layer[m] * (b / factorial(q))
        return acc

    for n in range(2, order + 1):
        total = grafted(n - 1)
        total = total + ad_chain(n - 1, f)
        for j in range(2, n):
            total = total + ad_chain(j - 1, grafted(n - j))
        theta[n] = total / n
    return MagnusExpansion(order, tuple(theta[n] for n in range(1, order + 1)))


def inverse_magnus_by_log(order: int, label: str = DEFAULT_LABEL) -> MagnusExpansion:
    """``theta(f) = log(exp*(f))``."""
    return MagnusExpansion.from_series(log_concat(exp_gl(_gen(order, label))), order)


def inverse_postlie_magnus(order: int, label: str = DEFAULT_LABEL, cross_check: bool = True) -> MagnusExpansion:
    theta = inverse_magnus_by_recursion(order, label)
    if cross_check:
        other = inverse_magnus_by_log(order, label)
        for n in theta:
            if theta[n] != other[n]:
                raise ArithmeticError(f"inverse Magnus routes disagree in degree {n}")
    return theta
