"""Weighted BCH-recursion evaluated over the free post-Lie algebra.

A Rota-Baxter algebra of weight ``w`` carries the post-Lie structure
``[x, y]_w = w [x, y]`` and ``x |> y = [R(x), y]``.  Starting from the free
post-Lie algebra (primitive forest series with the concatenation
commutator as post-Lie bracket), elements of the form ``p + R(r)`` are
closed under the underlying bracket of the algebra:

    [p1, p2]       = (1/w) [p1, p2]
    [R(r1), p2]    = r1 |> p2
    [R(r1), R(r2)] = R([r1, r2] + r1 |> r2 - r2 |> r1)

:class:`LiftedElement` stores the pair ``(p, r)``.  The weight may be a
rational or the formal variable :data:`~postlie.coeffs.LAMBDA`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coeffs import LAMBDA, Laurent, specialize
from .lie import bch_tilde, evaluate
from .magnus import MagnusExpansion, inverse_postlie_magnus, postlie_magnus
from .series import Series, commutator, graft, is_primitive
from .trees import DEFAULT_LABEL

__all__ = [
    "LiftedElement",
    "lifted_bracket",
    "bch_recursion",
    "bch_recursion_inverse",
    "verify_main_theorem",
    "TheoremReport",
    "WrappedPartError",
]


class WrappedPartError(ArithmeticError):
    """The R-component of a BCH evaluation failed to cancel."""


@dataclass(frozen=True)
class LiftedElement:
    """``plain + R(wrapped)`` with both parts primitive series."""

    plain: Series
    wrapped: Series

    @classmethod
    def of(cls, x: Series) -> "LiftedElement":
        return cls(x, Series.zero(x.order))

    @classmethod
    def R(cls, x: Series) -> "LiftedElement":
        return cls(Series.zero(x.order), x)

    @classmethod
    def R_tilde(cls, x: Series, weight) -> "LiftedElement":
        """``(-w id - R)(x)``."""
        return cls(-(x * weight), -x)

    def __add__(self, other):
        return LiftedElement(self.plain + other.plain, self.wrapped + other.wrapped)

    def __neg__(self):
        return LiftedElement(-self.plain, -self.wrapped)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return LiftedElement(self.plain * scalar, self.wrapped * scalar)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.plain) or bool(self.wrapped)

    def truncate(self, order: int) -> "LiftedElement":
        return LiftedElement(self.plain.truncate(order), self.wrapped.truncate(order))


def lifted_bracket(u: LiftedElement, v: LiftedElement, weight=LAMBDA) -> LiftedElement:
    """Bracket of the Rota-Baxter algebra restricted to lifted elements."""
    p1, r1, p2, r2 = u.plain, u.wrapped, v.plain, v.wrapped
    order = min(p1.order, p2.order)
    plain = Series.zero(order)
    if p1 and p2:
        plain = plain + commutator(p1, p2) * (1 / weight)
    if r1 and p2:
        plain = plain + graft(r1, p2)
    if r2 and p1:
        plain = plain - graft(r2, p1)
    wrapped = Series.zero(order)
    if r1 and r2:
        wrapped = commutator(r1, r2) + graft(r1, r2) - graft(r2, r1)
    return LiftedElement(plain, wrapped)


def _weight(weight):
    if isinstance(weight, Laurent):
        return weight
    w = Fraction(weight)
    if not w:
        raise ValueError("the weight must be nonzero")
    return w


def _bch_tilde_lifted(a: LiftedElement, b: LiftedElement, order: int, weight) -> LiftedElement:
    table = bch_tilde(order)
    cache: dict = {}
    total = LiftedElement(Series.zero(order), Series.zero(order))

    def br(x, y):
        return lifted_bracket(x, y, weight)

    for n in range(2, order + 1):
        val = evaluate(table[n], a, b, br, cache)
        if val is not None:
            total = total + val
    return total.truncate(order)


def _check_wrapped(t: LiftedElement, where: str):
    if t.wrapped:
        raise WrappedPartError(f"R-part does not cancel in {where}: {t.wrapped}")


def _generator(order, label):
    return Series.generator(order, label)


def bch_recursion(
    order: int,
    weight=LAMBDA,
    simplified: bool = False,
    x: Series | None = None,
    label: str = DEFAULT_LABEL,
) -> MagnusExpansion:
    """Components of the weighted BCH-recursion ``chi_w``.

    Solves ``chi = x + (1/w) BCH~(R(chi), R~(chi))`` degree by degree, or
    with ``simplified`` the equivalent ``chi = x - (1/w) BCH~(-R(chi), -w x)``,
    which follows from ``exp(R(chi)) exp(R~(chi)) = exp(-w x)``.
    ``x`` defaults to the generator; any primitive series without constant
    term may be passed.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    weight = _weight(weight)
    inv = 1 / weight
    x = _generator(order, label) if x is None else x.truncate(order)
    chi = x
    for k in range(2, order + 1):
        c = chi.truncate(k)
        xk = x.truncate(k)
        if simplified:
            t = _bch_tilde_lifted(-LiftedElement.R(c), LiftedElement.of(-(xk * weight)), k, weight)
            _check_wrapped(t, f"simplified recursion, degree {k}")
            chi = xk - t.plain * inv
        else:
            t = _bch_tilde_lifted(LiftedElement.R(c), LiftedElement.R_tilde(c, weight), k, weight)
            _check_wrapped(t, f"recursion, degree {k}")
            chi = xk + t.plain * inv
    chi = chi.truncate(order)
    return MagnusExpansion.from_series(chi, order)


def bch_recursion_inverse(
    order: int,
    weight=LAMBDA,
    x: Series | None = None,
    label: str = DEFAULT_LABEL,
) -> MagnusExpansion:
    """``chi_w^{-1}(x) = x - (1/w) BCH~(R(x), R~(x))``, evaluated directly."""
    if order < 1:
        raise ValueError("order must be >= 1")
    weight = _weight(weight)
    x = _generator(order, label) if x is None else x.truncate(order)
    t = _bch_tilde_lifted(LiftedElement.R(x), LiftedElement.R_tilde(x, weight), order, weight)
    _check_wrapped(t, "inverse")
    return MagnusExpansion.from_series(x - t.plain * (1 / weight), order)


@dataclass
class TheoremReport:
    """Outcome of comparing the BCH-recursion at weight 1 with the Magnus expansions."""

    order: int
    ok: bool = True
    checked: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)  # (what, degree, difference Series)

    def lines(self) -> list[str]:
        out = []
        for what, n, good in self.checked:
            out.append(f"{what} degree {n}: {'ok' if good else 'MISMATCH'}")
        for what, n, diff in self.mismatches:
            out.append(f"  {what} degree {n} difference: {diff}")
        return out


def verify_main_theorem(order: int = 7, symbolic: bool = False) -> TheoremReport:
    """Check ``chi_1 = chi`` and ``chi_1^{-1} = theta`` degree by degree.

    With ``symbolic`` the recursion runs with a formal weight and is then
    specialized to 1; otherwise the weight is the rational 1 throughout.
    """
    report = TheoremReport(order)
    weight = LAMBDA if symbolic else Fraction(1)
    pairs = [
        ("chi", bch_recursion(order, weight), postlie_magnus(order)),
        ("theta", bch_recursion_inverse(order, weight), inverse_postlie_magnus(order)),
    ]
    for what, ours, ref in pairs:
        ours = ours.map_coefficients(lambda c: specialize(c, 1))
        for n in range(1, order + 1):
            good = ours[n] == ref[n]
            report.checked.append((what, n, good))
            if not good:
                report.ok = False
                report.mismatches.append((what, n, ours[n] - ref[n]))
    return report


def components_primitive(expansion: MagnusExpansion) -> bool:
    return all(is_primitive(expansion[n]) for n in expansion)
