"""Published low-order values, written in the post-Lie operations.

Each table is built from ``|>`` (grafting) and ``[ , ]`` (concatenation
commutator) applied to the generator and then expanded into the forest
normal form, so comparisons with computed expansions are exact.  The
tables are built at a generous truncation order so that a term of the
wrong degree shows up instead of being silently dropped.
"""

from __future__ import annotations

from fractions import Fraction as Fr

from .coeffs import LAMBDA
from .lie import BracketExpr
from .series import Series, commutator, graft
from .trees import DEFAULT_LABEL

__all__ = ["magnus_table", "inverse_magnus_table", "weighted_table", "bch_head"]

_ORDER = 8


def _atoms(label):
    f = Series.generator(_ORDER, label)
    g, b = graft, commutator
    ff = g(f, f)
    return f, g, b, ff, g(f, ff), g(ff, f)


def magnus_table(label: str = DEFAULT_LABEL) -> dict:
    """chi^(1..5)."""
    f, g, b, ff, f_ff, ff_f = _atoms(label)
    inner = (
        g(ff, f_ff)
        - g(f, g(ff_f, f))
        - g(f, g(f_ff, f))
        - g(f, g(f, ff_f))
        + 5 * g(f_ff, ff)
        + 5 * g(ff_f, ff)
        + 6 * g(g(ff, ff), f)
        + 3 * g(g(f_ff, f), f)
        + 3 * g(g(f, f_ff), f)
        + 3 * g(g(f, ff_f), f)
        + 3 * g(ff, ff_f)
        + 3 * g(g(ff_f, f), f)
    )
    chi5 = (
        -Fr(1, 720) * g(f, g(f, f_ff))
        + Fr(1, 144) * inner
        + Fr(1, 180) * b(f, b(f, f_ff) - g(f, f_ff))
        - Fr(1, 120) * b(ff, f_ff)
        - Fr(1, 36) * b(f, g(ff, ff))
        - Fr(1, 72) * b(f, g(f, ff_f) + g(f_ff, f) + g(ff_f, f))
        - Fr(1, 360) * b(ff, b(f, ff))
        + Fr(1, 720) * b(f, b(f, b(f, ff)))
    )
    return {
        1: f,
        2: -Fr(1, 2) * ff,
        3: Fr(1, 12) * f_ff + Fr(1, 4) * ff_f + Fr(1, 12) * b(ff, f),
        4: -Fr(1, 12) * (g(ff, ff) + g(f_ff, f) + g(ff_f, f)) + Fr(1, 24) * (b(f, f_ff) + b(f, ff_f)),
        5: chi5,
    }


def inverse_magnus_table(label: str = DEFAULT_LABEL) -> dict:
    """theta^(1..5)."""
    f, g, b, ff, f_ff, ff_f = _atoms(label)
    return {
        1: f,
        2: Fr(1, 2) * ff,
        3: Fr(1, 6) * f_ff + Fr(1, 12) * b(f, ff),
        4: Fr(1, 24) * (g(f, f_ff) + b(f, f_ff)),
        5: Fr(1, 120) * g(f, g(f, f_ff))
        + Fr(1, 80) * b(f, g(f, f_ff))
        + Fr(1, 720) * (b(f, b(f, f_ff)) - b(f, b(f, b(f, ff))))
        + Fr(1, 120) * b(ff, f_ff)
        - Fr(1, 240) * b(ff, b(f, ff)),
    }


def weighted_table(label: str = DEFAULT_LABEL) -> dict:
    """chi_lambda^(1..4) with the weighted bracket written as the commutator.

    The degree-4 entry carries the lambda-dependent coefficients as printed.
    """
    x, g, b, xx, x_xx, xx_x = _atoms(label)
    L = LAMBDA
    return {
        1: x,
        2: -Fr(1, 2) * xx,
        3: Fr(1, 4) * xx_x + Fr(1, 12) * x_xx + Fr(1, 12) * b(xx, x),
        4: g(x, xx_x) * ((L - 1) / 24)
        - g(xx, xx) * ((L + 1) / 24)
        + g(xx_x, x) * ((L - 3) / 24)
        - g(x_xx, x) * ((L + 1) / 24)
        + Fr(1, 24) * b(x, x_xx + xx_x),
    }


def bch_head() -> dict:
    """Degrees 1..4 of BCH(a, b)."""
    return {
        1: BracketExpr({"a": 1, "b": 1}),
        2: BracketExpr({("a", "b"): Fr(1, 2)}),
        3: BracketExpr({("a", ("a", "b")): Fr(1, 12), ("b", ("a", "b")): Fr(-1, 12)}),
        4: BracketExpr({("a", ("b", ("a", "b"))): Fr(-1, 24)}),
    }
