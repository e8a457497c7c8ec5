"""Text, LaTeX and JSON renderings of coefficients and series.

Text: ``coeff * forest`` terms joined by `` + ``; a unit coefficient is
omitted.  Rationals print as ``p/q``, Laurent coefficients as a sum of
``(p/q)*L^k`` terms in parentheses.

JSON::

    {"order": N, "terms": [{"coeff": {"num": p, "den": q}, "forest": "o o(o)"}, ...]}

with a Laurent coefficient written as ``[[k, num, den], ...]``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

from .coeffs import Laurent
from .trees import parse, serialize

__all__ = [
    "coeff_text",
    "coeff_latex",
    "series_text",
    "series_latex",
    "emit_latex",
    "series_to_json",
    "series_from_json",
    "series_to_dict",
    "series_from_dict",
]


def _frac_text(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def coeff_text(c) -> str:
    if isinstance(c, Laurent):
        if c.is_constant():
            return _frac_text(c.coeff(0))
        parts = [f"({_frac_text(v)})*L^{k}" for k, v in sorted(c.terms.items(), reverse=True)]
        return "(" + " + ".join(parts) + ")"
    return _frac_text(c)


def series_text(s) -> str:
    items = s.sorted_items()
    if not items:
        return "0"
    parts = []
    for f, c in items:
        body = serialize(f)
        ct = coeff_text(c)
        parts.append(body if ct == "1" else f"{ct} * {body}")
    return " + ".join(parts)


# LaTeX ----------------------------------------------------------------------


def _lambda_poly_latex(num: dict) -> str:
    """Integer Laurent polynomial in lambda, descending powers, no outer sign handling."""
    out = []
    for k in sorted(num, reverse=True):
        v = num[k]
        mag = abs(v)
        if k == 0:
            mono = str(mag)
        else:
            var = r"\lambda" if k == 1 else rf"\lambda^{{{k}}}"
            mono = var if mag == 1 else f"{mag}{var}"
        if not out:
            out.append(("-" if v < 0 else "") + mono)
        else:
            out.append(("-" if v < 0 else "+") + mono)
    return "".join(out)


def coeff_latex(c) -> tuple[str, str]:
    """Return ``(sign, magnitude)`` of a coefficient in LaTeX.

    The magnitude is empty for a unit coefficient.
    """
    if isinstance(c, Laurent) and not c.is_constant():
        terms = c.terms
        den = lcm(*(v.denominator for v in terms.values()))
        num = {k: int(v * den) for k, v in terms.items()}
        sign = ""
        if num[max(num)] < 0:
            sign = "-"
            num = {k: -v for k, v in num.items()}
        body = _lambda_poly_latex(num)
        if den == 1:
            return sign, (f"({body})" if len(num) > 1 else body)
        return sign, rf"\frac{{{body}}}{{{den}}}"
    if isinstance(c, Laurent):
        c = c.coeff(0)
    c = Fraction(c)
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c == 1:
        return sign, ""
    if c.denominator == 1:
        return sign, str(c.numerator)
    return sign, rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _forest_latex(f) -> str:
    if not f:
        return r"\mathbf{1}"
    return r"\, ".join(str(t) for t in f)


def series_latex(s) -> str:
    items = s.sorted_items()
    if not items:
        return "0"
    out = []
    for i, (f, c) in enumerate(items):
        sign, mag = coeff_latex(c)
        body = _forest_latex(f)
        term = f"{mag}\\, {body}" if mag else body
        if i == 0:
            out.append(f"{sign}{term}")
        else:
            out.append(f" {'-' if sign else '+'} {term}")
    return "".join(out)


def emit_latex(obj, symbol: str = r"\chi") -> str:
    """LaTeX for a series, or one ``symbol^{(n)} = ...`` line per component.

    Components of an expansion or a BCH table are joined by ``\\\\``.
    """
    if hasattr(obj, "sorted_items") and hasattr(obj, "order"):
        return series_latex(obj)
    lines = []
    for n, comp in obj.items():
        body = comp.latex() if hasattr(comp, "latex") else series_latex(comp)
        lines.append(f"{symbol}^{{({n})}} = {body}")
    return " \\\\\n".join(lines)


# JSON -----------------------------------------------------------------------


def _coeff_json(c):
    if isinstance(c, Laurent):
        return [[k, v.numerator, v.denominator] for k, v in sorted(c.terms.items())]
    c = Fraction(c)
    return {"num": c.numerator, "den": c.denominator}


def _coeff_from_json(obj):
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    return Laurent({int(k): Fraction(int(n), int(d)) for k, n, d in obj})


def series_to_dict(s) -> dict:
    return {
        "order": s.order,
        "terms": [{"coeff": _coeff_json(c), "forest": serialize(f)} for f, c in s.sorted_items()],
    }


def series_from_dict(obj: dict):
    from .series import Series

    return Series(
        ((parse(t["forest"]), _coeff_from_json(t["coeff"])) for t in obj["terms"]),
        int(obj["order"]),
    )


def series_to_json(s, **kwargs) -> str:
    return json.dumps(series_to_dict(s), **kwargs)


def series_from_json(text: str):
    return series_from_dict(json.loads(text))
