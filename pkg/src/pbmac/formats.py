"""Text, JSON and LaTeX renderings of scalars, polynomials and fillings."""

from __future__ import annotations

import json

from .qt import QtScalar, _content, _lead, _try_div, format_poly2
from .xpoly import XPolynomial

__all__ = ["to_json_text", "poly_json", "poly_latex", "scalar_latex", "factor_binomials"]


def to_json_text(obj) -> str:
    """Deterministic compact JSON."""
    return json.dumps(obj, separators=(",", ":"))


def poly_json(f: XPolynomial) -> str:
    return to_json_text({"n": f.n, "terms": f.to_json()})


# -- factoring into (1 - q^a t^b) pieces --------------------------------------------


def factor_binomials(d):
    """Split a nonzero Z[q,t] dict as sign * c * q^a t^b * prod (1 - q^i t^j)^k * rest.

    Returns (sign, c, (a, b), {(i, j): k}, rest) with ``rest`` a dict whose
    grlex leading coefficient is positive.  Trial division only, so ``rest``
    is whatever no binomial divides.
    """
    c = _content(d)
    ma = min(a for a, _ in d)
    mb = min(b for _, b in d)
    rest = {(a - ma, b - mb): v // c for (a, b), v in d.items()}
    factors = {}
    changed = True
    while changed and len(rest) > 1:
        changed = False
        da = max(a for a, _ in rest)
        db = max(b for _, b in rest)
        for s in range(1, da + db + 1):
            for i in range(min(s, da), -1, -1):
                j = s - i
                if j > db:
                    continue
                quo = _try_div(rest, {(0, 0): 1, (i, j): -1})
                if quo is not None:
                    factors[(i, j)] = factors.get((i, j), 0) + 1
                    rest = quo
                    changed = True
                    break
            if changed:
                break
    sign = 1
    if rest[_lead(rest)] < 0:
        sign = -1
        rest = {k: -v for k, v in rest.items()}
    return sign, c, (ma, mb), factors, rest


def _qt_mono(a, b):
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{{{a}}}" if a > 9 else f"q^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{{{b}}}" if b > 9 else f"t^{b}")
    return " ".join(parts)


def _binom_tex(i, j):
    return "1-" + _qt_mono(i, j)


def _wrap(body):
    return f"\\left({body}\\right)" if "^" in body else f"({body})"


def _rest_tex(rest):
    return format_poly2(rest, mul=" ").replace(" + ", "+").replace(" - ", "-")


def _pieces(d):
    """LaTeX factors for one side of a fraction, plus the sign pulled out."""
    sign, c, (a, b), factors, rest = factor_binomials(d)
    out = []
    if c != 1:
        out.append(str(c))
    mono = _qt_mono(a, b)
    if mono:
        out.append(mono)
    for (i, j), k in sorted(factors.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
        body = _wrap(_binom_tex(i, j))
        out.append(body if k == 1 else f"{body}^{k}")
    if rest != {(0, 0): 1}:
        out.append(_wrap(_rest_tex(rest)) if len(rest) > 1 else _rest_tex(rest))
    return sign, out


def _x_mono(m):
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x_{i}")
        elif e:
            parts.append(f"x_{i}^{{{e}}}" if e > 9 else f"x_{i}^{e}")
    return " ".join(parts)


def _unwrap(piece):
    if piece.startswith("\\left(") and piece.endswith("\\right)"):
        return piece[len("\\left(") : -len("\\right)")]
    if piece.startswith("(") and piece.endswith(")"):
        return piece[1:-1]
    return piece


def _term_tex(c: QtScalar, xm: str):
    """(sign, body) for c * xm in the fraction-of-products style."""
    ns, nparts = _pieces(c._n)
    dd = c._dd
    if dd == {(0, 0): 1}:
        ds, dparts = 1, []
    else:
        ds, dparts = _pieces(dd)
    sign = ns * ds
    top = nparts + ([xm] if xm else [])
    if not dparts:
        return sign, " ".join(top) if top else "1"
    # a lone parenthesised factor needs no parentheses next to a fraction bar
    if len(top) == 1:
        top = [_unwrap(top[0])]
    if len(dparts) == 1:
        dparts = [_unwrap(dparts[0])]
    top_s = " ".join(top) if top else "1"
    return sign, f"\\frac{{{top_s}}}{{{' '.join(dparts)}}}"


def scalar_latex(c: QtScalar) -> str:
    if c.is_zero():
        return "0"
    sign, body = _term_tex(c, "")
    return ("-" if sign < 0 else "") + body


def poly_latex(f: XPolynomial) -> str:
    if f.is_zero():
        return "0"
    out = ""
    for m, c in f.items():
        sign, body = _term_tex(c, _x_mono(m))
        if out:
            out += "-" if sign < 0 else "+"
        elif sign < 0:
            out += "-"
        out += body
    return out
