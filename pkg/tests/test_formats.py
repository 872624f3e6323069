import json

import goldens as g
from pbmac import ONE, Q, T, parse_poly, parse_qt
from pbmac.formats import factor_binomials, poly_json, poly_latex, scalar_latex, to_json_text
from pbmac.macdonald import macdonald_E


def test_published_latex_line():
    assert poly_latex(macdonald_E((0, 1, 2), (2, 1, 3))) == g.E012_213_LATEX


def test_published_latex_style():
    for sigma in g.E110:
        tex = poly_latex(macdonald_E((1, 1, 0), sigma))
        assert "\\frac" in tex and "(1-t)" in tex
    for sigma in g.E012:
        assert "1-q t^2" in poly_latex(macdonald_E((0, 1, 2), sigma))


def test_scalar_latex():
    assert scalar_latex(ONE) == "1"
    assert scalar_latex(-T) == "-t"
    assert scalar_latex((ONE - Q) / (ONE - Q * T)) == "\\frac{1-q}{1-q t}"
    assert scalar_latex((ONE - T) ** 2 / ((ONE - Q * T) * (ONE - Q * T**2))) == (
        "\\frac{(1-t)^2}{(1-q t) \\left(1-q t^2\\right)}"
    )


def test_factor_binomials():
    d = parse_qt("3*q*(1-t)^2*(1-q*t^2)*(1+t)").numerator.terms
    sign, c, mono, factors, rest = factor_binomials(d)
    assert sign * c == 3 and mono == (1, 0)
    assert factors[(1, 2)] == 1 and sum(factors.values()) >= 2
    value = sign * c * Q
    for (i, j), k in factors.items():
        value = value * (ONE - Q**i * T**j) ** k
    rest_val = sum((v * Q**a * T**b for (a, b), v in rest.items()), 0 * ONE)
    assert value * rest_val == parse_qt("3*q*(1-t)^2*(1-q*t^2)*(1+t)")


def test_json_is_compact_and_canonical():
    f = parse_poly("x2*x3 + (1-t)*x1*x3/(1-q*t)", 3)
    text = poly_json(f)
    assert " " not in text
    data = json.loads(text)
    assert data["n"] == 3
    assert [t["x"] for t in data["terms"]] == [[1, 0, 1], [0, 1, 1]]
    assert to_json_text({"a": [1, 2]}) == '{"a":[1,2]}'
