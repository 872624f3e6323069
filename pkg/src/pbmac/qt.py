"""Exact arithmetic in Z[q,t] and its fraction field Q(q,t).

Polynomials are stored sparsely as ``{(a, b): c}`` meaning ``c * q**a * t**b``.
Fractions are kept reduced with a sign-normalized denominator, so equality of
two :class:`QtScalar` values is plain structural equality.

The GCD first tries the evaluation/interpolation heuristic (cheap on the
small, low-degree polynomials that occur here) and falls back to a primitive
remainder sequence in Z[t][q].
"""

from __future__ import annotations

import ast
from collections import defaultdict
from math import gcd as igcd
from math import isqrt

from .errors import PoleError

__all__ = [
    "IntPoly2",
    "QtScalar",
    "poly_gcd",
    "parse_qt",
    "grlex_key",
    "Q",
    "T",
    "ONE",
    "ZERO",
]


def grlex_key(exps):
    """Sort key for graded lexicographic order on an exponent tuple."""
    return (sum(exps), exps)


# ---------------------------------------------------------------------------
# raw dict helpers (hot paths avoid the wrapper classes)


def _add(f, g):
    if len(f) < len(g):
        f, g = g, f
    h = dict(f)
    for k, c in g.items():
        v = h.get(k, 0) + c
        if v:
            h[k] = v
        else:
            h.pop(k, None)
    return h


def _sub(f, g):
    h = dict(f)
    for k, c in g.items():
        v = h.get(k, 0) - c
        if v:
            h[k] = v
        else:
            h.pop(k, None)
    return h


def _neg(f):
    return {k: -c for k, c in f.items()}


def _scale(f, k):
    if k == 0:
        return {}
    return {e: c * k for e, c in f.items()}


def _mul(f, g):
    if len(f) == 1:
        ((fa, fb), fc), = f.items()
        return {(a + fa, b + fb): c * fc for (a, b), c in g.items()}
    if len(g) == 1:
        ((ga, gb), gc), = g.items()
        return {(a + ga, b + gb): c * gc for (a, b), c in f.items()}
    h = defaultdict(int)
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            h[(a1 + a2, b1 + b2)] += c1 * c2
    return {k: c for k, c in h.items() if c}


def _pow(f, e):
    result = {(0, 0): 1}
    base = f
    while e:
        if e & 1:
            result = _mul(result, base)
        e >>= 1
        if e:
            base = _mul(base, base)
    return result


def _content(f):
    c = 0
    for v in f.values():
        c = igcd(c, v)
        if c == 1:
            break
    return c


def _lead(f):
    return max(f, key=_grlex2)


def _grlex2(k):
    return (k[0] + k[1], k[0])


def _ground_lc(f):
    # leading coefficient with q as the outer variable
    return f[max(f)]


def _try_div(f, g):
    """Quotient f/g in Z[q,t] or None when g does not divide f exactly."""
    if not f:
        return {}
    if len(g) == 1:
        ((ga, gb), gc), = g.items()
        out = {}
        for (a, b), c in f.items():
            if a < ga or b < gb or c % gc:
                return None
            out[(a - ga, b - gb)] = c // gc
        return out
    la, lb = lg = _lead(g)
    lc = g[lg]
    rem = dict(f)
    quo = {}
    while rem:
        ra, rb = lr = _lead(rem)
        rc = rem[lr]
        da, db = ra - la, rb - lb
        if da < 0 or db < 0 or rc % lc:
            return None
        qc = rc // lc
        quo[(da, db)] = qc
        for (a, b), c in g.items():
            k = (a + da, b + db)
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return quo


def _divexact(f, g):
    q = _try_div(f, g)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------
# univariate helpers, dicts {k: c}


def _u_mul(f, g):
    h = defaultdict(int)
    for a, c in f.items():
        for b, d in g.items():
            h[a + b] += c * d
    return {k: c for k, c in h.items() if c}


def _u_eval(f, x):
    return sum(c * x**k for k, c in f.items())


def _u_interp(h, x):
    f = {}
    k = 0
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        if g:
            f[k] = g
        h = (h - g) // x
        k += 1
    return f


def _u_heu_gcd(f, g):
    """Heuristic gcd of univariate integer polynomials.

    Returns ``(h, cff, cfg)`` with ``f = h*cff`` and ``g = h*cfg`` or None.
    """
    c = igcd(_content(f), _content(g))
    if c != 1:
        f = {k: v // c for k, v in f.items()}
        g = {k: v // c for k, v in g.items()}
    fn = max(abs(v) for v in f.values())
    gn = max(abs(v) for v in g.values())
    bound = 2 * min(fn, gn) + 29
    x = max(
        min(bound, 99 * isqrt(bound)),
        2 * min(fn // abs(f[max(f)]), gn // abs(g[max(g)])) + 2,
    )
    for _ in range(6):
        ff = _u_eval(f, x)
        gg = _u_eval(g, x)
        if ff and gg:
            h = igcd(ff, gg)
            hp = _u_interp(h, x)
            if hp:
                cc = _content(hp)
                if hp[max(hp)] < 0:
                    cc = -cc
                hp = {k: v // cc for k, v in hp.items()}
                cff = _u_interp((ff // h) * cc, x)
                cfg = _u_interp((gg // h) * cc, x)
                if _u_mul(hp, cff) == f and _u_mul(hp, cfg) == g:
                    if c != 1:
                        hp = {k: v * c for k, v in hp.items()}
                    return hp, cff, cfg
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _bi_heu_gcd(f, g):
    """Heuristic gcd for primitive bivariate polynomials (q evaluated first)."""
    fn = max(abs(v) for v in f.values())
    gn = max(abs(v) for v in g.values())
    bound = 2 * min(fn, gn) + 29
    x = max(
        min(bound, 99 * isqrt(bound)),
        2 * min(fn // abs(_ground_lc(f)), gn // abs(_ground_lc(g))) + 4,
    )
    for _ in range(6):
        ff = _eval_q(f, x)
        gg = _eval_q(g, x)
        if ff and gg:
            res = _u_heu_gcd(ff, gg)
            if res is not None:
                hh, cff1, _ = res
                h = _interp_q(hh, x)
                if h:
                    cc = _content(h)
                    if _ground_lc(h) < 0:
                        cc = -cc
                    h = {k: v // cc for k, v in h.items()}
                    cff = _interp_q({k: v * cc for k, v in cff1.items()}, x)
                    if _mul(h, cff) == f:
                        gq = _try_div(g, h)
                        if gq is not None:
                            return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _eval_q(f, x):
    top = max(a for a, _ in f)
    powers = [1] * (top + 1)
    for i in range(1, top + 1):
        powers[i] = powers[i - 1] * x
    out = defaultdict(int)
    for (a, b), c in f.items():
        out[b] += c * powers[a]
    return {k: v for k, v in out.items() if v}


def _interp_q(h, x):
    out = {}
    for b, v in h.items():
        for a, c in _u_interp(v, x).items():
            out[(a, b)] = c
    return out


# --- primitive remainder sequences (fallback, q outer, coefficients in Z[t])


def _u_divexact(f, g):
    rem = dict(f)
    dg = max(g)
    lc = g[dg]
    out = {}
    while rem:
        dr = max(rem)
        if dr < dg or rem[dr] % lc:
            raise ArithmeticError("inexact univariate division")
        qc = rem[dr] // lc
        sh = dr - dg
        out[sh] = qc
        for k, c in g.items():
            v = rem.get(k + sh, 0) - qc * c
            if v:
                rem[k + sh] = v
            else:
                rem.pop(k + sh, None)
    return out


def _u_prem(f, g):
    dg = max(g)
    lc = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        sh = dr - dg
        r = {k: v * lc for k, v in r.items()}
        for k, c in g.items():
            v = r.get(k + sh, 0) - lr * c
            if v:
                r[k + sh] = v
            else:
                r.pop(k + sh, None)
    return r


def _u_primitive(f):
    c = _content(f)
    if f[max(f)] < 0:
        c = -c
    return {k: v // c for k, v in f.items()}


def _u_gcd_prs(f, g):
    if not f or not g:
        h = f or g
        if h and h[max(h)] < 0:
            h = {k: -v for k, v in h.items()}
        return h
    c = igcd(_content(f), _content(g))
    a, b = _u_primitive(f), _u_primitive(g)
    if max(a) < max(b):
        a, b = b, a
    while b:
        if max(b) == 0:
            return {0: c}
        r = _u_prem(a, b)
        a, b = b, (_u_primitive(r) if r else {})
    h = _u_primitive(a)
    return {k: v * c for k, v in h.items()}


def _to_nested(f):
    out = defaultdict(dict)
    for (a, b), c in f.items():
        out[a][b] = c
    return dict(out)


def _from_nested(f):
    return {(a, b): c for a, row in f.items() for b, c in row.items()}


def _n_content(f):
    c = {}
    for row in f.values():
        c = _u_gcd_prs(c, row)
        if len(c) == 1 and 0 in c and abs(c[0]) == 1:
            return {0: 1}
    return c


def _n_div_content(f, c):
    return {a: _u_divexact(row, c) for a, row in f.items()}


def _n_prem(f, g):
    dg = max(g)
    lc = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        sh = dr - dg
        r = {k: _u_mul(v, lc) for k, v in r.items()}
        for k, row in g.items():
            v = _sub_u(r.get(k + sh, {}), _u_mul(lr, row))
            if v:
                r[k + sh] = v
            else:
                r.pop(k + sh, None)
    return r


def _sub_u(f, g):
    h = dict(f)
    for k, c in g.items():
        v = h.get(k, 0) - c
        if v:
            h[k] = v
        else:
            h.pop(k, None)
    return h


def _prs_gcd(f, g):
    """gcd in Z[t][q] by content/primitive-part recursion on q."""
    F, G = _to_nested(f), _to_nested(g)
    cf, cg = _n_content(F), _n_content(G)
    c = _u_gcd_prs(cf, cg)
    F, G = _n_div_content(F, cf), _n_div_content(G, cg)
    if max(F) < max(G):
        F, G = G, F
    while G:
        if max(G) == 0:
            F = {0: {0: 1}}
            break
        R = _n_prem(F, G)
        if R:
            R = _n_div_content(R, _n_content(R))
        F, G = G, R
    h = _from_nested(F)
    return _mul(h, {(0, b): v for b, v in c.items()})


def _normalize_sign(f):
    if f and f[_lead(f)] < 0:
        return _neg(f)
    return dict(f)


def _is_unit_like(f):
    return len(f) == 1 and (0, 0) in f


def poly_gcd(f, g, *, method="auto"):
    """Greatest common divisor in Z[q,t] with a positive grlex leading coefficient.

    ``f`` and ``g`` may be :class:`IntPoly2` or raw term dicts; the result has
    the same kind as ``f``. ``method`` is ``"auto"``, ``"heuristic"`` or
    ``"prs"`` (the last two exist for cross-checking).
    """
    wrap = isinstance(f, IntPoly2)
    fd = f._d if isinstance(f, IntPoly2) else f
    gd = g._d if isinstance(g, IntPoly2) else g
    h = _gcd(fd, gd, method)
    return IntPoly2._raw(h) if wrap else h


def _gcd(f, g, method="auto"):
    if not f:
        return _normalize_sign(g)
    if not g:
        return _normalize_sign(f)
    fa = min(a for a, _ in f)
    fb = min(b for _, b in f)
    ga = min(a for a, _ in g)
    gb = min(b for _, b in g)
    ma, mb = min(fa, ga), min(fb, gb)
    cf, cg = _content(f), _content(g)
    c = igcd(cf, cg)
    if len(f) == 1 or len(g) == 1:
        return {(ma, mb): c}
    F = {(a - fa, b - fb): v // cf for (a, b), v in f.items()}
    G = {(a - ga, b - gb): v // cg for (a, b), v in g.items()}
    h = _primitive_gcd(F, G, method)
    h = _normalize_sign(h)
    return {(a + ma, b + mb): v * c for (a, b), v in h.items()}


def _primitive_gcd(F, G, method):
    if _is_unit_like(F) or _is_unit_like(G):
        return {(0, 0): 1}
    if F == G or F == _neg(G):
        return F
    if method != "prs":
        h = _bi_heu_gcd(F, G)
        if h is not None or method == "heuristic":
            return h if h is not None else _prs_gcd(F, G)
    return _prs_gcd(F, G)


# ---------------------------------------------------------------------------


class IntPoly2:
    """Immutable polynomial in q and t with integer coefficients."""

    __slots__ = ("_d", "_h")

    def __init__(self, terms=None):
        d = {}
        if terms:
            for (a, b), c in dict(terms).items():
                a, b, c = int(a), int(b), int(c)
                if a < 0 or b < 0:
                    raise ValueError("exponents must be non-negative")
                if c:
                    d[(a, b)] = d.get((a, b), 0) + c
                    if not d[(a, b)]:
                        del d[(a, b)]
        self._d = d
        self._h = None

    @classmethod
    def _raw(cls, d):
        obj = cls.__new__(cls)
        obj._d = d
        obj._h = None
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a, b, c=1):
        return cls._raw({(a, b): c} if c else {})

    @property
    def terms(self):
        return dict(self._d)

    def is_zero(self):
        return not self._d

    def is_constant(self):
        return not self._d or (len(self._d) == 1 and (0, 0) in self._d)

    def constant_value(self):
        return self._d.get((0, 0), 0)

    def degree(self):
        return max((a + b for a, b in self._d), default=-1)

    def degree_q(self):
        return max((a for a, _ in self._d), default=-1)

    def degree_t(self):
        return max((b for _, b in self._d), default=-1)

    def leading(self):
        """Leading ``((a, b), c)`` under graded lex, q before t."""
        k = _lead(self._d)
        return k, self._d[k]

    def content(self):
        return _content(self._d)

    def sorted_terms(self, reverse=True):
        return sorted(self._d.items(), key=lambda kv: _grlex2(kv[0]) + (kv[0][1],), reverse=reverse)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return IntPoly2._raw(_add(self._d, other._d))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return IntPoly2._raw(_sub(self._d, other._d))

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return IntPoly2._raw(_sub(other._d, self._d))

    def __neg__(self):
        return IntPoly2._raw(_neg(self._d))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly2._raw(_scale(self._d, other))
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return IntPoly2._raw(_mul(self._d, other._d))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        return IntPoly2._raw(_pow(self._d, e))

    def exact_div(self, other):
        """Quotient in Z[q,t]; raises ArithmeticError if inexact."""
        return IntPoly2._raw(_divexact(self._d, _as_poly(other)._d))

    def try_div(self, other):
        res = _try_div(self._d, _as_poly(other)._d)
        return None if res is None else IntPoly2._raw(res)

    def evaluate(self, q, t):
        return sum(c * q**a * t**b for (a, b), c in self._d.items())

    def substitute_zero(self, q_zero=False, t_zero=False):
        d = {
            k: c
            for k, c in self._d.items()
            if not (q_zero and k[0]) and not (t_zero and k[1])
        }
        return IntPoly2._raw(d)

    def __eq__(self, other):
        if isinstance(other, IntPoly2):
            return self._d == other._d
        if isinstance(other, int):
            return self._d == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._d.items()))
        return self._h

    def __bool__(self):
        return bool(self._d)

    def __repr__(self):
        return f"IntPoly2({self})"

    def __str__(self):
        return format_poly2(self._d)


def _as_poly(x):
    if isinstance(x, IntPoly2):
        return x
    if isinstance(x, int):
        return IntPoly2.const(x)
    return NotImplemented


def format_poly2(d, mul="*"):
    if not d:
        return "0"
    parts = []
    for (a, b), c in sorted(d.items(), key=lambda kv: _grlex2(kv[0]), reverse=True):
        mono = []
        if a:
            mono.append("q" if a == 1 else f"q^{a}")
        if b:
            mono.append("t" if b == 1 else f"t^{b}")
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mul.join(mono)
        else:
            body = mul.join([str(mag)] + mono)
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------


_ONE_D = {(0, 0): 1}


class QtScalar:
    """Element of Q(q,t) in canonical reduced form.

    The numerator and denominator are coprime in Q[q,t], jointly have integer
    content 1, and the denominator's graded-lex leading coefficient is positive.
    Zero is ``0/1``.
    """

    __slots__ = ("_n", "_dd", "_h")

    def __init__(self, num=0, den=1):
        nd = _as_poly(num)
        dd = _as_poly(den)
        if nd is NotImplemented or dd is NotImplemented:
            raise TypeError("QtScalar expects integers or IntPoly2 values")
        if not dd._d:
            raise ZeroDivisionError("zero divisor")
        n, d = _reduce(nd._d, dd._d)
        self._n = n
        self._dd = d
        self._h = None

    @classmethod
    def _raw(cls, n, d):
        obj = cls.__new__(cls)
        obj._n = n
        obj._dd = d
        obj._h = None
        return obj

    @classmethod
    def from_int(cls, c):
        return cls._raw({(0, 0): c} if c else {}, _ONE_D)

    @classmethod
    def from_parts(cls, num, den):
        """Build from already-coprime raw dicts, only fixing sign and content."""
        return cls._raw(*_canon(num, den))

    @property
    def numerator(self):
        return IntPoly2._raw(self._n)

    @property
    def denominator(self):
        return IntPoly2._raw(self._dd)

    def is_zero(self):
        return not self._n

    def is_one(self):
        return self._n == _ONE_D and self._dd == _ONE_D

    def is_polynomial(self):
        return self._dd == _ONE_D

    def __bool__(self):
        return bool(self._n)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _qt_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _qt_add(self, -other)

    def __rsub__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _qt_add(other, -self)

    def __neg__(self):
        return QtScalar._raw(_neg(self._n), self._dd)

    def __mul__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _qt_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _qt_mul(self, other.reciprocal())

    def __rtruediv__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _qt_mul(other, self.reciprocal())

    def reciprocal(self):
        if not self._n:
            raise ZeroDivisionError("zero divisor")
        return QtScalar._raw(*_canon(self._dd, self._n))

    def __pow__(self, e):
        if e < 0:
            return self.reciprocal() ** (-e)
        return QtScalar._raw(*_canon(_pow(self._n, e), _pow(self._dd, e)))

    @staticmethod
    def sum(values):
        """Sum of many scalars, grouping equal denominators first."""
        groups = {}
        for v in values:
            v = _as_scalar(v)
            if not v._n:
                continue
            key = frozenset(v._dd.items())
            if key in groups:
                num, den = groups[key]
                groups[key] = (_add(num, v._n), den)
            else:
                groups[key] = (v._n, v._dd)
        total = ZERO
        for num, den in groups.values():
            if num:
                total = _qt_add(total, QtScalar._raw(*_reduce(num, den)))
        return total

    # -- substitutions ----------------------------------------------------

    def invert_qt(self):
        """Substitute q -> 1/q and t -> 1/t and clear denominators."""
        if not self._n:
            return self
        da = max(a for a, _ in list(self._n) + list(self._dd))
        db = max(b for _, b in list(self._n) + list(self._dd))
        n = {(da - a, db - b): c for (a, b), c in self._n.items()}
        d = {(da - a, db - b): c for (a, b), c in self._dd.items()}
        return QtScalar._raw(*_reduce(n, d))

    def specialize(self, q_zero=False, t_zero=False):
        """Set q and/or t to zero; raises PoleError on a vanishing denominator."""
        if not (q_zero or t_zero):
            return self
        n = IntPoly2._raw(self._n).substitute_zero(q_zero, t_zero)._d
        d = IntPoly2._raw(self._dd).substitute_zero(q_zero, t_zero)._d
        if not d:
            raise PoleError("pole at specialization")
        return QtScalar._raw(*_reduce(n, d))

    def substitute(self, q=None, t=None):
        """Replace q and t by scalars (anything accepted by QtScalar arithmetic)."""
        qv = Q if q is None else _as_scalar(q)
        tv = T if t is None else _as_scalar(t)

        def ev(d):
            return QtScalar.sum(c * qv**a * tv**b for (a, b), c in d.items())

        den = ev(self._dd)
        if den.is_zero():
            raise PoleError("pole at specialization")
        return ev(self._n) / den

    def evaluate(self, q, t):
        """Exact value at rational/integer points, returned as a Fraction."""
        from fractions import Fraction

        n = sum(Fraction(c) * Fraction(q) ** a * Fraction(t) ** b for (a, b), c in self._n.items())
        d = sum(Fraction(c) * Fraction(q) ** a * Fraction(t) ** b for (a, b), c in self._dd.items())
        if d == 0:
            raise PoleError("pole at specialization")
        return n / d

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self._n == other._n and self._dd == other._dd

    def __hash__(self):
        if self._h is None:
            self._h = hash((frozenset(self._n.items()), frozenset(self._dd.items())))
        return self._h

    def __repr__(self):
        return f"QtScalar({self})"

    def __str__(self):
        n = format_poly2(self._n)
        if self._dd == _ONE_D:
            return n
        d = format_poly2(self._dd)
        if len(self._n) > 1:
            n = f"({n})"
        if len(self._dd) > 1 or next(iter(self._dd.values())) != 1:
            d = f"({d})"
        return f"{n}/{d}"

    def to_json(self):
        """``{"num": [[c,a,b],...], "den": [...]}`` with terms in grlex order."""
        return {"num": _json_terms(self._n), "den": _json_terms(self._dd)}

    @classmethod
    def from_json(cls, obj):
        num = {(a, b): c for c, a, b in obj["num"]}
        den = {(a, b): c for c, a, b in obj["den"]}
        return cls(IntPoly2(num), IntPoly2(den))


def _json_terms(d):
    keys = sorted(d, key=lambda k: (k[0] + k[1], k[0], k[1]), reverse=True)
    return [[d[k], k[0], k[1]] for k in keys]


def _as_scalar(x):
    if isinstance(x, QtScalar):
        return x
    if isinstance(x, int):
        return QtScalar.from_int(x)
    if isinstance(x, IntPoly2):
        return QtScalar._raw(x._d, _ONE_D)
    return NotImplemented


def _canon(n, d):
    if not n:
        return {}, _ONE_D
    c = igcd(_content(n), _content(d))
    if d[_lead(d)] < 0:
        c = -c
    if c != 1:
        n = {k: v // c for k, v in n.items()}
        d = {k: v // c for k, v in d.items()}
    return n, d


def _reduce(n, d):
    if not n:
        return {}, _ONE_D
    if d == _ONE_D:
        return n, d
    g = _gcd(n, d)
    if g != _ONE_D:
        n = _divexact(n, g)
        d = _divexact(d, g)
    return _canon(n, d)


def _qt_add(x, y):
    if not x._n:
        return y
    if not y._n:
        return x
    xd, yd = x._dd, y._dd
    if xd == yd:
        if xd == _ONE_D:
            return QtScalar._raw(_add(x._n, y._n), _ONE_D)
        return QtScalar._raw(*_reduce(_add(x._n, y._n), xd))
    if yd == _ONE_D:
        # a/b + c stays reduced
        return QtScalar._raw(*_canon(_add(x._n, _mul(y._n, xd)), xd))
    if xd == _ONE_D:
        return QtScalar._raw(*_canon(_add(y._n, _mul(x._n, yd)), yd))
    g = _gcd(xd, yd)
    if g == _ONE_D:
        num = _add(_mul(x._n, yd), _mul(y._n, xd))
        return QtScalar._raw(*_canon(num, _mul(xd, yd)))
    xd1 = _divexact(xd, g)
    yd1 = _divexact(yd, g)
    num = _add(_mul(x._n, yd1), _mul(y._n, xd1))
    if not num:
        return ZERO
    den = _mul(xd, yd1)
    g2 = _gcd(num, g)
    if g2 != _ONE_D:
        num = _divexact(num, g2)
        den = _divexact(den, g2)
    return QtScalar._raw(*_canon(num, den))


def _qt_mul(x, y):
    if not x._n or not y._n:
        return ZERO
    xn, xd, yn, yd = x._n, x._dd, y._n, y._dd
    if xd == _ONE_D and yd == _ONE_D:
        return QtScalar._raw(_mul(xn, yn), _ONE_D)
    if yd != _ONE_D:
        g1 = _gcd(xn, yd)
        if g1 != _ONE_D:
            xn = _divexact(xn, g1)
            yd = _divexact(yd, g1)
    if xd != _ONE_D:
        g2 = _gcd(yn, xd)
        if g2 != _ONE_D:
            yn = _divexact(yn, g2)
            xd = _divexact(xd, g2)
    return QtScalar._raw(*_canon(_mul(xn, yn), _mul(xd, yd)))


ZERO = QtScalar._raw({}, _ONE_D)
ONE = QtScalar._raw(dict(_ONE_D), _ONE_D)
Q = QtScalar._raw({(1, 0): 1}, _ONE_D)
T = QtScalar._raw({(0, 1): 1}, _ONE_D)


# ---------------------------------------------------------------------------


def parse_qt(text):
    """Parse an expression in q and t such as ``"(1-t)^2/((1-q*t)*(1-q*t^2))"``."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return _eval_node(tree.body, {"q": Q, "t": T})


def _eval_node(node, names):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return QtScalar.from_int(node.value)
    if isinstance(node, ast.Name):
        if node.id not in names:
            raise ValueError(f"unknown symbol {node.id!r}")
        return names[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, names)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not isinstance(node.right, ast.Constant):
                raise ValueError("exponent must be an integer literal")
            return _eval_node(node.left, names) ** int(node.right.value)
        left = _eval_node(node.left, names)
        right = _eval_node(node.right, names)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise ValueError(f"unsupported expression: {ast.dump(node)}")
