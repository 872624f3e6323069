"""Polynomials in x_1..x_n with coefficients in Q(q,t).

Exponent vectors are plain tuples.  Variables are 1-indexed in the public API
(``var(n, 1)`` is x_1), matching the way the identities are usually written.
"""

from __future__ import annotations

import ast

from .errors import ArityError
from .qt import ONE, ZERO, IntPoly2, QtScalar, _as_scalar, _eval_node, _mul, _qt_add, _reduce, Q, T

__all__ = ["XPolynomial", "Accumulator", "parse_poly", "grlex_desc"]


def grlex_desc(exps):
    """Key putting the graded-lex largest exponent vector first when sorted."""
    return (-sum(exps), tuple(-e for e in exps))


class Accumulator:
    """Collects ``coefficient * monomial`` contributions and sums them lazily.

    Contributions sharing a denominator are added numerator-wise, so a long
    sum of fractions costs one reduction per distinct denominator.
    """

    __slots__ = ("n", "_d")

    def __init__(self, n):
        self.n = n
        self._d = {}

    def add(self, mon, c, mult=None):
        """Add ``c * mult * x^mon``; ``mult`` is an optional raw Z[q,t] dict."""
        if not c._n:
            return
        num = c._n if mult is None else _mul(c._n, mult)
        if not num:
            return
        groups = self._d.get(mon)
        if groups is None:
            groups = self._d[mon] = {}
        key = frozenset(c._dd.items())
        slot = groups.get(key)
        if slot is None:
            groups[key] = [dict(num), c._dd]
        else:
            acc = slot[0]
            for k, v in num.items():
                s = acc.get(k, 0) + v
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)

    def add_int(self, mon, c, k):
        if k == 1:
            self.add(mon, c)
        elif k:
            self.add(mon, c, {(0, 0): k})

    def result(self):
        terms = {}
        for mon, groups in self._d.items():
            total = ZERO
            for num, den in groups.values():
                if num:
                    total = _qt_add(total, QtScalar._raw(*_reduce(num, den)))
            if total._n:
                terms[mon] = total
        return XPolynomial._raw(self.n, terms)


class XPolynomial:
    """Immutable element of Q(q,t)[x_1, ..., x_n].

    Negative exponents are tolerated so that Laurent shifts like
    ``E / (x_1...x_n)^k`` can be represented, but every operator in the
    package is meant for honest polynomials.
    """

    __slots__ = ("n", "_t", "_h")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        t = {}
        for mon, c in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != n:
                raise ArityError(f"monomial {mon} does not have {n} exponents")
            c = _as_scalar(c)
            if c is NotImplemented:
                raise TypeError("coefficients must be QtScalar, IntPoly2 or int")
            if mon in t:
                c = t[mon] + c
            if c.is_zero():
                t.pop(mon, None)
            else:
                t[mon] = c
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj._t = terms
        obj._h = None
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def var(cls, n, i):
        _check_var(n, i)
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        c = _as_scalar(coeff)
        return cls._raw(len(exps), {exps: c} if c else {})

    # -- access --------------------------------------------------------------

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        """Terms in descending graded-lex order of the exponent vector."""
        return sorted(self._t.items(), key=lambda kv: grlex_desc(kv[0]))

    def coefficient(self, mon):
        mon = tuple(mon)
        if len(mon) != self.n:
            raise ArityError("monomial length differs from variable count")
        return self._t.get(mon, ZERO)

    def support(self):
        return set(self._t)

    def is_zero(self):
        return not self._t

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def degree(self):
        return max((sum(m) for m in self._t), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self._t}) <= 1

    # -- ring operations -----------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ArityError("arity mismatch")

    def __add__(self, other):
        if not isinstance(other, XPolynomial):
            other = self._lift(other)
            if other is NotImplemented:
                return other
        self._check(other)
        if len(self._t) < len(other._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        t = dict(big)
        for m, c in small.items():
            if m in t:
                s = t[m] + c
                if s._n:
                    t[m] = s
                else:
                    del t[m]
            else:
                t[m] = c
        return XPolynomial._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial._raw(self.n, {m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, XPolynomial):
            other = self._lift(other)
            if other is NotImplemented:
                return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _lift(self, c):
        c = _as_scalar(c)
        if c is NotImplemented:
            return c
        return XPolynomial._raw(self.n, {(0,) * self.n: c} if c._n else {})

    def scale(self, c):
        c = _as_scalar(c)
        if not c._n:
            return XPolynomial.zero(self.n)
        if c.is_one():
            return self
        return XPolynomial._raw(self.n, {m: v * c for m, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, XPolynomial):
            self._check(other)
            if len(other._t) == 1:
                (m2, c2), = other._t.items()
                return XPolynomial._raw(
                    self.n, {tuple(a + b for a, b in zip(m, m2)): c * c2 for m, c in self._t.items()}
                )
            acc = Accumulator(self.n)
            for m1, c1 in self._t.items():
                for m2, c2 in other._t.items():
                    acc.add(tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
            return acc.result()
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return self.scale(other)

    __rmul__ = __mul__

    def _as_constant(self):
        if not self._t:
            raise ZeroDivisionError("zero divisor")
        if len(self._t) != 1 or any(next(iter(self._t))):
            raise ValueError("can only divide by expressions free of x")
        return next(iter(self._t.values()))

    def __truediv__(self, other):
        if isinstance(other, XPolynomial):
            other = other._as_constant()
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return self.scale(other.reciprocal())

    def __rtruediv__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return XPolynomial.one(self.n).scale(other / self._as_constant())

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = XPolynomial.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.n == other.n and self._t == other._t
        if isinstance(other, (int, QtScalar)):
            c = _as_scalar(other)
            return self._t == ({(0,) * self.n: c} if c._n else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.n, frozenset(self._t.items())))
        return self._h

    # -- variable manipulations -----------------------------------------------

    def swap(self, i):
        """Exchange x_i and x_{i+1}."""
        _check_index(self.n, i)
        j = i - 1
        out = {}
        for m, c in self._t.items():
            m2 = list(m)
            m2[j], m2[j + 1] = m2[j + 1], m2[j]
            out[tuple(m2)] = c
        return XPolynomial._raw(self.n, out)

    def is_symmetric_in(self, i):
        return self.swap(i) == self

    def is_symmetric(self):
        return all(self.is_symmetric_in(i) for i in range(1, self.n))

    def divided_difference(self, i):
        """Apply (1 - s_i)/(x_i - x_{i+1}) exactly, one monomial at a time.

        For exponents a > b in positions i, i+1,
        (x^a y^b - x^b y^a)/(x - y) = sum_{k=b}^{a-1} x^k y^(a+b-1-k).
        """
        _check_index(self.n, i)
        j = i - 1
        acc = Accumulator(self.n)
        for m, c in self._t.items():
            a, b = m[j], m[j + 1]
            if a == b:
                continue
            if a > b:
                lo, hi, cc = b, a, c
            else:
                lo, hi, cc = a, b, -c
            base = list(m)
            for k in range(lo, hi):
                base[j] = k
                base[j + 1] = a + b - 1 - k
                acc.add(tuple(base), cc)
        return acc.result()

    def substitute(self, assignments):
        """Simultaneous substitution x_i -> multiplier * x_target.

        ``assignments`` maps a variable index to ``(multiplier, target)`` where
        target is a variable index or None for the constant 1.  Variables not
        mentioned are left alone.
        """
        rules = []
        for i in range(1, self.n + 1):
            mult, target = assignments.get(i, (ONE, i))
            if target is not None:
                _check_var(self.n, target)
            rules.append((_as_scalar(mult), target))
        acc = Accumulator(self.n)
        for m, c in self._t.items():
            coeff = c
            out = [0] * self.n
            for e, (mult, target) in zip(m, rules):
                if e == 0:
                    continue
                if not mult.is_one():
                    coeff = coeff * mult**e
                if target is not None:
                    out[target - 1] += e
            acc.add(tuple(out), coeff)
        return acc.result()

    def reverse_variables(self):
        """x_i -> x_{n+1-i}."""
        return XPolynomial._raw(self.n, {m[::-1]: c for m, c in self._t.items()})

    def permute_variables(self, perm):
        """x_i -> x_{perm[i-1]} for a permutation in one-line notation."""
        out = {}
        for m, c in self._t.items():
            e = [0] * self.n
            for i, p in enumerate(perm):
                e[p - 1] = m[i]
            out[tuple(e)] = c
        return XPolynomial._raw(self.n, out)

    # -- coefficient maps --------------------------------------------------------

    def map_coefficients(self, fn):
        out = {}
        for m, c in self._t.items():
            v = fn(c)
            if v:
                out[m] = v
        return XPolynomial._raw(self.n, out)

    def specialize(self, q_zero=False, t_zero=False):
        return self.map_coefficients(lambda c: c.specialize(q_zero, t_zero))

    def invert_qt(self):
        return self.map_coefficients(QtScalar.invert_qt)

    def substitute_qt(self, q=None, t=None):
        return self.map_coefficients(lambda c: c.substitute(q=q, t=t))

    # -- display -------------------------------------------------------------------

    def __repr__(self):
        return f"XPolynomial({self.n}, {self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(m) if e
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c.is_one():
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                if len(c.numerator.terms) > 1 and c.is_polynomial():
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        """Canonical list of terms, leading term first."""
        out = []
        for m, c in self.items():
            d = {"x": list(m)}
            d.update(c.to_json())
            out.append(d)
        return out

    @classmethod
    def from_json(cls, n, data):
        terms = {}
        for item in data:
            terms[tuple(item["x"])] = QtScalar.from_json(item)
        return cls(n, terms)


def _check_index(n, i):
    if not 1 <= i < n:
        raise IndexError(f"index {i} out of range for {n} variables")


def _check_var(n, i):
    if not 1 <= i <= n:
        raise IndexError(f"variable x_{i} out of range for {n} variables")


def parse_poly(text, n):
    """Parse e.g. ``"(1-t)*x1*x2/(1-q*t^2) + x1*x3^2"`` into an XPolynomial."""
    names = {"q": XPolynomial.one(n).scale(Q), "t": XPolynomial.one(n).scale(T)}
    for i in range(1, n + 1):
        names[f"x{i}"] = XPolynomial.var(n, i)
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    v = _eval_node(tree.body, names)
    return v if isinstance(v, XPolynomial) else XPolynomial.one(n).scale(v)
