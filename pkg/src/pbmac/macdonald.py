"""E^sigma_alpha(x; q, t) from non-attacking fillings, and its specializations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .combinat import (
    act,
    check_composition,
    check_permutation,
    compositions,
    identity,
    longest,
    rev_sort,
)
from .fillings import _naf, arm_leg_table, coinv, maj, triple_positions, weight
from .qt import Q, QtScalar, _mul, _pow, _reduce
from .xpoly import XPolynomial

__all__ = [
    "MacdonaldIndex",
    "macdonald_E",
    "t_atom",
    "t_key",
    "atom",
    "key",
    "leading_monomial",
    "schur_oracle",
    "verify_knop_sahi",
    "verify_spec_to_atom",
    "verify_shift",
    "verify_triangularity",
    "clear_caches",
]


@dataclass(frozen=True)
class MacdonaldIndex:
    shape: Tuple[int, ...]
    basement: Tuple[int, ...]

    def __post_init__(self):
        shape = tuple(int(a) for a in self.shape)
        basement = check_permutation(self.basement)
        if len(shape) != len(basement):
            raise ValueError("shape and basement have different lengths")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "basement", basement)

    @property
    def n(self):
        return len(self.shape)


def _index(shape, basement):
    if isinstance(shape, MacdonaldIndex):
        return shape
    if basement is None:
        basement = longest(len(shape))
    return MacdonaldIndex(tuple(shape), tuple(basement))


def _binom(a, b):
    """1 - q^a t^b as a raw dict."""
    return {(0, 0): 1, (a, b): -1}


def macdonald_E(shape, basement=None) -> XPolynomial:
    """E^basement_shape(x; q, t); the basement defaults to the reverse identity.

    Shapes with negative parts are handled by shifting every part up and
    dividing the result by a power of x_1...x_n.
    """
    idx = _index(shape, basement)
    low = min(idx.shape)
    if low < 0:
        shifted = tuple(a - low for a in idx.shape)
        E = _E(shifted, idx.basement)
        return E * XPolynomial.monomial((low,) * idx.n)
    check_composition(idx.shape)
    return _E(idx.shape, idx.basement)


@lru_cache(maxsize=None)
def _E(shape, basement):
    n = len(shape)
    al = arm_leg_table(shape)
    # per monomial: list of (numerator dict, Counter of (a, b) binomials)
    groups = {}
    for F in _naf(shape, basement):
        factors = Counter()
        k = 0
        for cell, (ar, lg) in al.items():
            r, c = cell
            if F[(r, c - 1)] != F[cell]:
                factors[(1 + lg, 1 + ar)] += 1
                k += 1
        num = {(maj(F), coinv(F)): 1}
        if k:
            num = _mul(num, _pow({(0, 0): 1, (0, 1): -1}, k))
        groups.setdefault(weight(F), []).append((num, factors))
    terms = {}
    for mon, items in groups.items():
        lcd = Counter()
        for _, fac in items:
            lcd |= fac
        total = {}
        for num, fac in items:
            part = num
            for ab, m in (lcd - fac).items():
                part = _mul(part, _pow(_binom(*ab), m))
            for key, v in part.items():
                s = total.get(key, 0) + v
                if s:
                    total[key] = s
                else:
                    total.pop(key)
        if not total:
            continue
        den = {(0, 0): 1}
        for ab, m in sorted(lcd.items()):
            den = _mul(den, _pow(_binom(*ab), m))
        terms[mon] = QtScalar._raw(*_reduce(total, den))
    return XPolynomial._raw(n, terms)


def leading_monomial(shape, basement):
    """Exponent vector of the leading monomial: x_{sigma_r} gets exponent alpha_r."""
    return act(tuple(basement), tuple(shape))


# -- specializations --------------------------------------------------------


@lru_cache(maxsize=None)
def _spec(shape, basement, q_zero, t_zero):
    return _E(shape, basement).specialize(q_zero, t_zero)


def t_atom(shape, basement=None) -> XPolynomial:
    """A^sigma_alpha(x; t), the q = 0 specialization (identity basement by default)."""
    shape = check_composition(shape)
    basement = identity(len(shape)) if basement is None else check_permutation(basement, len(shape))
    return _spec(shape, basement, True, False)


def t_key(shape) -> XPolynomial:
    """K_alpha(x; t), the q = 0 specialization with the reverse-identity basement."""
    shape = check_composition(shape)
    return _spec(shape, longest(len(shape)), True, False)


def atom(shape, basement=None) -> XPolynomial:
    shape = check_composition(shape)
    basement = identity(len(shape)) if basement is None else check_permutation(basement, len(shape))
    return _spec(shape, basement, True, True)


def key(shape) -> XPolynomial:
    shape = check_composition(shape)
    return _spec(shape, longest(len(shape)), True, True)


# -- Schur oracle --------------------------------------------------------------


@lru_cache(maxsize=None)
def schur_oracle(lam, n) -> XPolynomial:
    """Schur polynomial s_lam(x_1..x_n) as a sum over semistandard tableaux."""
    lam = tuple(p for p in lam if p)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    if len(lam) > n:
        return XPolynomial.zero(n)
    cells = [(r, c) for r, p in enumerate(lam) for c in range(p)]
    grid = {}
    counts = Counter()

    def rec(k):
        if k == len(cells):
            counts[tuple(sum(1 for v in grid.values() if v == i) for i in range(1, n + 1))] += 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = grid[(r, c - 1)]
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            grid[(r, c)] = v
            rec(k + 1)
        grid.pop((r, c), None)

    rec(0)
    return XPolynomial(n, dict(counts))


# -- structural identities -------------------------------------------------------


def verify_knop_sahi(alpha) -> bool:
    """E_hat(alpha)(x) == q^alpha_1 x_1 E_alpha(x_2, ..., x_n, x_1/q), reverse-identity basement."""
    alpha = check_composition(alpha)
    n = len(alpha)
    hat = alpha[1:] + (alpha[0] + 1,)
    lhs = macdonald_E(hat)
    rot = {k: (1, k + 1) for k in range(1, n)}
    rot[n] = (Q.reciprocal(), 1)
    rhs = macdonald_E(alpha).substitute(rot) * XPolynomial.var(n, 1)
    rhs = rhs.scale(Q ** alpha[0])
    return lhs == rhs


def verify_spec_to_atom(alpha) -> bool:
    """E^{w0}_alpha(x; q, t) == E^{id}_alpha(x_n, ..., x_1; 1/q, 1/t)."""
    alpha = check_composition(alpha)
    n = len(alpha)
    lhs = macdonald_E(alpha, longest(n))
    rhs = macdonald_E(alpha, identity(n)).reverse_variables().invert_qt()
    return lhs == rhs


def verify_shift(alpha, sigma) -> bool:
    alpha = check_composition(alpha)
    n = len(alpha)
    up = tuple(a + 1 for a in alpha)
    return macdonald_E(up, sigma) == macdonald_E(alpha, sigma) * XPolynomial.monomial((1,) * n)


def triangularity_violations(alpha, sigma):
    """Monomials breaking the triangularity clauses, as (gamma, coefficient) pairs."""
    alpha = check_composition(alpha)
    sigma = check_permutation(sigma, len(alpha))
    E = macdonald_E(alpha, sigma)
    ra = rev_sort(alpha)
    bad = []
    for gamma in compositions(sum(alpha), len(alpha)):
        c = E.coefficient(act(sigma, gamma))
        rg = rev_sort(gamma)
        if gamma == alpha:
            if not c.is_one():
                bad.append((gamma, c))
        elif rg > ra or (rg == ra and gamma > alpha):
            if not c.is_zero():
                bad.append((gamma, c))
    return bad


def verify_triangularity(alpha, sigma) -> bool:
    return not triangularity_violations(alpha, sigma)


def clear_caches():
    """Drop every memoized filling set and polynomial."""
    from . import expansions, fillings

    _E.cache_clear()
    _spec.cache_clear()
    schur_oracle.cache_clear()
    fillings._naf.cache_clear()
    fillings.arm_leg_table.cache_clear()
    triple_positions.cache_clear()
    expansions._symmetric_P.cache_clear()
    expansions._hl_oracle.cache_clear()
    expansions._kf_row.cache_clear()
