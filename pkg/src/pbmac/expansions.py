"""Symmetric Macdonald, Hall-Littlewood and Schur expansions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .combinat import (
    check_permutation,
    compositions,
    identity,
    longest,
    partitions,
    rearrangements,
    reduced_word,
    rev_sort,
)
from .fillings import arm_leg_table
from .macdonald import macdonald_E, schur_oracle, t_atom
from .operators import twinv
from .qt import ONE, Q, T, ZERO, QtScalar
from .xpoly import XPolynomial, grlex_desc

__all__ = [
    "ExpansionResult",
    "symmetric_P",
    "macdonald_P_expand",
    "hall_littlewood_oracle",
    "hall_littlewood_expand",
    "kostka_foulkes",
    "schur_in_atoms",
    "basis_solve",
]


@dataclass(frozen=True)
class ExpansionResult:
    """Coefficients of a polynomial in a named basis.

    ``elements`` holds the basis polynomials that were used, so the expansion
    can be summed back up with :meth:`reconstruct`.
    """

    basis_tag: str
    coefficients: Dict[Tuple[int, ...], QtScalar]
    elements: Dict[Tuple[int, ...], XPolynomial] = field(default_factory=dict, compare=False, repr=False)

    def reconstruct(self) -> XPolynomial:
        total = None
        for idx, c in self.coefficients.items():
            term = self.elements[idx].scale(c)
            total = term if total is None else total + term
        if total is None:
            raise ValueError("empty expansion")
        return total

    def sorted_items(self):
        return sorted(self.coefficients.items(), key=lambda kv: grlex_desc(kv[0]))

    def to_json(self):
        return {
            "basis": self.basis_tag,
            "terms": [{"index": list(k), "coeff": c.to_json()} for k, c in self.sorted_items()],
        }


def _check_partition(lam, n=None):
    lam = tuple(int(p) for p in lam)
    if any(p < 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    if n is not None:
        if len(lam) > n and any(lam[n:]):
            raise ValueError(f"{lam} has more than {n} nonzero parts")
        lam = (lam + (0,) * n)[:n]
    return lam


def _diagram_factor(shape):
    """prod over cells of (1 - q^(1+leg) t^arm)."""
    out = ONE
    for ar, lg in arm_leg_table(tuple(shape)).values():
        out = out * (ONE - Q ** (1 + lg) * T**ar)
    return out


# -- symmetric Macdonald P ---------------------------------------------------------


def symmetric_P(lam, sigma=None) -> XPolynomial:
    """P_lam(x; q, t) assembled from E^sigma_gamma over rearrangements gamma of lam."""
    sigma = tuple(sigma) if sigma is not None else identity(len(lam))
    lam = _check_partition(lam, len(sigma))
    return _symmetric_P(lam, check_permutation(sigma))


@lru_cache(maxsize=None)
def _symmetric_P(lam, sigma):
    return macdonald_P_expand(lam, sigma).reconstruct()


def macdonald_P_expand(lam, sigma=None) -> ExpansionResult:
    """The coefficients of P_lam(x; q, t) in the basis E^sigma_gamma, gamma ~ lam."""
    sigma = tuple(sigma) if sigma is not None else identity(len(lam))
    lam = _check_partition(lam, len(sigma))
    sigma = check_permutation(sigma)
    top = _diagram_factor(lam)
    coeffs, elems = {}, {}
    for gamma in rearrangements(lam):
        coeffs[gamma] = top * T ** twinv(gamma, sigma).pi_count / _diagram_factor(gamma)
        elems[gamma] = macdonald_E(gamma, sigma)
    return ExpansionResult(f"E^{_fmt(sigma)}_gamma(x;q,t), gamma ~ {_fmt(lam)}", coeffs, elems)


# -- Hall-Littlewood -------------------------------------------------------------


def _v(lam):
    """v_lam(t) = prod over part multiplicities m of prod_{j<=m} (1-t^j)/(1-t)."""
    out = ONE
    for m in Counter(lam).values():
        for j in range(1, m + 1):
            out = out * (ONE - T**j) / (ONE - T)
    return out


def hall_littlewood_oracle(lam, n=None) -> XPolynomial:
    """P_lam(x; t) by symmetrization over S_n.

    The sum over S_n of w(x^lam prod_{i<j} (x_i - t x_j)/(x_i - x_j)) equals
    the top divided difference of x^lam prod_{i<j} (x_i - t x_j), which is
    computed exactly with a reduced word for the longest permutation.
    """
    lam = _check_partition(lam, n if n is not None else len(lam))
    return _hl_oracle(lam)


@lru_cache(maxsize=None)
def _hl_oracle(lam):
    n = len(lam)
    f = XPolynomial.monomial(lam)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = f * (XPolynomial.var(n, i) - XPolynomial.var(n, j).scale(T))
    for k in reversed(reduced_word(longest(n))):
        f = f.divided_difference(k)
    return f.scale(_v(lam).reciprocal())


def hall_littlewood_expand(lam, sigma=None) -> ExpansionResult:
    """P_lam(x; t) as a sum of t-powers times permuted-basement t-atoms."""
    sigma = tuple(sigma) if sigma is not None else identity(len(lam))
    lam = _check_partition(lam, len(sigma))
    sigma = check_permutation(sigma)
    coeffs, elems = {}, {}
    for gamma in rearrangements(lam):
        coeffs[gamma] = T ** twinv(gamma, sigma).pi_count
        elems[gamma] = t_atom(gamma, sigma)
    return ExpansionResult(f"A^{_fmt(sigma)}_gamma(x;t), gamma ~ {_fmt(lam)}", coeffs, elems)


# -- Kostka-Foulkes ------------------------------------------------------------------


def kostka_foulkes(lam, mu, n=None) -> QtScalar:
    """K_{lam,mu}(t) from the unitriangular system s_lam = sum_mu K_{lam,mu} P_mu(x; t)."""
    lam = tuple(p for p in _check_partition(lam) if p)
    mu = tuple(p for p in _check_partition(mu) if p)
    if sum(lam) != sum(mu):
        raise ValueError("partitions have different sizes")
    N = max(n or 1, len(lam), len(mu), 1)
    return _kf_row(lam, N).get(mu + (0,) * (N - len(mu)), ZERO)


@lru_cache(maxsize=None)
def _kf_row(lam, N):
    """All K_{lam,rho}(t) for rho with at most N parts."""
    s = schur_oracle(lam, N)
    solved = {}
    for nu in partitions(sum(lam), N):  # lexicographically decreasing
        c = s.coefficient(nu)
        for rho, k in solved.items():
            c = c - k * _hl_oracle(rho).coefficient(nu)
        solved[nu] = c
    return {rho: k for rho, k in solved.items() if k}


def schur_in_atoms(lam, sigma=None) -> ExpansionResult:
    """s_lam(x) over permuted-basement t-atoms; coefficients t^twinv * K_{lam, sort(gamma)}(t)."""
    sigma = tuple(sigma) if sigma is not None else identity(len(lam))
    n = len(sigma)
    lam = _check_partition(lam, n)
    sigma = check_permutation(sigma)
    coeffs, elems = {}, {}
    for gamma in compositions(sum(lam), n):
        k = kostka_foulkes(lam, rev_sort(gamma), n)
        if k:
            coeffs[gamma] = T ** twinv(gamma, sigma).pi_count * k
            elems[gamma] = t_atom(gamma, sigma)
    return ExpansionResult(f"A^{_fmt(sigma)}_gamma(x;t), |gamma| = {sum(lam)}", coeffs, elems)


def _fmt(seq):
    return "".join(str(v) for v in seq) if all(v < 10 for v in seq) else ",".join(map(str, seq))


# -- linear algebra ------------------------------------------------------------------


def basis_solve(f: XPolynomial, basis: Sequence[XPolynomial]) -> Optional[List[QtScalar]]:
    """Coefficients c with sum c_k basis_k == f, or None when f is outside the span.

    Gaussian elimination over Q(q, t) on the matrix of monomial coefficients.
    """
    basis = list(basis)
    k = len(basis)
    monos = set(f.support())
    for b in basis:
        monos |= set(b.support())
    rows = [[b.coefficient(m) for b in basis] + [f.coefficient(m)] for m in sorted(monos, key=grlex_desc)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            return None  # dependent basis: no unique answer
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].reciprocal()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(r)
        r += 1
    if any(not row[k].is_zero() for row in rows[r:]):
        return None
    coeffs = [rows[p][k] for p in pivots]
    total = XPolynomial.zero(f.n)
    for c, b in zip(coeffs, basis):
        total = total + b.scale(c)
    return coeffs if total == f else None
