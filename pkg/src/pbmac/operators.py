"""Demazure and Demazure-Lusztig operators and the identities they satisfy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .combinat import (
    check_composition,
    check_permutation,
    inverse,
    length,
    longest,
    reduced_word,
    swap_values,
)
from .errors import HypothesisError, NonInvertibleError
from .fillings import arm, leg
from .macdonald import macdonald_E
from .qt import ONE, Q, T, QtScalar
from .xpoly import XPolynomial, _check_index

__all__ = [
    "op_pi",
    "op_theta",
    "op_tpi",
    "op_ttheta",
    "OperatorWord",
    "apply_word",
    "ttheta_perm",
    "tpi_perm",
    "TwinvStats",
    "twinv",
    "basement_permute",
    "verify_basement_permute",
    "shape_transpose",
    "invert_ttheta_plus_const",
    "verify_quadratic_and_inverse",
    "verify_braid",
    "verify_commutation",
    "verify_mixed_braid",
    "tpisym_holds",
    "verify_tpisym",
    "verify_operator_symmetry",
    "ttheta_key_basement",
]

_ONE_MINUS_T = ONE - T


def op_pi(f: XPolynomial, i: int) -> XPolynomial:
    """pi_i f = d_i(x_i f)."""
    _check_index(f.n, i)
    return (XPolynomial.var(f.n, i) * f).divided_difference(i)


def op_theta(f: XPolynomial, i: int) -> XPolynomial:
    return op_pi(f, i) - f


def op_tpi(f: XPolynomial, i: int) -> XPolynomial:
    return op_pi(f, i).scale(_ONE_MINUS_T) + f.swap(i).scale(T)


def op_ttheta(f: XPolynomial, i: int) -> XPolynomial:
    return op_theta(f, i).scale(_ONE_MINUS_T) + f.swap(i).scale(T)


_OPS = {"pi": op_pi, "theta": op_theta, "tpi": op_tpi, "ttheta": op_ttheta}


@dataclass(frozen=True)
class OperatorWord:
    """A product of operators, composed right to left.

    ``OperatorWord((("ttheta", 1), ("tpi", 2)))`` stands for the operator
    ttheta_1 tpi_2, so tpi_2 is applied first.
    """

    letters: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        letters = tuple((str(k), int(i)) for k, i in self.letters)
        for kind, _ in letters:
            if kind not in _OPS:
                raise ValueError(f"unknown operator {kind!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, kind, word: Iterable[int]):
        return cls(tuple((kind, i) for i in word))

    def __mul__(self, other):
        return OperatorWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"{k}_{i}" for k, i in self.letters) or "id"


def apply_word(f: XPolynomial, w: OperatorWord) -> XPolynomial:
    for kind, i in reversed(w.letters):
        _check_index(f.n, i)
        f = _OPS[kind](f, i)
    return f


def ttheta_perm(f: XPolynomial, sigma) -> XPolynomial:
    """ttheta_sigma f, through the canonical reduced word of sigma."""
    sigma = check_permutation(sigma, f.n)
    return apply_word(f, OperatorWord.of("ttheta", reduced_word(sigma)))


def tpi_perm(f: XPolynomial, sigma) -> XPolynomial:
    sigma = check_permutation(sigma, f.n)
    return apply_word(f, OperatorWord.of("tpi", reduced_word(sigma)))


# -- twinv -------------------------------------------------------------------


@dataclass(frozen=True)
class TwinvStats:
    theta_count: int
    pi_count: int


def twinv(alpha, sigma) -> TwinvStats:
    """Pairs i < j with sigma_i > sigma_j and alpha_i <= alpha_j (theta) or alpha_i < alpha_j (pi)."""
    alpha = tuple(alpha)
    sigma = tuple(sigma)
    if len(alpha) != len(sigma):
        raise ValueError("composition and permutation have different lengths")
    th = pi = 0
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                if alpha[i] <= alpha[j]:
                    th += 1
                if alpha[i] < alpha[j]:
                    pi += 1
    return TwinvStats(th, pi)


# -- basement permutation ----------------------------------------------------------


def basement_permute(alpha, sigma, i):
    """Predicted (operator kind, new basement, t-exponent) for acting with index i.

    ttheta_i applies when i+1 sits above i in the basement (length drops),
    tpi_i otherwise.
    """
    alpha = check_composition(alpha)
    sigma = check_permutation(sigma, len(alpha))
    _check_index(len(alpha), i)
    inv = inverse(sigma)
    gi, gi1 = alpha[inv[i - 1] - 1], alpha[inv[i] - 1]
    new = swap_values(sigma, i)
    if length(new) < length(sigma):
        return "ttheta", new, int(gi <= gi1)
    return "tpi", new, int(gi < gi1)


def verify_basement_permute(alpha, sigma, i) -> bool:
    kind, new, e = basement_permute(alpha, sigma, i)
    lhs = _OPS[kind](macdonald_E(alpha, sigma), i)
    rhs = macdonald_E(alpha, new).scale(T**e)
    return lhs == rhs


# -- shape permutation ------------------------------------------------------------


def _c_u(shape, cell, extra_t):
    lg = leg(shape, cell)
    ar = arm(shape, cell)
    den = ONE - Q ** (1 + lg) * T ** (ar + extra_t)
    return _ONE_MINUS_T / den


def shape_transpose(alpha, sigma, j, E=None) -> XPolynomial:
    """E^sigma_{s_j alpha} computed from E^sigma_alpha with operators only.

    Requires sigma_j = sigma_{j+1} + 1 and alpha_j != alpha_{j+1}.  ``E`` may
    be supplied to avoid recomputing E^sigma_alpha.
    """
    alpha = check_composition(alpha)
    sigma = check_permutation(sigma, len(alpha))
    _check_index(len(alpha), j)
    aj, aj1 = alpha[j - 1], alpha[j]
    if sigma[j - 1] != sigma[j] + 1 or aj == aj1:
        raise HypothesisError("shape-transpose hypothesis unmet")
    i = sigma[j]
    if E is None:
        E = macdonald_E(alpha, sigma)
    if aj < aj1:
        c = _c_u(alpha, (j + 1, aj + 1), 0)
        return op_ttheta(E, i) + E.scale(c)
    c = _c_u(alpha, (j, aj1 + 1), 1)
    return invert_ttheta_plus_const(E, i, c)


def invert_ttheta_plus_const(g: XPolynomial, i: int, A) -> XPolynomial:
    """The f with (ttheta_i + A) f = g.

    Uses ttheta_i^2 = (t-1) ttheta_i + t, which gives
    (ttheta_i + A)(A + t - 1 - ttheta_i) = (A - 1)(A + t).  The eigenvalues of
    ttheta_i are t and -1, so A = 1 and A = -t are the singular shifts.
    """
    A = A if isinstance(A, QtScalar) else QtScalar(A)
    if A == ONE or A == -T:
        raise NonInvertibleError("non-invertible shift")
    num = g.scale(A + T - 1) - op_ttheta(g, i)
    return num.scale(((A - 1) * (A + T)).reciprocal())


# -- algebraic relations -------------------------------------------------------------


def verify_quadratic_and_inverse(i, f: XPolynomial) -> bool:
    """ttheta_i^2 = (t-1) ttheta_i + t, and tpi_i ttheta_i = ttheta_i tpi_i = t."""
    th = op_ttheta(f, i)
    if op_ttheta(th, i) != th.scale(T - 1) + f.scale(T):
        return False
    tf = f.scale(T)
    return op_tpi(th, i) == tf and op_ttheta(op_tpi(f, i), i) == tf


def verify_braid(f: XPolynomial, i: int, kind: str = "ttheta") -> bool:
    """op_i op_{i+1} op_i = op_{i+1} op_i op_{i+1}."""
    a = OperatorWord.of(kind, (i, i + 1, i))
    b = OperatorWord.of(kind, (i + 1, i, i + 1))
    return apply_word(f, a) == apply_word(f, b)


def verify_commutation(f: XPolynomial, i: int, j: int, kind: str = "ttheta") -> bool:
    return apply_word(f, OperatorWord.of(kind, (i, j))) == apply_word(f, OperatorWord.of(kind, (j, i)))


_MIXED = (
    ((("tpi", 0), ("tpi", -1), ("ttheta", 0)), (("ttheta", -1), ("tpi", 0), ("tpi", -1))),
    ((("tpi", -1), ("tpi", 0), ("ttheta", -1)), (("ttheta", 0), ("tpi", -1), ("tpi", 0))),
    ((("tpi", -1), ("ttheta", 0), ("ttheta", -1)), (("ttheta", 0), ("ttheta", -1), ("tpi", 0))),
    ((("tpi", 0), ("ttheta", -1), ("ttheta", 0)), (("ttheta", -1), ("ttheta", 0), ("tpi", -1))),
)


def verify_mixed_braid(f: XPolynomial, i: int) -> bool:
    """The four mixed relations between tpi and ttheta at indices i-1, i."""
    if not 2 <= i < f.n:
        raise IndexError(f"mixed braid needs 2 <= i < {f.n}")
    for lhs, rhs in _MIXED:
        wl = OperatorWord(tuple((k, i + d) for k, d in lhs))
        wr = OperatorWord(tuple((k, i + d) for k, d in rhs))
        if apply_word(f, wl) != apply_word(f, wr):
            return False
    return True


def tpisym_holds(f: XPolynomial, g: XPolynomial, i: int) -> bool:
    """Whether f + g and t x_{i+1} f + x_i g are both symmetric in x_i, x_{i+1}."""
    n = f.n
    h = (XPolynomial.var(n, i + 1) * f).scale(T) + XPolynomial.var(n, i) * g
    return (f + g).is_symmetric_in(i) and h.is_symmetric_in(i)


def verify_tpisym(f: XPolynomial, g: XPolynomial, i: int) -> bool:
    """ttheta_i f == g exactly when the two symmetry conditions hold."""
    return (op_ttheta(f, i) == g) == tpisym_holds(f, g, i)


def verify_operator_symmetry(f: XPolynomial, g: XPolynomial, i: int) -> bool:
    """Checks for f symmetric in x_i, x_{i+1}; g arbitrary."""
    if not f.is_symmetric_in(i):
        raise HypothesisError("input is not symmetric in the given pair")
    if op_ttheta(f, i) != f.scale(T) or op_tpi(f, i) != f:
        return False
    if op_ttheta(f * g, i) != f * op_ttheta(g, i):
        return False
    for j in range(1, f.n):
        if j not in (i - 1, i + 1) and not op_ttheta(f, j).is_symmetric_in(i):
            return False
    return True


def ttheta_key_basement(sigma):
    """Basement produced by ttheta_sigma from the reverse-identity basement."""
    n = len(sigma)
    return tuple(sigma[k - 1] for k in longest(n))

