"""Compositions, partitions and permutations in one-line notation.

Conventions used throughout the package:

* permutations are tuples ``(w(1), ..., w(n))`` and compose as functions,
  ``compose(u, v)(k) = u(v(k))``;
* a permutation acts on a composition by moving the part in position p to
  position w(p), so ``act(w, alpha)[w(p)] = alpha[p]``;
* ``s_i`` swaps positions i and i+1 (1-indexed).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations as _perms

__all__ = [
    "check_composition",
    "check_permutation",
    "rev_sort",
    "compositions",
    "partitions",
    "rearrangements",
    "identity",
    "longest",
    "inverse",
    "compose",
    "simple",
    "act",
    "swap_values",
    "length",
    "reduced_word",
    "from_word",
    "shortest_permutation",
    "bruhat_greater",
    "bruhat_successors",
    "dominates",
    "all_permutations",
]


def check_composition(alpha, n=None):
    alpha = tuple(int(a) for a in alpha)
    if not alpha:
        raise ValueError("composition must have at least one part")
    if any(a < 0 for a in alpha):
        raise ValueError(f"composition {alpha} has a negative part")
    if n is not None and len(alpha) != n:
        raise ValueError(f"composition {alpha} does not have {n} parts")
    return alpha


def check_permutation(sigma, n=None):
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    if n is not None and len(sigma) != n:
        raise ValueError(f"basement {sigma} does not have {n} entries")
    return sigma


def rev_sort(alpha):
    """Parts sorted into weakly decreasing order."""
    return tuple(sorted(alpha, reverse=True))


def compositions(m, n):
    """All weak compositions of m into n parts, lexicographically decreasing."""
    if n == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        for rest in compositions(m - first, n - 1):
            out.append((first,) + rest)
    return out


def partitions(m, n=None):
    """Partitions of m with at most n parts, padded with zeros to length n.

    Without n the partitions are returned unpadded.  Order is lexicographically
    decreasing, which is a linear extension of dominance order.
    """

    def gen(rem, maxpart):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, maxpart), 0, -1):
            for rest in gen(rem - p, p):
                yield (p,) + rest

    out = []
    for lam in gen(m, m):
        if n is None:
            out.append(lam)
        elif len(lam) <= n:
            out.append(lam + (0,) * (n - len(lam)))
    return out


def rearrangements(lam):
    """Distinct permutations of the parts, lexicographically decreasing."""
    return sorted(set(_perms(lam)), reverse=True)


def dominates(lam, mu):
    """True iff lam >= mu in dominance order (equal sizes assumed)."""
    a = b = 0
    for x, y in zip(list(lam) + [0] * len(mu), list(mu) + [0] * len(lam)):
        a += x
        b += y
        if a < b:
            return False
    return True


# ---------------------------------------------------------------------------
# permutations


def identity(n):
    return tuple(range(1, n + 1))


def longest(n):
    return tuple(range(n, 0, -1))


def inverse(w):
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def compose(u, v):
    """The permutation k -> u(v(k))."""
    return tuple(u[v[k] - 1] for k in range(len(v)))


def simple(n, i):
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def act(w, alpha):
    """Permute the parts of alpha: the part in position p moves to w(p)."""
    out = [0] * len(alpha)
    for p, a in enumerate(alpha):
        out[w[p] - 1] = a
    return tuple(out)


def swap_values(w, i):
    """Exchange the values i and i+1 in one-line notation, i.e. s_i o w."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def length(w):
    """Number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def reduced_word(w):
    """Reduced word (i_1, ..., i_l) with w = s_{i_1} o ... o s_{i_l}.

    Bubble sort from the left: repeatedly remove the leftmost descent by
    right multiplication, then read the recorded letters backwards.
    """
    w = list(w)
    letters = []
    while True:
        for j in range(len(w) - 1):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                letters.append(j + 1)
                break
        else:
            break
    return tuple(reversed(letters))


def from_word(n, word):
    w = identity(n)
    for i in reversed(word):
        w = compose(simple(n, i), w)
    return w


def shortest_permutation(lam, target):
    """Minimal-length w with act(w, lam) == target.

    Equal parts keep their relative order, which is what makes w shortest.
    """
    lam, target = tuple(lam), tuple(target)
    if sorted(lam) != sorted(target):
        raise ValueError(f"{target} is not a rearrangement of {lam}")
    slots = {}
    for pos, v in enumerate(target):
        slots.setdefault(v, deque()).append(pos + 1)
    return tuple(slots[v].popleft() for v in lam)


@lru_cache(maxsize=None)
def all_permutations(n):
    return tuple(_perms(range(1, n + 1)))


# ---------------------------------------------------------------------------
# Bruhat order on compositions


def bruhat_successors(alpha):
    """Compositions covered by one generating move from alpha (alpha > result)."""
    alpha = tuple(alpha)
    n = len(alpha)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            ai, aj = alpha[i], alpha[j]
            if aj > ai:
                b = list(alpha)
                b[i], b[j] = aj, ai
                out.add(tuple(b))
            if ai - aj > 1:
                # alpha = s_ij(beta) with beta_j - beta_i > 1, target beta + e_i - e_j
                b = list(alpha)
                b[i], b[j] = aj + 1, ai - 1
                out.add(tuple(b))
    return out


@lru_cache(maxsize=None)
def _bruhat_below(alpha):
    seen = set()
    queue = deque([alpha])
    while queue:
        x = queue.popleft()
        for y in bruhat_successors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def bruhat_greater(alpha, beta):
    """True iff alpha > beta in the Bruhat order on compositions."""
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != len(beta):
        raise ValueError("compositions have different lengths")
    if sum(alpha) != sum(beta):
        raise ValueError("compositions have different sizes")
    return beta in _bruhat_below(alpha)
