"""Bounded sweeps that check identities exhaustively (or on seeded random input).

Every sweep has the signature ``sweep(n, max_weight) -> list of counterexamples``
where a counterexample is a JSON-ready dict.  An empty list means success.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List

from .combinat import (
    act,
    all_permutations,
    compose,
    compositions,
    dominates,
    identity,
    longest,
    partitions,
    rearrangements,
    reduced_word,
    rev_sort,
    shortest_permutation,
    simple,
)
from .expansions import (
    basis_solve,
    hall_littlewood_expand,
    hall_littlewood_oracle,
    kostka_foulkes,
    schur_in_atoms,
    symmetric_P,
)
from .macdonald import (
    atom,
    key,
    macdonald_E,
    schur_oracle,
    t_atom,
    t_key,
    triangularity_violations,
    verify_knop_sahi,
    verify_shift,
    verify_spec_to_atom,
)
from .operators import (
    OperatorWord,
    apply_word,
    op_tpi,
    op_ttheta,
    shape_transpose,
    tpi_perm,
    ttheta_key_basement,
    ttheta_perm,
    twinv,
    verify_basement_permute,
    verify_braid,
    verify_commutation,
    verify_mixed_braid,
    verify_operator_symmetry,
    verify_quadratic_and_inverse,
    verify_tpisym,
)
from .qt import ONE, Q, T, QtScalar
from .xpoly import XPolynomial

__all__ = ["SWEEPS", "run_sweep", "random_polynomial", "jobs"]

RANDOM_SAMPLES = 50


def jobs() -> int:
    """Worker processes allowed by PBMAC_JOBS (default 1, i.e. in-process)."""
    try:
        return max(1, int(os.environ.get("PBMAC_JOBS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items) -> List:
    items = list(items)
    k = jobs()
    if k == 1 or len(items) < 8:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * k))))


def _collect(fn, items) -> List[dict]:
    return [r for r in _pmap(fn, items) if r is not None]


def _shapes(n, max_weight):
    for m in range(max_weight + 1):
        yield from compositions(m, n)


def _shapes_upto(n, max_weight):
    """(N, alpha) for every N <= n."""
    for N in range(1, n + 1):
        for a in _shapes(N, max_weight):
            yield N, a


_POOL = None


def _scalar_pool():
    global _POOL
    if _POOL is None:
        _POOL = [ONE, -ONE, QtScalar(2), Q, T, ONE - T, Q * T - 1, ONE / (ONE - Q * T), T / (ONE - Q)]
    return _POOL


def random_polynomial(rng: random.Random, n: int, max_degree: int, terms: int = 4) -> XPolynomial:
    pool = _scalar_pool()
    monos = [m for d in range(max_degree + 1) for m in compositions(d, n)]
    f = XPolynomial.zero(n)
    for _ in range(terms):
        f = f + XPolynomial.monomial(rng.choice(monos), rng.choice(pool))
    return f


def _random_inputs(n, max_weight, seed, count=RANDOM_SAMPLES):
    rng = random.Random(seed)
    return [random_polynomial(rng, n, max_weight) for _ in range(count)]


# -- individual sweeps ---------------------------------------------------------------


def _tri_item(item):
    a, s = item
    bad = triangularity_violations(a, s)
    if bad:
        return {"shape": a, "basement": s, "gamma": [g for g, _ in bad]}
    return None


def sweep_triangularity(n, w):
    items = [(a, s) for N, a in _shapes_upto(n, w) for s in all_permutations(N)]
    return _collect(_tri_item, items)


def sweep_knop_sahi(n, w):
    return [{"shape": a} for _, a in _shapes_upto(n, w) if not verify_knop_sahi(a)]


def sweep_spec_to_atom(n, w):
    return [{"shape": a} for _, a in _shapes_upto(n, w) if not verify_spec_to_atom(a)]


def sweep_shift(n, w):
    return [
        {"shape": a, "basement": s}
        for N, a in _shapes_upto(n, w)
        for s in all_permutations(N)
        if not verify_shift(a, s)
    ]


def _bp_item(item):
    a, s = item
    out = []
    for i in range(1, len(a)):
        if not verify_basement_permute(a, s, i):
            out.append(i)
    return {"shape": a, "basement": s, "i": out} if out else None


def sweep_basement_permute(n, w):
    items = [(a, s) for N, a in _shapes_upto(n, w) if N > 1 for s in all_permutations(N)]
    return _collect(_bp_item, items)


def sweep_shape_transpose(n, w):
    bad = []
    for N, a in _shapes_upto(n, w):
        for s in all_permutations(N):
            for j in range(1, N):
                if s[j - 1] != s[j] + 1 or a[j - 1] == a[j]:
                    continue
                b = act(simple(N, j), a)
                got = shape_transpose(a, s, j)
                if got != macdonald_E(b, s):
                    bad.append({"shape": a, "basement": s, "j": j, "check": "formula"})
                elif shape_transpose(b, s, j, E=got) != macdonald_E(a, s):
                    bad.append({"shape": a, "basement": s, "j": j, "check": "round-trip"})
    return bad


def sweep_partial_symmetry(n, w):
    bad = []
    for N, a in _shapes_upto(n, w):
        for s in all_permutations(N):
            for j in range(1, N):
                if a[j - 1] == a[j] and abs(s[j - 1] - s[j]) == 1:
                    i = min(s[j - 1], s[j])
                    E = macdonald_E(a, s)
                    if not E.is_symmetric_in(i) or op_ttheta(E, i) != E.scale(T):
                        bad.append({"shape": a, "basement": s, "j": j, "i": i})
    return bad


def sweep_braid(n, w):
    if n < 2:
        return []
    bad = []
    for k, f in enumerate(_random_inputs(n, w, seed=1)):
        for kind in ("ttheta", "tpi", "theta", "pi"):
            for i in range(1, n - 1):
                if not verify_braid(f, i, kind):
                    bad.append({"sample": k, "kind": kind, "i": i, "check": "braid"})
            for i in range(1, n):
                for j in range(i + 2, n):
                    if not verify_commutation(f, i, j, kind):
                        bad.append({"sample": k, "kind": kind, "i": i, "j": j, "check": "commute"})
    # well-definedness: every reduced word of a permutation gives the same operator
    f = _random_inputs(n, w, seed=11, count=1)[0]
    for sigma in all_permutations(n):
        words = _reduced_words(sigma)
        for kind in ("ttheta", "tpi"):
            vals = {apply_word(f, OperatorWord.of(kind, wd)) for wd in words}
            if len(vals) != 1:
                bad.append({"permutation": sigma, "kind": kind, "check": "reduced-words"})
    return bad


def _reduced_words(sigma):
    """All reduced words of sigma (small n only)."""
    n = len(sigma)
    if sigma == identity(n):
        return [()]
    out = []
    for i in range(1, n):
        if sigma[i - 1] > sigma[i]:  # right descent
            for wd in _reduced_words(compose(sigma, simple(n, i))):
                out.append(wd + (i,))
    return out


def sweep_mixed_braid(n, w):
    if n < 3:
        return []
    return [
        {"sample": k, "i": i}
        for k, f in enumerate(_random_inputs(n, w, seed=2))
        for i in range(2, n)
        if not verify_mixed_braid(f, i)
    ]


def sweep_quadratic(n, w):
    """Quadratic relation, tpi ttheta = t, the tpisym lemma and the symmetry lemma."""
    if n < 2:
        return []
    bad = []
    fs = _random_inputs(n, w, seed=3)
    gs = _random_inputs(n, w, seed=4)
    for k, (f, g) in enumerate(zip(fs, gs)):
        for i in range(1, n):
            if not verify_quadratic_and_inverse(i, f):
                bad.append({"sample": k, "i": i, "check": "quadratic"})
            # both directions: the true image and a perturbed one
            if not verify_tpisym(f, op_ttheta(f, i), i) or not verify_tpisym(f, g, i):
                bad.append({"sample": k, "i": i, "check": "tpisym"})
            sym = f + f.swap(i)
            if not sym.is_zero() and not verify_operator_symmetry(sym, g, i):
                bad.append({"sample": k, "i": i, "check": "operator-symmetry"})
    return bad


def sweep_twinv(n, w):
    bad = []
    w0 = longest(n)
    for a in _shapes(n, w):
        for s in all_permutations(n):
            th = twinv(a[::-1], s).theta_count
            if ttheta_perm(macdonald_E(a, w0), s) != macdonald_E(a, ttheta_key_basement(s)).scale(T**th):
                bad.append({"shape": a, "sigma": s, "check": "theta"})
            pi = twinv(a, s).pi_count
            if tpi_perm(macdonald_E(a, identity(n)), s) != macdonald_E(a, s).scale(T**pi):
                bad.append({"shape": a, "sigma": s, "check": "pi"})
    return bad


def sweep_invariant_subspace(n, w):
    bad = []
    w0 = longest(n)
    for m in range(w + 1):
        for lam in partitions(m, n):
            gammas = rearrangements(lam)
            basis = [macdonald_E(g, w0) for g in gammas]
            for g, E in zip(gammas, basis):
                for i in range(1, n):
                    for kind, op in (("ttheta", op_ttheta), ("tpi", op_tpi)):
                        if basis_solve(op(E, i), basis) is None:
                            bad.append({"gamma": g, "i": i, "op": kind})
                for s in all_permutations(n):
                    if basis_solve(macdonald_E(g, s), basis) is None:
                        bad.append({"gamma": g, "basement": s, "op": "basement"})
    return bad


def sweep_t_key_pbf(n, w):
    """Shape-permuting corollaries for t-atoms/t-keys and both t-key/t-atom identities."""
    bad = []
    for a in _shapes(n, w):
        for i in range(1, n):
            b = act(simple(n, i), a)
            if a[i - 1] > a[i] and op_ttheta(t_atom(a), i) != t_atom(b):
                bad.append({"shape": a, "i": i, "check": "atom-shape"})
            # the key basement puts labels n+1-j, n-j on rows j, j+1
            if a[i - 1] < a[i] and op_tpi(t_key(a), n - i) != t_key(b):
                bad.append({"shape": a, "j": i, "check": "key-shape"})
        for s in all_permutations(n):
            for j in range(1, n):
                if a[j - 1] < a[j] and abs(s[j - 1] - s[j]) == 1:
                    i = min(s[j - 1], s[j])
                    factor = ONE if s[j - 1] == i + 1 else T
                    b = act(simple(n, j), a)
                    if op_tpi(t_atom(a, s), i) != t_atom(b, s).scale(factor):
                        bad.append({"shape": a, "basement": s, "j": j, "check": "tpi-atom"})
    for m in range(w + 1):
        for lam in partitions(m, n):
            for tgt in rearrangements(lam):
                s = shortest_permutation(lam, tgt)
                w0s = tuple(n + 1 - v for v in s)
                if t_key(tgt) != t_atom(lam, w0s):
                    bad.append({"lambda": lam, "target": tgt, "check": "key-as-atom"})
                x = XPolynomial.monomial(lam)
                if apply_word(x, OperatorWord.of("theta", reduced_word(s))) != atom(tgt):
                    bad.append({"lambda": lam, "target": tgt, "check": "classical-atom"})
                if apply_word(x, OperatorWord.of("pi", reduced_word(s))) != key(tgt[::-1]):
                    bad.append({"lambda": lam, "target": tgt, "check": "classical-key"})
            mub = lam[::-1]
            for tgt in rearrangements(mub):
                s = shortest_permutation(mub, tgt)
                if t_atom(tgt) != t_atom(mub, s):
                    bad.append({"mu": lam, "target": tgt, "check": "atom-as-atom"})
    return bad


def sweep_rho_word(n, w):
    bad = []
    for m in range(w + 1):
        for lam in partitions(m, n):
            x = XPolynomial.monomial(lam)
            for a in rearrangements(lam):
                base = ttheta_perm(x, shortest_permutation(lam, a))
                for s in all_permutations(n):
                    lhs = tpi_perm(base, s)
                    if lhs != t_atom(a, s).scale(T ** twinv(a, s).pi_count):
                        bad.append({"shape": a, "basement": s})
    return bad


def _dominance_support_ok(P, lam):
    return all(dominates(lam, rev_sort(m)) for m in P.support())


def sweep_p_sigma_independence(n, w):
    bad = []
    for m in range(w + 1):
        for lam in partitions(m, n):
            ref = symmetric_P(lam)
            if not ref.is_symmetric() or not ref.coefficient(lam).is_one() or not _dominance_support_ok(ref, lam):
                bad.append({"lambda": lam, "check": "shape-of-P"})
            for s in all_permutations(n):
                if symmetric_P(lam, s) != ref:
                    bad.append({"lambda": lam, "basement": s, "check": "sigma"})
    return bad


def sweep_hl_oracle(n, w):
    bad = []
    for m in range(w + 1):
        for lam in partitions(m, n):
            oracle = hall_littlewood_oracle(lam)
            P = symmetric_P(lam)
            if P.specialize(q_zero=True) != oracle:
                bad.append({"lambda": lam, "check": "q=0"})
            if P.substitute_qt(q=T) != schur_oracle(lam, n):
                bad.append({"lambda": lam, "check": "q=t"})
            for s in all_permutations(n):
                r = hall_littlewood_expand(lam, s)
                pure = all(len(c.numerator.terms) == 1 and c.is_polynomial() for c in r.coefficients.values())
                if not pure or r.reconstruct() != oracle:
                    bad.append({"lambda": lam, "basement": s, "check": "expand"})
    return bad


def sweep_schur_oracle(n, w):
    bad = []
    for m in range(w + 1):
        for lam in partitions(m, n):
            s_lam = schur_oracle(lam, n)
            if t_key(lam).specialize(t_zero=True) != s_lam:
                bad.append({"lambda": lam, "check": "key"})
            for s in all_permutations(n):
                r = schur_in_atoms(lam, s)
                if r.reconstruct() != s_lam or not all(_nonneg_poly(c) for c in r.coefficients.values()):
                    bad.append({"lambda": lam, "basement": s, "check": "atoms"})
    return bad


def _nonneg_poly(c: QtScalar) -> bool:
    return c.is_polynomial() and all(v >= 0 for v in c.numerator.terms.values())


def sweep_kf_positivity(n, w):
    bad = []
    for m in range(1, w + 1):
        parts = partitions(m)
        for lam in parts:
            for mu in parts:
                k = kostka_foulkes(lam, mu)
                expect_nonzero = dominates(lam, mu)
                if not _nonneg_poly(k) or bool(k) != expect_nonzero:
                    bad.append({"lambda": lam, "mu": mu, "value": str(k)})
                if lam == mu and not k.is_one():
                    bad.append({"lambda": lam, "mu": mu, "check": "diagonal"})
    return bad


SWEEPS: Dict[str, Callable[[int, int], List[dict]]] = {
    "triangularity": sweep_triangularity,
    "knop-sahi": sweep_knop_sahi,
    "spec-to-atom": sweep_spec_to_atom,
    "shift": sweep_shift,
    "basement-permute": sweep_basement_permute,
    "shape-transpose": sweep_shape_transpose,
    "partial-symmetry": sweep_partial_symmetry,
    "braid": sweep_braid,
    "mixed-braid": sweep_mixed_braid,
    "quadratic": sweep_quadratic,
    "twinv": sweep_twinv,
    "invariant-subspace": sweep_invariant_subspace,
    "t-key-pbf": sweep_t_key_pbf,
    "rho-word": sweep_rho_word,
    "p-sigma-independence": sweep_p_sigma_independence,
    "hl-oracle": sweep_hl_oracle,
    "schur-oracle": sweep_schur_oracle,
    "kf-positivity": sweep_kf_positivity,
}


SWEEP_HELP: Dict[str, str] = {
    "triangularity": "leading monomial and support of E^sigma_alpha",
    "knop-sahi": "reverse-identity basement against the reversed-variable E",
    "spec-to-atom": "q=t=0 of E with identity basement is a Demazure atom",
    "shift": "E^sigma_{alpha+1^n} = x_1...x_n E^sigma_alpha",
    "basement-permute": "ttheta_i / tpi_i move the basement with the predicted t-power",
    "shape-transpose": "ttheta_i + c moves the shape; inverse formula round-trips",
    "partial-symmetry": "equal adjacent parts with adjacent basement labels give symmetry",
    "braid": "braid and commutation relations; reduced-word independence",
    "mixed-braid": "mixed tpi/ttheta braid relations",
    "quadratic": "quadratic relation, tpi ttheta = t, symmetry lemmas",
    "twinv": "operator chains from fixed basements and their twinv powers",
    "invariant-subspace": "span of E^{w0}_gamma over gamma ~ lambda is operator stable",
    "t-key-pbf": "t-atom/t-key shape operators and key-as-atom identities",
    "rho-word": "tpi_sigma ttheta_tau x^lambda against t-atoms",
    "p-sigma-independence": "symmetric P is basement independent, symmetric and monic",
    "hl-oracle": "P at q=0 against Hall-Littlewood; P at q=t against Schur",
    "schur-oracle": "Schur polynomials expanded in t-atoms",
    "kf-positivity": "Kostka-Foulkes polynomials have nonnegative coefficients",
}


def run_sweep(name: str, n: int = 3, max_weight: int = 3) -> List[dict]:
    if name not in SWEEPS:
        raise KeyError(f"unknown sweep {name!r}")
    if n < 1 or max_weight < 0:
        raise ValueError("need n >= 1 and max_weight >= 0")
    return SWEEPS[name](n, max_weight)

