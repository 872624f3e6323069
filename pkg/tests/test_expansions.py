import pytest

import itertools

from pbmac import ONE, T, ZERO, XPolynomial, parse_poly
from pbmac.combinat import all_permutations, dominates, partitions, rearrangements, rev_sort
from pbmac.expansions import (
    basis_solve,
    hall_littlewood_expand,
    hall_littlewood_oracle,
    kostka_foulkes,
    macdonald_P_expand,
    schur_in_atoms,
    symmetric_P,
)
from pbmac.macdonald import macdonald_E, schur_oracle
from pbmac.operators import op_tpi, op_ttheta


def brute_hl(lam):
    """Return (V * S, V) where S is the S_n-symmetrization of
    x^lam prod_{i<j} (x_i - t x_j)/(x_i - x_j) and V the Vandermonde product.

    Each permuted term is multiplied through by V, which only changes its sign.
    """
    n = len(lam)
    x = [XPolynomial.var(n, i) for i in range(1, n + 1)]
    vdm = XPolynomial.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            vdm = vdm * (x[i] - x[j])
    total = XPolynomial.zero(n)
    for w in all_permutations(n):
        y = [x[w[k] - 1] for k in range(n)]
        term = XPolynomial.one(n)
        sign = 1
        for i in range(n):
            term = term * y[i] ** lam[i]
            for j in range(i + 1, n):
                term = term * (y[i] - y[j].scale(T))
                if w[i] > w[j]:
                    sign = -sign
        total = total + (term if sign > 0 else -term)
    return total, vdm


def test_hl_oracle_against_symmetrization():
    from pbmac.expansions import _v

    for m in range(4):
        for lam in partitions(m, 3):
            total, vdm = brute_hl(lam)
            assert hall_littlewood_oracle(lam) * vdm == total.scale(_v(lam).reciprocal())


def test_symmetric_P_properties():
    for m in range(5):
        for lam in partitions(m, 3):
            P = symmetric_P(lam)
            assert P.is_symmetric()
            assert P.coefficient(lam) == ONE
            assert all(dominates(lam, rev_sort(mon)) for mon in P.support())
            for s in all_permutations(3):
                assert symmetric_P(lam, s) == P


def test_P_at_q0_is_hall_littlewood():
    for m in range(4):
        for lam in partitions(m, 3):
            assert symmetric_P(lam).specialize(q_zero=True) == hall_littlewood_oracle(lam)


def test_P_at_q_equals_t_is_schur():
    for m in range(4):
        for lam in partitions(m, 3):
            assert symmetric_P(lam).substitute_qt(q=T) == schur_oracle(lam, 3)


def test_P_expansion_reconstructs():
    r = macdonald_P_expand((2, 1, 0), (2, 3, 1))
    assert set(r.coefficients) == {(2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (0, 2, 1), (0, 1, 2)}
    assert r.reconstruct() == symmetric_P((2, 1, 0))


def test_hall_littlewood_expand():
    for m in range(4):
        for lam in partitions(m, 3):
            for s in all_permutations(3):
                r = hall_littlewood_expand(lam, s)
                assert r.reconstruct() == hall_littlewood_oracle(lam)
                for c in r.coefficients.values():
                    assert c.is_polynomial() and len(c.numerator.terms) == 1


def test_hall_littlewood_small_case():
    # P_(1,0)(x; t) = x1 + x2 and the t-atoms of (1,0) and (0,1) are monomials
    r = hall_littlewood_expand((1, 0), (1, 2))
    assert r.reconstruct() == parse_poly("x1 + x2", 2)
    assert all(c == ONE for c in r.coefficients.values())


def test_kostka_foulkes_goldens():
    assert kostka_foulkes((2,), (1, 1)) == T
    assert kostka_foulkes((2, 1), (1, 1, 1)) == T + T * T
    for m in range(1, 5):
        for lam in partitions(m):
            assert kostka_foulkes(lam, lam) == ONE


def test_kostka_foulkes_at_one_is_kostka():
    # K_{lam,mu}(1) counts semistandard tableaux of shape lam and content mu
    for m in range(1, 5):
        for lam in partitions(m):
            s = schur_oracle(lam, m)
            for mu in partitions(m):
                padded = mu + (0,) * (m - len(mu))
                assert kostka_foulkes(lam, mu).evaluate(0, 1) == s.coefficient(padded).evaluate(0, 0)


def test_kostka_foulkes_errors():
    with pytest.raises(ValueError):
        kostka_foulkes((2,), (1,))
    with pytest.raises(ValueError):
        kostka_foulkes((1, 2), (2, 1))


def test_schur_in_atoms():
    for m in range(4):
        for lam in partitions(m, 3):
            for s in all_permutations(3):
                r = schur_in_atoms(lam, s)
                assert r.reconstruct() == schur_oracle(lam, 3)
                for c in r.coefficients.values():
                    assert c.is_polynomial() and all(v > 0 for v in c.numerator.terms.values())


def test_expansion_json_is_sorted():
    r = hall_littlewood_expand((1, 0, 0), (1, 2, 3))
    idx = [term["index"] for term in r.to_json()["terms"]]
    assert idx == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_basis_solve():
    gammas = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    basis = [macdonald_E(g) for g in gammas]
    for g, E in zip(gammas, basis):
        for i in (1, 2):
            for op in (op_ttheta, op_tpi):
                target = op(E, i)
                c = basis_solve(target, basis)
                assert c is not None
                total = XPolynomial.zero(3)
                for ck, b in zip(c, basis):
                    total = total + b.scale(ck)
                assert total == target
    assert basis_solve(XPolynomial.monomial((4, 0, 0)), basis) is None


def test_partition_validation():
    with pytest.raises(ValueError):
        symmetric_P((1, 2))
    with pytest.raises(ValueError):
        hall_littlewood_oracle((1, 1, 1), 2)


def _elementary(k, n):
    f = XPolynomial.zero(n)
    for S in itertools.combinations(range(n), k):
        f = f + XPolynomial.monomial(tuple(int(i in S) for i in range(n)))
    return f


def _e_conjugate(lam, n):
    parts = [p for p in lam if p]
    out = XPolynomial.one(n)
    for j in range(parts[0] if parts else 0):
        out = out * _elementary(sum(1 for p in parts if p > j), n)
    return out


def test_exploratory_q1_specializations():
    """E_lam(x; 1, 0) = e_lam' ; P_lam at q = 1 is e_lam' and at t = 1 is m_lam."""
    for n in (2, 3):
        for m in range(4):
            for lam in partitions(m, n):
                e = _e_conjugate(lam, n)
                assert macdonald_E(lam).substitute_qt(q=ONE, t=ZERO) == e
                P = symmetric_P(lam)
                assert P.substitute_qt(q=ONE) == e
                mono = XPolynomial.zero(n)
                for g in rearrangements(lam):
                    mono = mono + XPolynomial.monomial(g)
                assert P.substitute_qt(t=ONE) == mono


def test_small_expansion_examples():
    assert hall_littlewood_oracle((2, 0)) == parse_poly("x1^2 + x2^2 + (1-t)*x1*x2", 2)
    assert hall_littlewood_expand((1, 1), (1, 2)).coefficients == {(1, 1): ONE}
    assert schur_in_atoms((1, 1), (2, 1)).coefficients == {(1, 1): ONE}
    assert schur_in_atoms((2, 0), (1, 2)).reconstruct() == parse_poly("x1^2 + x1*x2 + x2^2", 2)
    assert symmetric_P((1, 0, 0)) == parse_poly("x1 + x2 + x3", 3)


def test_invariant_subspace_instance():
    basis = [macdonald_E(g) for g in rearrangements((2, 1, 0))]
    assert basis_solve(op_ttheta(macdonald_E((1, 0, 2)), 1), basis) is not None
    assert basis_solve(basis[0], basis) == [ONE] + [ZERO] * (len(basis) - 1)
    assert basis_solve(XPolynomial.monomial((4, 0, 0)), basis) is None
