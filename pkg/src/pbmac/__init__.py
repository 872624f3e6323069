"""Permuted-basement nonsymmetric Macdonald polynomials with exact arithmetic."""

from .errors import ArityError, HypothesisError, NonInvertibleError, PoleError
from .qt import ONE, Q, T, ZERO, IntPoly2, QtScalar, parse_qt, poly_gcd
from .xpoly import XPolynomial, parse_poly
from .fillings import (
    AugmentedFilling,
    Triple,
    arm,
    classify_triples,
    coinv,
    descents,
    enumerate_naf,
    inv,
    is_non_attacking,
    leg,
    maj,
    weight,
)
from .macdonald import MacdonaldIndex, atom, key, macdonald_E, schur_oracle, t_atom, t_key
from .operators import (
    OperatorWord,
    TwinvStats,
    apply_word,
    invert_ttheta_plus_const,
    op_pi,
    op_theta,
    op_tpi,
    op_ttheta,
    shape_transpose,
    tpi_perm,
    ttheta_perm,
    twinv,
)
from .expansions import (
    ExpansionResult,
    basis_solve,
    hall_littlewood_expand,
    hall_littlewood_oracle,
    kostka_foulkes,
    schur_in_atoms,
    symmetric_P,
)

__version__ = "0.1.0"
