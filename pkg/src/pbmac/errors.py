"""Exception types shared across the package."""


class PoleError(ArithmeticError):
    """A specialization sends a denominator to zero."""


class ArityError(ValueError):
    """Polynomials or indices disagree on the number of variables."""


class HypothesisError(ValueError):
    """An identity was requested outside the range where it applies."""


class NonInvertibleError(ArithmeticError):
    """An operator of the form (theta + A) has no inverse for this A."""
