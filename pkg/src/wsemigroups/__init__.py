"""Exact arithmetic for Weierstrass semigroups at one and two points."""

from .errors import (
    ArityMismatch,
    AxiomViolation,
    InputError,
    InvalidSemigroup,
    NotSymmetric,
    UnknownCheck,
    WindowTooSmall,
)
from .onepoint import (
    DeltaSequence,
    FunctionalEquationSigns,
    LComparison,
    NumericalSemigroup,
    OnePointSemigroup,
    SeriesModeReport,
    functional_equation_signs,
    l_polynomial,
    l_polynomial_comparison,
    poincare_delta_product,
    poincare_direct,
    poincare_onepoint,
)
from .oracle import Fixture, d_oracle, ell, semigroup_from_fixture
from .series import LaurentPoly, RationalGF, Window
from .twopoint import (
    CHECKS,
    CornerData,
    SymmetryReport,
    TwoPointSemigroup,
    VerificationReport,
)

__all__ = [
    "ArityMismatch",
    "AxiomViolation",
    "InputError",
    "InvalidSemigroup",
    "NotSymmetric",
    "UnknownCheck",
    "WindowTooSmall",
    "LaurentPoly",
    "RationalGF",
    "Window",
    "NumericalSemigroup",
    "DeltaSequence",
    "OnePointSemigroup",
    "SeriesModeReport",
    "LComparison",
    "FunctionalEquationSigns",
    "poincare_direct",
    "poincare_delta_product",
    "poincare_onepoint",
    "l_polynomial",
    "l_polynomial_comparison",
    "functional_equation_signs",
    "TwoPointSemigroup",
    "CornerData",
    "SymmetryReport",
    "VerificationReport",
    "CHECKS",
    "Fixture",
    "ell",
    "d_oracle",
    "semigroup_from_fixture",
]
