"""Exact arithmetic for two-bridge knots on Chebyshev diagrams.

The package computes one-regular continued fractions and their monoid
words, minimal Chebyshev diagrams C(3, b), explicit polynomial
parametrizations (T_3(t), T_b(t), C(t)) with b + deg C = 3N, and the full
classification of harmonic knots (T_3, T_b, T_c); a numeric oracle checks
every construction against the measured curve.
"""

from .bridge import (
    Equivalence,
    FamilySpec,
    TwoBridgeKnot,
    canonicalize,
    equivalent,
    family_fraction,
)
from .contfrac import (
    ClassicalCF,
    ConjugateFractions,
    Fraction,
    Mat2,
    PMWord,
    RegularCF,
    classical_expansion,
    cn_from_regular,
    conjugate_fractions,
    crossing_number,
    eval_cf,
    palindromy_report,
    parity_class,
    pm_word,
    regular_expansion,
    word_to_matrix,
)
from .diagram import (
    ConwayForm,
    CrossingPoint,
    MinimalDiagram,
    conway_reversal_check,
    enumerate_crossings,
    is_minimal_by_word,
    minimal_diagram,
)
from .errors import ChebknotError
from .harmonic import (
    CanonicalHarmonic,
    HarmonicSpec,
    classify,
    crossing_sign_closed_form,
    harmonic_conway,
    is_harmonic_candidate,
    mirror_equivalent_c,
)
from .heights import (
    GaussSequence,
    HeightPolynomial,
    Parametrization,
    build_height,
    count_sign_changes,
    gauss_sequence,
    parametrization,
)
from .oracle import (
    ChebyshevHeight,
    CurveSample,
    measure_crossings,
    recover_knot,
    verify_parametrization,
)
from .svg import render_diagram_svg

__version__ = "0.1.0"

__all__ = [
    "CanonicalHarmonic",
    "ChebknotError",
    "ChebyshevHeight",
    "ClassicalCF",
    "ConjugateFractions",
    "ConwayForm",
    "CrossingPoint",
    "CurveSample",
    "Equivalence",
    "FamilySpec",
    "Fraction",
    "GaussSequence",
    "HarmonicSpec",
    "HeightPolynomial",
    "Mat2",
    "MinimalDiagram",
    "PMWord",
    "Parametrization",
    "RegularCF",
    "TwoBridgeKnot",
    "canonicalize",
    "classical_expansion",
    "classify",
    "cn_from_regular",
    "conjugate_fractions",
    "conway_reversal_check",
    "crossing_number",
    "crossing_sign_closed_form",
    "enumerate_crossings",
    "equivalent",
    "eval_cf",
    "family_fraction",
    "gauss_sequence",
    "harmonic_conway",
    "is_harmonic_candidate",
    "is_minimal_by_word",
    "measure_crossings",
    "minimal_diagram",
    "mirror_equivalent_c",
    "palindromy_report",
    "parametrization",
    "parity_class",
    "pm_word",
    "recover_knot",
    "regular_expansion",
    "render_diagram_svg",
    "verify_parametrization",
    "word_to_matrix",
    "build_height",
    "count_sign_changes",
]
