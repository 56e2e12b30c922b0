"""Exact-arithmetic toolkit for 2-bridge knot groups.

Computes the two-generator presentation of b(p, q), the Riley
representation polynomial Lambda(y) and longitude polynomial g(y) over
Z[y], Fox-calculus Alexander polynomials, epimorphism obstructions, and
machine certificates that no parabolic representation kills the longitude.
"""

from .alexander import (
    AlexanderPolynomial,
    alexander_polynomial,
    knot_determinant,
    torus_alexander,
    torus_targets,
)
from .errors import (
    BothZeroError,
    DegreeMismatchError,
    DidNotConvergeError,
    EvenPError,
    NonCoprimeError,
    NotARootError,
    OutOfRangeError,
    TwoBridgeError,
    ZeroDivisorError,
)
from .normal_form import (
    Kind,
    KnotClass,
    TwoBridgeForm,
    canonical_key,
    classify,
    enumerate_forms,
    epsilon_sequence,
    sigma,
    validate,
)
from .obstructions import ObstructionReport, ObstructionVerdict, obstruct, scan
from .polynomials import (
    GF2Polynomial,
    IntPolynomial,
    LaurentPolynomial,
    divides_up_to_units,
    gcd_rational,
    gf2_divides,
    reduce_mod2,
    substitute_negate,
)
from .presentation import (
    GroupRingElement,
    GroupWord,
    abelianize,
    build_relator,
    build_word,
    fox_derivative,
)
from .riley import (
    PolyMatrix2,
    PropertyLCertificate,
    TorusRecursion,
    Verdict,
    certificate_scan,
    holonomy_matrix,
    longitude_translation,
    mod2_congruence_check,
    property_l_certificate,
    riley_polynomial,
    torus_recursion,
)
from .numeric import (
    NumericRep,
    RootCheck,
    instantiate_rep,
    roots,
    trace_function,
    verify_form,
    verify_longitude,
)

__version__ = "0.1.0"
