"""Exact grossone arithmetic, interval sets and explicit set measurement."""

from .errors import (
    BelowRange,
    BoundExceeded,
    DivideByZero,
    EmptyIntervalRejected,
    EmptySet,
    GrossoneError,
    InvalidMeasurement,
    NoFiniteNumerals,
    NoInfiniteNumerals,
    NonIntegerEndpoint,
    NonIntegerOffset,
    NotABijection,
    NotASubset,
    NotExact,
    NotExpressible,
    NotFinite,
    NotSubsetOfRange,
    OverlappingTargets,
    ParseError,
    PreconditionViolated,
)
from .derived import (
    INCOMPARABLE,
    Affine,
    DefinedNumeral,
    DefinitionSession,
    ExpBase,
    Pow,
    cmp_defined,
    define_by_inverse,
    resolve_finite,
)
from .geometry import (
    HalfPlaneReport,
    RealInterval,
    Strip,
    halfplane_demo,
    reflect_strip,
    strip_subset,
    uncovered_extent,
)
from .gnum import (
    GROSSONE,
    ONE,
    ZERO,
    GrossNumber,
    NumberClass,
    Sign,
    add,
    classify,
    cmp,
    div_exact,
    finite,
    format_numeral,
    gross_term,
    mul,
    parse_numeral,
    sub,
)
from .measure import (
    AffinePiece,
    Measurement,
    canonical_injection,
    canonical_measurement,
    compare_measured,
    complement_measurement,
    concat,
    intersection_split,
    min_extraction_measurement,
    transport,
)
from .numeral_system import (
    BoundedFinite,
    GrossBudget,
    NumeralSystem,
    Piraha,
    expressible,
    max_finite,
    measure_in,
    min_infinite,
    parse_system,
)
from .sets import (
    EMPTY,
    GrossInterval,
    IntervalSet,
    cardinality,
    contains,
    convex_hull,
    difference,
    extrema,
    intersect,
    interval,
    is_final_segment,
    is_initial_segment,
    is_subset,
    make_set,
    map_affine,
    parse_set_expression,
    union,
    union_initial_segments,
)

__version__ = "0.1.0"
