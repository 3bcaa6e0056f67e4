"""ordercert: exact plane homeomorphism algebra and left-order certificates.

The library realizes a finitely generated group of plane homeomorphisms in
exact rational arithmetic, verifies its defining identities, and checks
machine-readable derivation certificates showing that the group admits no
left-invariant total order.
"""

from .exactpl import (
    PLCocycle,
    PLError,
    PLMap,
    Rational,
    format_rational,
    make_cocycle,
    make_plmap,
    rational,
)
from .plane import (
    EqualityVerdict,
    Letter,
    PlaneWord,
    WitnessSearchConfig,
    equal_or_unknown,
    h_generator,
    plane_word,
    verify_mirrored_relations,
)
from .skew import (
    GeneratorWord,
    RelationFact,
    RelationReport,
    SkewElement,
    compute_epsilon,
    generator,
    standard_generators,
    verify_relations,
    word_to_element,
)

__version__ = "0.1.0"

__all__ = [
    "EqualityVerdict", "GeneratorWord", "Letter", "PLCocycle", "PLError", "PLMap",
    "PlaneWord", "Rational", "RelationFact", "RelationReport", "SkewElement",
    "WitnessSearchConfig", "compute_epsilon", "equal_or_unknown", "format_rational",
    "generator", "h_generator", "make_cocycle", "make_plmap", "plane_word",
    "rational", "standard_generators", "verify_mirrored_relations",
    "verify_relations", "word_to_element", "__version__",
]
