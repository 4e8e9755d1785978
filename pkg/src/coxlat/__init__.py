"""Exact computations on finite Coxeter groups, the facial weak order on
their Coxeter complexes, and facial lattice congruences."""

__version__ = "0.1.0"

from .congruence import (  # noqa: E402
    FacialCongruence,
    ProjectionPair,
    QuotientLattice,
    build_facial_congruence,
    cambrian_projections,
    descent_projections,
    facial_congruence,
    fan_cones,
    identity_projections,
    nonsublattice_witness,
    one_class_projections,
    projections_for,
    validate_projections,
)
from .coxeter import CoxeterMatrix, CoxeterSystem, Element, build_system  # noqa: E402
from .errors import CoxlatError  # noqa: E402
from .facial import (  # noqa: E402
    CoxeterComplex,
    FacialLattice,
    ParabolicCoset,
    facial_join,
    facial_leq,
    facial_meet,
    format_coset,
    make_coset,
    mobius,
    parse_coset,
)
from .weak import weak_join, weak_leq, weak_meet  # noqa: E402

__all__ = [
    "CoxeterComplex",
    "CoxeterMatrix",
    "CoxeterSystem",
    "CoxlatError",
    "Element",
    "FacialCongruence",
    "FacialLattice",
    "ParabolicCoset",
    "ProjectionPair",
    "QuotientLattice",
    "build_facial_congruence",
    "build_system",
    "cambrian_projections",
    "descent_projections",
    "facial_congruence",
    "facial_join",
    "facial_leq",
    "facial_meet",
    "fan_cones",
    "format_coset",
    "identity_projections",
    "make_coset",
    "mobius",
    "nonsublattice_witness",
    "one_class_projections",
    "parse_coset",
    "projections_for",
    "validate_projections",
    "weak_join",
    "weak_leq",
    "weak_meet",
]
