from ._box import (
    Box,
    BoxRepresentation,
    IntersectionRepresentation,
    as_rational,
)
from ._contact import (
    Violation,
    VerificationReport,
    classify_pair,
    contact_graph,
    verify_representation,
    induced_labeling,
    lift_dimension,
)
from ._intersection import (
    intersection_graph,
    find_private_point,
    private_points,
    is_proper,
)
from ._svg import representation_to_svg


__all__ = [
    "Box",  # public API, exact axis-parallel box
    "BoxRepresentation",  # public API, contact representation
    "IntersectionRepresentation",  # public API, boxicity model
    "as_rational",
    "Violation",
    "VerificationReport",
    "classify_pair",
    "contact_graph",
    "verify_representation",
    "induced_labeling",
    "lift_dimension",
    "intersection_graph",
    "find_private_point",
    "private_points",
    "is_proper",
    "representation_to_svg",
]
