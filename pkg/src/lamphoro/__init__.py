"""Horofunctions of the lamplighter group L2 with its Diestel-Leader word metric."""

__version__ = "0.1.0"

from .core import (
    NEG_INF,
    POS_INF,
    ExtInt,
    LampStand,
    apply_word,
    format_word,
    generator,
    identity,
    inverse,
    mirror,
    mul,
    parse,
    parse_word,
    power,
    serialize,
)
from .errors import (
    IndexRangeError,
    InvalidRayError,
    LamphoroError,
    OutOfBallError,
    ParseError,
    ResourceLimitError,
    UnsupportedInputError,
)
from .metric import DistanceBreakdown, dist, distance, geodesic_witness
from .oracle import Ball, bfs_ball, export_dot, growth_csv, oracle_distance
from .horofn import (
    HEIGHT_MINUS,
    HEIGHT_PLUS,
    BoundaryRay,
    BusemannMinus,
    BusemannPlus,
    HeightMinus,
    HeightPlus,
    Horofunction,
    Point,
    RibMinus,
    RibPlus,
    Spine,
    busemann_of_ray,
    enumerate_rib_class,
    evaluate,
    format_horofunction,
    parse_horofunction,
    rib_class_size,
)
from .classify import (
    Classified,
    Inconclusive,
    NoHorofunction,
    Oscillating,
    Stabilized,
    classify,
    empirical_limit,
    spec_from_json,
    stability_report,
)
from .topology import BasisNeighborhood, converges_to, member
from .action import act, fixed_rays, north_south_probe, orbit

__all__ = [
    "NEG_INF",
    "POS_INF",
    "ExtInt",
    "LampStand",
    "apply_word",
    "format_word",
    "generator",
    "identity",
    "inverse",
    "mirror",
    "mul",
    "parse",
    "parse_word",
    "power",
    "serialize",
    "IndexRangeError",
    "InvalidRayError",
    "LamphoroError",
    "OutOfBallError",
    "ParseError",
    "ResourceLimitError",
    "UnsupportedInputError",
    "DistanceBreakdown",
    "dist",
    "distance",
    "geodesic_witness",
    "Ball",
    "bfs_ball",
    "export_dot",
    "growth_csv",
    "oracle_distance",
    "HEIGHT_MINUS",
    "HEIGHT_PLUS",
    "BoundaryRay",
    "BusemannMinus",
    "BusemannPlus",
    "HeightMinus",
    "HeightPlus",
    "Horofunction",
    "Point",
    "RibMinus",
    "RibPlus",
    "Spine",
    "busemann_of_ray",
    "enumerate_rib_class",
    "evaluate",
    "format_horofunction",
    "parse_horofunction",
    "rib_class_size",
    "Classified",
    "Inconclusive",
    "NoHorofunction",
    "Oscillating",
    "Stabilized",
    "classify",
    "empirical_limit",
    "spec_from_json",
    "stability_report",
    "BasisNeighborhood",
    "converges_to",
    "member",
    "act",
    "fixed_rays",
    "north_south_probe",
    "orbit",
]
