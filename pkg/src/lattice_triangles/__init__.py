"""Ehrhart data and realizable (b, i) pairs of lattice triangles."""

from .cones import (
    apex,
    cone_boundary_lines,
    cone_classify,
    cone_contains,
    polygon_set_contains,
    scott_holds,
)
from .core import (
    BiPair,
    EhrhartPoly,
    HnfTriangle,
    LatticePoint,
    LatticeTriangle,
    boundary_count,
    brute_force_bi,
    ehrhart_eval,
    gcd_with_modulus,
    hnf_normalize,
    interior_count,
    pick_area_twice,
)
from .realizability import (
    PairSet,
    Witness,
    apex_witness,
    enumerate_pairs,
    lower_facet_witness,
    membership_witness,
    prime_line_pairs,
    upper_face_witness,
    verify_cone_emptiness,
)

__all__ = [
    "BiPair", "EhrhartPoly", "HnfTriangle", "LatticePoint", "LatticeTriangle",
    "PairSet", "Witness", "apex", "apex_witness", "boundary_count", "brute_force_bi",
    "cone_boundary_lines", "cone_classify", "cone_contains", "ehrhart_eval",
    "enumerate_pairs", "gcd_with_modulus", "hnf_normalize", "interior_count",
    "lower_facet_witness", "membership_witness", "pick_area_twice",
    "polygon_set_contains", "prime_line_pairs", "scott_holds", "upper_face_witness",
    "verify_cone_emptiness",
]
