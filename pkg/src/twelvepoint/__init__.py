"""Reflexive lattice polygons, their duals, and the 12-point theorem."""

from .classify import (
    EquivalenceClass,
    UnimodularMap,
    apply_unimodular,
    are_equivalent,
    enumerate_polygons,
    enumerate_reflexive,
    normal_form,
    random_reflexive,
)
from .duality import DualResult, dual_polygon, primitive_vector, verify_twelve
from .lattice import (
    LatticePoint,
    Polygon,
    ReflexivePolygon,
    area2,
    boundary_count,
    boundary_count_oracle,
    interior_count,
    interior_count_oracle,
    is_strictly_convex,
    strict_form,
    subdivide,
    validate_reflexive,
)
from .reduction import (
    DualTransitionReport,
    ElementaryOp,
    OpKind,
    ReductionTrace,
    check_dual_transition,
    ear_removable,
    find_removable_ear,
    insert_vertex,
    is_simple_triangle,
    reduce_to_parallelogram,
    remove_ear,
)

__version__ = "0.1.0"
