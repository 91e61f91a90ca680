"""Unit reducibility and perfect unary quadratic forms over real quadratic
and simplest cubic fields, by exact rational arithmetic."""

from .quadratic import (
    FieldType,
    QuadElem,
    QuadField,
    classify_type,
    fundamental_unit,
    is_squarefree,
    parse_cert_str,
    rd_parameters,
    type_unit,
    unit_square,
)
from .binary import (
    BinaryForm,
    UniTransform,
    enumerate_below,
    gauss_reduce,
    min_and_vectors,
    trace_form,
)
from .unary import (
    MinData,
    PerfectClass,
    UnaryForm,
    enumerate_perfect_classes,
    equivalent,
    find_nonunit_witness,
    general_criterion,
    in_reduction_domain,
    is_perfect,
    minkowski_quadratic_predicate,
    mu_and_minvecs,
    normalize_scale,
    rd_perfect_form,
    reduce_unary,
    voronoi_neighbor,
)
from .cubic import (
    CubicElem,
    SimplestCubicField,
    enumerate_cubic_classes,
    equivalent_cubic,
    facet_vector,
    in_reduction_domain_cubic,
    is_monogenic,
    nonequivalence_check,
    rays,
    reduce_cubic,
    ternary_min,
    ternary_trace_form,
    verify_cubic_walk,
)

__all__ = [
    "FieldType",
    "QuadElem",
    "QuadField",
    "classify_type",
    "fundamental_unit",
    "is_squarefree",
    "parse_cert_str",
    "rd_parameters",
    "type_unit",
    "unit_square",
    "BinaryForm",
    "UniTransform",
    "enumerate_below",
    "gauss_reduce",
    "min_and_vectors",
    "trace_form",
    "MinData",
    "PerfectClass",
    "UnaryForm",
    "enumerate_perfect_classes",
    "equivalent",
    "find_nonunit_witness",
    "general_criterion",
    "in_reduction_domain",
    "is_perfect",
    "minkowski_quadratic_predicate",
    "mu_and_minvecs",
    "normalize_scale",
    "rd_perfect_form",
    "reduce_unary",
    "voronoi_neighbor",
    "CubicElem",
    "SimplestCubicField",
    "enumerate_cubic_classes",
    "equivalent_cubic",
    "facet_vector",
    "in_reduction_domain_cubic",
    "is_monogenic",
    "nonequivalence_check",
    "rays",
    "reduce_cubic",
    "ternary_min",
    "ternary_trace_form",
    "verify_cubic_walk",
]

__version__ = "0.1.0"
