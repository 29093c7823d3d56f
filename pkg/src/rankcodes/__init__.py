"""rankcodes: exact-arithmetic toolkit for codes with the rank metric.

Constructs Gabidulin / generalized Gabidulin codes and their cartesian
powers, counts vectors by rank weight, evaluates finite and asymptotic
Singleton / Gilbert / sphere-packing bounds, and measures covering radii,
maximality, and weight distributions by exhaustive enumeration.
"""

from .bounds import (
    AsymptoticPoint,
    BoundReport,
    asym_curve,
    asym_gv,
    asym_singleton,
    asym_sphere_packing,
    finite_bounds,
    singleton_dmax,
)
from .codes import (
    CodeAnalysis,
    LinearCode,
    analyze,
    cartesian_power,
    default_generator_vector,
    dump_code,
    encode,
    load_code,
    make_code,
    make_gabidulin,
)
from .counting import CountResult, ball_volume, count_hamming_weight, count_rank_weight
from .coverage import (
    CoverageReport,
    TranslateWeights,
    covering_radius,
    find_extension_vector,
    is_maximal,
    maximal_radius_bound,
    translate_weights,
    weight_distribution,
)
from .field import ExtensionField, FieldElement, PrimeField, make_field, parse_field_spec
from .linalg import (
    ExpansionMatrix,
    RankVector,
    expand,
    hamming_weight,
    rank_distance,
    rank_gfq,
    rank_weight,
    transpose_vector,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticPoint",
    "BoundReport",
    "CodeAnalysis",
    "CountResult",
    "CoverageReport",
    "ExpansionMatrix",
    "ExtensionField",
    "FieldElement",
    "LinearCode",
    "PrimeField",
    "RankVector",
    "TranslateWeights",
    "analyze",
    "asym_curve",
    "asym_gv",
    "asym_singleton",
    "asym_sphere_packing",
    "ball_volume",
    "cartesian_power",
    "count_hamming_weight",
    "count_rank_weight",
    "covering_radius",
    "default_generator_vector",
    "dump_code",
    "encode",
    "expand",
    "find_extension_vector",
    "finite_bounds",
    "hamming_weight",
    "is_maximal",
    "load_code",
    "make_code",
    "make_field",
    "make_gabidulin",
    "maximal_radius_bound",
    "parse_field_spec",
    "rank_distance",
    "rank_gfq",
    "rank_weight",
    "singleton_dmax",
    "transpose_vector",
    "translate_weights",
    "weight_distribution",
]
