"""Exact umbral calculus, symmetric functions, parking functions and noncrossing partitions."""
from .coeffring import FamilyError, GradedPoly, format_rational, graded_truncate, parse_rational, ring_arith
from .noncrossing import (
    FlagVectors,
    SetPartition,
    chain_symfunc,
    enumerate_nc,
    flag_vectors,
    gessel_Q,
    is_noncrossing,
    maximal_chains,
    rank,
    refinement_leq,
)
from .parking import (
    ParkingFunction,
    TypeAggregate,
    abel_poly,
    catalan,
    count_parking,
    enumerate_parking,
    is_parking,
    orbit_representatives,
    volume_poly,
    volume_umbral,
)
from .partitions import Partition, add_part, enumerate_partitions, falling_factorial, partition_stats
from .series import TruncSeries, series_arith, series_coeff, series_comp_inverse, series_compose
from .symfunc import e_in_h, expand_in_variables, h, hstar, identify_symmetric, omega, pf, pf_k, pf_typeB
from .umbral import (
    MomentSeq,
    UmbraRef,
    UmbralExpr,
    comp_inverse_umbra,
    derivative,
    dot,
    evaluate,
    negate,
    new_umbra,
    similar,
    special_umbra,
    umbra_to_genfun,
    umbral_equiv,
)

__version__ = "0.1.0"

__all__ = [
    "FamilyError",
    "GradedPoly",
    "format_rational",
    "graded_truncate",
    "parse_rational",
    "ring_arith",
    "FlagVectors",
    "SetPartition",
    "chain_symfunc",
    "enumerate_nc",
    "flag_vectors",
    "gessel_Q",
    "is_noncrossing",
    "maximal_chains",
    "rank",
    "refinement_leq",
    "ParkingFunction",
    "TypeAggregate",
    "abel_poly",
    "catalan",
    "count_parking",
    "enumerate_parking",
    "is_parking",
    "orbit_representatives",
    "volume_poly",
    "volume_umbral",
    "Partition",
    "add_part",
    "enumerate_partitions",
    "falling_factorial",
    "partition_stats",
    "TruncSeries",
    "series_arith",
    "series_coeff",
    "series_comp_inverse",
    "series_compose",
    "e_in_h",
    "expand_in_variables",
    "h",
    "hstar",
    "identify_symmetric",
    "omega",
    "pf",
    "pf_k",
    "pf_typeB",
    "MomentSeq",
    "UmbraRef",
    "UmbralExpr",
    "comp_inverse_umbra",
    "derivative",
    "dot",
    "evaluate",
    "negate",
    "new_umbra",
    "similar",
    "special_umbra",
    "umbra_to_genfun",
    "umbral_equiv",
]
