"""Census of singular weight-k unital circulant matrices."""

from .family import UniformizedMember, bounded_vectors, residue_lifts, uniformized_family
from .case_counts import (
    Case2Profile,
    case1_breakdown,
    case2_profiles,
    count_case1,
    count_case2,
    double_count_obstruction,
    unital_breakdown,
)
from .oracles import (
    case2_residue_vectors,
    count_double,
    enumerate_case1_bruteforce,
    enumerate_case1_masks,
    enumerate_case2_bruteforce,
)
from .report import CensusReport, CensusVerification, census_45, verify_census_45
from .sampling import sample_singularity, sample_supports
from .exhaustive import ExhaustiveCensus, exhaustive_census
from .general import census_two_prime

__all__ = [
    "UniformizedMember",
    "bounded_vectors",
    "residue_lifts",
    "uniformized_family",
    "Case2Profile",
    "case1_breakdown",
    "case2_profiles",
    "count_case1",
    "count_case2",
    "double_count_obstruction",
    "unital_breakdown",
    "case2_residue_vectors",
    "count_double",
    "enumerate_case1_bruteforce",
    "enumerate_case1_masks",
    "enumerate_case2_bruteforce",
    "CensusReport",
    "CensusVerification",
    "census_45",
    "verify_census_45",
    "sample_singularity",
    "sample_supports",
    "ExhaustiveCensus",
    "exhaustive_census",
    "census_two_prime",
]
