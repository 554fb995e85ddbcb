"""Exact tools for plane linear systems, Nagata-type Seshadri bounds and
Seshadri constants on blown-up products of curves."""

from .bounds import (
    Backend,
    BarkowskiTarget,
    BoundResult,
    barkowski_targets,
    certified_lower_bound_search,
    check_bound_consistency,
    max_uniform_multiplicity,
)
from .certificate import Certificate
from .classification import (
    SpecialityVerdict,
    Tag,
    classify_homogeneous_upto9,
    is_nonempty_nonspecial,
    multiplicity_one_rule,
)
from .oracle import OracleReport, actual_dimension, build_conditions_matrix, speciality_check
from .prover import MemoCache, ProofOutcome, cache_load, cache_store, prove, split_search
from .quasi import CremonaParams, certify_quasi, cor63_reduce, prop62_test
from .surfaces import (
    DivisorClass,
    ProductPolarization,
    intersect,
    nef_square_check,
    parse_divisor,
    self_intersection,
    seshadri_blownup_product,
    seshadri_product,
)
from .systems import (
    LinearSystem,
    canonicalize,
    conditions_count,
    expected_dimension,
    parse_system,
    virtual_dimension,
)
from .verify import certificate_problems, verify_certificate

__version__ = "0.1.0"
