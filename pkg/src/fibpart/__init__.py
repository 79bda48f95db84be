"""Residue-restricted partition counts and the truncated pentagonal recurrences they satisfy."""

from .identities import (
    IdentitySchedule,
    IdentityTerm,
    VerificationReport,
    pentagonal_series,
    residual,
    schedule_for,
    triple_product_product_side,
    triple_product_sum_side,
    verify_counting,
    verify_lemma,
    verify_product_identity,
    verify_theorem1_equality,
)
from .partitions import (
    CountTable,
    OracleRefusal,
    ResidueRestriction,
    allowed_parts,
    count_restricted_table,
    count_unrestricted_pentagonal,
    enumerate_restricted,
    restricted_gf,
)
from .series import (
    NonUnitError,
    OrderMismatch,
    ProgressionFactorSpec,
    SeriesError,
    TruncatedSeries,
    add,
    euler_product,
    invert_unit,
    make_series,
    mul,
    progression_product,
    shift,
)

__version__ = "0.1.0"
