"""Computing with positively presented monoids.

Word-problem decision by rewriting closure, divisibility and common-multiple
lattices, fundamental/Garside element verification, bounded cancellativity
search, and group word equality via central lifting.
"""

from .errors import (
    CapExceededError,
    InjectivityNotEstablishedError,
    MonoidError,
    NonHomogeneousError,
    NotFundamentalError,
    ParseError,
)
from .presentation import (
    Classification,
    Presentation,
    Relation,
    Word,
    classify,
    expand_cyclic,
    fixture,
    fixture_names,
    format_word,
    parse_presentation,
    parse_word,
    presentation_digest,
    serialize_presentation,
)
from .rewrite import (
    DEFAULT_CAP,
    EquivClass,
    canonical,
    equal,
    equivalence_class,
    neighbors,
)
from .divisibility import DivisionResult, McmReport, cm_r, left_divides, mcm_r, right_divides
from .garside import (
    FundamentalCertificate,
    FundamentalGarsideCheck,
    GarsideReport,
    atoms,
    cross_check_fundamental_garside,
    verify_fundamental,
    verify_garside,
)
from .cancel import (
    CancellationFailure,
    ClaimCheck,
    add_relation,
    search_failures,
    verify_claim,
)
from .gmn import (
    CASES,
    ConsecutiveWord,
    DivisionLawReport,
    DivisionLawViolation,
    GmnContext,
    anti_involution,
    as_consecutive,
    build_gmn,
    check_division_law,
    delta_quotient,
    in_rm,
    split_tail_run,
    tail_run,
    tail_run_complement,
)
from .groupwords import (
    LiftResult,
    SignedWord,
    center_scan,
    format_signed_word,
    free_reduce,
    group_equal,
    parse_signed_word,
    positive_lift,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "InjectivityNotEstablishedError",
    "MonoidError",
    "NonHomogeneousError",
    "NotFundamentalError",
    "ParseError",
    "Classification",
    "Presentation",
    "Relation",
    "Word",
    "classify",
    "expand_cyclic",
    "fixture",
    "fixture_names",
    "format_word",
    "parse_presentation",
    "parse_word",
    "presentation_digest",
    "serialize_presentation",
    "DEFAULT_CAP",
    "EquivClass",
    "canonical",
    "equal",
    "equivalence_class",
    "neighbors",
    "DivisionResult",
    "McmReport",
    "cm_r",
    "left_divides",
    "mcm_r",
    "right_divides",
    "FundamentalCertificate",
    "FundamentalGarsideCheck",
    "GarsideReport",
    "atoms",
    "cross_check_fundamental_garside",
    "verify_fundamental",
    "verify_garside",
    "CancellationFailure",
    "ClaimCheck",
    "add_relation",
    "search_failures",
    "verify_claim",
    "CASES",
    "ConsecutiveWord",
    "DivisionLawReport",
    "DivisionLawViolation",
    "GmnContext",
    "anti_involution",
    "as_consecutive",
    "build_gmn",
    "check_division_law",
    "delta_quotient",
    "in_rm",
    "split_tail_run",
    "tail_run",
    "tail_run_complement",
    "LiftResult",
    "SignedWord",
    "center_scan",
    "format_signed_word",
    "free_reduce",
    "group_equal",
    "parse_signed_word",
    "positive_lift",
]
