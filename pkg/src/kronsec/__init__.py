"""Exact symmetric-group character computations, apolarity rank certificates,
and numeric monodromy tracking, with a harness relating stable Kronecker
coefficients to Littlewood-Richardson numbers."""

from .apolarity import (
    BinaryForm,
    JoinRank,
    RankSample,
    SecantCertificate,
    SupportPoint,
    catalecticant,
    form,
    join_rank_check,
    kernel_dimension,
    min_apolar_degree,
    parse_form,
    sample_rank_k_instance,
    secant_membership,
    sylvester_decompose,
    vandermonde_rank,
)
from .brionlab import (
    BrionRecord,
    boundary_scan,
    summarize,
    sweep,
    verify_equality,
    verify_vanishing,
)
from .characters import (
    CharacterTable,
    character_table,
    kronecker,
    lr_by_characters,
    lr_checked,
    lr_coefficient,
    mn_value,
    pieri_decompose,
    pieri_distinguished,
    tensor_decompose,
)
from .config import Config, load_config
from .curvebounds import CurveContext, h0, max_admissible_k, separates_2k
from .errors import (
    CapacityError,
    ConsistencyError,
    DomainError,
    KronsecError,
    PrecisionError,
)
from .monodromy import (
    MonodromyLoop,
    defining_rep_decomposition,
    spherical_word_check,
    standard_generator_loop,
    track_roots,
    word_loop,
)
from .partitions import (
    Partition,
    attach_first_row,
    conjugacy_classes,
    dimension,
    format_partition,
    has_long_first_row,
    parse_partition,
    partitions_of,
)
from .seminormal import (
    SeminormalRep,
    build_rep,
    check_relations,
    evaluate_word,
    spherical_relation_image,
    standard_tableaux,
    word_trace,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "BrionRecord",
    "CapacityError",
    "CharacterTable",
    "Config",
    "ConsistencyError",
    "CurveContext",
    "DomainError",
    "JoinRank",
    "KronsecError",
    "MonodromyLoop",
    "Partition",
    "PrecisionError",
    "RankSample",
    "SecantCertificate",
    "SeminormalRep",
    "SupportPoint",
    "attach_first_row",
    "boundary_scan",
    "build_rep",
    "catalecticant",
    "character_table",
    "check_relations",
    "conjugacy_classes",
    "defining_rep_decomposition",
    "dimension",
    "evaluate_word",
    "form",
    "format_partition",
    "h0",
    "has_long_first_row",
    "join_rank_check",
    "kernel_dimension",
    "kronecker",
    "load_config",
    "lr_by_characters",
    "lr_checked",
    "lr_coefficient",
    "max_admissible_k",
    "min_apolar_degree",
    "mn_value",
    "parse_form",
    "parse_partition",
    "partitions_of",
    "pieri_decompose",
    "pieri_distinguished",
    "sample_rank_k_instance",
    "secant_membership",
    "separates_2k",
    "spherical_relation_image",
    "spherical_word_check",
    "standard_generator_loop",
    "standard_tableaux",
    "summarize",
    "sweep",
    "sylvester_decompose",
    "tensor_decompose",
    "track_roots",
    "vandermonde_rank",
    "verify_equality",
    "verify_vanishing",
    "word_loop",
    "word_trace",
]
