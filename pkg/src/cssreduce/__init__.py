"""Weight-reduction transforms for CSS stabilizer codes, with exact GF(2) oracles."""

from .f2 import (
    BitMatrix,
    BitVector,
    in_row_space,
    kernel_basis,
    product_is_zero,
    rank,
    same_row_space,
)
from .model import (
    ChainComplex,
    CodeParams,
    CssCode,
    InvalidCodeError,
    ValidationReport,
    dualize,
    from_chain_complex,
    homology_dimension,
    params,
    product_complex,
    to_chain_complex,
    validate,
)
from .distance import (
    DistanceResult,
    EnumerationBudgetError,
    SoundnessEstimate,
    cosoundness,
    min_logical_weight,
    soundness,
)
from .transforms import (
    Assignment,
    SplitStep,
    SplitTrace,
    alt_qubit_split_all,
    check_lll_condition,
    full_product_code,
    interval_complex,
    lll_parameters,
    split_all_x_generators,
    split_one_generator,
    thicken,
)
from .assignment import (
    AssignmentOutcome,
    greedy_assignment,
    lll_resample,
    max_copied_load,
    random_assignment,
)
from .pipeline import (
    ExponentVector,
    PipelineReport,
    balance,
    exponents_clasympt,
    exponents_theorem1,
    exponents_two_phase,
    nu_from_mu,
    reduce_wx_qz,
    weight_reduce,
)
from .codefile import (
    CodeFileError,
    load_code,
    parse_code,
    parse_document,
    save_code,
    serialize_code,
)
from .fixtures import random_css, repetition_triangle, steane, toric, window_grid

__all__ = [
    "Assignment",
    "AssignmentOutcome",
    "BitMatrix",
    "BitVector",
    "ChainComplex",
    "CodeFileError",
    "CodeParams",
    "CssCode",
    "DistanceResult",
    "EnumerationBudgetError",
    "ExponentVector",
    "InvalidCodeError",
    "PipelineReport",
    "SoundnessEstimate",
    "SplitStep",
    "SplitTrace",
    "ValidationReport",
    "alt_qubit_split_all",
    "balance",
    "check_lll_condition",
    "cosoundness",
    "dualize",
    "exponents_clasympt",
    "exponents_theorem1",
    "exponents_two_phase",
    "from_chain_complex",
    "full_product_code",
    "greedy_assignment",
    "homology_dimension",
    "in_row_space",
    "interval_complex",
    "kernel_basis",
    "lll_parameters",
    "lll_resample",
    "load_code",
    "max_copied_load",
    "min_logical_weight",
    "nu_from_mu",
    "params",
    "parse_code",
    "parse_document",
    "product_complex",
    "product_is_zero",
    "random_assignment",
    "random_css",
    "rank",
    "reduce_wx_qz",
    "repetition_triangle",
    "same_row_space",
    "save_code",
    "serialize_code",
    "soundness",
    "split_all_x_generators",
    "split_one_generator",
    "steane",
    "thicken",
    "to_chain_complex",
    "toric",
    "validate",
    "weight_reduce",
    "window_grid",
]
