"""Exact equivariant Groebner-basis toolkit for symmetric ideals."""

from .poly import Monomial, Polynomial, Variable, exponent_profile, max_index, t_, x_
from .perm import Injection, Permutation, act, injection_images
from .order import (
    LEX,
    BlockOrder,
    LexOrder,
    PermutedLexOrder,
    leading_data,
    leading_monomial,
    leading_term,
    monic,
    sign_normalized,
)
from .parse import ParseError, parse_polynomial, parse_polynomials, render_polynomial
from .wqo import (
    WitnessReport,
    bad_sequence_element,
    cancellation_witness,
    goodness_scan,
    higman_embed,
    injection_divisor,
)
from .reduce import (
    ReductionStep,
    ReductionTrace,
    is_reduced,
    minimalize,
    normal_form,
    reduce_step,
    truncation_gb_check,
    verify_trace,
)
from .gb import (
    CapExceeded,
    DEFAULT_LIMITS,
    EngineLimits,
    FiniteIdeal,
    buchberger,
    ideal_equal,
    membership,
    universal_gb_check,
)
from .chains import (
    ChainSpec,
    InvarianceReport,
    StabilizationReport,
    chain_from_document,
    detect_stabilization,
    invariance_check,
    level_universe,
    project,
    symmetrize,
    variable_size,
)
from .toric import (
    SortingMatrix,
    ToricSpec,
    conjecture_probe,
    kernel_by_elimination,
    sort_word,
    sorted_pair,
    sorting_matrix,
    squarefree_generating_set,
    squarefree_spec,
    squarefree_stabilization_experiment,
    toric_chain,
    toric_kernel,
)

__version__ = "0.1.0"
