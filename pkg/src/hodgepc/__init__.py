"""Hodge potential choice and Copeland choice for abstract dominance games."""

from .core import (
    AbstractGame,
    Cycle,
    FormGame,
    completeness,
    connected_components,
    find_cycle,
    flip_dominance,
    from_form,
    is_connected,
    permute,
    remove_mutual,
    reverse_cycle,
    to_form,
    validate,
)
from .hodge import (
    HodgeResult,
    MarginalGame,
    OneForm,
    copeland_choice,
    copeland_scores,
    differential,
    divergence,
    ehpc,
    hodge_decompose,
    hpc,
    inner0,
    inner1,
    laplacian,
    tenseness,
)
from .solver import SolveReport, SolverOptions, solve_laplacian

__version__ = "0.1.0"

__all__ = [
    "AbstractGame",
    "Cycle",
    "FormGame",
    "completeness",
    "connected_components",
    "find_cycle",
    "flip_dominance",
    "from_form",
    "is_connected",
    "permute",
    "remove_mutual",
    "reverse_cycle",
    "to_form",
    "validate",
    "HodgeResult",
    "MarginalGame",
    "OneForm",
    "copeland_choice",
    "copeland_scores",
    "differential",
    "divergence",
    "ehpc",
    "hodge_decompose",
    "hpc",
    "inner0",
    "inner1",
    "laplacian",
    "tenseness",
    "SolveReport",
    "SolverOptions",
    "solve_laplacian",
]
