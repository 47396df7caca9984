"""Branch-and-reduce solver for stable and complete argumentation semantics."""

from .framework import (
    AFError,
    AFSyntaxError,
    ArgumentationFramework,
    OutOfRange,
    UnknownArgument,
    attackers,
    parse_af,
    targets,
)
from .solver import (
    BranchOutcome,
    SolveResult,
    Stats,
    TaskSpec,
    UnknownQueryArgument,
    enumerate,
    expand,
    grounded_extension,
    is_abandoned,
    is_complete_accept,
    is_stable_accept,
    seed_with_grounded,
    solve,
)
from .state import (
    Extension,
    MatrixState,
    Mode,
    PreconditionViolation,
    clone_state,
    initial_state,
    node_chosen,
    node_not_chosen,
    rel_attackers,
    rel_targets,
)

__version__ = "0.1.0"
