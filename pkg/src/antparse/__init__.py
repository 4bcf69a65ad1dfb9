"""Ant-colony bottom-up recognizer for context-free grammars.

The colony decides membership stochastically but soundly (every
acceptance carries a replayable reduction sequence); the exhaustive
oracle decides it exactly at desk scale and certifies shortest
derivation lengths.
"""

from .colony import (
    AntOutcome,
    AntStatus,
    ColonyConfig,
    IterationStats,
    ParseResult,
    PheromoneGraph,
    default_max_hops,
    deposit,
    evaporate,
    run_ant,
    run_colony,
    select_next_node,
    transition_probabilities,
)
from .grammar import (
    Grammar,
    GrammarError,
    InputError,
    Production,
    SententialForm,
    Symbol,
    load_grammar,
    parse_grammar,
    parse_input,
)
from .oracle import OracleBudgetError, OracleResult, enumerate_members, shortest_reduction
from .recognizers import AntColonyRecognizer, ExhaustiveRecognizer, as_grammar
from .rewrite import (
    Derivation,
    DerivationStep,
    ReductionError,
    ReplayError,
    apply_reduction,
    find_matches,
    is_goal,
    replay,
)

__version__ = "0.1.0"

__all__ = [
    "AntColonyRecognizer",
    "AntOutcome",
    "AntStatus",
    "ColonyConfig",
    "Derivation",
    "DerivationStep",
    "ExhaustiveRecognizer",
    "Grammar",
    "GrammarError",
    "InputError",
    "IterationStats",
    "OracleBudgetError",
    "OracleResult",
    "ParseResult",
    "PheromoneGraph",
    "Production",
    "ReductionError",
    "ReplayError",
    "SententialForm",
    "Symbol",
    "apply_reduction",
    "as_grammar",
    "default_max_hops",
    "deposit",
    "enumerate_members",
    "evaporate",
    "find_matches",
    "is_goal",
    "load_grammar",
    "parse_grammar",
    "parse_input",
    "replay",
    "run_ant",
    "run_colony",
    "select_next_node",
    "shortest_reduction",
    "transition_probabilities",
]
