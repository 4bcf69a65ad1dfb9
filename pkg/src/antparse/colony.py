"""Ant-colony search over the space of bottom-up reductions.

The construction graph has one node per production rule and a directed
link between every ordered pair of nodes, self-loops included (a rule
may be needed twice in a row).  Each ant carries the input form in its
memory, is dropped on a random node, and must apply that node's rule to
its form: no match means the ant goes inactive on the spot.  After a
successful reduction the ant either has reached the start symbol (done)
or moves across a link chosen by the pseudo-random-proportional rule:
with probability q0 a roulette-wheel draw over trail weights, otherwise
a greedy jump to the strongest link.  Successful ants deposit trail on
the links they crossed, in inverse proportion to their hop count, so
short routes get reinforced hardest.

Evaporation (rho) and the trail floor (tau_min) keep early lucky runs
from locking in forever; rho=0 disables evaporation entirely.

Determinism: every ant draws from its own RNG stream, derived from
(seed, iteration, ant index), and all ants within an iteration see the
trail state frozen at the iteration start.  Results are therefore
identical whether ants run serially or on a thread pool.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .grammar import Grammar, SententialForm
from .rewrite import Derivation, DerivationStep, apply_reduction, find_matches, is_goal


class AntStatus(Enum):
    SUCCESS = "success"      # reached the start symbol
    INACTIVE = "inactive"    # current node's rule had no match
    EXHAUSTED = "exhausted"  # hop budget spent


@dataclass(frozen=True)
class ColonyConfig:
    """Search parameters.

    q0 gates the transition rule exactly as specified: q <= q0 takes
    the probabilistic branch, q > q0 the greedy one (note this is the
    reverse of the usual ant-colony-system convention; set q0 near 0 to
    recover mostly-greedy behavior).  max_hops=None means the budget is
    computed per input as 4 * |input| * |productions|.
    """

    n_ants: int = 20
    n_iterations: int = 50
    q0: float = 0.9
    alpha: float = 1.0
    beta: float = 0.0
    rho: float = 0.1
    deposit_q: float = 1.0
    tau0: float = 1.0
    tau_min: float = 1e-4
    max_hops: int | None = None
    patience: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n_ants < 1:
            raise ValueError("n_ants must be >= 1")
        if self.n_iterations < 1:
            raise ValueError("n_iterations must be >= 1")
        if not 0.0 < self.q0 < 1.0:
            raise ValueError("q0 must lie strictly between 0 and 1")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be >= 0")
        if not 0.0 <= self.rho < 1.0:
            raise ValueError("rho must lie in [0, 1)")
        if self.deposit_q <= 0:
            raise ValueError("deposit_q must be > 0")
        if self.tau_min <= 0:
            raise ValueError("tau_min must be > 0")
        if self.tau0 < self.tau_min:
            raise ValueError("tau0 must be >= tau_min")
        if self.max_hops is not None and self.max_hops < 0:
            raise ValueError("max_hops must be >= 0")
        if self.patience is not None and self.patience < 1:
            raise ValueError("patience must be >= 1")


class PheromoneGraph:
    """Trail and heuristic weights over the complete production graph.

    tau[i, j] is the trail on the link from node i to node j; eta is
    the optional a-priori desirability (all ones unless given, which
    makes beta irrelevant).  The floor tau_min is re-imposed by every
    evaporation, so trails never vanish and every link stays reachable.
    """

    def __init__(self, n_nodes: int, tau0: float = 1.0, tau_min: float = 1e-4,
                 eta: np.ndarray | None = None):
        if n_nodes < 1:
            raise ValueError("need at least one production node")
        if tau_min <= 0 or tau0 < tau_min:
            raise ValueError("require 0 < tau_min <= tau0")
        self.n_nodes = n_nodes
        self.tau_min = float(tau_min)
        self.tau = np.full((n_nodes, n_nodes), float(tau0))
        if eta is None:
            self.eta = np.ones((n_nodes, n_nodes))
        else:
            self.eta = np.asarray(eta, dtype=float).copy()
            if self.eta.shape != (n_nodes, n_nodes):
                raise ValueError(f"eta must be {n_nodes}x{n_nodes}")
            if not np.all(np.isfinite(self.eta)) or np.any(self.eta < 0):
                raise ValueError("eta values must be finite and >= 0")


@dataclass(frozen=True)
class AntOutcome:
    """One ant walk.  ``hops`` counts link traversals (== len(path));
    the initial placement is free, so a k-step success records k-1 hops."""

    status: AntStatus
    derivation: Derivation | None
    hops: int
    path: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IterationStats:
    iteration: int
    successes: int
    best_steps: int | None   # best-so-far derivation length
    tau_min: float
    tau_mean: float
    tau_max: float


@dataclass(frozen=True)
class ParseResult:
    """Outcome of a full colony run.

    ``best_steps`` is the length of the best (shortest) derivation
    found, i.e. the number of rule applications; ``best_hops`` is the
    number of link traversals of the walk that found it (one less than
    best_steps, except for the zero-step degenerate input).
    """

    accepted: bool
    best_derivation: Derivation | None
    best_steps: int | None
    best_hops: int | None
    iterations_run: int
    successes: int
    stats: tuple[IterationStats, ...]


def default_max_hops(omega: SententialForm, n_productions: int) -> int:
    return 4 * len(omega) * n_productions


def transition_probabilities(tau_row: Sequence[float], eta_row: Sequence[float] | None = None,
                             alpha: float = 1.0, beta: float = 0.0) -> list[float]:
    """Normalized move distribution out of one node.

    P(j) = tau_j^alpha * eta_j^beta / sum_k tau_k^alpha * eta_k^beta,
    over the complete neighborhood (all nodes, self-loop included).
    """
    if eta_row is None:
        weights = [float(t) ** alpha for t in tau_row]
    else:
        weights = [float(t) ** alpha * float(e) ** beta for t, e in zip(tau_row, eta_row)]
    total = sum(weights)
    if not (total > 0.0 and math.isfinite(total)):
        raise RuntimeError(f"degenerate transition weights (sum={total}); trail floor violated?")
    return [w / total for w in weights]


def select_next_node(rng: random.Random, q0: float, tau_row: Sequence[float],
                     eta_row: Sequence[float] | None = None,
                     alpha: float = 1.0, beta: float = 0.0) -> int:
    """Pseudo-random-proportional choice of the next node.

    Draw q uniform in [0, 1): q <= q0 samples the roulette wheel over
    transition_probabilities; q > q0 jumps greedily to the node with
    the largest weight (ties broken by the lowest node index).
    """
    q = rng.random()
    if q <= q0:
        probabilities = transition_probabilities(tau_row, eta_row, alpha, beta)
        draw = rng.random()
        acc = 0.0
        for node, p in enumerate(probabilities):
            acc += p
            if draw < acc:
                return node
        return len(probabilities) - 1
    if eta_row is None:
        weights = [float(t) ** alpha for t in tau_row]
    else:
        weights = [float(t) ** alpha * float(e) ** beta for t, e in zip(tau_row, eta_row)]
    best = 0
    for node in range(1, len(weights)):
        if weights[node] > weights[best]:
            best = node
    return best


def run_ant(grammar: Grammar, graph: PheromoneGraph, omega: SententialForm,
            config: ColonyConfig, rng: random.Random) -> AntOutcome:
    """Walk one ant from a random starting node until it succeeds,
    goes inactive, or runs out of hops.

    The goal test precedes the first reduction, so an input that is
    already the bare start symbol succeeds with an empty derivation.
    Revisits and self-loops are allowed; a rule may fire many times.
    """
    productions = grammar.productions
    n = graph.n_nodes
    max_hops = config.max_hops if config.max_hops is not None else default_max_hops(omega, n)
    form = tuple(omega)
    if is_goal(form, grammar):
        return AntOutcome(AntStatus.SUCCESS, (), 0, ())
    node = rng.randrange(n)
    steps: list[DerivationStep] = []
    path: list[tuple[int, int]] = []
    while True:
        production = productions[node]
        matches = find_matches(form, production)
        if not matches:
            return AntOutcome(AntStatus.INACTIVE, None, len(path), tuple(path))
        position = matches[rng.randrange(len(matches))] if len(matches) > 1 else matches[0]
        after = apply_reduction(form, production, position)
        steps.append(DerivationStep(node, position, form, after))
        form = after
        if is_goal(form, grammar):
            return AntOutcome(AntStatus.SUCCESS, tuple(steps), len(path), tuple(path))
        if len(path) >= max_hops:
            return AntOutcome(AntStatus.EXHAUSTED, None, len(path), tuple(path))
        nxt = select_next_node(rng, config.q0, graph.tau[node], graph.eta[node],
                               config.alpha, config.beta)
        path.append((node, nxt))
        node = nxt


def deposit(graph: PheromoneGraph, outcome: AntOutcome, deposit_q: float = 1.0) -> None:
    """Reinforce every link a successful ant crossed by Q / hops.

    A link crossed twice gets two increments.  A zero-hop success (the
    ant's starting rule finished the job) crossed no links, so there is
    nothing to reinforce.
    """
    if outcome.status is not AntStatus.SUCCESS:
        raise ValueError(f"deposit requires a successful outcome, got {outcome.status.value}")
    if deposit_q <= 0:
        raise ValueError("deposit_q must be > 0")
    amount = deposit_q / max(outcome.hops, 1)
    for i, j in outcome.path:
        graph.tau[i, j] += amount


def evaporate(graph: PheromoneGraph, rho: float) -> None:
    """Decay every trail by (1 - rho), clamped to the tau_min floor."""
    if not 0.0 <= rho < 1.0:
        raise ValueError("rho must lie in [0, 1)")
    np.multiply(graph.tau, 1.0 - rho, out=graph.tau)
    np.maximum(graph.tau, graph.tau_min, out=graph.tau)


def _ant_seed(seed: int, iteration: int, ant: int) -> int:
    # Collision-free for iteration, ant < 2**20; keeps parallel and
    # serial execution on identical streams.
    return (seed << 40) + (iteration << 20) + ant


def run_colony(grammar: Grammar, omega: SententialForm, config: ColonyConfig | None = None,
               n_jobs: int = 1) -> ParseResult:
    """Full scheduled search: construct solutions, update trails, track
    the best-so-far derivation.

    Each iteration runs n_ants walks against the iteration-start trail
    state, then evaporates once, then applies the deposits of that
    iteration's successful ants.  With patience set, the run stops
    early once the best derivation length has gone that many iterations
    without improving (never before the first success).

    Non-acceptance is a result, not an error: it means no ant found a
    derivation within budget, not that none exists.
    """
    if config is None:
        config = ColonyConfig()
    omega = grammar.validate_form(omega)
    graph = PheromoneGraph(len(grammar.productions), config.tau0, config.tau_min)
    pool = ThreadPoolExecutor(max_workers=n_jobs) if n_jobs > 1 else None
    best: AntOutcome | None = None
    successes = 0
    stats: list[IterationStats] = []
    iterations_run = 0
    stale = 0
    try:
        for iteration in range(config.n_iterations):
            rngs = [random.Random(_ant_seed(config.seed, iteration, ant))
                    for ant in range(config.n_ants)]
            if pool is not None:
                outcomes = list(pool.map(
                    lambda rng: run_ant(grammar, graph, omega, config, rng), rngs))
            else:
                outcomes = [run_ant(grammar, graph, omega, config, rng) for rng in rngs]
            winners = [o for o in outcomes if o.status is AntStatus.SUCCESS]
            successes += len(winners)
            improved = False
            for outcome in winners:
                if best is None or len(outcome.derivation) < len(best.derivation):
                    best = outcome
                    improved = True
            evaporate(graph, config.rho)
            for outcome in winners:
                deposit(graph, outcome, config.deposit_q)
            stats.append(IterationStats(
                iteration=iteration,
                successes=len(winners),
                best_steps=None if best is None else len(best.derivation),
                tau_min=float(graph.tau.min()),
                tau_mean=float(graph.tau.mean()),
                tau_max=float(graph.tau.max()),
            ))
            iterations_run = iteration + 1
            stale = 0 if improved else stale + 1
            if config.patience is not None and best is not None and stale >= config.patience:
                break
    finally:
        if pool is not None:
            pool.shutdown()
    return ParseResult(
        accepted=best is not None,
        best_derivation=None if best is None else best.derivation,
        best_steps=None if best is None else len(best.derivation),
        best_hops=None if best is None else best.hops,
        iterations_run=iterations_run,
        successes=successes,
        stats=tuple(stats),
    )
