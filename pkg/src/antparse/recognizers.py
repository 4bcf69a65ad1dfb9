"""Scikit-learn style estimators wrapping the two recognizers.

Both estimators bind a grammar in fit() and decide membership of input
strings in predict(), so they drop into pipelines, grid searches and
anything else that speaks get_params/set_params.  AntColonyRecognizer
is the stochastic searcher; ExhaustiveRecognizer is the exact BFS
oracle, useful as ground truth at desk scale.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .colony import ColonyConfig, ParseResult, run_colony
from .grammar import Grammar, SententialForm, parse_grammar, parse_input
from .oracle import OracleResult, shortest_reduction


def as_grammar(grammar) -> Grammar:
    """Accept a Grammar instance or grammar file text."""
    if isinstance(grammar, Grammar):
        return grammar
    if isinstance(grammar, str):
        return parse_grammar(grammar)
    raise TypeError(f"expected a Grammar or grammar file text, got {type(grammar).__name__}")


class _RecognizerBase(BaseEstimator):
    """Shared fit/predict plumbing; subclasses implement _accepts."""

    def fit(self, grammar, y=None):
        """Bind the grammar this recognizer decides membership for.

        Accepts a Grammar or the text of a grammar file.  Returns self.
        """
        self.grammar_ = as_grammar(grammar)
        return self

    def _form(self, x) -> SententialForm:
        if isinstance(x, str):
            return parse_input(x, self.grammar_, char_mode=self.chars)
        return self.grammar_.validate_form(x)

    def predict(self, X: Iterable) -> np.ndarray:
        """Membership decision for each input (strings or token sequences)."""
        check_is_fitted(self, "grammar_")
        return np.array([self._accepts(x) for x in X], dtype=bool)

    def score(self, X: Iterable, y: Sequence[bool]) -> float:
        """Mean agreement between predict(X) and boolean labels y."""
        return float(np.mean(self.predict(X) == np.asarray(y, dtype=bool)))


class AntColonyRecognizer(_RecognizerBase):
    """Stochastic membership recognizer driven by artificial ants.

    Accepting is sound (every acceptance carries a replayable
    derivation) but rejection only means no ant found a derivation
    within budget.  All constructor arguments mirror ColonyConfig;
    ``chars`` switches string inputs to one-symbol-per-character
    tokenization and ``n_jobs`` > 1 runs each iteration's ants on a
    thread pool (results are identical either way).
    """

    def __init__(self, n_ants=20, n_iterations=50, q0=0.9, alpha=1.0, beta=0.0,
                 rho=0.1, deposit_q=1.0, tau0=1.0, tau_min=1e-4, max_hops=None,
                 patience=None, seed=0, chars=False, n_jobs=1):
        self.n_ants = n_ants
        self.n_iterations = n_iterations
        self.q0 = q0
        self.alpha = alpha
        self.beta = beta
        self.rho = rho
        self.deposit_q = deposit_q
        self.tau0 = tau0
        self.tau_min = tau_min
        self.max_hops = max_hops
        self.patience = patience
        self.seed = seed
        self.chars = chars
        self.n_jobs = n_jobs

    def config(self) -> ColonyConfig:
        """The (validated) search configuration these parameters imply."""
        return ColonyConfig(
            n_ants=self.n_ants, n_iterations=self.n_iterations, q0=self.q0,
            alpha=self.alpha, beta=self.beta, rho=self.rho,
            deposit_q=self.deposit_q, tau0=self.tau0, tau_min=self.tau_min,
            max_hops=self.max_hops, patience=self.patience, seed=self.seed,
        )

    def parse(self, x) -> ParseResult:
        """Run the full colony on one input and return the rich result."""
        check_is_fitted(self, "grammar_")
        return run_colony(self.grammar_, self._form(x), self.config(), n_jobs=self.n_jobs)

    def _accepts(self, x) -> bool:
        return self.parse(x).accepted


class ExhaustiveRecognizer(_RecognizerBase):
    """Exact recognizer via exhaustive breadth-first reduction search."""

    def __init__(self, max_states=1_000_000, chars=False):
        self.max_states = max_states
        self.chars = chars

    def parse(self, x) -> OracleResult:
        """Decide one input exactly, with a shortest witness derivation."""
        check_is_fitted(self, "grammar_")
        return shortest_reduction(self.grammar_, self._form(x), max_states=self.max_states)

    def _accepts(self, x) -> bool:
        return self.parse(x).member

    def shortest_steps(self, X: Iterable) -> np.ndarray:
        """Shortest derivation length per input; NaN for non-members."""
        check_is_fitted(self, "grammar_")
        results = [self.parse(x) for x in X]
        return np.array([float(r.shortest_steps) if r.member else np.nan for r in results])
