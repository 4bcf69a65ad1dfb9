"""Exhaustive ground truth for membership and shortest reduction length.

A plain breadth-first search over the reduction state space: successors
of a form are every (production, position) pair that matches anywhere
in it.  Because epsilon productions are rejected at load, reductions
never lengthen a form, so the reachable space is finite; a visited set
keyed on the full symbol sequence keeps unit-rule cycles (rules with a
one-symbol RHS preserve length and can loop) from diverging.  BFS order
makes the first goal hit a provably shortest derivation.

Deliberately naive and single-threaded: this is the verification tool
the stochastic search is measured against, not a performance path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .grammar import Grammar, SententialForm
from .rewrite import Derivation, DerivationStep, apply_reduction, find_matches, is_goal


class OracleBudgetError(RuntimeError):
    """The state-count ceiling was hit before the search finished.

    Distinct from non-membership: nothing was proven either way.
    """


@dataclass(frozen=True)
class OracleResult:
    member: bool
    shortest_steps: int | None
    witness: Derivation | None
    states_explored: int


def shortest_reduction(grammar: Grammar, omega: SententialForm, max_states: int = 1_000_000) -> OracleResult:
    """Decide membership of ``omega`` and return a shortest derivation.

    Level-order exploration from ``omega``; returns at the first goal
    form, whose depth is therefore minimal.  ``states_explored`` counts
    distinct forms expanded (each form is expanded at most once).
    """
    omega = grammar.validate_form(omega)
    if is_goal(omega, grammar):
        return OracleResult(True, 0, (), 0)
    # parent links: child form -> (parent form, rule index, position)
    parents: dict[SententialForm, tuple[SententialForm, int, int] | None] = {omega: None}
    queue: deque[SententialForm] = deque([omega])
    explored = 0
    while queue:
        form = queue.popleft()
        explored += 1
        for production in grammar.productions:
            for position in find_matches(form, production):
                child = apply_reduction(form, production, position)
                if child in parents:
                    continue
                parents[child] = (form, production.index, position)
                if is_goal(child, grammar):
                    witness = _backtrack(parents, child)
                    return OracleResult(True, len(witness), witness, explored)
                if len(parents) > max_states:
                    raise OracleBudgetError(f"more than {max_states} distinct forms reached; search abandoned")
                queue.append(child)
    return OracleResult(False, None, None, explored)


def _backtrack(parents: dict, goal: SententialForm) -> Derivation:
    steps: list[DerivationStep] = []
    form = goal
    while parents[form] is not None:
        before, rule_index, position = parents[form]
        steps.append(DerivationStep(rule_index, position, before, form))
        form = before
    steps.reverse()
    return tuple(steps)


def enumerate_members(grammar: Grammar, max_len: int, max_states: int = 1_000_000) -> set[SententialForm]:
    """All terminal strings of length <= ``max_len`` in the language.

    Found by forward derivation from the start symbol, expanding only
    the leftmost nonterminal (leftmost derivations reach every
    sentence).  Expansion never shortens a form, so anything longer
    than ``max_len`` is pruned outright.
    """
    if max_len < 1:
        return set()
    by_lhs: dict[str, list] = {}
    for production in grammar.productions:
        by_lhs.setdefault(production.lhs, []).append(production)
    root: SententialForm = (grammar.start,)
    seen: set[SententialForm] = {root}
    queue: deque[SententialForm] = deque([root])
    members: set[SententialForm] = set()
    while queue:
        form = queue.popleft()
        leftmost = next((i for i, s in enumerate(form) if s in grammar.nonterminals), None)
        if leftmost is None:
            members.add(form)
            continue
        for production in by_lhs[form[leftmost]]:
            child = form[:leftmost] + production.rhs + form[leftmost + 1:]
            if len(child) > max_len or child in seen:
                continue
            seen.add(child)
            if len(seen) > max_states:
                raise OracleBudgetError(f"more than {max_states} sentential forms generated; enumeration abandoned")
            queue.append(child)
    return members
