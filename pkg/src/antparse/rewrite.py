"""Bottom-up reduction steps over sentential forms.

A reduction replaces one occurrence of a production's right-hand side
by its left-hand side symbol, shrinking (or, for unit rules, keeping)
the form's length.  Everything here is a pure function over immutable
tuples: callers that branch from a shared form can never corrupt each
other.  Which occurrence to reduce is deliberately *not* decided here;
``find_matches`` reports all of them and the caller picks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grammar import Grammar, Production, SententialForm


class ReductionError(ValueError):
    """A reduction was requested at a position that does not match."""


class ReplayError(ValueError):
    """A recorded derivation does not re-apply cleanly (corrupted)."""


@dataclass(frozen=True)
class DerivationStep:
    """One applied reduction: ``before`` with the slice at ``position``
    (of length ``|rhs|``) replaced by the rule's left-hand side."""

    rule_index: int
    position: int
    before: SententialForm
    after: SententialForm


Derivation = tuple[DerivationStep, ...]


def find_matches(form: SententialForm, production: Production) -> list[int]:
    """All start positions where the production's RHS occurs in ``form``.

    Positions are ascending and exhaustive; overlapping occurrences are
    all reported.

    >>> p = Production(0, "A", ("b",))
    >>> find_matches(("a", "b", "b", "c"), p)
    [1, 2]
    """
    rhs = production.rhs
    width = len(rhs)
    return [i for i in range(len(form) - width + 1) if form[i:i + width] == rhs]


def apply_reduction(form: SententialForm, production: Production, position: int) -> SententialForm:
    """Reduce the RHS occurrence at ``position`` to the rule's LHS.

    The input form is untouched; a new form is returned.
    """
    rhs = production.rhs
    if position < 0 or form[position:position + len(rhs)] != rhs:
        raise ReductionError(
            f"rule {production.index} ({production}) does not match {' '.join(form)!r} at position {position}"
        )
    return form[:position] + (production.lhs,) + form[position + len(rhs):]


def is_goal(form: SententialForm, grammar: Grammar) -> bool:
    """True iff the form is exactly the start symbol."""
    return len(form) == 1 and form[0] == grammar.start


def make_step(grammar: Grammar, form: SententialForm, rule_index: int, position: int) -> DerivationStep:
    """Apply one reduction and record it as a derivation step."""
    after = apply_reduction(form, grammar.productions[rule_index], position)
    return DerivationStep(rule_index, position, form, after)


def replay(grammar: Grammar, derivation: Derivation, start_form: SententialForm) -> SententialForm:
    """Re-apply a recorded derivation, verifying every step.

    Raises ReplayError (with the 1-based step number) as soon as a
    recorded step disagrees with what actually happens when re-applied.
    """
    form = tuple(start_form)
    for number, step in enumerate(derivation, 1):
        if step.before != form:
            raise ReplayError(
                f"step {number}: recorded before-form {' '.join(step.before)!r} "
                f"does not match current form {' '.join(form)!r}"
            )
        if not 0 <= step.rule_index < len(grammar.productions):
            raise ReplayError(f"step {number}: rule index {step.rule_index} out of range")
        try:
            after = apply_reduction(form, grammar.productions[step.rule_index], step.position)
        except ReductionError as exc:
            raise ReplayError(f"step {number}: {exc}") from exc
        if step.after != after:
            raise ReplayError(
                f"step {number}: recorded after-form {' '.join(step.after)!r} "
                f"does not match computed form {' '.join(after)!r}"
            )
        form = after
    return form
