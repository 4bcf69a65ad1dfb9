"""Context-free grammars and the token strings they rewrite.

A grammar is the classic four-tuple: terminals, nonterminals, a start
symbol and an ordered list of productions.  Symbols are plain strings
(whitespace-delimited tokens, so multi-character names are fine); a
symbol is a nonterminal exactly when it appears on the left-hand side
of some production or is the declared start symbol, and a terminal
otherwise.  Ambiguous, redundant and left-recursive grammars are all
accepted as written; no normalization of any kind is performed.

Grammar files are line oriented:

    # comment lines and blank lines are ignored
    start: S
    S -> a A c B e
    A -> A b

Sentential forms (the strings being reduced) are plain tuples of
symbol names, immutable and freely shareable.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

Symbol = str
SententialForm = tuple[Symbol, ...]

ARROW = "->"


class GrammarError(ValueError):
    """A grammar file or rule set that violates the format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class InputError(ValueError):
    """An input string that does not fit the grammar's alphabet."""


def _check_symbol(name: str, line: int | None = None) -> str:
    if not name or any(ch.isspace() for ch in name):
        raise GrammarError(f"invalid symbol {name!r}: symbols are non-empty and contain no whitespace", line)
    return name


@dataclass(frozen=True)
class Production:
    """One rewrite rule: an occurrence of ``rhs`` reduces to ``lhs``.

    ``index`` is the rule's 0-based position in the grammar file; it is
    also the rule's node id in the colony's construction graph.
    """

    index: int
    lhs: Symbol
    rhs: tuple[Symbol, ...]

    def __str__(self) -> str:
        return f"{self.lhs} {ARROW} {' '.join(self.rhs)}"


@dataclass(frozen=True)
class Grammar:
    """An immutable context-free grammar.

    ``nonterminals`` is exactly the set of left-hand sides plus the
    start symbol; every other symbol mentioned in a right-hand side is
    a terminal.  Duplicate productions are kept as distinct entries.
    """

    start: Symbol
    productions: tuple[Production, ...]
    nonterminals: frozenset[Symbol]
    terminals: frozenset[Symbol]

    @classmethod
    def from_rules(cls, start: Symbol, rules: Iterable[tuple[Symbol, Sequence[Symbol]]]) -> "Grammar":
        """Build a grammar from ``(lhs, rhs)`` pairs in file order.

        >>> g = Grammar.from_rules("S", [("S", ["a", "S"]), ("S", ["b"])])
        >>> sorted(g.terminals), sorted(g.nonterminals)
        (['a', 'b'], ['S'])
        """
        _check_symbol(start)
        productions = []
        for index, (lhs, rhs) in enumerate(rules):
            _check_symbol(lhs)
            if len(rhs) == 0:
                raise GrammarError(f"empty right-hand side in {lhs!r} {ARROW}: epsilon productions are not supported")
            productions.append(Production(index, lhs, tuple(_check_symbol(s) for s in rhs)))
        lhs_set = {p.lhs for p in productions}
        if start not in lhs_set:
            raise GrammarError(f"start symbol {start!r} has no production")
        nonterminals = frozenset(lhs_set | {start})
        terminals = frozenset(s for p in productions for s in p.rhs) - nonterminals
        return cls(start, tuple(productions), nonterminals, frozenset(terminals))

    @property
    def symbols(self) -> frozenset[Symbol]:
        return self.nonterminals | self.terminals

    def is_terminal(self, symbol: Symbol) -> bool:
        return symbol in self.terminals

    def is_nonterminal(self, symbol: Symbol) -> bool:
        return symbol in self.nonterminals

    def validate_form(self, symbols: Sequence[Symbol]) -> SententialForm:
        """Return ``symbols`` as a sentential form, checking the alphabet."""
        form = tuple(symbols)
        for symbol in form:
            if symbol not in self.nonterminals and symbol not in self.terminals:
                raise InputError(f"unknown symbol {symbol!r}")
        return form

    def to_text(self) -> str:
        """Serialize back to the grammar file format (round-trips)."""
        lines = [f"start: {self.start}"]
        lines.extend(str(p) for p in self.productions)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_text()


def parse_grammar(text: str) -> Grammar:
    """Parse grammar file content.

    >>> g = parse_grammar("start: S\\nS -> a\\n")
    >>> g.start, len(g.productions)
    ('S', 1)
    """
    start: Symbol | None = None
    rules: list[tuple[Symbol, tuple[Symbol, ...]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("start:"):
            if start is not None:
                raise GrammarError("duplicate start declaration", lineno)
            declared = line[len("start:"):].split()
            if len(declared) != 1:
                raise GrammarError("start declaration must name exactly one symbol", lineno)
            start = declared[0]
            continue
        tokens = line.split()
        if ARROW not in tokens:
            raise GrammarError(f"expected '<lhs> {ARROW} <symbol> ...' or 'start: <symbol>'", lineno)
        split_at = tokens.index(ARROW)
        lhs_tokens, rhs_tokens = tokens[:split_at], tokens[split_at + 1:]
        if not lhs_tokens:
            raise GrammarError("missing left-hand side", lineno)
        if len(lhs_tokens) > 1:
            raise GrammarError("left-hand side must be a single symbol", lineno)
        if not rhs_tokens:
            raise GrammarError("empty right-hand side: epsilon productions are not supported", lineno)
        rules.append((lhs_tokens[0], tuple(rhs_tokens)))
    if start is None:
        raise GrammarError("missing 'start: <symbol>' declaration")
    return Grammar.from_rules(start, rules)


def load_grammar(path: str | Path) -> Grammar:
    """Read and parse a grammar file."""
    return parse_grammar(Path(path).read_text(encoding="utf-8"))


def parse_input(text: str, grammar: Grammar, char_mode: bool = False) -> SententialForm:
    """Tokenize an input string and check it against the grammar's alphabet.

    Token mode splits on whitespace; char mode treats every
    non-whitespace character as one symbol (handy for single-letter
    grammars, where "abcde" means the five symbols a b c d e).
    """
    stripped = text.strip()
    if not stripped:
        raise InputError("empty input")
    if char_mode:
        tokens = [ch for ch in stripped if not ch.isspace()]
    else:
        tokens = stripped.split()
    return grammar.validate_form(tokens)
