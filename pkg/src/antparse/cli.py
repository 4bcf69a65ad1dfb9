"""Command-line surface.

Three subcommands:

  recognize  run the ant colony on one input string
  oracle     run the exhaustive BFS recognizer on one input string
  bench      sweep inputs x seeds, one JSON object per line

Exit codes are scriptable: 0 accepted/member, 1 not accepted/not a
member, 2 usage or load errors, 3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

from .colony import ColonyConfig, ParseResult, default_max_hops, run_colony
from .grammar import Grammar, GrammarError, InputError, SententialForm, load_grammar, parse_input
from .oracle import OracleBudgetError, shortest_reduction
from .rewrite import Derivation

EXIT_ACCEPTED = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ERROR


def _load_grammar(path: str) -> Grammar:
    try:
        return load_grammar(path)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from exc
    except GrammarError as exc:
        raise CliError(f"{path}: {exc}") from exc


class CliError(Exception):
    pass


def _add_colony_flags(p: argparse.ArgumentParser) -> None:
    defaults = ColonyConfig()
    p.add_argument("--ants", type=int, default=defaults.n_ants, help="ants per iteration")
    p.add_argument("--iters", type=int, default=defaults.n_iterations, help="iterations to run")
    p.add_argument("--q0", type=float, default=defaults.q0, help="pseudo-random factor in (0,1)")
    p.add_argument("--alpha", type=float, default=defaults.alpha, help="trail weight exponent")
    p.add_argument("--beta", type=float, default=defaults.beta, help="heuristic weight exponent")
    p.add_argument("--rho", type=float, default=defaults.rho, help="evaporation rate in [0,1)")
    p.add_argument("--deposit", type=float, default=defaults.deposit_q, help="deposit numerator Q")
    p.add_argument("--tau0", type=float, default=defaults.tau0, help="initial trail level")
    p.add_argument("--tau-min", type=float, default=defaults.tau_min, help="trail floor")
    p.add_argument("--max-hops", type=int, default=None,
                   help="per-ant hop budget (default: 4 * |input| * |rules|)")
    p.add_argument("--patience", type=int, default=None,
                   help="stop after this many iterations without improvement (default: run all)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")


def _config_from_args(args: argparse.Namespace, seed: int | None = None) -> ColonyConfig:
    return ColonyConfig(
        n_ants=args.ants, n_iterations=args.iters, q0=args.q0, alpha=args.alpha,
        beta=args.beta, rho=args.rho, deposit_q=args.deposit, tau0=args.tau0,
        tau_min=args.tau_min, max_hops=args.max_hops, patience=args.patience,
        seed=args.seed if seed is None else seed,
    )


def _derivation_json(derivation: Derivation | None) -> list[dict]:
    return [
        {
            "rule": step.rule_index,
            "position": step.position,
            "before": " ".join(step.before),
            "after": " ".join(step.after),
        }
        for step in (derivation or ())
    ]


def trace_record(form: SententialForm, result: ParseResult, config: ColonyConfig,
                 n_productions: int, include_iterations: bool = False) -> dict:
    """Machine-readable record of one colony run (no wall-clock fields,
    so identical flags and seed give byte-identical output)."""
    echo = dataclasses.asdict(config)
    if echo["max_hops"] is None:
        echo["max_hops"] = default_max_hops(form, n_productions)
    record = {
        "input": " ".join(form),
        "accepted": result.accepted,
        "steps": result.best_steps,
        "hops": result.best_hops,
        "iterations_run": result.iterations_run,
        "successes": result.successes,
        "seed": config.seed,
        "config": echo,
        "derivation": _derivation_json(result.best_derivation),
    }
    if include_iterations:
        record["iterations"] = [dataclasses.asdict(s) for s in result.stats]
    return record


def _print_derivation(derivation: Derivation, grammar: Grammar) -> None:
    for number, step in enumerate(derivation, 1):
        rule = grammar.productions[step.rule_index]
        print(f"  {number}. rule {step.rule_index} ({rule}) at {step.position}: "
              f"{' '.join(step.before)} => {' '.join(step.after)}")


def cmd_recognize(args: argparse.Namespace) -> int:
    grammar = _load_grammar(args.grammar)
    form = parse_input(args.input, grammar, char_mode=args.chars)
    config = _config_from_args(args)
    result = run_colony(grammar, form, config)
    if args.json:
        print(json.dumps(trace_record(form, result, config, len(grammar.productions),
                                      include_iterations=args.trace)))
    elif result.accepted:
        print(f"accepted: {' '.join(form)}")
        print(f"steps: {result.best_steps}  hops: {result.best_hops}  "
              f"iterations: {result.iterations_run}  successful ants: {result.successes}")
        print("derivation:")
        _print_derivation(result.best_derivation, grammar)
    else:
        print(f"not accepted within budget: {' '.join(form)}")
        print(f"iterations: {result.iterations_run}  successful ants: {result.successes}")
    return EXIT_ACCEPTED if result.accepted else EXIT_REJECTED


def cmd_oracle(args: argparse.Namespace) -> int:
    grammar = _load_grammar(args.grammar)
    form = parse_input(args.input, grammar, char_mode=args.chars)
    try:
        result = shortest_reduction(grammar, form, max_states=args.max_states)
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        print(json.dumps({
            "input": " ".join(form),
            "member": result.member,
            "shortest_steps": result.shortest_steps,
            "states_explored": result.states_explored,
            "witness": _derivation_json(result.witness),
        }))
    elif result.member:
        print(f"member: {' '.join(form)}")
        print(f"shortest steps: {result.shortest_steps}  states explored: {result.states_explored}")
        print("witness:")
        _print_derivation(result.witness, grammar)
    else:
        print(f"not a member: {' '.join(form)}")
        print(f"states explored: {result.states_explored}")
    return EXIT_ACCEPTED if result.member else EXIT_REJECTED


def cmd_bench(args: argparse.Namespace) -> int:
    grammar = _load_grammar(args.grammar)
    try:
        lines = Path(args.inputs).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CliError(f"{args.inputs}: {exc.strerror or exc}") from exc
    entries: list[tuple[str, SententialForm]] = []
    skipped = 0
    for raw in lines:
        text = raw.strip()
        if not text:
            continue
        try:
            entries.append((text, parse_input(text, grammar, char_mode=args.chars)))
        except InputError as exc:
            print(json.dumps({"input": text, "error": str(exc)}), flush=True)
            skipped += 1
    if not entries and skipped == 0:
        raise CliError(f"{args.inputs}: no inputs")

    oracle_steps: dict[SententialForm, int | None] = {}
    for _, form in entries:
        if form not in oracle_steps:
            try:
                oracle = shortest_reduction(grammar, form)
                oracle_steps[form] = oracle.shortest_steps
            except OracleBudgetError:
                oracle_steps[form] = None

    runs = accepted_runs = optimal_runs = violations = 0
    total_millis = 0.0
    for text, form in entries:
        for seed in range(args.seed, args.seed + args.seeds):
            config = _config_from_args(args, seed=seed)
            started = time.perf_counter()
            result = run_colony(grammar, form, config)
            millis = (time.perf_counter() - started) * 1000.0
            truth = oracle_steps[form]
            runs += 1
            total_millis += millis
            if result.accepted:
                accepted_runs += 1
                if truth is None or result.best_steps < truth:
                    violations += 1
                elif result.best_steps == truth:
                    optimal_runs += 1
            print(json.dumps({
                "input": text,
                "seed": seed,
                "accepted": result.accepted,
                "steps": result.best_steps,
                "oracle_steps": truth,
                "millis": round(millis, 3),
            }), flush=True)
    summary = {
        "inputs": len(entries),
        "seeds": args.seeds,
        "runs": runs,
        "skipped": skipped,
        "success_rate": (accepted_runs / runs) if runs else None,
        "optimal_rate": (optimal_runs / accepted_runs) if accepted_runs else None,
        "soundness_violations": violations,
        "total_millis": round(total_millis, 3),
    }
    print(json.dumps({"summary": summary}), flush=True)
    return EXIT_ACCEPTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antparse",
        description="Membership in a context-free language, decided by artificial ants "
                    "or by an exhaustive breadth-first oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="run the ant colony on one input string")
    p.add_argument("--grammar", required=True, help="grammar file")
    p.add_argument("--input", required=True, help="input string (whitespace-separated tokens)")
    p.add_argument("--chars", action="store_true", help="treat each character as one symbol")
    _add_colony_flags(p)
    p.add_argument("--json", action="store_true", help="emit a JSON trace record")
    p.add_argument("--trace", action="store_true", help="include per-iteration trail summaries in the JSON")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("oracle", help="run the exhaustive BFS recognizer on one input string")
    p.add_argument("--grammar", required=True, help="grammar file")
    p.add_argument("--input", required=True, help="input string")
    p.add_argument("--chars", action="store_true", help="treat each character as one symbol")
    p.add_argument("--max-states", type=int, default=1_000_000, help="state-count ceiling")
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="sweep inputs x seeds; one JSON object per line")
    p.add_argument("--grammar", required=True, help="grammar file")
    p.add_argument("--inputs", required=True, help="file with one input string per line")
    p.add_argument("--seeds", type=int, default=20, help="number of seeds (base --seed upward)")
    p.add_argument("--chars", action="store_true", help="treat each character as one symbol")
    _add_colony_flags(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        return _fail(str(exc))
    except (GrammarError, InputError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
