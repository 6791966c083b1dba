"""Command-line front end for the chain algebra toolkit.

Exit codes are uniform across subcommands: 0 for success or a property that
holds, 1 for a negative mathematical result (not representable, table
mismatch, failed consistency check), 2 for usage or I/O errors. All
configuration is taken from flags, never the environment, so recorded
invocations replay exactly.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import (
    Element,
    Valence,
    enumerate_subalgebras,
    format_element,
    minimal_members,
    verify_axioms,
)
from .free import free_report, report_to_json
from .represent import (
    NotRepresentableError,
    check_representable,
    lukasiewicz_implication_table,
    simplify,
    synthesize,
    verify_representation,
)
from .terms import (
    Assignment,
    TruthTable,
    arity,
    eval_term,
    format_term,
    input_tuples,
    parse_term,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
    truth_table,
)

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class CliConfig:
    command: str
    n: int = 0
    r: int = 1
    term: str = ""
    table_path: str = ""
    output: str | None = None
    fmt: str = ""
    simplify: bool = False
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    assignments: tuple[str, ...] = field(default_factory=tuple)


def _parse_element(text: str, valence: Valence) -> Element:
    raw = text.strip()
    try:
        if "/" in raw:
            num, den = raw.split("/", 1)
            if int(den) != valence.n:
                raise ValueError(
                    f"denominator {den} does not match valence n={valence.n}"
                )
            return Element(int(num), valence)
        return Element(int(raw), valence)
    except ValueError as exc:
        raise ValueError(f"bad element literal {text!r}: {exc}") from exc


def _member_set(valence: Valence, numerators: tuple[int, ...]) -> str:
    inner = ", ".join(format_element(Element(j, valence)) for j in numerators)
    return "{" + inner + "}"


def _counterexample_line(valence: Valence, inputs: tuple[int, ...], output: int) -> str:
    tup = ", ".join(format_element(Element(j, valence)) for j in inputs)
    out = format_element(Element(output, valence))
    allowed = _member_set(valence, minimal_members(valence.n, inputs))
    return f"tuple=({tup}) output={out} allowed={allowed}"


def _read_table(path: str) -> TruthTable:
    text = Path(path).read_text()
    if path.endswith(".csv"):
        return table_from_csv(text)
    return table_from_json(text)


def cmd_axioms(cfg: CliConfig) -> int:
    report = verify_axioms(Valence(cfg.n))
    for check in report.checks:
        line = f"{check.axiom:<21} {'pass' if check.passed else 'FAIL'}"
        if check.counterexample is not None:
            line += f"  counterexample={check.counterexample}"
        print(line)
    if report.all_passed:
        print(f"all {len(report.checks)} axiom groups pass")
        return 0
    print(f"{len(report.failures())} of {len(report.checks)} axiom groups fail")
    return 1


def cmd_eval(cfg: CliConfig) -> int:
    valence = Valence(cfg.n)
    term = parse_term(cfg.term)
    given: dict[int, Element] = {}
    for item in cfg.assignments:
        name, _, value = item.partition("=")
        if not (name.startswith("x") and name[1:].isdigit() and int(name[1:]) >= 1):
            raise ValueError(f"bad assignment {item!r}: expected xK=value")
        given[int(name[1:])] = _parse_element(value, valence)
    width = max([arity(term), *given.keys()]) if given else arity(term)
    values = []
    for k in range(1, width + 1):
        if k <= arity(term) and k not in given:
            raise ValueError(f"missing value for x{k}")
        values.append(given.get(k, Element(0, valence)))
    result = eval_term(term, Assignment(valence, tuple(values)))
    print(format_element(result))
    return 0


def cmd_table(cfg: CliConfig) -> int:
    valence = Valence(cfg.n)
    term = parse_term(cfg.term)
    table = truth_table(term, cfg.r, valence, jobs=cfg.jobs)
    fmt = cfg.fmt or "json"
    text = table_to_json(table) + "\n" if fmt == "json" else table_to_csv(table)
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(cfg: CliConfig) -> int:
    table = _read_table(cfg.table_path)
    verdict = check_representable(table)
    if verdict.representable:
        print("representable")
        return 0
    inputs, output = verdict.counterexample
    print(_counterexample_line(table.valence, inputs, output))
    return 1


def cmd_synthesize(cfg: CliConfig) -> int:
    table = _read_table(cfg.table_path)
    try:
        term = synthesize(table)
    except NotRepresentableError as exc:
        print(_counterexample_line(table.valence, exc.inputs, exc.output))
        return 1
    if cfg.simplify:
        term = simplify(term)
    if not verify_representation(term, table):
        raise RuntimeError("internal error: synthesized term failed re-verification")
    print(format_term(term))
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    table = _read_table(cfg.table_path)
    term = parse_term(cfg.term)
    if arity(term) > table.arity:
        raise ValueError(
            f"term arity {arity(term)} exceeds table arity {table.arity}"
        )
    got = truth_table(term, table.arity, table.valence)
    if got == table:
        print("match")
        return 0
    valence = table.valence
    for tup, ours, theirs in zip(
        input_tuples(valence, table.arity), got.outputs, table.outputs
    ):
        if ours != theirs:
            shown = ", ".join(format_element(Element(j, valence)) for j in tup)
            print(
                f"mismatch at tuple=({shown}): "
                f"term={format_element(Element(ours, valence))} "
                f"table={format_element(Element(theirs, valence))}"
            )
            return 1
    raise RuntimeError("tables differ but no differing tuple found")


def cmd_subalgebras(cfg: CliConfig) -> int:
    valence = Valence(cfg.n)
    for sub in enumerate_subalgebras(valence):
        print(f"{_member_set(valence, sub.members)} size={sub.size}")
    return 0


def cmd_free(cfg: CliConfig) -> int:
    valence = Valence(cfg.n)
    tuples = (cfg.n + 1) ** cfg.r
    if tuples > cfg.budget:
        print(
            f"error: (n+1)^r = {tuples} tuples exceeds the budget of {cfg.budget}"
            " (raise it with --budget)",
            file=sys.stderr,
        )
        return 2
    report = free_report(valence, cfg.r)
    if cfg.fmt == "json":
        print(report_to_json(report))
    else:
        _print_report(report)
    return 0 if report.consistent else 1


def _print_report(report) -> None:
    valence = report.valence
    print(f"free algebra on {report.arity} generator(s) at n={valence.n}")
    shown = [_member_set(valence, row.subalgebra.members) for row in report.rows]
    width = max(len(s) for s in shown)
    for row, members in zip(report.rows, shown):
        line = f"  {members:<{width}}  |A|={row.subalgebra.size}  alpha={row.alpha}"
        if row.alpha_closed_form is not None:
            line += f"  formula={row.alpha_closed_form}"
        print(line)
    factored = " · ".join(f"{size}^{a}" for size, a in report.factors)
    print(f"cardinality: {factored} = {report.cardinality}")
    print(f"representable count: {report.representable_count}")
    flags = {
        "partition": report.alpha_partition_ok,
        "product": report.product_matches_count,
        "formula": report.closed_form_matches,
    }
    rendered = " ".join(
        f"{name}={'n/a' if value is None else 'ok' if value else 'FAIL'}"
        for name, value in flags.items()
    )
    print(f"checks: {rendered}")


def cmd_demo_implication(cfg: CliConfig) -> int:
    valence = Valence(cfg.n)
    n = valence.n
    table = lukasiewicz_implication_table(valence)
    rose = minimal_members(n, (n - 1, 1))
    rose_value = min(n, n - (n - 1) + 1)  # (n-1)/n -> 1/n, always 2/n
    print(f"Lukasiewicz implication x -> y = min(1, 1 - x + y) at n={n}")
    print(f"Rose subalgebra: {_member_set(valence, rose)}")
    where = "inside" if rose_value in rose else "OUTSIDE"
    print(
        f"({format_element(Element(n - 1, valence))} -> "
        f"{format_element(Element(1, valence))}) = "
        f"{format_element(Element(rose_value, valence))}, {where} the Rose subalgebra"
    )
    verdict = check_representable(table)
    if verdict.representable:
        print("verdict: representable")
        term = simplify(synthesize(table))
        print(f"term: {format_term(term)}")
        return 0
    print("verdict: not representable")
    print(_counterexample_line(valence, (n - 1, 1), rose_value))
    return 1


def _valence_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("valence must be at least 2")
    return value


def _arity_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("arity must be at least 1")
    return value


def _jobs_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("jobs must be >= 0 (0 = auto)")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moisil",
        description="representability and free algebras over the standard "
        "n-nuanced Lukasiewicz-Moisil chain",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="exhaustively check the defining axioms")
    p.add_argument("-n", type=_valence_arg, required=True, help="valence (>= 2)")

    p = sub.add_parser("eval", help="evaluate a term at an assignment")
    p.add_argument("-n", type=_valence_arg, required=True)
    p.add_argument("term", help="term text, e.g. 'D2(x1) & !x2'")
    p.add_argument(
        "--set",
        dest="assignments",
        action="append",
        default=[],
        metavar="xK=VALUE",
        help="assign a variable; VALUE is j/n or a bare numerator j",
    )

    p = sub.add_parser("table", help="tabulate a term over all argument tuples")
    p.add_argument("-n", type=_valence_arg, required=True)
    p.add_argument("-r", type=_arity_arg, required=True, help="arity (>= term arity)")
    p.add_argument("term")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=_jobs_arg, default=1, help="worker threads, 0 = auto")

    p = sub.add_parser("check", help="decide representability of a table file")
    p.add_argument("table_path", help="truth table (.json or .csv)")

    p = sub.add_parser("synthesize", help="build a representing term for a table file")
    p.add_argument("table_path")
    p.add_argument("--simplify", action="store_true", help="clean up the term")

    p = sub.add_parser("verify", help="check that a term represents a table file")
    p.add_argument("term")
    p.add_argument("table_path")

    p = sub.add_parser("subalgebras", help="list all subalgebras of the chain")
    p.add_argument("-n", type=_valence_arg, required=True)

    p = sub.add_parser("free", help="free-algebra report with consistency checks")
    p.add_argument("-n", type=_valence_arg, required=True)
    p.add_argument("-r", type=_arity_arg, required=True)
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"max (n+1)^r tuples to enumerate (default {DEFAULT_BUDGET})",
    )

    p = sub.add_parser(
        "demo-implication",
        help="show where the Lukasiewicz implication escapes the chain's terms",
    )
    p.add_argument("-n", type=_valence_arg, required=True)

    return parser


_HANDLERS = {
    "axioms": cmd_axioms,
    "eval": cmd_eval,
    "table": cmd_table,
    "check": cmd_check,
    "synthesize": cmd_synthesize,
    "verify": cmd_verify,
    "subalgebras": cmd_subalgebras,
    "free": cmd_free,
    "demo-implication": cmd_demo_implication,
}


def _config_from(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=args.command,
        n=getattr(args, "n", 0),
        r=getattr(args, "r", 1),
        term=getattr(args, "term", ""),
        table_path=getattr(args, "table_path", ""),
        output=getattr(args, "output", None),
        fmt=getattr(args, "fmt", ""),
        simplify=getattr(args, "simplify", False),
        jobs=getattr(args, "jobs", 1),
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        assignments=tuple(getattr(args, "assignments", ())),
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = _config_from(args)
    try:
        return _HANDLERS[cfg.command](cfg)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
