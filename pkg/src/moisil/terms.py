"""Term language over the chain signature: AST, parser, printer, evaluation.

Concrete syntax: `0`, `1`, variables `xK` (K >= 1), prefix `!` for negation,
`DK(...)` for the K-th nuance, `JK(...)` for the K-th mutually exclusive
nuance, infix `&` and `|`, and parentheses. `!`/`D`/`J` bind tighter than
`&`, which binds tighter than `|`; both infix operators associate left.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .algebra import Element, Valence, delta, jay, join, meet, neg

__all__ = [
    "Term",
    "Const0",
    "Const1",
    "Var",
    "Or",
    "And",
    "Neg",
    "Delta",
    "Jay",
    "Assignment",
    "TruthTable",
    "ParseError",
    "parse_term",
    "format_term",
    "arity",
    "expand_jay",
    "eval_term",
    "input_tuples",
    "tuple_index",
    "truth_table",
    "table_to_json",
    "table_from_json",
    "table_to_csv",
    "table_from_csv",
]


@dataclass(frozen=True)
class Const0:
    pass


@dataclass(frozen=True)
class Const1:
    pass


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class Or:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class And:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    child: "Term"


@dataclass(frozen=True)
class Delta:
    index: int
    child: "Term"

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"nuance index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class Jay:
    index: int
    child: "Term"

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"index must be >= 0, got {self.index}")


Term = Const0 | Const1 | Var | Or | And | Neg | Delta | Jay


def arity(t: Term) -> int:
    """Largest variable index occurring in the term; 0 for closed terms."""
    match t:
        case Var(i):
            return i
        case Or(a, b) | And(a, b):
            return max(arity(a), arity(b))
        case Neg(c) | Delta(_, c) | Jay(_, c):
            return arity(c)
        case _:
            return 0


class ParseError(ValueError):
    """Syntax error in the concrete term syntax, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    # (kind, value, position); value is the index for x/D/J, 0 otherwise
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "01()&|!":
            tokens.append((c, 0, i))
            i += 1
            continue
        if c in "xDJ":
            start = i
            i += 1
            digits = ""
            while i < len(text) and text[i].isdigit():
                digits += text[i]
                i += 1
            if not digits:
                raise ParseError(f"expected digits after {c!r}", start)
            tokens.append((c, int(digits), start))
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", 0, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, int, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, int, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, int, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> None:
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2])

    def parse(self) -> Term:
        t = self.disjunction()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("unexpected trailing input", tok[2])
        return t

    def disjunction(self) -> Term:
        t = self.conjunction()
        while self.peek()[0] == "|":
            self.advance()
            t = Or(t, self.conjunction())
        return t

    def conjunction(self) -> Term:
        t = self.atom()
        while self.peek()[0] == "&":
            self.advance()
            t = And(t, self.atom())
        return t

    def atom(self) -> Term:
        kind, value, pos = self.advance()
        if kind == "0":
            return Const0()
        if kind == "1":
            return Const1()
        if kind == "x":
            if value < 1:
                raise ParseError("variable index must be >= 1", pos)
            return Var(value)
        if kind == "!":
            return Neg(self.atom())
        if kind in ("D", "J"):
            if kind == "D" and value < 1:
                raise ParseError("nuance index must be >= 1", pos)
            self.expect("(")
            child = self.disjunction()
            self.expect(")")
            return Delta(value, child) if kind == "D" else Jay(value, child)
        if kind == "(":
            child = self.disjunction()
            self.expect(")")
            return child
        raise ParseError("expected a term", pos)


def parse_term(text: str) -> Term:
    """Parse the concrete syntax into an AST."""
    return _Parser(_tokenize(text)).parse()


_OR_PREC, _AND_PREC, _ATOM_PREC = 0, 1, 2


def format_term(t: Term) -> str:
    """Minimal-parenthesization rendering; re-parses to an equivalent term."""
    return _format(t, _OR_PREC)


def _format(t: Term, min_prec: int) -> str:
    match t:
        case Const0():
            text, prec = "0", _ATOM_PREC
        case Const1():
            text, prec = "1", _ATOM_PREC
        case Var(i):
            text, prec = f"x{i}", _ATOM_PREC
        case Neg(c):
            text, prec = "!" + _format(c, _ATOM_PREC), _ATOM_PREC
        case Delta(i, c):
            text, prec = f"D{i}({_format(c, _OR_PREC)})", _ATOM_PREC
        case Jay(i, c):
            text, prec = f"J{i}({_format(c, _OR_PREC)})", _ATOM_PREC
        case And(a, b):
            text = f"{_format(a, _AND_PREC)} & {_format(b, _AND_PREC)}"
            prec = _AND_PREC
        case Or(a, b):
            text = f"{_format(a, _OR_PREC)} | {_format(b, _OR_PREC)}"
            prec = _OR_PREC
        case _:
            raise TypeError(f"not a term: {t!r}")
    return f"({text})" if prec < min_prec else text


def expand_jay(t: Term, valence: Valence) -> Term:
    """Rewrite every J node into its defining delta/neg/meet composition."""
    n = valence.n
    match t:
        case Jay(i, c):
            child = expand_jay(c, valence)
            if not 0 <= i <= n:
                raise ValueError(f"index {i} outside 0..{n}")
            if i == n:
                return Delta(1, child)
            if i == 0:
                return Neg(Delta(n, child))
            return And(Delta(n - i + 1, child), Neg(Delta(n - i, child)))
        case Delta(i, c):
            if not 1 <= i <= n:
                raise ValueError(f"nuance index {i} outside 1..{n}")
            return Delta(i, expand_jay(c, valence))
        case Or(a, b):
            return Or(expand_jay(a, valence), expand_jay(b, valence))
        case And(a, b):
            return And(expand_jay(a, valence), expand_jay(b, valence))
        case Neg(c):
            return Neg(expand_jay(c, valence))
        case _:
            return t


@dataclass(frozen=True)
class Assignment:
    """Values for x1, x2, ... at a fixed valence (a point of the chain power)."""

    valence: Valence
    values: tuple[Element, ...]

    def __post_init__(self) -> None:
        for a in self.values:
            if a.valence != self.valence:
                raise ValueError(
                    f"assignment value at n={a.valence.n}, expected n={self.valence.n}"
                )

    @classmethod
    def of_numerators(cls, valence: Valence, numerators: Iterable[int]) -> "Assignment":
        return cls(valence, tuple(Element(j, valence) for j in numerators))

    def value(self, index: int) -> Element:
        if not 1 <= index <= len(self.values):
            raise ValueError(f"unbound variable x{index}")
        return self.values[index - 1]


def eval_term(t: Term, assignment: Assignment) -> Element:
    """Structural evaluation; each node delegates to its chain operation."""
    match t:
        case Const0():
            return Element(0, assignment.valence)
        case Const1():
            return Element(assignment.valence.n, assignment.valence)
        case Var(i):
            return assignment.value(i)
        case Or(a, b):
            return join(eval_term(a, assignment), eval_term(b, assignment))
        case And(a, b):
            return meet(eval_term(a, assignment), eval_term(b, assignment))
        case Neg(c):
            return neg(eval_term(c, assignment))
        case Delta(i, c):
            return delta(i, eval_term(c, assignment))
        case Jay(i, c):
            return jay(i, eval_term(c, assignment))
        case _:
            raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class TruthTable:
    """A total function carrier^arity -> carrier as a flat output sequence.

    outputs[k] is the value at the k-th argument tuple in canonical order:
    x1 is the most significant position and the last variable varies fastest,
    so k = sum of a_i * (n+1)^(arity-i).
    """

    valence: Valence
    arity: int
    outputs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        expected = (self.valence.n + 1) ** self.arity
        if len(self.outputs) != expected:
            raise ValueError(
                f"expected {expected} outputs for n={self.valence.n}, "
                f"arity={self.arity}, got {len(self.outputs)}"
            )
        if any(not 0 <= j <= self.valence.n for j in self.outputs):
            raise ValueError("output numerator outside the carrier")

    def value_at(self, numerators: tuple[int, ...]) -> int:
        return self.outputs[tuple_index(self.valence, numerators)]


def input_tuples(valence: Valence, r: int) -> Iterator[tuple[int, ...]]:
    """All argument tuples (as numerators) in canonical order."""
    return itertools.product(range(valence.n + 1), repeat=r)


def tuple_index(valence: Valence, numerators: Iterable[int]) -> int:
    idx = 0
    for j in numerators:
        idx = idx * (valence.n + 1) + j
    return idx


def truth_table(t: Term, r: int, valence: Valence, jobs: int = 1) -> TruthTable:
    """Tabulate a term over every argument tuple in canonical order.

    jobs > 1 splits the index range over worker threads writing to disjoint
    slots; the result is identical for every degree. jobs = 0 uses the
    machine's CPU count.
    """
    need = arity(t)
    if r < need:
        raise ValueError(f"requested arity {r} is below the term's arity {need}")
    if jobs < 0:
        raise ValueError(f"jobs must be >= 0, got {jobs}")
    if jobs == 0:
        jobs = os.cpu_count() or 1
    tuples = list(input_tuples(valence, r))
    if jobs == 1:
        outs = [
            eval_term(t, Assignment.of_numerators(valence, tup)).numerator
            for tup in tuples
        ]
    else:
        outs = [0] * len(tuples)

        def fill(lo: int, hi: int) -> None:
            for k in range(lo, hi):
                asg = Assignment.of_numerators(valence, tuples[k])
                outs[k] = eval_term(t, asg).numerator

        step = -(-len(tuples) // jobs)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            done = [
                pool.submit(fill, lo, min(lo + step, len(tuples)))
                for lo in range(0, len(tuples), step)
            ]
            for future in done:
                future.result()
    return TruthTable(valence, r, tuple(outs))


def table_to_json(table: TruthTable) -> str:
    return json.dumps(
        {"n": table.valence.n, "arity": table.arity, "outputs": list(table.outputs)}
    )


def table_from_json(text: str) -> TruthTable:
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("expected a JSON object")
    try:
        n, r, outputs = doc["n"], doc["arity"], doc["outputs"]
    except KeyError as exc:
        raise ValueError(f"missing truth-table field {exc}") from exc
    if (
        not isinstance(n, int)
        or not isinstance(r, int)
        or not isinstance(outputs, list)
        or not all(isinstance(j, int) for j in outputs)
    ):
        raise ValueError("malformed truth-table JSON")
    return TruthTable(Valence(n), r, tuple(outputs))


def table_to_csv(table: TruthTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"x{k}" for k in range(1, table.arity + 1)] + ["f"])
    for tup, out in zip(input_tuples(table.valence, table.arity), table.outputs):
        writer.writerow(list(tup) + [out])
    return buf.getvalue()


def table_from_csv(text: str) -> TruthTable:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise ValueError("empty CSV table")
    header = rows.pop(0)
    r = len(header) - 1
    if r < 1 or header != [f"x{k}" for k in range(1, r + 1)] + ["f"]:
        raise ValueError("CSV header must be x1,...,xr,f")
    valence = Valence(_carrier_size(len(rows), r) - 1)
    try:
        cells = [[int(c) for c in row] for row in rows]
    except ValueError as exc:
        raise ValueError(f"non-integer CSV cell ({exc})") from exc
    for row, tup in zip(cells, input_tuples(valence, r)):
        if len(row) != r + 1 or tuple(row[:-1]) != tup:
            raise ValueError("CSV rows must enumerate tuples in canonical order")
    return TruthTable(valence, r, tuple(row[-1] for row in cells))


def _carrier_size(row_count: int, r: int) -> int:
    size = 3
    while size**r < row_count:
        size += 1
    if size**r != row_count:
        raise ValueError(
            f"{row_count} rows is not (n+1)^{r} for any valence n >= 2"
        )
    return size
