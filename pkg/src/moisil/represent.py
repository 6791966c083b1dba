"""Moisil representability: membership test and normal-form synthesis.

A truth table is representable by a term exactly when every output lies in
the minimal subalgebra of its argument tuple. When it does, a canonical term
reproduces the table: a disjunction, over all argument tuples, of the J-guard
for that tuple conjoined with a selector picking the required output.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

from .algebra import Element, Valence, format_element, minimal_members
from .terms import (
    And,
    Const0,
    Const1,
    Delta,
    Jay,
    Neg,
    Or,
    Term,
    TruthTable,
    Var,
    arity,
    input_tuples,
    truth_table,
)

__all__ = [
    "RepresentabilityVerdict",
    "NotRepresentableError",
    "check_representable",
    "selector_term",
    "dnf_disjuncts",
    "synthesize",
    "verify_representation",
    "simplify",
    "lukasiewicz_implication_table",
    "random_representable_table",
    "enumerate_representable_tables",
]


@dataclass(frozen=True)
class RepresentabilityVerdict:
    """Decision plus, when negative, the first offending table line."""

    representable: bool
    counterexample: tuple[tuple[int, ...], int] | None = None


class NotRepresentableError(Exception):
    """Synthesis was asked for a table that fails the membership test."""

    def __init__(self, valence: Valence, inputs: tuple[int, ...], output: int):
        self.valence = valence
        self.inputs = inputs
        self.output = output
        ins = ", ".join(format_element(Element(j, valence)) for j in inputs)
        out = format_element(Element(output, valence))
        super().__init__(
            f"f({ins}) = {out} escapes the minimal subalgebra of its arguments"
        )


def check_representable(table: TruthTable) -> RepresentabilityVerdict:
    """Test every output against the minimal subalgebra of its tuple.

    Returns the first violation in canonical tuple order, so the verdict is
    deterministic.
    """
    n = table.valence.n
    for tup, out in zip(input_tuples(table.valence, table.arity), table.outputs):
        if out not in minimal_members(n, tup):
            return RepresentabilityVerdict(False, (tup, out))
    return RepresentabilityVerdict(True)


def selector_term(inputs: Sequence[Element], target: Element) -> Term:
    """The selector that evaluates to `target` at the given argument values.

    Cases are tried in a fixed priority: the constant 1, the constant 0, the
    least-index variable equal to the target, then the least-index variable
    whose negation equals the target.
    """
    n = target.valence.n
    for a in inputs:
        if a.valence != target.valence:
            raise ValueError(
                f"valence mismatch: n={a.valence.n} vs n={target.valence.n}"
            )
    if target.numerator == n:
        return Const1()
    if target.numerator == 0:
        return Const0()
    for j, a in enumerate(inputs, start=1):
        if a.numerator == target.numerator:
            return Var(j)
    for j, a in enumerate(inputs, start=1):
        if n - a.numerator == target.numerator:
            return Neg(Var(j))
    raise ValueError(
        f"{format_element(target)} is outside the minimal subalgebra of the inputs"
    )


def dnf_disjuncts(table: TruthTable) -> list[Term]:
    """One guarded disjunct per argument tuple, in canonical order.

    The k-th disjunct is J_{a_1}(x1) & ... & J_{a_r}(xr) & s where (a_1..a_r)
    is the k-th tuple and s selects the table's output there. Requires a
    representable table (the selector rejects escaping outputs).
    """
    v = table.valence
    disjuncts = []
    for tup, out in zip(input_tuples(v, table.arity), table.outputs):
        values = [Element(j, v) for j in tup]
        parts: list[Term] = [Jay(j, Var(k)) for k, j in enumerate(tup, start=1)]
        parts.append(selector_term(values, Element(out, v)))
        disjuncts.append(reduce(And, parts))
    return disjuncts


def synthesize(table: TruthTable) -> Term:
    """Build the canonical representing term for a representable table.

    The disjunction is assembled as a balanced tree so the term height stays
    logarithmic in the number of tuples. Raises NotRepresentableError, with
    the offending line, when the membership test fails.
    """
    verdict = check_representable(table)
    if not verdict.representable:
        tup, out = verdict.counterexample
        raise NotRepresentableError(table.valence, tup, out)
    return _balanced(Or, dnf_disjuncts(table))


def verify_representation(t: Term, table: TruthTable) -> bool:
    """Exhaustively compare the term's table against the given one."""
    if arity(t) > table.arity:
        raise ValueError(
            f"term arity {arity(t)} exceeds table arity {table.arity}"
        )
    return truth_table(t, table.arity, table.valence) == table


def simplify(t: Term) -> Term:
    """Semantics-preserving cleanup: unit/zero collapse plus flattening.

    Rewrites are local only: drop 0-disjuncts and 1-conjuncts, collapse
    x|1 to 1 and x&0 to 0, and rebuild flattened join/meet chains balanced.
    The truth table never changes; no minimization is attempted.
    """
    match t:
        case Or(_, _):
            kept: list[Term] = []
            for part in _spine(t, Or):
                s = simplify(part)
                if isinstance(s, Const0):
                    continue
                if isinstance(s, Const1):
                    return Const1()
                kept.extend(_spine(s, Or) if isinstance(s, Or) else (s,))
            if not kept:
                return Const0()
            return _balanced(Or, kept)
        case And(_, _):
            kept = []
            for part in _spine(t, And):
                s = simplify(part)
                if isinstance(s, Const1):
                    continue
                if isinstance(s, Const0):
                    return Const0()
                kept.extend(_spine(s, And) if isinstance(s, And) else (s,))
            if not kept:
                return Const1()
            return _balanced(And, kept)
        case Neg(c):
            return Neg(simplify(c))
        case Delta(i, c):
            return Delta(i, simplify(c))
        case Jay(i, c):
            return Jay(i, simplify(c))
        case _:
            return t


def _spine(t: Term, node: type) -> list[Term]:
    # operands of the maximal Or/And chain, left to right, without recursion
    out: list[Term] = []
    stack = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, node):
            stack.append(cur.right)
            stack.append(cur.left)
        else:
            out.append(cur)
    return out


def _balanced(node: type, parts: Sequence[Term]) -> Term:
    layer = list(parts)
    if not layer:
        raise ValueError("no operands")
    while len(layer) > 1:
        merged = [
            node(layer[k], layer[k + 1]) for k in range(0, len(layer) - 1, 2)
        ]
        if len(layer) % 2:
            merged.append(layer[-1])
        layer = merged
    return layer[0]


def lukasiewicz_implication_table(valence: Valence) -> TruthTable:
    """The binary table of x -> y = min(1, 1 - x + y) on the chain."""
    n = valence.n
    outs = tuple(min(n, n - a + b) for a, b in input_tuples(valence, 2))
    return TruthTable(valence, 2, outs)


def random_representable_table(
    valence: Valence, r: int, rng: random.Random
) -> TruthTable:
    """Sample uniformly among representable tables.

    The membership constraint is independent per tuple, so drawing each
    output uniformly from its minimal subalgebra samples exactly the
    representable set.
    """
    outs = tuple(
        rng.choice(minimal_members(valence.n, tup))
        for tup in input_tuples(valence, r)
    )
    return TruthTable(valence, r, outs)


def enumerate_representable_tables(
    valence: Valence, r: int
) -> Iterator[TruthTable]:
    """All representable tables at (valence, r), in lexicographic output order."""
    allowed = [minimal_members(valence.n, tup) for tup in input_tuples(valence, r)]
    for outs in itertools.product(*allowed):
        yield TruthTable(valence, r, outs)
