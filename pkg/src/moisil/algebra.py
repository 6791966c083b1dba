"""Exact arithmetic on the standard n-nuanced Lukasiewicz-Moisil chain.

The carrier is {0, 1/n, ..., 1}, stored as integer numerators so that every
operation is exact and exhaustive sweeps over the carrier stay cheap. Besides
the signature operations (join, meet, negation, the nuances and their mutually
exclusive variants) this module provides subalgebra machinery and an
exhaustive checker for the eight defining axiom groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "Valence",
    "Element",
    "Subalgebra",
    "AxiomCheck",
    "AxiomReport",
    "format_element",
    "join",
    "meet",
    "neg",
    "delta",
    "jay",
    "verify_axioms",
    "minimal_members",
    "minimal_subalgebra",
    "closure_members",
    "generated_subalgebra",
    "enumerate_subalgebras",
]


@dataclass(frozen=True)
class Valence:
    """The n of the n-nuanced chain; the carrier has n + 1 elements."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"valence must be at least 2, got {self.n}")

    def carrier(self) -> tuple[Element, ...]:
        return tuple(Element(j, self) for j in range(self.n + 1))


@dataclass(frozen=True)
class Element:
    """The chain value numerator/n at a fixed valence."""

    numerator: int
    valence: Valence

    def __post_init__(self) -> None:
        if not 0 <= self.numerator <= self.valence.n:
            raise ValueError(
                f"numerator {self.numerator} outside 0..{self.valence.n}"
            )

    def __str__(self) -> str:
        return format_element(self)


def format_element(a: Element) -> str:
    """Render as j/n, except the bounds which print as 0 and 1."""
    if a.numerator == 0:
        return "0"
    if a.numerator == a.valence.n:
        return "1"
    return f"{a.numerator}/{a.valence.n}"


def _same_valence(a: Element, b: Element) -> Valence:
    if a.valence != b.valence:
        raise ValueError(f"valence mismatch: n={a.valence.n} vs n={b.valence.n}")
    return a.valence


def join(a: Element, b: Element) -> Element:
    """Lattice join: the larger of two chain values."""
    _same_valence(a, b)
    return a if a.numerator >= b.numerator else b


def meet(a: Element, b: Element) -> Element:
    """Lattice meet: the smaller of two chain values."""
    _same_valence(a, b)
    return a if a.numerator <= b.numerator else b


def neg(a: Element) -> Element:
    """Involutive negation j/n -> (n - j)/n."""
    return Element(a.valence.n - a.numerator, a.valence)


def delta(i: int, a: Element) -> Element:
    """The i-th nuance: 1 when i + j >= n + 1 for argument j/n, else 0."""
    n = a.valence.n
    if not 1 <= i <= n:
        raise ValueError(f"nuance index {i} outside 1..{n}")
    return Element(n if i + a.numerator >= n + 1 else 0, a.valence)


def jay(i: int, a: Element) -> Element:
    """The i-th mutually exclusive nuance, composed from delta, neg and meet.

    On the standard chain jay(i, j/n) is 1 exactly when i == j. That
    Kronecker behaviour is a verified theorem (see the test suite), not the
    definition; the definition is the composition below.
    """
    n = a.valence.n
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    if i == n:
        return delta(1, a)
    if i == 0:
        return neg(delta(n, a))
    return meet(delta(n - i + 1, a), neg(delta(n - i, a)))


@dataclass(frozen=True)
class Subalgebra:
    """A subset of the carrier closed under all chain operations.

    Such subsets are exactly those containing both bounds and symmetric under
    negation; the constructor enforces that characterization, and the tests
    cross-check it against the closure-based definition.
    """

    valence: Valence
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.valence.n
        if any(not 0 <= m <= n for m in self.members):
            raise ValueError("member numerator outside the carrier")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be strictly increasing")
        if 0 not in self.members or n not in self.members:
            raise ValueError("a subalgebra contains 0 and 1")
        present = set(self.members)
        if any(n - m not in present for m in present):
            raise ValueError("a subalgebra is symmetric under negation")

    @property
    def size(self) -> int:
        return len(self.members)

    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(m, self.valence) for m in self.members)

    def __contains__(self, a: Element) -> bool:
        return a.valence == self.valence and a.numerator in self.members


def minimal_members(n: int, numerators: Iterable[int]) -> tuple[int, ...]:
    """Numerators of {0, 1} together with each given value and its negation."""
    out = {0, n}
    for j in numerators:
        out.add(j)
        out.add(n - j)
    return tuple(sorted(out))


def minimal_subalgebra(values: Sequence[Element]) -> Subalgebra:
    """Smallest subalgebra containing every entry of a nonempty tuple."""
    if not values:
        raise ValueError("minimal_subalgebra needs a nonempty tuple")
    for a in values[1:]:
        _same_valence(values[0], a)
    v = values[0].valence
    return Subalgebra(v, minimal_members(v.n, (a.numerator for a in values)))


@lru_cache(maxsize=None)
def closure_members(n: int, seed: frozenset[int] = frozenset()) -> tuple[int, ...]:
    """Fixpoint closure of a numerator set under join, meet, neg and delta."""
    current = set(seed) | {0, n}
    while True:
        grown = set(current)
        grown.update(n - j for j in current)
        for j, k in itertools.combinations(current, 2):
            grown.add(max(j, k))
            grown.add(min(j, k))
        for i in range(1, n + 1):
            for j in current:
                grown.add(n if i + j >= n + 1 else 0)
        if grown == current:
            return tuple(sorted(current))
        current = grown


def generated_subalgebra(valence: Valence, seed: Iterable[Element] = ()) -> Subalgebra:
    """Least subalgebra containing the seed; an empty seed gives {0, 1}."""
    numerators = set()
    for a in seed:
        if a.valence != valence:
            raise ValueError(f"seed element at n={a.valence.n}, expected n={valence.n}")
        numerators.add(a.numerator)
    return Subalgebra(valence, closure_members(valence.n, frozenset(numerators)))


def enumerate_subalgebras(valence: Valence) -> tuple[Subalgebra, ...]:
    """All subalgebras, ordered by size then lexicographically by members."""
    n = valence.n
    optional = [(j, n - j) for j in range(1, (n + 1) // 2)]
    if n % 2 == 0:
        optional.append((n // 2, n // 2))
    found = []
    for picks in itertools.product((False, True), repeat=len(optional)):
        members = {0, n}
        for picked, pair in zip(picks, optional):
            if picked:
                members.update(pair)
        found.append(Subalgebra(valence, tuple(sorted(members))))
    found.sort(key=lambda s: (s.size, s.members))
    return tuple(found)


DeltaOp = Callable[[int, Element], Element]


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom group: pass flag plus first counterexample.

    The counterexample records nuance indices first, then element
    numerators, in the order the axiom quantifies over them.
    """

    axiom: str
    passed: bool
    counterexample: tuple[int, ...] | None


@dataclass(frozen=True)
class AxiomReport:
    valence: Valence
    checks: tuple[AxiomCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def verify_axioms(valence: Valence, delta_op: DeltaOp | None = None) -> AxiomReport:
    """Exhaustively check the eight axiom groups on the standard chain.

    delta_op lets a test harness inject a corrupted nuance table to confirm
    the checker is falsifiable; the default is the standard delta.
    """
    d = delta_op if delta_op is not None else delta
    n = valence.n
    carrier = valence.carrier()
    one = Element(n, valence)
    nuance_range = range(1, n + 1)

    def involution() -> Iterator[tuple[tuple[int, ...], bool]]:
        for x in carrier:
            yield (x.numerator,), neg(neg(x)) == x

    def de_morgan() -> Iterator[tuple[tuple[int, ...], bool]]:
        for x, y in itertools.product(carrier, repeat=2):
            yield (x.numerator, y.numerator), neg(join(x, y)) == meet(neg(x), neg(y))

    def nuance_join() -> Iterator[tuple[tuple[int, ...], bool]]:
        for i in nuance_range:
            for x, y in itertools.product(carrier, repeat=2):
                holds = d(i, join(x, y)) == join(d(i, x), d(i, y))
                yield (i, x.numerator, y.numerator), holds

    def nuance_complement() -> Iterator[tuple[tuple[int, ...], bool]]:
        for i in nuance_range:
            for x in carrier:
                yield (i, x.numerator), join(d(i, x), neg(d(i, x))) == one

    def nuance_composition() -> Iterator[tuple[tuple[int, ...], bool]]:
        for i, j in itertools.product(nuance_range, repeat=2):
            for x in carrier:
                yield (i, j, x.numerator), d(i, d(j, x)) == d(j, x)

    def nuance_negation() -> Iterator[tuple[tuple[int, ...], bool]]:
        for i in nuance_range:
            for x in carrier:
                yield (i, x.numerator), d(i, neg(x)) == neg(d(n + 1 - i, x))

    def nuance_monotone() -> Iterator[tuple[tuple[int, ...], bool]]:
        for i, j in itertools.combinations(nuance_range, 2):
            for x in carrier:
                yield (i, j, x.numerator), d(i, x).numerator <= d(j, x).numerator

    def nuance_determination() -> Iterator[tuple[tuple[int, ...], bool]]:
        for x, y in itertools.combinations(carrier, 2):
            separated = any(d(k, x) != d(k, y) for k in nuance_range)
            yield (x.numerator, y.numerator), separated

    groups = (
        ("involution", involution),
        ("de_morgan", de_morgan),
        ("nuance_join", nuance_join),
        ("nuance_complement", nuance_complement),
        ("nuance_composition", nuance_composition),
        ("nuance_negation", nuance_negation),
        ("nuance_monotone", nuance_monotone),
        ("nuance_determination", nuance_determination),
    )
    checks = []
    for name, cases in groups:
        failure = None
        for witness, holds in cases():
            if not holds:
                failure = witness
                break
        checks.append(AxiomCheck(name, failure is None, failure))
    return AxiomReport(valence, tuple(checks))
