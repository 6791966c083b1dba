"""Free-algebra accounting over the standard chain.

The free algebra on r generators is, concretely, the algebra of all
representable truth tables, so its cardinality can be computed two
independent ways: as a product over subalgebras A of |A| raised to the
number of generating r-tuples, and as the per-tuple product of minimal
subalgebra sizes. For odd valence the generating-tuple count also has a
closed inclusion-exclusion form depending only on |A|. This module computes
all three and cross-checks them.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

from .algebra import (
    Subalgebra,
    Valence,
    closure_members,
    enumerate_subalgebras,
    minimal_members,
)

__all__ = [
    "SubalgebraRow",
    "FreeAlgebraReport",
    "alpha_bruteforce",
    "alpha_formula",
    "count_representable",
    "free_cardinality",
    "free_report",
    "report_to_json",
]


@lru_cache(maxsize=None)
def _generation_tally(n: int, r: int) -> dict[tuple[int, ...], int]:
    # how many r-tuples generate each subalgebra, keyed by member tuple
    counts: dict[tuple[int, ...], int] = {}
    for tup in itertools.product(range(n + 1), repeat=r):
        members = closure_members(n, frozenset(tup))
        counts[members] = counts.get(members, 0) + 1
    return counts


def alpha_bruteforce(valence: Valence, r: int, subalgebra: Subalgebra) -> int:
    """Number of r-tuples over the carrier whose generated subalgebra is exactly this one."""
    if subalgebra.valence != valence:
        raise ValueError(
            f"subalgebra at n={subalgebra.valence.n}, expected n={valence.n}"
        )
    if r < 1:
        raise ValueError(f"arity must be >= 1, got {r}")
    return _generation_tally(valence.n, r).get(subalgebra.members, 0)


def alpha_formula(r: int, k: int) -> int:
    """Closed-form count of r-tuples generating a 2k-element subalgebra (odd valence).

    Exact integer inclusion-exclusion: 2^r * sum_{i<k} (-1)^i C(k-1,i) (k-i)^r.
    """
    if r < 1 or k < 1:
        raise ValueError(f"need r >= 1 and k >= 1, got r={r}, k={k}")
    return 2**r * sum((-1) ** i * comb(k - 1, i) * (k - i) ** r for i in range(k))


def count_representable(valence: Valence, r: int) -> int:
    """Independent count of representable tables: the per-tuple product of
    minimal subalgebra sizes."""
    if r < 1:
        raise ValueError(f"arity must be >= 1, got {r}")
    return prod(
        len(minimal_members(valence.n, tup))
        for tup in itertools.product(range(valence.n + 1), repeat=r)
    )


def free_cardinality(
    valence: Valence, r: int
) -> tuple[tuple[tuple[int, int], ...], int]:
    """Cardinality of the free algebra on r generators, factored and expanded.

    The factored form lists (|A|, alpha) for every subalgebra with a nonzero
    generating-tuple count, in enumeration order.
    """
    factors = tuple(
        (sub.size, a)
        for sub in enumerate_subalgebras(valence)
        if (a := alpha_bruteforce(valence, r, sub))
    )
    return factors, prod(size**a for size, a in factors)


@dataclass(frozen=True)
class SubalgebraRow:
    subalgebra: Subalgebra
    alpha: int
    alpha_closed_form: int | None  # None when the valence is even


@dataclass(frozen=True)
class FreeAlgebraReport:
    """Per-subalgebra counts plus the cross-checked cardinality.

    closed_form_matches is None at even valence, where no closed form is
    computed and only brute-force counts appear.
    """

    valence: Valence
    arity: int
    rows: tuple[SubalgebraRow, ...]
    factors: tuple[tuple[int, int], ...]
    cardinality: int
    representable_count: int
    alpha_partition_ok: bool
    product_matches_count: bool
    closed_form_matches: bool | None

    @property
    def consistent(self) -> bool:
        return (
            self.alpha_partition_ok
            and self.product_matches_count
            and self.closed_form_matches is not False
        )


def free_report(valence: Valence, r: int) -> FreeAlgebraReport:
    """Assemble all rows and run every consistency check.

    Discrepancies are reported through the flags rather than raised; they
    would indicate an implementation bug and fail the tests.
    """
    n = valence.n
    rows = []
    for sub in enumerate_subalgebras(valence):
        alpha = alpha_bruteforce(valence, r, sub)
        closed = alpha_formula(r, sub.size // 2) if n % 2 else None
        rows.append(SubalgebraRow(sub, alpha, closed))
    factors = tuple((row.subalgebra.size, row.alpha) for row in rows if row.alpha)
    cardinality = prod(size**a for size, a in factors)
    representable = count_representable(valence, r)
    return FreeAlgebraReport(
        valence=valence,
        arity=r,
        rows=tuple(rows),
        factors=factors,
        cardinality=cardinality,
        representable_count=representable,
        alpha_partition_ok=sum(row.alpha for row in rows) == (n + 1) ** r,
        product_matches_count=cardinality == representable,
        closed_form_matches=(
            None
            if n % 2 == 0
            else all(row.alpha == row.alpha_closed_form for row in rows)
        ),
    )


def report_to_json(report: FreeAlgebraReport) -> str:
    doc = {
        "n": report.valence.n,
        "arity": report.arity,
        "rows": [
            {
                "members": list(row.subalgebra.members),
                "size": row.subalgebra.size,
                "alpha": row.alpha,
                "alpha_closed_form": row.alpha_closed_form,
            }
            for row in report.rows
        ],
        "factors": [[size, a] for size, a in report.factors],
        "cardinality": report.cardinality,
        "representable_count": report.representable_count,
        "checks": {
            "alpha_partition": report.alpha_partition_ok,
            "product_matches_count": report.product_matches_count,
            "closed_form_matches": report.closed_form_matches,
        },
    }
    return json.dumps(doc, indent=2)
