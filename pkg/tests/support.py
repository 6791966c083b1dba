"""Shared test helpers: a fixed term corpus, random term generators, and a
CLI runner."""

import random
import subprocess
import sys

from hypothesis import strategies as st

from moisil.terms import And, Const0, Const1, Delta, Jay, Neg, Or, Var

# Nuance indices kept <= 2 so every corpus term is valid at any n >= 2.
TERM_CORPUS = [
    "0",
    "1",
    "x1",
    "!x1",
    "!!x1",
    "x1 & x2",
    "x1 | x2",
    "x1 & x2 | x3",
    "D1(x1)",
    "D2(x1 | x2)",
    "J0(x1)",
    "J1(D2(x1))",
    "J2(x1) | D1(x2)",
    "x1 & !x2 | !x1 & x2",
    "!(x1 | x2) & D2(x1)",
    "D1(D2(x1)) | J0(x2)",
]


def random_term(rng: random.Random, n: int, r: int, depth: int):
    """Uniform-ish random AST of height <= depth over the full signature."""
    kind = rng.randrange(8) if depth > 0 else rng.randrange(3)
    if kind == 0:
        return Const0()
    if kind == 1:
        return Const1()
    if kind == 2:
        return Var(rng.randint(1, r))
    if kind == 3:
        return Or(random_term(rng, n, r, depth - 1), random_term(rng, n, r, depth - 1))
    if kind == 4:
        return And(random_term(rng, n, r, depth - 1), random_term(rng, n, r, depth - 1))
    if kind == 5:
        return Neg(random_term(rng, n, r, depth - 1))
    if kind == 6:
        return Delta(rng.randint(1, n), random_term(rng, n, r, depth - 1))
    return Jay(rng.randint(0, n), random_term(rng, n, r, depth - 1))


def term_strategy(n: int, r: int, max_leaves: int = 20):
    leaves = st.one_of(
        st.just(Const0()),
        st.just(Const1()),
        st.builds(Var, st.integers(1, r)),
    )

    def extend(children):
        return st.one_of(
            st.builds(Or, children, children),
            st.builds(And, children, children),
            st.builds(Neg, children),
            st.builds(Delta, st.integers(1, n), children),
            st.builds(Jay, st.integers(0, n), children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def run_cli(*args: str, cwd=None) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "moisil", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
