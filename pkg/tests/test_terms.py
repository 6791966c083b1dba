"""Term language: parsing, printing, J-expansion, evaluation, tabulation."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moisil.algebra import Element, Valence, delta, jay, join, meet, minimal_members, neg
from moisil.terms import (
    And,
    Assignment,
    Const0,
    Const1,
    Delta,
    Jay,
    Neg,
    Or,
    ParseError,
    TruthTable,
    Var,
    arity,
    eval_term,
    expand_jay,
    format_term,
    input_tuples,
    parse_term,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
    truth_table,
    tuple_index,
)
from support import TERM_CORPUS, term_strategy


class TestParse:
    def test_negation_binds_tightest(self):
        assert parse_term("x1 & !x2") == And(Var(1), Neg(Var(2)))

    def test_unary_applications(self):
        assert parse_term("J2(x1) | D3(x2)") == Or(Jay(2, Var(1)), Delta(3, Var(2)))

    def test_and_binds_tighter_than_or(self):
        assert parse_term("x1 & x2 | x3") == Or(And(Var(1), Var(2)), Var(3))

    def test_left_associativity(self):
        assert parse_term("x1 | x2 | x3") == Or(Or(Var(1), Var(2)), Var(3))
        assert parse_term("x1 & x2 & x3") == And(And(Var(1), Var(2)), Var(3))

    def test_parentheses_override(self):
        assert parse_term("x1 & (x2 | x3)") == And(Var(1), Or(Var(2), Var(3)))

    def test_constants_and_whitespace(self):
        assert parse_term("  0|   1 ") == Or(Const0(), Const1())

    def test_double_negation(self):
        assert parse_term("!!x1") == Neg(Neg(Var(1)))

    @pytest.mark.parametrize(
        "text",
        ["", "x1 &", "D0(x1)", "x0", "x1 $ x2", "(x1", "x1)", "D2 x1", "x", "J(x1)"],
    )
    def test_rejects_bad_syntax(self, text):
        with pytest.raises(ParseError):
            parse_term(text)

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_term("x1 @ x2")
        assert err.value.position == 3


class TestFormat:
    def test_atoms_stay_bare(self):
        assert format_term(And(Var(1), Neg(Var(2)))) == "x1 & !x2"

    def test_associative_chain_unparenthesized(self):
        assert format_term(Or(Or(Var(1), Var(2)), Var(3))) == "x1 | x2 | x3"

    def test_unary_wraps_its_argument(self):
        assert format_term(Delta(2, Or(Var(1), Var(2)))) == "D2(x1 | x2)"

    def test_or_under_and_needs_parens(self):
        assert format_term(And(Or(Var(1), Var(2)), Var(3))) == "(x1 | x2) & x3"

    def test_negated_compound(self):
        assert format_term(Neg(And(Var(1), Var(2)))) == "!(x1 & x2)"

    @given(st.data())
    def test_roundtrip_preserves_semantics(self, data):
        n = data.draw(st.integers(2, 4))
        t = data.draw(term_strategy(n, 2))
        back = parse_term(format_term(t))
        v = Valence(n)
        assert truth_table(back, 2, v) == truth_table(t, 2, v)


class TestArity:
    def test_max_variable_index(self):
        assert arity(parse_term("x1 & x7 | !x3")) == 7

    def test_closed_terms(self):
        assert arity(parse_term("D2(1) | 0")) == 0


class TestExpandJay:
    def test_top_index(self):
        assert expand_jay(Jay(4, Var(1)), Valence(4)) == Delta(1, Var(1))

    def test_bottom_index(self):
        assert expand_jay(Jay(0, Var(1)), Valence(4)) == Neg(Delta(4, Var(1)))

    def test_interior_index(self):
        assert expand_jay(Jay(2, Var(1)), Valence(4)) == And(
            Delta(3, Var(1)), Neg(Delta(2, Var(1)))
        )

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            expand_jay(Jay(5, Var(1)), Valence(4))
        with pytest.raises(ValueError):
            expand_jay(Delta(5, Var(1)), Valence(4))

    def test_result_is_jay_free(self):
        expanded = expand_jay(parse_term("J1(J2(x1)) | J0(x2)"), Valence(3))

        def has_jay(t):
            match t:
                case Jay(_, _):
                    return True
                case Or(a, b) | And(a, b):
                    return has_jay(a) or has_jay(b)
                case Neg(c) | Delta(_, c):
                    return has_jay(c)
                case _:
                    return False

        assert not has_jay(expanded)

    @given(st.data())
    def test_preserves_semantics(self, data):
        n = data.draw(st.integers(2, 5))
        r = data.draw(st.integers(1, 2))
        t = data.draw(term_strategy(n, r))
        v = Valence(n)
        assert truth_table(expand_jay(t, v), r, v) == truth_table(t, r, v)


class TestEval:
    def asg(self, n, *numerators):
        return Assignment.of_numerators(Valence(n), numerators)

    def test_nuance_threshold(self):
        t = parse_term("D2(x1)")
        assert eval_term(t, self.asg(4, 3)).numerator == 4

    def test_excluded_middle_fails_at_midpoint(self):
        t = parse_term("x1 | !x1")
        assert eval_term(t, self.asg(2, 1)).numerator == 1

    def test_kronecker_via_composition(self):
        t = parse_term("J1(x1)")
        assert eval_term(t, self.asg(2, 1)).numerator == 2

    def test_unbound_variable(self):
        with pytest.raises(ValueError, match="unbound variable x2"):
            eval_term(parse_term("x2"), self.asg(3, 1))

    def test_index_out_of_range(self):
        with pytest.raises(ValueError, match="nuance index"):
            eval_term(parse_term("D9(x1)"), self.asg(3, 1))

    @given(st.data())
    @settings(max_examples=60)
    def test_homomorphism_laws(self, data):
        # evaluation commutes with every connective, at every assignment
        n = data.draw(st.integers(2, 4))
        v = Valence(n)
        s = data.draw(term_strategy(n, 2, max_leaves=8))
        t = data.draw(term_strategy(n, 2, max_leaves=8))
        i = data.draw(st.integers(1, n))
        k = data.draw(st.integers(0, n))
        for tup in itertools.product(range(n + 1), repeat=2):
            asg = Assignment.of_numerators(v, tup)
            a, b = eval_term(s, asg), eval_term(t, asg)
            assert eval_term(Or(s, t), asg) == join(a, b)
            assert eval_term(And(s, t), asg) == meet(a, b)
            assert eval_term(Neg(s), asg) == neg(a)
            assert eval_term(Delta(i, s), asg) == delta(i, a)
            assert eval_term(Jay(k, s), asg) == jay(k, a)


class TestTruthTable:
    def test_identity(self):
        t = truth_table(parse_term("x1"), 1, Valence(2))
        assert t.outputs == (0, 1, 2)

    def test_negation_reverses(self):
        t = truth_table(parse_term("!x1"), 1, Valence(2))
        assert t.outputs == (2, 1, 0)

    def test_jay_spike(self):
        t = truth_table(parse_term("J2(x1)"), 1, Valence(3))
        assert t.outputs == (0, 0, 3, 0)

    def test_canonical_tuple_order(self):
        v = Valence(2)
        tuples = list(input_tuples(v, 2))
        assert tuples[0] == (0, 0)
        assert tuples[1] == (0, 1)  # the last variable varies fastest
        assert tuples[-1] == (2, 2)
        for k, tup in enumerate(tuples):
            assert tuple_index(v, tup) == k

    def test_padding_variables_allowed(self):
        t = truth_table(parse_term("x1"), 2, Valence(2))
        assert t.outputs == (0, 0, 0, 1, 1, 1, 2, 2, 2)

    def test_arity_too_small(self):
        with pytest.raises(ValueError, match="below the term's arity"):
            truth_table(parse_term("x2"), 1, Valence(2))

    @pytest.mark.parametrize("jobs", [0, 1, 2, 5])
    def test_parallel_degrees_agree(self, jobs):
        t = parse_term("D2(x1) & !x2 | J1(x2)")
        expected = truth_table(t, 2, Valence(4), jobs=1)
        assert truth_table(t, 2, Valence(4), jobs=jobs) == expected

    @given(st.data())
    @settings(max_examples=60)
    def test_outputs_stay_in_minimal_subalgebra(self, data):
        # closure direction of the representability theorem
        n = data.draw(st.integers(2, 4))
        r = data.draw(st.integers(1, 2))
        t = data.draw(term_strategy(n, r))
        v = Valence(n)
        table = truth_table(t, r, v)
        for tup, out in zip(input_tuples(v, r), table.outputs):
            assert out in minimal_members(n, tup)

    def test_corpus_outputs_stay_in_minimal_subalgebra(self):
        for text in TERM_CORPUS:
            t = parse_term(text)
            r = max(arity(t), 1)
            for n in (2, 3, 4):
                v = Valence(n)
                table = truth_table(t, r, v)
                for tup, out in zip(input_tuples(v, r), table.outputs):
                    assert out in minimal_members(n, tup), (text, n, tup)

    def test_validation(self):
        with pytest.raises(ValueError, match="arity must be >= 1"):
            TruthTable(Valence(2), 0, ())
        with pytest.raises(ValueError, match="expected 3 outputs"):
            TruthTable(Valence(2), 1, (0, 1))
        with pytest.raises(ValueError, match="outside the carrier"):
            TruthTable(Valence(2), 1, (0, 1, 3))


class TestTableIO:
    def table(self):
        return truth_table(parse_term("D2(x1) & !x2"), 2, Valence(3))

    def test_json_roundtrip(self):
        t = self.table()
        assert table_from_json(table_to_json(t)) == t

    def test_json_shape(self):
        text = table_to_json(truth_table(parse_term("x1"), 1, Valence(2)))
        assert text == '{"n": 2, "arity": 1, "outputs": [0, 1, 2]}'

    def test_csv_roundtrip(self):
        t = self.table()
        assert table_from_csv(table_to_csv(t)) == t

    def test_csv_shape(self):
        text = table_to_csv(truth_table(parse_term("x1"), 1, Valence(2)))
        assert text == "x1,f\n0,0\n1,1\n2,2\n"

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[1, 2]",
            '{"n": 2, "arity": 1}',
            '{"n": 2, "arity": 1, "outputs": [0, 1]}',
            '{"n": 1, "arity": 1, "outputs": [0, 1]}',
            '{"n": 2, "arity": 1, "outputs": ["0", "1", "2"]}',
        ],
    )
    def test_bad_json_rejected(self, text):
        with pytest.raises(ValueError):
            table_from_json(text)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "a,b\n0,0\n",
            "x1,f\n0,0\n1,1\n",  # not (n+1)^r rows
            "x1,f\n1,1\n0,0\n2,2\n",  # out of canonical order
            "x1,f\n0,zero\n1,1\n2,2\n",
        ],
    )
    def test_bad_csv_rejected(self, text):
        with pytest.raises(ValueError):
            table_from_csv(text)
