"""Representable functions and free algebras over the standard n-nuanced
Lukasiewicz-Moisil chain: exact chain arithmetic, a term language with
parser and evaluator, a decision procedure plus normal-form synthesis for
representability, and cross-checked free-algebra counts.
"""

from .algebra import (
    AxiomCheck,
    AxiomReport,
    Element,
    Subalgebra,
    Valence,
    delta,
    enumerate_subalgebras,
    format_element,
    generated_subalgebra,
    jay,
    join,
    meet,
    minimal_members,
    minimal_subalgebra,
    neg,
    verify_axioms,
)
from .free import (
    FreeAlgebraReport,
    SubalgebraRow,
    alpha_bruteforce,
    alpha_formula,
    count_representable,
    free_cardinality,
    free_report,
    report_to_json,
)
from .represent import (
    NotRepresentableError,
    RepresentabilityVerdict,
    check_representable,
    dnf_disjuncts,
    enumerate_representable_tables,
    lukasiewicz_implication_table,
    random_representable_table,
    selector_term,
    simplify,
    synthesize,
    verify_representation,
)
from .terms import (
    And,
    Assignment,
    Const0,
    Const1,
    Delta,
    Jay,
    Neg,
    Or,
    ParseError,
    Term,
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

__version__ = "0.1.0"
