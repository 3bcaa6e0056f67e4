"""A checkable inference system for left-order inequalities.

Submodules: ``words`` (formal atom words and judgments), ``facts`` (atom
tables and algebra-verified facts), ``rules`` (the rule engine), and
``derivation`` (trees plus the checker), ``scripts`` (the two shipped
derivations), ``signsearch`` (bounded non-left-orderability witnesses).
"""

from .derivation import (
    CONTRADICTION_GOAL,
    Branch,
    Derivation,
    Hypothesis,
    Node,
    Split,
    Step,
    Verdict,
    check_derivation,
)
from .facts import (
    AtomTable,
    Fact,
    Realization,
    commute_fact,
    identity_eq_fact,
    non_identity_fact,
    not_in_set_fact,
)
from .rules import RuleError, apply_rule
from .scripts import (
    epsilon_product_word,
    lemma_atom_table,
    script_lemma_gen,
    script_theorem_main,
    theorem_atom_table,
)
from .signsearch import (
    NonLOWitness,
    OracleError,
    ProductOracle,
    lattice_oracle,
    order_two_oracle,
    sign_search,
    skew_oracle,
    verify_nonlo_witness,
)
from .words import CONTRADICTION, EMPTY, Less, Word, WordEq, atom_pow, t_pow, w_inv, w_mul, w_reduce

__all__ = [
    "AtomTable", "Branch", "CONTRADICTION", "CONTRADICTION_GOAL", "Derivation",
    "EMPTY", "Fact", "Hypothesis", "Less", "Node", "NonLOWitness", "OracleError",
    "ProductOracle", "Realization", "RuleError", "Split", "Step", "Verdict",
    "Word", "WordEq", "apply_rule", "atom_pow", "check_derivation", "commute_fact",
    "epsilon_product_word", "identity_eq_fact", "lattice_oracle", "lemma_atom_table",
    "non_identity_fact", "not_in_set_fact", "order_two_oracle", "script_lemma_gen",
    "script_theorem_main", "sign_search", "skew_oracle", "t_pow", "theorem_atom_table",
    "verify_nonlo_witness", "w_inv", "w_mul", "w_reduce",
]
