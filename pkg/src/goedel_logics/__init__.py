"""Workbench for first-order Goedel logics.

Exact evaluation over arbitrary truth-value sets, symbolic
classification of those sets into axiomatizability classes, Hilbert
proof checking, propositional decision for G_m and LC, a Herbrand
semantic-tree prover for prenex formulas, and the fragment-reduction
formula transformers.
"""

from .formula import (
    App, Atom, Bot, And, Or, Imp, Forall, Exists, Formula, Neg, Term, Top,
    Var, alpha_eq, free_vars, is_crisp, is_prenex, normalize, parse,
    parse_term, print_formula, print_term, signature, substitute,
)
from .goedelset import (
    Cantor, Classification, GoedelSet, Interval, Point, SeqDown, SeqUp,
    cb_kernel, classify, embed_into_perfect, finite_elements, make_set,
    member, parse_set, print_set, sample_finite, saturate_above_kernel_inf,
    unit_interval, v_down, v_m, v_up,
)
from .semantics import (
    ConstTail, FiniteInterpretation, Harmonic, OmegaInterpretation,
    entails_bruteforce, eval_omega, evaluate, lift_w, load_interpretation,
    dump_interpretation, map_h, one_entails_bruteforce, saturate_transfer,
    value_set,
)
from .decide import decide_Gm, decide_LC, decide_LC_by_order_types, gm_values
from .proofkit import (
    Builder, CheckResult, Derivation, Step, check, format_derivation,
    match_axiom, parse_derivation, soundness_sample,
)
from .herbrand import (
    Certificate, HerbrandProblem, certificate_from_json, closes, enum_base,
    extend, herbrand_form, prove_prenex, reassemble, representative,
    verify_certificate, verify_trace,
)
from .transforms import (
    InadmissibleShiftError, ReductionOutput, forall_free_shift, prenex_crisp,
    prenex_crisp_report, relativize_dneg, to_Ag, to_Ah, to_bot_free,
)

__version__ = "0.1.0"
