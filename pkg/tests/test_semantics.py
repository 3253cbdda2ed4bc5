"""Evaluation laws, entailment search, value-map lifting, omega tails."""

import json
import random
from fractions import Fraction as F

import pytest

from goedel_logics.formula import parse
from goedel_logics.goedelset import (
    finite_elements, make_set, parse_set, Point, unit_interval, v_down, v_m, v_up,
)
from goedel_logics.semantics import (
    BudgetExceededError, ClosedFormulaRequiredError, ConstTail,
    FiniteInterpretation, Harmonic, OmegaInterpretation, TailRestrictionError,
    TailValueError, entails_bruteforce, eval_omega, evaluate, lift_w,
    load_interpretation, dump_interpretation, map_h, one_entails_bruteforce,
    stable_order, tail_value, value_set,
)

from helpers import random_closed_formula, random_interpretation

V3 = v_m(3)
V4 = v_m(4)
U01 = unit_interval()


def prop_interp(values: dict[str, F], V=U01) -> FiniteInterpretation:
    return FiniteInterpretation(("u0",), V, {p: {(): v} for p, v in values.items()})


def test_conditional_case_split():
    I = prop_interp({"A": F(3, 10), "B": F(7, 10)})
    assert evaluate(parse("A -> B"), I) == 1
    assert evaluate(parse("B -> A"), I) == F(3, 10)
    assert evaluate(parse("~A"), I) == 0
    assert evaluate(parse("~ ~A"), I) == 1


def test_linearity_valid_over_finite_sets():
    lin = parse("(A -> B) | (B -> A)")
    r = entails_bruteforce([], lin, V4, 1)
    assert r.holds


def test_residuation_exhaustive_v5():
    # (a -> b) equals the largest x in V with min(x, a) <= b, exactly
    values = finite_elements(v_m(5))
    for a in values:
        for b in values:
            I = prop_interp({"A": a, "B": b}, v_m(5))
            got = evaluate(parse("A -> B"), I)
            want = max(x for x in values if min(x, a) <= b)
            assert got == want


def test_quantifiers_min_max():
    I = FiniteInterpretation(("u0", "u1"), U01,
                             {"P": {("u0",): F(1, 3), ("u1",): F(2, 3)}})
    assert evaluate(parse("forall x. P(x)"), I) == F(1, 3)
    assert evaluate(parse("exists x. P(x)"), I) == F(2, 3)


def test_unassigned_symbol_error():
    from goedel_logics.semantics import UnassignedSymbolError
    I = prop_interp({"A": F(1, 2)})
    with pytest.raises(UnassignedSymbolError):
        evaluate(parse("Missing"), I)


def test_entails_modus_ponens_and_closedness():
    r = entails_bruteforce([parse("A"), parse("A -> B")], parse("B"), V3, 1)
    assert r.holds
    with pytest.raises(ClosedFormulaRequiredError):
        entails_bruteforce([parse("A(x)")], parse("A(x)"), V3, 1)


def test_entails_fin3_countermodel_over_v4():
    fin3 = parse("(top -> A1) | (A1 -> A2) | (A2 -> bot)")
    assert entails_bruteforce([], fin3, V3, 1).holds
    r = entails_bruteforce([], fin3, V4, 1)
    assert not r.holds
    assert evaluate(fin3, r.countermodel) < 1


def test_budget_error():
    with pytest.raises(BudgetExceededError):
        entails_bruteforce([], parse("P(f(g(c()))) | Q(c(),c())"),
                           V4, 3, budget=1000)


def test_one_entailment_reflexive():
    assert one_entails_bruteforce([parse("A")], parse("A"), V3, 1).holds


def test_entails_agreement_prop13_sample():
    rng = random.Random(13)
    for _ in range(200):
        n_prem = rng.randint(0, 2)
        prems = [random_closed_formula(rng, 3) for _ in range(n_prem)]
        goal = random_closed_formula(rng, 3)
        a = entails_bruteforce(prems, goal, V3, 2).holds
        b = one_entails_bruteforce(prems, goal, V3, 2).holds
        assert a == b


def test_lift_w_identity_and_all_one():
    I = prop_interp({"A": F(1, 4), "B": F(1, 2)})
    low = lift_w(I, F(9, 10))
    assert low.predicates == I.predicates
    high = lift_w(I, F(1, 8))
    assert all(v == 1 for t in high.predicates.values() for v in t.values())


def test_lift_w_case_split_random():
    # for w outside Val: value unchanged when below w, 1 otherwise
    rng = random.Random(12)
    for _ in range(300):
        f = random_closed_formula(rng, 3)
        I = random_interpretation(rng, v_m(4), rng.randint(1, 2),
                                  {"A": 0, "B": 0, "P": 1}, {"c": 0})
        vals = sorted(value_set([f], I))
        # pick w strictly between two adjacent values (not in Val)
        idx = rng.randrange(len(vals) - 1)
        w = (vals[idx] + vals[idx + 1]) / 2
        v = evaluate(f, I)
        vw = evaluate(f, lift_w(I, w))
        assert vw == (v if v < w else F(1))


def test_map_h_equality_random():
    rng = random.Random(3)
    for _ in range(300):
        f = random_closed_formula(rng, 3)
        I = random_interpretation(rng, V3, rng.randint(1, 2),
                                  {"A": 0, "B": 0, "P": 1}, {"c": 0})
        # doubling-compressing map into {0} + [1/2,1]
        h = {F(0): F(0), F(1, 2): F(3, 4), F(1): F(1)}
        target = parse_set("{0} + [1/2,1]")
        J = map_h(I, h, target)
        assert evaluate(f, J) == h[evaluate(f, I)]


def test_map_h_rejects_non_monotone():
    I = prop_interp({"A": F(1, 2)})
    with pytest.raises(ValueError):
        map_h(I, {F(0): F(0), F(1, 2): F(1, 2), F(3, 4): F(1, 2), F(1): F(1)})


def test_order_pattern_determines_value_one():
    # same relative order of atom tables => same satisfaction
    rng = random.Random(9)
    f = parse("(P(c()) -> Q(c())) | (Q(c()) -> R(c()))")
    for _ in range(200):
        vals = sorted(rng.sample(range(0, 30), 3))
        table1 = {"P": F(vals[0], 30), "Q": F(vals[1], 30), "R": F(vals[2], 30)}
        vals2 = sorted(rng.sample(range(0, 60), 3))
        table2 = {"P": F(vals2[0], 60), "Q": F(vals2[1], 60), "R": F(vals2[2], 60)}
        I1 = FiniteInterpretation(("u0",), U01,
                                  {p: {("u0",): v} for p, v in table1.items()},
                                  {"c": {(): "u0"}})
        I2 = FiniteInterpretation(("u0",), U01,
                                  {p: {("u0",): v} for p, v in table2.items()},
                                  {"c": {(): "u0"}})
        assert (evaluate(f, I1) == 1) == (evaluate(f, I2) == 1)


# --- omega interpretations ---------------------------------------------------


def harmonic_down_interp(V) -> OmegaInterpretation:
    I = OmegaInterpretation((), V, {}, {"A": {("*",): Harmonic(F(0), 1, 0)}})
    I.validate()
    return I


def test_c_up_gets_zero():
    c_up = parse("exists x. (A(x) -> forall y. A(y))")
    for V in (v_down(), U01):
        assert eval_omega(c_up, harmonic_down_interp(V)) == 0


def test_c_down_still_one_over_v_up():
    c_down = parse("exists x. ((exists y. A(y)) -> A(x))")
    I = OmegaInterpretation((), v_up(), {}, {"A": {("*",): Harmonic(F(1), -1, 0)}})
    I.validate()
    assert eval_omega(parse("exists y. A(y)"), I) == 1  # sup not attained
    assert eval_omega(c_down, I) == 1                   # not a countermodel


def test_constant_tail_sup():
    I = OmegaInterpretation(("u0",), U01, {"A": {("u0",): F(1, 4)}},
                            {"A": {("*",): ConstTail(F(1, 2))}})
    I.validate()
    assert eval_omega(parse("exists x. A(x)"), I) == F(1, 2)


def test_iso0_omega_countermodel():
    iso = parse("(forall x. ~~A(x)) -> ~~(forall x. A(x))")
    I = harmonic_down_interp(U01)
    assert eval_omega(parse("forall x. ~~A(x)"), I) == 1
    assert eval_omega(parse("~~(forall x. A(x))"), I) == 0
    assert eval_omega(iso, I) == 0


def test_tail_validation_rejects_out_of_set():
    with pytest.raises(TailValueError):
        harmonic_down_interp(parse_set("{0} + [1/2,1]"))
    with pytest.raises(TailValueError):
        I = OmegaInterpretation((), U01, {},
                                {"A": {("*",): Harmonic(F(1, 2), 1, 0)}})
        I.validate()


def test_tail_coupling_rejected():
    I = OmegaInterpretation((), U01, {},
                            {"R": {("*", "*"): ConstTail(F(1, 2))}},
                            successors=frozenset({"s"}))
    I.validate()
    # R(x, x) touches one tail element: fine; R(x, s(x)) couples two
    assert eval_omega(parse("forall x. R(x,x)"), I) == F(1, 2)
    with pytest.raises(TailRestrictionError):
        eval_omega(parse("forall x. R(x,s(x))"), I)


def test_nested_tail_quantifier_rejected():
    I = harmonic_down_interp(U01)
    with pytest.raises(TailRestrictionError):
        eval_omega(parse("exists x. forall y. (A(y) -> A(x))"), I)


def test_successor_shifts_descriptor():
    I = OmegaInterpretation((), v_up(), {}, {"A": {("*",): Harmonic(F(1), -1, 0)}},
                            successors=frozenset({"s"}))
    I.validate()
    assert eval_omega(parse("forall x. (A(x) -> A(s(x)))"), I) == 1
    assert eval_omega(parse("forall x. (A(s(x)) -> A(x))"), I) == 0


def test_admissible_shift_corpus_omega_and_finite():
    shifts = [
        "(forall x. (A(x) & B)) -> ((forall x. A(x)) & B)",
        "((forall x. A(x)) & B) -> forall x. (A(x) & B)",
        "((exists x. A(x)) & B) -> exists x. (A(x) & B)",
        "(exists x. (A(x) & B)) -> ((exists x. A(x)) & B)",
        "((forall x. A(x)) | B) -> forall x. (A(x) | B)",
        "(forall x. (A(x) | B)) -> ((forall x. A(x)) | B)",
        "((exists x. A(x)) | B) -> exists x. (A(x) | B)",
        "(exists x. (A(x) | B)) -> ((exists x. A(x)) | B)",
        "(B -> forall x. A(x)) -> forall x. (B -> A(x))",
        "(forall x. (B -> A(x))) -> (B -> forall x. A(x))",
        "(exists x. (B -> A(x))) -> (B -> exists x. A(x))",
        "(exists x. (A(x) -> B)) -> ((forall x. A(x)) -> B)",
        "((exists x. A(x)) -> B) -> forall x. (A(x) -> B)",
        "(forall x. (A(x) -> B)) -> ((exists x. A(x)) -> B)",
    ]
    omegas = []
    for d in (Harmonic(F(0), 1, 0), Harmonic(F(1), -1, 0), ConstTail(F(2, 5)),
              Harmonic(F(1, 2), 1, 1), Harmonic(F(1, 2), -1, 1)):
        for b in (F(0), F(1, 3), F(1, 2), F(1)):
            I = OmegaInterpretation(("u0",), U01,
                                    {"A": {("u0",): F(1, 4)}, "B": {(): b}},
                                    {"A": {("*",): d}})
            I.validate()
            omegas.append(I)
    rng = random.Random(42)
    finites = [random_interpretation(rng, v_m(4), size, {"A": 1, "B": 0})
               for size in (1, 2, 3) for _ in range(10)]
    for text in shifts:
        f = parse(text)
        for I in omegas:
            assert eval_omega(f, I) == 1, text
        for I in finites:
            assert evaluate(f, I) == 1, text


def test_stable_order_cases():
    a, b = Harmonic(F(0), 1, 0), Harmonic(F(0), 1, 3)
    k, cmp_ = stable_order(a, b, 1)
    assert cmp_ == 1  # smaller offset, larger values
    k, cmp_ = stable_order(Harmonic(F(1, 3), 1, 0), ConstTail(F(1, 2)), 1)
    assert cmp_ == -1
    assert all(tail_value(Harmonic(F(1, 3), 1, 0), i) < F(1, 2) for i in range(k, k + 50))
    k, cmp_ = stable_order(Harmonic(F(1, 2), -1, 0), Harmonic(F(1, 2), 1, 5), 1)
    assert cmp_ == -1
    assert stable_order(ConstTail(F(1, 2)), ConstTail(F(1, 2)), 1)[1] == 0


def test_interpretation_json_roundtrip():
    I = FiniteInterpretation(("u0", "u1"), v_m(3),
                             {"P": {("u0",): F(1, 2), ("u1",): F(1)}},
                             {"f": {("u0",): "u1", ("u1",): "u1"}})
    data = json.loads(json.dumps(dump_interpretation(I)))
    J = load_interpretation(data)
    assert isinstance(J, FiniteInterpretation)
    assert evaluate(parse("forall x. P(f(x))"), J) == 1

    W = OmegaInterpretation(("u0",), U01, {"A": {("u0",): F(1, 4)}},
                            {"A": {("*",): Harmonic(F(0), 1, 0)}},
                            successors=frozenset({"s"}))
    W.validate()
    data = json.loads(json.dumps(dump_interpretation(W)))
    J = load_interpretation(data)
    assert isinstance(J, OmegaInterpretation)
    assert eval_omega(parse("exists x. (A(x) -> forall y. A(y))"), J) == 0


def test_json_spec_shape():
    data = {
        "universe": ["u0", "u1"],
        "truth_set": "{0} + [1/2,1]",
        "predicates": {"P/1": {"u0": "1/2", "u1": "1"}},
        "functions": {"f/1": {"u0": "u1", "u1": "u1"}},
    }
    I = load_interpretation(data)
    assert evaluate(parse("exists x. P(x)"), I) == 1
    data["tail"] = {"P/1": {"kind": "harmonic", "limit": "1", "sign": "-", "offset": 1}}
    data["truth_set"] = "[0,1]"
    J = load_interpretation(data)
    assert eval_omega(parse("exists x. P(x)"), J) == 1


def test_symbolic_tail_matches_concrete_pointwise():
    # the descriptor computed for a generic tail element must agree with
    # concrete evaluation at every index beyond its stability point
    from goedel_logics.semantics import _sym_omega, _eval_omega, tail_value
    from goedel_logics.formula import Atom, Bot, And, Or, Imp, Var
    rng = random.Random(404)
    descriptors = [Harmonic(F(0), 1, 0), Harmonic(F(1), -1, 0),
                   Harmonic(F(1, 3), 1, 2), Harmonic(F(2, 3), -1, 1),
                   ConstTail(F(1, 3)), ConstTail(F(1)), ConstTail(F(0))]

    def body(depth):
        if depth == 0 or rng.random() < 0.3:
            r = rng.random()
            if r < 0.1:
                return Bot()
            if r < 0.55:
                return Atom("A", (Var("x"),))
            return Atom(rng.choice(("B", "C")))
        op = rng.choice([And, Or, Imp])
        return op(body(depth - 1), body(depth - 1))

    for _ in range(400):
        d = rng.choice(descriptors)
        I = OmegaInterpretation(
            (), U01,
            {"B": {(): F(rng.randint(0, 4), 4)}, "C": {(): F(rng.randint(0, 4), 4)}},
            {"A": {("*",): d}})
        I.validate()
        f = body(3)
        desc, start = _sym_omega(f, I, {}, "x")
        for k in range(start, start + 40):
            assert tail_value(desc, k) == _eval_omega(f, I, {"x": ("tail", k)})


def test_fold_budget_guards_extreme_crossovers():
    # nearly-equal limits push the stability index past the fold budget
    I = OmegaInterpretation((), U01,
                            {"B": {(): F(1, 10 ** 9)}},
                            {"A": {("*",): Harmonic(F(0), 1, 0)}})
    I.validate()
    with pytest.raises(BudgetExceededError):
        eval_omega(parse("forall x. (A(x) | B)"), I)
