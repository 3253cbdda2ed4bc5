"""Exact evaluation and the Goedel conditional.

Truth values are exact rationals; the conditional jumps discontinuously
at a = b, so everything below runs on Fractions, never floats.
"""

from fractions import Fraction as F

from goedel_logics import (
    FiniteInterpretation, evaluate, gm_values, parse, unit_interval, v_m,
)

# A propositional interpretation is a table of atom values.
I = FiniteInterpretation(("u0",), unit_interval(),
                         {"A": {(): F(3, 10)}, "B": {(): F(7, 10)}})

print("A -> B :", evaluate(parse("A -> B"), I))   # 1, since 3/10 <= 7/10
print("B -> A :", evaluate(parse("B -> A"), I))   # 3/10, the consequent
print("~A     :", evaluate(parse("~A"), I))       # 0: only value 0 negates to 1
print("~~A    :", evaluate(parse("~ ~A"), I))     # 1

# The conditional is the residuum of min: a -> b is the largest x with
# min(x, a) <= b.  Checked exhaustively over the five-valued set.
values = gm_values(5)
for a in values:
    for b in values:
        J = FiniteInterpretation(("u0",), v_m(5), {"A": {(): a}, "B": {(): b}})
        assert evaluate(parse("A -> B"), J) == max(x for x in values
                                                   if min(x, a) <= b)
print("residuation law holds on all of V_5")

# Quantifiers are attained min/max over a finite universe.
K = FiniteInterpretation(("u0", "u1", "u2"), unit_interval(),
                         {"P": {("u0",): F(1, 3), ("u1",): F(2, 3),
                                ("u2",): F(1, 2)}})
print("forall x. P(x) :", evaluate(parse("forall x. P(x)"), K))
print("exists x. P(x) :", evaluate(parse("exists x. P(x)"), K))
