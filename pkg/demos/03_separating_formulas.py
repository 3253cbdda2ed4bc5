"""The classical separating formulas, finite and omega-shaped witnesses.

FIN(m) separates the m-valued logic from the (m+1)-valued one; the
formulas C-up and C-down talk about attainment of infima and suprema,
so refuting them needs interpretations whose quantifier values are
genuine limits.  Omega interpretations provide exactly that: an
explicit finite prefix plus a tail t_1, t_2, ... whose atom values
follow a constant or harmonic descriptor.
"""

from fractions import Fraction as F

from goedel_logics import (
    Harmonic, OmegaInterpretation, decide_Gm, decide_LC, entails_bruteforce,
    eval_omega, parse, print_formula, sample_finite, parse_set, unit_interval,
    v_down, v_m, v_up,
)

# --- propositional separations ---------------------------------------------

fin3 = parse("(top -> A1) | (A1 -> A2) | (A2 -> bot)")
print("FIN(3) in G3:", decide_Gm(fin3, 3).valid)
r = decide_Gm(fin3, 4)
print("FIN(3) in G4:", r.valid, "countermodel",
      {print_formula(a): str(v) for a, v in r.countermodel.items()},
      "value", r.value)

print("weak excluded middle in LC:", decide_LC(parse("~A | ~~A")).valid)
print("excluded middle in LC:", decide_LC(parse("A | ~A")).valid)

# --- C-up and C-down over omega tails ----------------------------------------

c_up = parse("exists x. (A(x) -> forall y. A(y))")
c_down = parse("exists x. ((exists y. A(y)) -> A(x))")

harmonic_down = {"A": {("*",): Harmonic(F(0), 1, 0)}}   # A(t_k) = 1/k
I = OmegaInterpretation((), v_down(), {}, harmonic_down)
I.validate()
print("C-up over the harmonic set:", eval_omega(c_up, I))   # 0: inf not attained

J = OmegaInterpretation((), unit_interval(), {}, harmonic_down)
J.validate()
print("C-up over [0,1]:", eval_omega(c_up, J))               # 0 as well

K = OmegaInterpretation((), v_up(), {}, {"A": {("*",): Harmonic(F(1), -1, 0)}})
K.validate()
print("sup A over the ascending set:", eval_omega(parse("exists y. A(y)"), K))
print("C-down over the ascending set:", eval_omega(c_down, K))  # still 1

# --- ISO_0: the isolation axiom ----------------------------------------------

iso = parse("(forall x. ~~A(x)) -> ~~(forall x. A(x))")
S = sample_finite(parse_set("{0} + [1/2,1]"), 5)
print("ISO_0 over a finite sample with 0 isolated:",
      entails_bruteforce([], iso, S, 2).holds)
print("ISO_0 under the harmonic tail over [0,1]:", eval_omega(iso, J))  # 0
