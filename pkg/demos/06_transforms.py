"""Formula reductions between fragments.

The leveled constructions build, for any sentence, a formula whose
validity over the target set class encodes classical finite validity;
the workbench constructs and sanity-checks them but does not try to
decide anything.  Also shown: the bot-free rewriting, the forall-free
conditional shift, and value-preserving prenexification.
"""

from goedel_logics import (
    InadmissibleShiftError, forall_free_shift, parse, prenex_crisp_report,
    print_formula, to_Ag, to_Ah, to_bot_free,
)

out = to_Ag(parse("forall v. Q1(v)"))
print("fresh symbols:", out.fresh_predicates, out.fresh_functions)
print("A^g:", print_formula(out.formula)[:120], "...")
print()

out_h = to_Ah(parse("forall v. Q1(v)"))
print("A^h fresh symbols:", out_h.fresh_predicates, out_h.fresh_functions)
print()

print("bot-free of ~P(c()):", print_formula(to_bot_free(parse("~P(c())"))))
print("forall-free shift:  ",
      print_formula(forall_free_shift(parse("(forall x. A(x)) -> B"))))
print()

# Prenexification uses only shifts that preserve the exact value in
# every Goedel logic; anything needing S_2 or S_3 on non-crisp parts is
# rejected with the blocking subformula.
f, used = prenex_crisp_report(parse("exists x. (A(x) -> forall y. A(y))"))
print("prenex:", print_formula(f), "via", used)
f, used = prenex_crisp_report(parse("~~P(c()) -> exists y. ~~Q(y)"))
print("crisp prenex:", print_formula(f), "via", used)
try:
    prenex_crisp_report(parse("(forall x. P(x)) -> Q"))
except InadmissibleShiftError as e:
    print("rejected:", e)
