"""The semantic-tree prover for prenex formulas, end to end.

The tree explores weak linear orders of growing Herbrand-base prefixes;
a branch closes when one ground matrix instance is forced to 1 by the
order alone.  Closed trees yield certificates that are re-checked
propositionally and reassembled into rule traces.
"""

from goedel_logics import (
    herbrand_form, parse, print_formula, prove_prenex, reassemble,
    verify_certificate, verify_trace,
)

# Herbrand form: universal variables become fresh function symbols
# applied to the preceding existential variables.
p = herbrand_form(parse("exists x. forall y. (A(y) -> A(x))"))
print("Herbrand form:", print_formula(p.herbrand_form))
print("base prefix:  ", [print_formula(a) for a in p.base(4)])

# The chain formula is valid in every finite-valued logic but not over
# [0,1]; the two modes reflect that.
c_down = parse("exists x. forall y. (A(y) -> A(x))")
res = prove_prenex(c_down, "finite:3", max_level=8)
print("finite(3):", res.status, "at level", res.level_reached)
for d in res.certificate.disjuncts:
    print("   disjunct:", print_formula(d))
print("independent check:", verify_certificate(res.certificate))

res_u = prove_prenex(c_down, "uncountable", max_level=6)
print("uncountable:", res_u.status, "at level", res_u.level_reached)

# Reassembly: a machine-checkable trace from the Herbrand disjunction
# back to the prenex formula, including the eigenvariable bookkeeping.
trace = reassemble(res.certificate)
print("trace verified:", verify_trace(trace, res.certificate))
print(trace.describe())
