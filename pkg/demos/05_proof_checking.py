"""Hilbert-style derivations: building, checking, soundness sampling.

The checker verifies explicit metavariable bindings rather than
searching for schema matches, so every step documents itself.  The
Builder below assembles steps programmatically; the same derivations
serialize to the line-oriented proof format the CLI reads.
"""

from goedel_logics import (
    Builder, check, format_derivation, parse, print_formula, soundness_sample,
    v_m,
)
from goedel_logics.formula import App, Atom, Imp

P_c = Atom("P", (App("c"),))
Q_c = Atom("Q", (App("c"),))

# Modus ponens from two premises.
b = Builder("H", [P_c, Imp(P_c, Q_c)])
b.premise(P_c)
b.premise(Imp(P_c, Q_c))
b.rule("I1", [1, 2], A=P_c, B=Q_c)
d = b.done()
print(format_derivation(d))
print("accepted:", bool(check(d)))

# Brute-force soundness at desk scale: the premises entail the
# conclusion over every interpretation into V_3 with at most 2 elements.
print("soundness over V_3:", soundness_sample(d, v_m(3), 2).holds)

# A rejected derivation names the offending step and reason.
bad = Builder("H", [P_c])
bad.premise(P_c)
bad.rule("I1", [1, 1], A=P_c, B=Q_c)
r = check(bad.done())
print("rejected:", r.step, "-", r.reason)

# The larger corpus (weak excluded middle, the isolation-axiom
# derivation of the double-negation shift, a deduction-theorem pair)
# lives in tests/corpus.py and replays through the same checker.
