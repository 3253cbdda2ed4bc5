"""Hand-built derivation corpus for the proof checker.

The helpers compose the usual derived moves (identity, pairing,
conjunction monotonicity, contraction, disjunction elimination) out of
the primitive axioms and rules, so the interesting derivations stay
readable.  Everything here is replayed through check().
"""

from __future__ import annotations

from goedel_logics.formula import (
    App, Atom, Bot, And, Or, Imp, Forall, Exists, Formula, Neg, Top, Var,
)
from goedel_logics.proofkit import Builder, Derivation


def lemma_identity(b: Builder, X: Formula) -> int:
    s1 = b.axiom("I4b", A=X, B=X)              # X & X -> X
    s2 = b.axiom("I3b", A=X)                   # X -> X & X
    return b.rule("I2", [s2, s1], A=X, B=And(X, X), C=X)


def lemma_proj_right(b: Builder, X: Formula, Y: Formula) -> int:
    s1 = b.axiom("I5b", A=X, B=Y)              # X & Y -> Y & X
    s2 = b.axiom("I4b", A=Y, B=X)              # Y & X -> Y
    return b.rule("I2", [s1, s2], A=And(X, Y), B=And(Y, X), C=Y)


def lemma_pairing(b: Builder, X: Formula, Y: Formula) -> int:
    """X -> (Y -> X & Y)."""
    s1 = lemma_identity(b, And(X, Y))
    return b.rule("I7", [s1], A=X, B=Y, C=And(X, Y))


def lemma_mono_and_left(b: Builder, i_uv: int, U: Formula, V: Formula,
                        W: Formula) -> int:
    """From U -> V conclude U & W -> V & W."""
    s1 = lemma_pairing(b, V, W)
    s2 = b.rule("I2", [i_uv, s1], A=U, B=V, C=Imp(W, And(V, W)))
    return b.rule("I8", [s2], A=U, B=W, C=And(V, W))


def lemma_mono_and_right(b: Builder, i_uv: int, U: Formula, V: Formula,
                         W: Formula) -> int:
    """From U -> V conclude W & U -> W & V."""
    s1 = b.axiom("I5b", A=W, B=U)
    s2 = lemma_mono_and_left(b, i_uv, U, V, W)
    s3 = b.rule("I2", [s1, s2], A=And(W, U), B=And(U, W), C=And(V, W))
    s4 = b.axiom("I5b", A=V, B=W)
    return b.rule("I2", [s3, s4], A=And(W, U), B=And(V, W), C=And(W, V))


def lemma_conj_intro(b: Builder, i_wu: int, i_wv: int, W: Formula,
                     U: Formula, V: Formula) -> int:
    """From W -> U and W -> V conclude W -> U & V."""
    s1 = lemma_pairing(b, U, V)
    s2 = b.rule("I2", [i_wu, s1], A=W, B=U, C=Imp(V, And(U, V)))
    s3 = b.rule("I8", [s2], A=W, B=V, C=And(U, V))
    s4 = b.axiom("I3b", A=W)
    s5 = lemma_mono_and_right(b, i_wv, W, V, W)
    s6 = b.rule("I2", [s4, s5], A=W, B=And(W, W), C=And(W, V))
    return b.rule("I2", [s6, s3], A=W, B=And(W, V), C=And(U, V))


def lemma_contraction(b: Builder, B_: Formula, D: Formula) -> int:
    """(B -> (B -> D)) -> (B -> D)."""
    X = Imp(B_, Imp(B_, D))
    s1 = lemma_identity(b, X)
    s2 = b.rule("I8", [s1], A=X, B=B_, C=Imp(B_, D))
    s3 = b.rule("I8", [s2], A=And(X, B_), B=B_, C=D)
    s4 = lemma_proj_right(b, X, B_)
    s5 = b.axiom("I3b", A=And(X, B_))
    s6 = lemma_mono_and_right(b, s4, And(X, B_), B_, And(X, B_))
    s7 = b.rule("I2", [s5, s6], A=And(X, B_), B=And(And(X, B_), And(X, B_)),
                C=And(And(X, B_), B_))
    s8 = b.rule("I2", [s7, s3], A=And(X, B_), B=And(And(X, B_), B_), C=D)
    return b.rule("I7", [s8], A=X, B=B_, C=D)


def lemma_or_elim(b: Builder, i_xz: int, i_yz: int, X: Formula, Y: Formula,
                  Z: Formula) -> int:
    """From X -> Z and Y -> Z conclude X | Y -> Z."""
    s1 = b.axiom("I5a", A=X, B=Y)
    s2 = b.rule("I6", [i_xz], A=X, B=Z, C=Y)
    s3 = b.rule("I2", [s1, s2], A=Or(X, Y), B=Or(Y, X), C=Or(Y, Z))
    s4 = b.axiom("I5a", A=Y, B=Z)
    s5 = b.rule("I2", [s3, s4], A=Or(X, Y), B=Or(Y, Z), C=Or(Z, Y))
    s6 = b.rule("I6", [i_yz], A=Y, B=Z, C=Z)
    s7 = b.rule("I2", [s5, s6], A=Or(X, Y), B=Or(Z, Y), C=Or(Z, Z))
    s8 = b.axiom("I3a", A=Z)
    return b.rule("I2", [s7, s8], A=Or(X, Y), B=Or(Z, Z), C=Z)


def lemma_commute_or(b: Builder, i: int, X: Formula, Y: Formula) -> int:
    s1 = b.axiom("I5a", A=X, B=Y)
    return b.rule("I1", [i, s1], A=Or(X, Y), B=Or(Y, X))


def lemma_wem(b: Builder, B_: Formula) -> int:
    """Weak excluded middle ~~B | ~B (needs LIN, so system H or above)."""
    nb = Neg(B_)
    w1 = b.axiom("LIN", A=B_, B=nb)                      # (B -> ~B) | (~B -> B)
    w2 = lemma_contraction(b, B_, Bot())                 # (B -> ~B) -> ~B
    # (~B -> B) -> ~~B
    Y = Imp(nb, B_)
    n1 = lemma_identity(b, Y)
    n2 = b.rule("I8", [n1], A=Y, B=nb, C=B_)             # Y & ~B -> B
    n3 = lemma_identity(b, nb)
    n4 = b.rule("I8", [n3], A=nb, B=B_, C=Bot())         # ~B & B -> bot
    n5 = lemma_proj_right(b, Y, nb)                      # Y & ~B -> ~B
    n6 = lemma_conj_intro(b, n5, n2, And(Y, nb), nb, B_)  # Y & ~B -> ~B & B
    n7 = b.rule("I2", [n6, n4], A=And(Y, nb), B=And(nb, B_), C=Bot())
    n8 = b.rule("I7", [n7], A=Y, B=nb, C=Bot())          # Y -> ~~B
    w4 = b.rule("I6", [n8], A=Y, B=Neg(nb), C=Imp(B_, nb))
    w5 = b.rule("I1", [w1, w4], A=Or(Imp(B_, nb), Y),
                B=Or(Imp(B_, nb), Neg(nb)))
    w6 = lemma_commute_or(b, w5, Imp(B_, nb), Neg(nb))
    w7 = b.rule("I6", [w2], A=Imp(B_, nb), B=nb, C=Neg(nb))
    return b.rule("I1", [w6, w7], A=Or(Neg(nb), Imp(B_, nb)),
                  B=Or(Neg(nb), nb))


def lemma_generalize(b: Builder, i: int, X: Formula, x: str) -> int:
    """From a theorem X conclude forall x. X (via the top detour)."""
    g1 = b.axiom("I4b", A=X, B=Top())
    g2 = b.rule("I7", [g1], A=X, B=Top(), C=X)
    g3 = b.rule("I1", [i, g2], A=X, B=Imp(Top(), X))
    g4 = b.rule("I10", [g3], A=X, B=Top(), x=x)
    g5 = b.axiom("I9", A=Bot())                          # top
    return b.rule("I1", [g5, g4], A=Top(), B=Forall(x, X))


def lemma_imp_from_neg_or(b: Builder, C_: Formula, D: Formula) -> int:
    """(~C | D) -> (C -> D)."""
    nc = Neg(C_)
    m1 = lemma_identity(b, nc)
    m2 = b.rule("I8", [m1], A=nc, B=C_, C=Bot())
    m3 = b.axiom("I9", A=D)
    m4 = b.rule("I2", [m2, m3], A=And(nc, C_), B=Bot(), C=D)
    m5 = b.rule("I7", [m4], A=nc, B=C_, C=D)
    m6 = b.axiom("I4b", A=D, B=C_)
    m7 = b.rule("I7", [m6], A=D, B=C_, C=D)
    return lemma_or_elim(b, m5, m7, nc, D, Imp(C_, D))


# ---------------------------------------------------------------------------
# The corpus itself

P_c = Atom("P", (App("c"),))
Q_c = Atom("Q", (App("c"),))
P_x = Atom("P", (Var("x"),))
Q_x = Atom("Q", (Var("x"),))


def d_modus_ponens() -> Derivation:
    b = Builder("H", [P_c, Imp(P_c, Q_c)])
    b.premise(P_c)
    b.premise(Imp(P_c, Q_c))
    b.rule("I1", [1, 2], A=P_c, B=Q_c)
    return b.done()


def d_identity() -> Derivation:
    b = Builder("H")
    lemma_identity(b, P_c)
    return b.done()


def d_top() -> Derivation:
    b = Builder("H")
    b.axiom("I9", A=Bot())
    return b.done()


def d_lin_commuted() -> Derivation:
    b = Builder("H")
    s1 = b.axiom("LIN", A=P_c, B=Q_c)
    lemma_commute_or(b, s1, Imp(P_c, Q_c), Imp(Q_c, P_c))
    return b.done()


def d_weak_excluded_middle() -> Derivation:
    b = Builder("H")
    lemma_wem(b, P_c)
    return b.done()


def d_pairing() -> Derivation:
    b = Builder("H")
    lemma_pairing(b, P_c, Q_c)
    return b.done()


def d_universal_instance() -> Derivation:
    b = Builder("H", [Forall("x", P_x)])
    s1 = b.premise(Forall("x", P_x))
    s2 = b.axiom("I11", A=P_x, x="x", t=App("c"))
    b.rule("I1", [s1, s2], A=Forall("x", P_x), B=P_c)
    return b.done()


def d_forall_mono() -> Derivation:
    b = Builder("H")
    s1 = b.axiom("I11", A=P_x, x="x", t=Var("x"))       # forall x P(x) -> P(x)
    s2 = b.axiom("I4a", A=P_x, B=Q_x)                    # P(x) -> P(x) | Q(x)
    s3 = b.rule("I2", [s1, s2], A=Forall("x", P_x), B=P_x, C=Or(P_x, Q_x))
    b.rule("I10", [s3], A=Or(P_x, Q_x), B=Forall("x", P_x), x="x")
    return b.done()


def d_exists_mono() -> Derivation:
    b = Builder("H")
    s1 = b.axiom("I4b", A=P_x, B=Q_x)                    # P(x) & Q(x) -> P(x)
    s2 = b.axiom("I12", A=P_x, x="x", t=Var("x"))        # P(x) -> exists x P(x)
    s3 = b.rule("I2", [s1, s2], A=And(P_x, Q_x), B=P_x, C=Exists("x", P_x))
    b.rule("I13", [s3], A=And(P_x, Q_x), B=Exists("x", P_x), x="x")
    return b.done()


def d_fin3_instance() -> Derivation:
    b = Builder("H3")
    b.axiom("FIN", A1=P_c, A2=Q_c)
    return b.done()


def d_qs_instance() -> Derivation:
    b = Builder("H")
    b.axiom("QS", A=P_x, C=Q_c, x="x")
    return b.done()


def d_neg_forall_shift() -> Derivation:
    """~forall x P(x) -> exists x ~P(x), in H_0."""
    b = Builder("H0")
    ex_neg = Exists("x", Neg(P_x))
    all_p = Forall("x", P_x)
    wem = lemma_wem(b, P_x)                              # ~~P(x) | ~P(x)
    l2 = b.axiom("I12", A=Neg(P_x), x="x", t=Var("x"))   # ~P(x) -> exists x ~P(x)
    l3 = b.rule("I6", [l2], A=Neg(P_x), B=ex_neg, C=Neg(Neg(P_x)))
    l4 = b.rule("I1", [wem, l3], A=Or(Neg(Neg(P_x)), Neg(P_x)),
                B=Or(Neg(Neg(P_x)), ex_neg))
    l5 = lemma_commute_or(b, l4, Neg(Neg(P_x)), ex_neg)  # exists | ~~P(x)
    l6 = lemma_generalize(b, l5, Or(ex_neg, Neg(Neg(P_x))), "x")
    l7 = b.axiom("QS", A=Neg(Neg(P_x)), C=ex_neg, x="x")
    l8 = b.rule("I1", [l6, l7], A=Forall("x", Or(ex_neg, Neg(Neg(P_x)))),
                B=Or(ex_neg, Forall("x", Neg(Neg(P_x)))))
    l9 = b.axiom("ISO_0", A=P_x, x="x")                  # forall ~~P -> ~~forall P
    l10 = b.rule("I6", [l9], A=Forall("x", Neg(Neg(P_x))),
                 B=Neg(Neg(all_p)), C=ex_neg)
    l11 = b.rule("I1", [l8, l10], A=Or(ex_neg, Forall("x", Neg(Neg(P_x)))),
                 B=Or(ex_neg, Neg(Neg(all_p))))
    l12 = lemma_commute_or(b, l11, ex_neg, Neg(Neg(all_p)))
    l13 = lemma_imp_from_neg_or(b, Neg(all_p), ex_neg)
    b.rule("I1", [l12, l13], A=Or(Neg(Neg(all_p)), ex_neg),
           B=Imp(Neg(all_p), ex_neg))
    return b.done()


def d_deduction_left() -> Derivation:
    """{P(c)} |- P(c) & P(c): one half of a deduction-theorem pair."""
    b = Builder("H", [P_c])
    s1 = b.premise(P_c)
    s2 = b.axiom("I3b", A=P_c)
    b.rule("I1", [s1, s2], A=P_c, B=And(P_c, P_c))
    return b.done()


def d_deduction_right() -> Derivation:
    """|- P(c) -> P(c) & P(c): the matching conditional form."""
    b = Builder("H")
    b.axiom("I3b", A=P_c)
    return b.done()


CORPUS: list[tuple[str, Derivation]] = [
    ("modus-ponens", d_modus_ponens()),
    ("identity", d_identity()),
    ("top", d_top()),
    ("lin-commuted", d_lin_commuted()),
    ("weak-excluded-middle", d_weak_excluded_middle()),
    ("pairing", d_pairing()),
    ("universal-instance", d_universal_instance()),
    ("forall-mono", d_forall_mono()),
    ("exists-mono", d_exists_mono()),
    ("fin3-instance", d_fin3_instance()),
    ("qs-instance", d_qs_instance()),
    ("neg-forall-shift", d_neg_forall_shift()),
    ("deduction-left", d_deduction_left()),
    ("deduction-right", d_deduction_right()),
]
