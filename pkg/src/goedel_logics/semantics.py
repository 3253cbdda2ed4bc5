"""Exact evaluation of formulas, entailment search, and value-map lifting.

Interpretations carry exact rational truth values; the conditional's case
split sits on a discontinuity, so no floating point appears anywhere.
Besides finite structures there is a restricted countable shape, the
omega interpretation: finitely many explicit prefix elements plus a tail
t_1, t_2, ... whose atom values follow constant or harmonic descriptors.
That is enough to witness non-attained infima and suprema (the C-up /
C-down / ISO_0 phenomena) while keeping evaluation a finite computation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Sequence, Union

from .formula import (
    Atom, Bot, And, Or, Imp, Forall, Exists, Formula, Term, Var,
    free_vars, print_formula, signature,
)
from .goedelset import GoedelSet, Interval, SeqDown, SeqUp, member, \
    finite_elements, parse_set, print_set

ONE = Fraction(1)
ZERO = Fraction(0)


class SemanticsError(Exception):
    pass


class UnassignedSymbolError(SemanticsError):
    pass


class BudgetExceededError(SemanticsError):
    pass


class ClosedFormulaRequiredError(SemanticsError):
    pass


class TailRestrictionError(SemanticsError):
    """An atom couples two tail elements, a non-successor function is
    applied to a tail element, or tail quantifiers are nested."""


class TailValueError(SemanticsError):
    """A tail descriptor's values cannot be certified to lie in the set."""


# ---------------------------------------------------------------------------
# Finite interpretations


@dataclass
class FiniteInterpretation:
    universe: tuple[str, ...]
    truth_set: GoedelSet
    predicates: dict[str, dict[tuple[str, ...], Fraction]]
    functions: dict[str, dict[tuple[str, ...], str]] = field(default_factory=dict)
    variables: dict[str, str] = field(default_factory=dict)

    def validate(self) -> None:
        if not self.universe:
            raise ValueError("universe must be nonempty")
        for p, table in self.predicates.items():
            arities = {len(k) for k in table}
            if len(arities) > 1:
                raise ValueError(f"mixed arities in table of {p}")
            k = arities.pop() if arities else 0
            for tup in itertools.product(self.universe, repeat=k):
                if tup not in table:
                    raise ValueError(f"table of {p} not total at {tup}")
            for v in table.values():
                if not member(self.truth_set, v):
                    raise ValueError(f"value {v} of {p} outside the truth set")
        for f, table in self.functions.items():
            for tup, out in table.items():
                if out not in self.universe:
                    raise ValueError(f"{f}{tup} maps outside the universe")


def _term_value(t: Term, I: FiniteInterpretation, env: Mapping[str, str]) -> str:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnassignedSymbolError(f"variable {t.name} unassigned") from None
    args = tuple(_term_value(a, I, env) for a in t.args)
    try:
        return I.functions[t.name][args]
    except KeyError:
        raise UnassignedSymbolError(f"function {t.name} undefined at {args}") from None


def evaluate(f: Formula, I: FiniteInterpretation,
             env: Optional[Mapping[str, str]] = None) -> Fraction:
    """Exact truth value of f under I (min/max/Goedel-conditional, with
    quantifiers as attained min/max over the finite universe)."""
    env = dict(I.variables) if env is None else dict(env)

    def ev(g: Formula, env: dict[str, str]) -> Fraction:
        if isinstance(g, Atom):
            args = tuple(_term_value(t, I, env) for t in g.args)
            try:
                return I.predicates[g.pred][args]
            except KeyError:
                raise UnassignedSymbolError(f"atom {g.pred}{args} unassigned") from None
        if isinstance(g, Bot):
            return ZERO
        if isinstance(g, And):
            return min(ev(g.left, env), ev(g.right, env))
        if isinstance(g, Or):
            return max(ev(g.left, env), ev(g.right, env))
        if isinstance(g, Imp):
            a, b = ev(g.left, env), ev(g.right, env)
            return ONE if a <= b else b
        vals = []
        for u in I.universe:
            env2 = dict(env)
            env2[g.var] = u
            vals.append(ev(g.body, env2))
        return min(vals) if isinstance(g, Forall) else max(vals)

    return ev(f, env)


def value_set(formulas: Sequence[Formula], I: FiniteInterpretation) -> set[Fraction]:
    """Val(I, Gamma): the truth values of all subformulas w.r.t. the
    universe (quantified bodies instantiated by every element), plus 0,1."""
    out = {ZERO, ONE}

    def walk(g: Formula, env: dict[str, str]) -> Fraction:
        if isinstance(g, (Atom, Bot)):
            v = evaluate(g, I, env)
        elif isinstance(g, (And, Or, Imp)):
            a, b = walk(g.left, env), walk(g.right, env)
            if isinstance(g, And):
                v = min(a, b)
            elif isinstance(g, Or):
                v = max(a, b)
            else:
                v = ONE if a <= b else b
        else:
            vals = []
            for u in I.universe:
                env2 = dict(env)
                env2[g.var] = u
                vals.append(walk(g.body, env2))
            v = min(vals) if isinstance(g, Forall) else max(vals)
        out.add(v)
        return v

    for f in formulas:
        walk(f, dict(I.variables))
    return out


# ---------------------------------------------------------------------------
# Interpretation transformers (value-map lifting)


def lift_w(I: FiniteInterpretation, w: Fraction) -> FiniteInterpretation:
    """Atoms below w keep their value, all others become 1."""
    w = Fraction(w)
    if not 0 < w <= 1:
        raise ValueError("w must lie in (0,1]")
    preds = {p: {k: (v if v < w else ONE) for k, v in t.items()}
             for p, t in I.predicates.items()}
    return FiniteInterpretation(I.universe, I.truth_set, preds,
                                dict(I.functions), dict(I.variables))


def map_h(I: FiniteInterpretation, h: Mapping[Fraction, Fraction],
          truth_set: Optional[GoedelSet] = None) -> FiniteInterpretation:
    """Induced interpretation with atom values pushed through a strictly
    monotone map fixing 0 and 1; finite infima/suprema transport for free."""
    h = {Fraction(k): Fraction(v) for k, v in h.items()}
    if h.get(ZERO) != ZERO or h.get(ONE) != ONE:
        raise ValueError("h must map 0 to 0 and 1 to 1")
    keys = sorted(h)
    for a, b in zip(keys, keys[1:]):
        if h[a] >= h[b]:
            raise ValueError(f"h not strictly monotone at {a}, {b}")
    preds = {}
    for p, table in I.predicates.items():
        new = {}
        for k, v in table.items():
            if v not in h:
                raise UnassignedSymbolError(f"h has no image for value {v}")
            new[k] = h[v]
        preds[p] = new
    return FiniteInterpretation(I.universe, truth_set or I.truth_set, preds,
                                dict(I.functions), dict(I.variables))


def saturate_transfer(I: FiniteInterpretation, V: GoedelSet,
                      formulas: Sequence[Formula]) -> FiniteInterpretation:
    """Move a countermodel over V ∪ [inf P, 1] (P the perfect kernel of V)
    back into V without changing the order pattern of its values.

    Values at or below inf P stay fixed, the sub-1 values above it are
    embedded monotonically into the kernel piece starting at inf P, and 1
    stays 1; the lift at a fresh cut just below 1 keeps the embedding
    clear of the top.  Together with value-map lifting this witnesses
    that saturating a set above its kernel infimum changes no entailment.
    """
    from .goedelset import cb_kernel, is_empty
    kernel = cb_kernel(V)
    if is_empty(kernel):
        raise ValueError("the truth set has an empty perfect kernel")
    inf_p = min(a.a for a in kernel.atoms)  # type: ignore[union-attr]
    piece = next(a for a in kernel.atoms if a.a == inf_p)  # type: ignore[union-attr]

    def all_values(K: FiniteInterpretation) -> set[Fraction]:
        table_vals = {v for t in K.predicates.values() for v in t.values()}
        return value_set(list(formulas), K) | table_vals

    vals = all_values(I)
    below_one = [v for v in vals if v < 1]
    cut = (max(below_one) + 1) / 2 if below_one else Fraction(1, 2)
    J = lift_w(I, cut)
    vals = all_values(J)

    mids = sorted(v for v in vals if inf_p <= v < 1)
    mapping: dict[Fraction, Fraction] = {v: v for v in vals if v <= inf_p}
    if mids:
        from .goedelset import embed_into_perfect
        chain = [inf_p] + [v for v in mids if v > inf_p] + [cut]
        image = embed_into_perfect(chain, piece)
        mapping.update(dict(zip(chain[:-1], image[:-1])))
    mapping[ONE] = ONE
    return map_h(J, mapping, V)


# ---------------------------------------------------------------------------
# Brute-force entailment over finite truth sets


@dataclass
class EntailmentResult:
    holds: bool
    countermodel: Optional[FiniteInterpretation] = None

    def __bool__(self) -> bool:
        return self.holds


def _count_interpretations(n_elems: int, preds: dict[str, int],
                           funcs: dict[str, int], n_values: int) -> int:
    total = 1
    for k in preds.values():
        total *= n_values ** (n_elems ** k)
    for k in funcs.values():
        total *= n_elems ** (n_elems ** k)
    return total


def iter_interpretations(preds: dict[str, int], funcs: dict[str, int],
                         values: Sequence[Fraction], size: int,
                         truth_set: GoedelSet) -> Iterator[FiniteInterpretation]:
    """All interpretations with the given universe size, in a fixed order:
    symbols sorted by name, argument tuples in product order, table values
    ascending."""
    universe = tuple(f"u{i}" for i in range(size))
    pred_names = sorted(preds)
    func_names = sorted(funcs)
    pred_keys = {p: list(itertools.product(universe, repeat=preds[p])) for p in pred_names}
    func_keys = {f: list(itertools.product(universe, repeat=funcs[f])) for f in func_names}

    pred_spaces = [itertools.product(values, repeat=len(pred_keys[p])) for p in pred_names]
    func_spaces = [itertools.product(universe, repeat=len(func_keys[f])) for f in func_names]
    for choice in itertools.product(*pred_spaces, *func_spaces):
        pred_tables = {}
        for i, p in enumerate(pred_names):
            pred_tables[p] = dict(zip(pred_keys[p], choice[i]))
        func_tables = {}
        for j, f in enumerate(func_names):
            func_tables[f] = dict(zip(func_keys[f], choice[len(pred_names) + j]))
        yield FiniteInterpretation(universe, truth_set, pred_tables, func_tables)


def _joint_signature(formulas: Sequence[Formula]) -> tuple[dict[str, int], dict[str, int]]:
    preds: dict[str, int] = {}
    funcs: dict[str, int] = {}
    for f in formulas:
        signature(f, preds, funcs)
    return preds, funcs


def entails_bruteforce(premises: Sequence[Formula], conclusion: Formula,
                       V: GoedelSet, max_universe: int,
                       budget: int = 10 ** 7,
                       one_entailment: bool = False) -> EntailmentResult:
    """Exhaustive countermodel search over universes of size 1..max_universe
    and all tables into the finite set V.

    ``holds`` means "no countermodel at this scale"; it is a bounded check,
    not a validity proof.  Entailment compares inf of the premises against
    the conclusion; 1-entailment asks that all-1 premises force a 1
    conclusion.  The first countermodel in enumeration order is returned.
    """
    formulas = list(premises) + [conclusion]
    for f in formulas:
        if free_vars(f):
            raise ClosedFormulaRequiredError(
                f"formula with free variables {sorted(free_vars(f))}: {print_formula(f)}")
    values = finite_elements(V)
    preds, funcs = _joint_signature(formulas)

    total = sum(_count_interpretations(m, preds, funcs, len(values))
                for m in range(1, max_universe + 1))
    if total > budget:
        raise BudgetExceededError(
            f"{total} interpretations exceed the budget of {budget}")

    for size in range(1, max_universe + 1):
        for I in iter_interpretations(preds, funcs, values, size, V):
            prem_vals = [evaluate(p, I) for p in premises]
            concl = evaluate(conclusion, I)
            if one_entailment:
                bad = all(v == ONE for v in prem_vals) and concl < ONE
            else:
                bad = min(prem_vals, default=ONE) > concl
            if bad:
                return EntailmentResult(False, I)
    return EntailmentResult(True)


def one_entails_bruteforce(premises: Sequence[Formula], conclusion: Formula,
                           V: GoedelSet, max_universe: int,
                           budget: int = 10 ** 7) -> EntailmentResult:
    return entails_bruteforce(premises, conclusion, V, max_universe, budget,
                              one_entailment=True)


# ---------------------------------------------------------------------------
# Tail descriptors


@dataclass(frozen=True)
class ConstTail:
    value: Fraction


@dataclass(frozen=True)
class Harmonic:
    """q + sign/(k + offset) as a function of the tail index k >= 1."""
    limit: Fraction
    sign: int  # +1 or -1
    offset: int = 0


TailDescriptor = Union[ConstTail, Harmonic]


def tail_value(d: TailDescriptor, k: int) -> Fraction:
    if isinstance(d, ConstTail):
        return d.value
    return d.limit + Fraction(d.sign, k + d.offset)


def _shift(d: TailDescriptor, delta: int) -> TailDescriptor:
    if isinstance(d, ConstTail) or delta == 0:
        return d
    return Harmonic(d.limit, d.sign, d.offset + delta)


def stable_order(d1: TailDescriptor, d2: TailDescriptor, start: int) -> tuple[int, int]:
    """(K, cmp) with cmp in {-1,0,1} constant for all k >= K >= start.

    Orders of constant/harmonic pairs stabilize at a closed-form index:
    once 1/(k+c) drops below the gap between the limits, the limit order
    wins; equal limits are ordered by sign and then by offset.
    """
    def lim(d: TailDescriptor) -> Fraction:
        return d.value if isinstance(d, ConstTail) else d.limit

    l1, l2 = lim(d1), lim(d2)
    if l1 != l2:
        delta = abs(l1 - l2)
        k = start
        for d in (d1, d2):
            if isinstance(d, Harmonic):
                # 1/(k + offset) < delta/2 from this index on
                k = max(k, math.floor(2 / delta) - d.offset + 1)
        return k, (-1 if l1 < l2 else 1)
    s1 = 0 if isinstance(d1, ConstTail) else d1.sign
    s2 = 0 if isinstance(d2, ConstTail) else d2.sign
    if s1 != s2:
        return start, (-1 if s1 < s2 else 1)
    if s1 == 0:
        return start, 0
    c1, c2 = d1.offset, d2.offset  # type: ignore[union-attr]
    if c1 == c2:
        return start, 0
    # larger offset means smaller magnitude 1/(k+c)
    if s1 > 0:
        return start, (-1 if c1 > c2 else 1)
    return start, (-1 if c1 < c2 else 1)


def tail_inf(d: TailDescriptor, start: int) -> Fraction:
    if isinstance(d, ConstTail):
        return d.value
    return d.limit if d.sign > 0 else tail_value(d, start)


def tail_sup(d: TailDescriptor, start: int) -> Fraction:
    if isinstance(d, ConstTail):
        return d.value
    return tail_value(d, start) if d.sign > 0 else d.limit


def _certify_tail(d: TailDescriptor, V: GoedelSet, probe: int = 64) -> None:
    """Every value of d for k >= 1 (and the limit) must lie in V.

    The first ``probe`` values are checked exactly; the remaining tail is
    certified symbolically by an interval atom containing it or by a
    sequence atom with the same limit and an integer scale.  Anything else
    is refused rather than approximated.
    """
    if isinstance(d, ConstTail):
        if not 0 <= d.value <= 1 or not member(V, d.value):
            raise TailValueError(f"constant tail value {d.value} not in the set")
        return
    vals = [tail_value(d, k) for k in range(1, probe + 1)]
    if any(v < 0 or v > 1 for v in vals):
        raise TailValueError("harmonic tail leaves [0,1]")
    if not member(V, d.limit):
        raise TailValueError(f"tail limit {d.limit} not in the set")
    for v in vals:
        if not member(V, v):
            raise TailValueError(f"tail value {v} not in the set")
    edge = tail_value(d, probe + 1)
    lo, hi = (d.limit, edge) if d.sign > 0 else (edge, d.limit)
    for atom in V.atoms:
        if isinstance(atom, Interval) and atom.a <= lo and hi <= atom.b:
            return
        if d.sign > 0 and isinstance(atom, SeqDown) and atom.limit == d.limit \
                and atom.scale.denominator == 1:
            return
        if d.sign < 0 and isinstance(atom, SeqUp) and atom.limit == d.limit \
                and atom.scale.denominator == 1:
            return
    raise TailValueError("cannot certify the harmonic tail inside the set")


# ---------------------------------------------------------------------------
# Omega interpretations

_STAR = "*"


@dataclass
class OmegaInterpretation:
    """Prefix elements with explicit tables plus an infinite tail t_1, t_2,
    ... whose ground atoms follow per-pattern descriptors.

    Atom patterns are keyed by predicate name and an argument tuple of
    prefix-element names with "*" marking the tail slots; all starred
    slots of one atom refer to the same tail element (atoms are monadic
    in the tail).  Function symbols either act inside the prefix through
    explicit tables or are listed in ``successors`` and act as
    t_k -> t_{k+1} on the tail.
    """
    prefix: tuple[str, ...]
    truth_set: GoedelSet
    predicates: dict[str, dict[tuple[str, ...], Fraction]] = field(default_factory=dict)
    tails: dict[str, dict[tuple[str, ...], TailDescriptor]] = field(default_factory=dict)
    functions: dict[str, dict[tuple[str, ...], str]] = field(default_factory=dict)
    successors: frozenset[str] = frozenset()

    def validate(self) -> None:
        for p, table in self.predicates.items():
            for v in table.values():
                if not member(self.truth_set, v):
                    raise ValueError(f"value {v} of {p} outside the truth set")
        for p, pats in self.tails.items():
            for pat, d in pats.items():
                if _STAR not in pat:
                    raise ValueError(f"tail pattern {p}{pat} has no tail slot")
                _certify_tail(d, self.truth_set)

    def tail_descriptor(self, pred: str, pattern: tuple[str, ...]) -> TailDescriptor:
        try:
            return self.tails[pred][pattern]
        except KeyError:
            raise UnassignedSymbolError(
                f"no tail descriptor for {pred}{pattern}") from None


# During evaluation an element is ("pre", name), ("tail", k) or, inside a
# symbolic pass, ("sym", shift) standing for t_{k+shift} with k generic.
_Elem = tuple[str, object]

# quantifiers fold tail indices below the order-stability point one by
# one; descriptors with nearly-equal limits can push that point out far
# enough that refusing loudly beats a silent crawl
_FOLD_BUDGET = 100_000


def _omega_term(t: Term, I: OmegaInterpretation, env: Mapping[str, _Elem]) -> _Elem:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnassignedSymbolError(f"variable {t.name} unassigned") from None
    args = [_omega_term(a, I, env) for a in t.args]
    if any(kind != "pre" for kind, _ in args):
        if t.name in I.successors and len(args) == 1:
            kind, payload = args[0]
            if kind == "tail":
                return ("tail", payload + 1)  # type: ignore[operator]
            return ("sym", payload + 1)  # type: ignore[operator]
        raise TailRestrictionError(
            f"function {t.name} applied to a tail element is not a successor")
    names = tuple(payload for _, payload in args)
    try:
        return ("pre", I.functions[t.name][names])
    except KeyError:
        raise UnassignedSymbolError(f"function {t.name} undefined at {names}") from None


def _atom_parts(g: Atom, I: OmegaInterpretation,
                env: Mapping[str, _Elem]) -> tuple[tuple[str, ...], Optional[object]]:
    """(pattern, tail payload): the pattern has prefix names and stars; the
    payload is the common tail index/shift, or None for pure-prefix atoms."""
    pattern = []
    payload: Optional[tuple[str, object]] = None
    for t in g.args:
        kind, val = _omega_term(t, I, env)
        if kind == "pre":
            pattern.append(val)
            continue
        pattern.append(_STAR)
        if payload is None:
            payload = (kind, val)
        elif payload != (kind, val):
            raise TailRestrictionError(
                f"atom {g.pred} couples two tail elements")
    return tuple(pattern), payload


def _eval_omega(g: Formula, I: OmegaInterpretation, env: dict[str, _Elem]) -> Fraction:
    if isinstance(g, Atom):
        pattern, payload = _atom_parts(g, I, env)
        if payload is None:
            try:
                return I.predicates[g.pred][pattern]
            except KeyError:
                raise UnassignedSymbolError(f"atom {g.pred}{pattern} unassigned") from None
        kind, val = payload
        assert kind == "tail"
        return tail_value(I.tail_descriptor(g.pred, pattern), val)  # type: ignore[arg-type]
    if isinstance(g, Bot):
        return ZERO
    if isinstance(g, And):
        return min(_eval_omega(g.left, I, env), _eval_omega(g.right, I, env))
    if isinstance(g, Or):
        return max(_eval_omega(g.left, I, env), _eval_omega(g.right, I, env))
    if isinstance(g, Imp):
        a = _eval_omega(g.left, I, env)
        b = _eval_omega(g.right, I, env)
        return ONE if a <= b else b
    # quantifier: explicit prefix, folded tail indices, then the stable tail
    d, start = _sym_omega(g.body, I, env, g.var)
    if start > _FOLD_BUDGET:
        raise BudgetExceededError(
            f"tail orders stabilize only after index {start}; refusing to "
            f"fold more than {_FOLD_BUDGET} concrete tail elements")
    vals = []
    for u in I.prefix:
        env2 = dict(env)
        env2[g.var] = ("pre", u)
        vals.append(_eval_omega(g.body, I, env2))
    for k in range(1, start):
        env2 = dict(env)
        env2[g.var] = ("tail", k)
        vals.append(_eval_omega(g.body, I, env2))
    if isinstance(g, Forall):
        vals.append(tail_inf(d, start))
        return min(vals)
    vals.append(tail_sup(d, start))
    return max(vals)


def _sym_omega(g: Formula, I: OmegaInterpretation, env: dict[str, _Elem],
               var: str) -> tuple[TailDescriptor, int]:
    """Value of g at the generic tail element t_k as a descriptor valid
    from the returned index on.  Connectives fold pointwise once the
    pairwise order of the children is stable."""
    if isinstance(g, Atom):
        env2 = dict(env)
        env2[var] = ("sym", 0)
        pattern, payload = _atom_parts(g, I, env2)
        if payload is None:
            try:
                return ConstTail(I.predicates[g.pred][pattern]), 1
            except KeyError:
                raise UnassignedSymbolError(f"atom {g.pred}{pattern} unassigned") from None
        kind, val = payload
        if kind == "tail":
            return ConstTail(tail_value(I.tail_descriptor(g.pred, pattern), val)), 1  # type: ignore[arg-type]
        return _shift(I.tail_descriptor(g.pred, pattern), val), 1  # type: ignore[arg-type]
    if isinstance(g, Bot):
        return ConstTail(ZERO), 1
    if isinstance(g, (And, Or)):
        d1, k1 = _sym_omega(g.left, I, env, var)
        d2, k2 = _sym_omega(g.right, I, env, var)
        k, cmp_ = stable_order(d1, d2, max(k1, k2))
        if isinstance(g, And):
            return (d1 if cmp_ <= 0 else d2), k
        return (d2 if cmp_ <= 0 else d1), k
    if isinstance(g, Imp):
        d1, k1 = _sym_omega(g.left, I, env, var)
        d2, k2 = _sym_omega(g.right, I, env, var)
        k, cmp_ = stable_order(d1, d2, max(k1, k2))
        return (ConstTail(ONE) if cmp_ <= 0 else d2), k
    # quantifier inside a symbolic pass
    if var not in free_vars(g):
        return ConstTail(_eval_omega(g, I, dict(env))), 1
    raise TailRestrictionError(
        "nested tail quantification: the body of a quantifier over the tail "
        "contains another generic tail variable")


def eval_omega(f: Formula, I: OmegaInterpretation) -> Fraction:
    """Exact value of a closed formula under an omega interpretation;
    quantifier values combine prefix extrema with tail limits, so infima
    and suprema need not be attained."""
    if free_vars(f):
        raise ClosedFormulaRequiredError(
            f"omega evaluation needs a closed formula: {print_formula(f)}")
    return _eval_omega(f, I, {})


# ---------------------------------------------------------------------------
# JSON interpretation files


def _table_key(key: str) -> tuple[str, ...]:
    return tuple(k for k in key.split(",") if k) if key else ()


def _descriptor_from_json(obj: Mapping) -> TailDescriptor:
    kind = obj.get("kind")
    if kind == "const":
        return ConstTail(Fraction(obj["value"]))
    if kind == "harmonic":
        sign = {"+": 1, "-": -1}[obj["sign"]]
        return Harmonic(Fraction(obj["limit"]), sign, int(obj.get("offset", 0)))
    raise ValueError(f"unknown tail descriptor kind {kind!r}")


def _descriptor_to_json(d: TailDescriptor) -> dict:
    if isinstance(d, ConstTail):
        return {"kind": "const", "value": str(d.value)}
    return {"kind": "harmonic", "limit": str(d.limit),
            "sign": "+" if d.sign > 0 else "-", "offset": d.offset}


def load_interpretation(data: Mapping) -> Union[FiniteInterpretation, OmegaInterpretation]:
    """Interpretation from its JSON form (rationals as "p/q" strings,
    tables keyed "P/1" with comma-joined argument keys)."""
    universe = tuple(data["universe"])
    truth_set = parse_set(data["truth_set"])
    preds: dict[str, dict[tuple[str, ...], Fraction]] = {}
    for key, table in data.get("predicates", {}).items():
        name = key.split("/")[0]
        preds[name] = {_table_key(k): Fraction(v) for k, v in table.items()}
    funcs: dict[str, dict[tuple[str, ...], str]] = {}
    successors = set()
    for key, table in data.get("functions", {}).items():
        name = key.split("/")[0]
        if table == "successor":
            successors.add(name)
            continue
        funcs[name] = {_table_key(k): v for k, v in table.items()}
    if "tail" not in data and not successors:
        I = FiniteInterpretation(universe, truth_set, preds, funcs,
                                 dict(data.get("variables", {})))
        I.validate()
        return I
    tails: dict[str, dict[tuple[str, ...], TailDescriptor]] = {}
    for key, spec in data.get("tail", {}).items():
        name, _, arity = key.partition("/")
        if "kind" in spec:  # shorthand: all slots are tail slots
            pattern = tuple(_STAR for _ in range(int(arity or 1)))
            tails.setdefault(name, {})[pattern] = _descriptor_from_json(spec)
        else:
            for pat_key, sub in spec.items():
                tails.setdefault(name, {})[_table_key(pat_key)] = _descriptor_from_json(sub)
    omega = OmegaInterpretation(universe, truth_set, preds, tails, funcs,
                                frozenset(successors))
    omega.validate()
    return omega


def dump_interpretation(I: Union[FiniteInterpretation, OmegaInterpretation]) -> dict:
    out: dict = {
        "universe": list(I.prefix if isinstance(I, OmegaInterpretation) else I.universe),
        "truth_set": print_set(I.truth_set),
        "predicates": {},
        "functions": {},
    }
    for p, table in I.predicates.items():
        arity = len(next(iter(table), ()))
        out["predicates"][f"{p}/{arity}"] = {",".join(k): str(v) for k, v in table.items()}
    for f, table in I.functions.items():
        arity = len(next(iter(table), ()))
        out["functions"][f"{f}/{arity}"] = {",".join(k): v for k, v in table.items()}
    if isinstance(I, OmegaInterpretation):
        for s in sorted(I.successors):
            out["functions"][f"{s}/1"] = "successor"
        tail: dict = {}
        for p, pats in I.tails.items():
            for pat, d in pats.items():
                tail.setdefault(f"{p}/{len(pat)}", {})[",".join(pat)] = _descriptor_to_json(d)
        out["tail"] = tail
    else:
        if I.variables:
            out["variables"] = dict(I.variables)
    return out
