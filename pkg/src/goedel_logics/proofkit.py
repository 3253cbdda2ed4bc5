"""Hilbert-style derivations and their checker for IL, H, H_n and H_0.

The checker verifies user-supplied metavariable bindings instead of
searching for a schema match: every axiom or rule step carries explicit
bindings, the checker instantiates the schema and compares with the step
formula up to alpha-equivalence.  That keeps checking linear and makes
the proof files self-documenting.

Axiom lines that list two schemas in the source system are split into
separate names (I3a/I3b, I4a/I4b, I5a/I5b); this is an artifact naming
convention only.  Systems: IL is the intuitionistic base, H = IL + QS +
LIN, H_n = H + FIN(n), H_0 = H + ISO_0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from .formula import (
    And, App, Atom, Bot, Exists, Forall, Formula, Imp, Neg, Or, Term, Top, Var,
    alpha_eq, free_vars, parse, parse_term, print_formula, print_term, substitute,
)
from .goedelset import GoedelSet
from . import semantics


class ProofError(Exception):
    pass


class BindingIncompleteError(ProofError):
    pass


class SideConditionError(ProofError):
    def __init__(self, message: str, variable: str):
        super().__init__(message)
        self.variable = variable


Bindings = Mapping[str, Union[Formula, Term, str]]


def _formula(bindings: Bindings, key: str) -> Formula:
    try:
        v = bindings[key]
    except KeyError:
        raise BindingIncompleteError(f"missing formula binding {key}") from None
    if not isinstance(v, (Atom, Bot, And, Or, Imp, Forall, Exists)):
        raise BindingIncompleteError(f"binding {key} is not a formula")
    return v


def _variable(bindings: Bindings, key: str = "x") -> str:
    try:
        v = bindings[key]
    except KeyError:
        raise BindingIncompleteError(f"missing variable binding {key}") from None
    if isinstance(v, Var):
        return v.name
    if isinstance(v, str):
        return v
    raise BindingIncompleteError(f"binding {key} is not a variable")


def _term(bindings: Bindings, key: str = "t") -> Term:
    try:
        v = bindings[key]
    except KeyError:
        raise BindingIncompleteError(f"missing term binding {key}") from None
    if isinstance(v, (Var, App)):
        return v
    raise BindingIncompleteError(f"binding {key} is not a term")


def _not_free(var: str, f: Formula, schema: str, slot: str) -> None:
    if var in free_vars(f):
        raise SideConditionError(
            f"{schema}: variable {var} must not be free in {slot}", var)


# --- axiom schema builders -------------------------------------------------

def _ax_I3a(b: Bindings) -> Formula:
    A = _formula(b, "A")
    return Imp(Or(A, A), A)


def _ax_I3b(b: Bindings) -> Formula:
    A = _formula(b, "A")
    return Imp(A, And(A, A))


def _ax_I4a(b: Bindings) -> Formula:
    return Imp(_formula(b, "A"), Or(_formula(b, "A"), _formula(b, "B")))


def _ax_I4b(b: Bindings) -> Formula:
    return Imp(And(_formula(b, "A"), _formula(b, "B")), _formula(b, "A"))


def _ax_I5a(b: Bindings) -> Formula:
    A, B = _formula(b, "A"), _formula(b, "B")
    return Imp(Or(A, B), Or(B, A))


def _ax_I5b(b: Bindings) -> Formula:
    A, B = _formula(b, "A"), _formula(b, "B")
    return Imp(And(A, B), And(B, A))


def _ax_I9(b: Bindings) -> Formula:
    return Imp(Bot(), _formula(b, "A"))


def _ax_I11(b: Bindings) -> Formula:
    A, x, t = _formula(b, "A"), _variable(b), _term(b)
    return Imp(Forall(x, A), substitute(A, x, t))


def _ax_I12(b: Bindings) -> Formula:
    A, x, t = _formula(b, "A"), _variable(b), _term(b)
    return Imp(substitute(A, x, t), Exists(x, A))


def _ax_QS(b: Bindings) -> Formula:
    A, C, x = _formula(b, "A"), _formula(b, "C"), _variable(b)
    _not_free(x, C, "QS", "C")
    return Imp(Forall(x, Or(C, A)), Or(C, Forall(x, A)))


def _ax_LIN(b: Bindings) -> Formula:
    A, B = _formula(b, "A"), _formula(b, "B")
    return Or(Imp(A, B), Imp(B, A))


def _ax_ISO0(b: Bindings) -> Formula:
    A, x = _formula(b, "A"), _variable(b)
    return Imp(Forall(x, Neg(Neg(A))), Neg(Neg(Forall(x, A))))


def _fin_builder(n: int) -> Callable[[Bindings], Formula]:
    def build(b: Bindings) -> Formula:
        parts = [Imp(Top(), _formula(b, "A1"))]
        for i in range(1, n - 1):
            parts.append(Imp(_formula(b, f"A{i}"), _formula(b, f"A{i + 1}")))
        parts.append(Imp(_formula(b, f"A{n - 1}"), Bot()))
        out: Formula = parts[0]
        for p in parts[1:]:
            out = Or(out, p)
        return out
    return build


_IL_AXIOMS = {
    "I3a": _ax_I3a, "I3b": _ax_I3b, "I4a": _ax_I4a, "I4b": _ax_I4b,
    "I5a": _ax_I5a, "I5b": _ax_I5b, "I9": _ax_I9, "I11": _ax_I11, "I12": _ax_I12,
}


# --- rule schemas ----------------------------------------------------------

def _rule_I1(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B = _formula(b, "A"), _formula(b, "B")
    return [A, Imp(A, B)], B


def _rule_I2(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B, C = _formula(b, "A"), _formula(b, "B"), _formula(b, "C")
    return [Imp(A, B), Imp(B, C)], Imp(A, C)


def _rule_I6(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B, C = _formula(b, "A"), _formula(b, "B"), _formula(b, "C")
    return [Imp(A, B)], Imp(Or(C, A), Or(C, B))


def _rule_I7(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B, C = _formula(b, "A"), _formula(b, "B"), _formula(b, "C")
    return [Imp(And(A, B), C)], Imp(A, Imp(B, C))


def _rule_I8(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B, C = _formula(b, "A"), _formula(b, "B"), _formula(b, "C")
    return [Imp(A, Imp(B, C))], Imp(And(A, B), C)


def _rule_I10(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B, x = _formula(b, "A"), _formula(b, "B"), _variable(b)
    _not_free(x, B, "I10", "B")
    return [Imp(B, A)], Imp(B, Forall(x, A))


def _rule_I13(b: Bindings) -> tuple[list[Formula], Formula]:
    A, B, x = _formula(b, "A"), _formula(b, "B"), _variable(b)
    _not_free(x, B, "I13", "B")
    return [Imp(A, B)], Imp(Exists(x, A), B)


_RULES = {
    "I1": _rule_I1, "I2": _rule_I2, "I6": _rule_I6, "I7": _rule_I7,
    "I8": _rule_I8, "I10": _rule_I10, "I13": _rule_I13,
}


# --- systems ---------------------------------------------------------------


def system_axioms(system: str) -> dict[str, Callable[[Bindings], Formula]]:
    """Axiom builders available in IL, H, H0 or H<n>."""
    axioms = dict(_IL_AXIOMS)
    if system == "IL":
        return axioms
    axioms["QS"] = _ax_QS
    axioms["LIN"] = _ax_LIN
    if system == "H":
        return axioms
    if system == "H0":
        axioms["ISO_0"] = _ax_ISO0
        return axioms
    m = re.fullmatch(r"H(\d+)", system)
    if m and int(m.group(1)) >= 2:
        axioms["FIN"] = _fin_builder(int(m.group(1)))
        return axioms
    raise ProofError(f"unknown system {system!r}")


def match_axiom(name: str, candidate: Formula, bindings: Bindings,
                system: str = "H0") -> bool:
    """True iff instantiating the named schema with the bindings yields the
    candidate up to alpha-equivalence (side conditions enforced)."""
    builders = system_axioms(system)
    if name not in builders:
        raise ProofError(f"axiom {name} not available in {system}")
    return alpha_eq(builders[name](bindings), candidate)


# --- derivations -----------------------------------------------------------


@dataclass(frozen=True)
class Step:
    formula: Formula
    kind: str                                # "premise" | "axiom" | "rule"
    name: str = ""
    cites: tuple[int, ...] = ()              # 1-based step numbers
    bindings: tuple[tuple[str, object], ...] = ()

    def binding_map(self) -> dict[str, object]:
        return dict(self.bindings)


@dataclass
class Derivation:
    system: str
    premises: tuple[Formula, ...]
    steps: tuple[Step, ...]

    @property
    def conclusion(self) -> Formula:
        return self.steps[-1].formula


@dataclass
class CheckResult:
    accepted: bool
    step: Optional[int] = None               # 1-based index of the offender
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted


def check(d: Derivation) -> CheckResult:
    """Verify every step; rejections carry the step number and a reason."""
    if not d.steps:
        return CheckResult(False, None, "empty derivation")
    try:
        axioms = system_axioms(d.system)
    except ProofError as e:
        return CheckResult(False, None, str(e))
    for idx, step in enumerate(d.steps, start=1):
        if step.kind == "premise":
            if not any(alpha_eq(step.formula, p) for p in d.premises):
                return CheckResult(False, idx, "formula is not among the premises")
            continue
        if step.kind == "axiom":
            if step.name not in axioms:
                return CheckResult(False, idx, f"axiom {step.name} not in system {d.system}")
            try:
                built = axioms[step.name](step.binding_map())
            except ProofError as e:
                return CheckResult(False, idx, str(e))
            if not alpha_eq(built, step.formula):
                return CheckResult(
                    False, idx,
                    f"not an instance of {step.name}: expected {print_formula(built)}")
            continue
        if step.kind == "rule":
            if step.name not in _RULES:
                return CheckResult(False, idx, f"unknown rule {step.name}")
            for c in step.cites:
                if not 1 <= c < idx:
                    return CheckResult(False, idx, f"citation of step {c} violates ordering")
            try:
                premises, conclusion = _RULES[step.name](step.binding_map())
            except ProofError as e:
                return CheckResult(False, idx, str(e))
            if len(step.cites) != len(premises):
                return CheckResult(
                    False, idx,
                    f"rule {step.name} needs {len(premises)} premises, got {len(step.cites)}")
            for c, want in zip(step.cites, premises):
                have = d.steps[c - 1].formula
                if not alpha_eq(have, want):
                    return CheckResult(
                        False, idx,
                        f"step {c} is {print_formula(have)}, rule wants {print_formula(want)}")
            if not alpha_eq(conclusion, step.formula):
                return CheckResult(
                    False, idx,
                    f"conclusion mismatch: rule yields {print_formula(conclusion)}")
            continue
        return CheckResult(False, idx, f"unknown step kind {step.kind!r}")
    return CheckResult(True)


def soundness_sample(d: Derivation, V: GoedelSet, max_universe: int,
                     budget: int = 10 ** 7) -> semantics.EntailmentResult:
    """Meta-test: brute-force that the premises entail the conclusion at the
    given finite scale; a violation would indicate a checker bug."""
    result = check(d)
    if not result:
        raise ProofError(f"derivation not accepted: step {result.step}: {result.reason}")
    for p in d.premises:
        if free_vars(p):
            raise ProofError("soundness sampling requires closed premises")
    return semantics.entails_bruteforce(list(d.premises), d.conclusion, V, max_universe,
                                        budget)


# --- line-oriented proof files ---------------------------------------------
#
#   <n>. <formula> ; premise
#   <n>. <formula> ; axiom <NAME> [A := <formula>, x := y, t := c()]
#   <n>. <formula> ; rule <NAME> <i>,<j> [A := <formula>, ...]
#
# '#' starts a comment; a 'system: <tag>' header line selects the system.


def _split_bindings(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return parts


def _parse_bindings(text: str) -> tuple[tuple[str, object], ...]:
    text = text.strip()
    if not text:
        return ()
    if not (text.startswith("[") and text.endswith("]")):
        raise ProofError(f"bindings must be bracketed: {text!r}")
    out = []
    for part in _split_bindings(text[1:-1]):
        key, sep, value = part.partition(":=")
        if not sep:
            raise ProofError(f"bad binding {part!r}")
        key = key.strip()
        value = value.strip()
        if key and key[0].isupper():
            out.append((key, parse(value)))
        elif key == "t":
            out.append((key, parse_term(value)))
        else:
            out.append((key, value))
    return tuple(out)


def parse_derivation(text: str, system: Optional[str] = None) -> Derivation:
    steps: list[Step] = []
    premises: list[Formula] = []
    expected = 1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"system\s*:\s*(\S+)", line)
        if m:
            if system is None:
                system = m.group(1)
            continue
        m = re.fullmatch(r"(\d+)\.\s*(.*?)\s*;\s*(.*)", line)
        if m is None:
            raise ProofError(f"cannot parse proof line: {raw!r}")
        num = int(m.group(1))
        if num != expected:
            raise ProofError(f"expected step {expected}, found {num}")
        expected += 1
        formula = parse(m.group(2))
        just = m.group(3).strip()
        if just == "premise":
            premises.append(formula)
            steps.append(Step(formula, "premise"))
            continue
        jm = re.fullmatch(r"axiom\s+(\S+)\s*(\[.*\])?", just)
        if jm:
            steps.append(Step(formula, "axiom", jm.group(1), (),
                              _parse_bindings(jm.group(2) or "")))
            continue
        jm = re.fullmatch(r"rule\s+(\S+)\s+([\d\s,]+?)\s*(\[.*\])?", just)
        if jm:
            cites = tuple(int(c) for c in jm.group(2).replace(" ", "").split(",") if c)
            steps.append(Step(formula, "rule", jm.group(1), cites,
                              _parse_bindings(jm.group(3) or "")))
            continue
        raise ProofError(f"cannot parse justification: {just!r}")
    return Derivation(system or "H", tuple(premises), tuple(steps))


def _format_binding(key: str, value: object) -> str:
    if isinstance(value, str):
        return f"{key} := {value}"
    if isinstance(value, (Var, App)):
        return f"{key} := {print_term(value)}"
    return f"{key} := {print_formula(value)}"  # type: ignore[arg-type]


def format_derivation(d: Derivation) -> str:
    lines = [f"system: {d.system}"]
    for i, step in enumerate(d.steps, start=1):
        just = step.kind
        if step.kind == "axiom":
            just = f"axiom {step.name}"
        elif step.kind == "rule":
            just = f"rule {step.name} {','.join(map(str, step.cites))}"
        if step.bindings:
            just += " [" + ", ".join(_format_binding(k, v) for k, v in step.bindings) + "]"
        lines.append(f"{i}. {print_formula(step.formula)} ; {just}")
    return "\n".join(lines) + "\n"


# --- programmatic construction helper ---------------------------------------


class Builder:
    """Accumulates steps and keeps their indices; formulas are rebuilt from
    the schema bindings so misuse fails in check(), not silently."""

    def __init__(self, system: str = "H", premises: Sequence[Formula] = ()):
        self.system = system
        self.premises = tuple(premises)
        self.steps: list[Step] = []

    def _add(self, step: Step) -> int:
        self.steps.append(step)
        return len(self.steps)

    def premise(self, f: Formula) -> int:
        return self._add(Step(f, "premise"))

    def axiom(self, name: str, **bindings: object) -> int:
        built = system_axioms(self.system)[name](bindings)  # type: ignore[arg-type]
        return self._add(Step(built, "axiom", name, (), tuple(sorted(bindings.items()))))

    def rule(self, name: str, cites: Sequence[int], **bindings: object) -> int:
        _, conclusion = _RULES[name](bindings)  # type: ignore[arg-type]
        return self._add(Step(conclusion, "rule", name, tuple(cites),
                              tuple(sorted(bindings.items()))))

    def done(self) -> Derivation:
        return Derivation(self.system, self.premises, tuple(self.steps))
