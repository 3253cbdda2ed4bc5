"""First-order formula ASTs, concrete syntax, substitution and syntactic tests.

The language has connectives ``&``, ``|``, ``->``, the constant ``bot``,
and the quantifiers ``forall``/``exists``.  Negation and verum are sugar:
``~A`` is ``A -> bot`` and ``top`` is ``bot -> bot``; neither has its own
node kind.  Predicates start with an uppercase letter, functions and
constants are lowercase and always written with parentheses (``c()``),
variables are bare lowercase identifiers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Union


class FormulaError(Exception):
    """Base class for syntax-level errors."""


class ParseError(FormulaError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ArityConflictError(FormulaError):
    """A symbol is used with two different arities."""


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    name: str
    args: tuple["Term", ...] = ()


Term = Union[Var, App]


def const(name: str) -> App:
    """A constant is a 0-ary application."""
    return App(name, ())


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    out: frozenset[str] = frozenset()
    for a in t.args:
        out |= term_vars(a)
    return out


def subst_term(t: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    return App(t.name, tuple(subst_term(a, mapping) for a in t.args))


def term_size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + sum(term_size(a) for a in t.args)


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    return f"{t.name}({','.join(print_term(a) for a in t.args)})"


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Atom, Bot, And, Or, Imp, Forall, Exists]

BOT = Bot()


def Neg(f: Formula) -> Imp:
    return Imp(f, BOT)


def Top() -> Imp:
    return Imp(BOT, BOT)


def is_top(f: Formula) -> bool:
    return isinstance(f, Imp) and isinstance(f.left, Bot) and isinstance(f.right, Bot)


def is_neg(f: Formula) -> bool:
    return isinstance(f, Imp) and isinstance(f.right, Bot)


# ---------------------------------------------------------------------------
# Syntactic queries


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        out: frozenset[str] = frozenset()
        for t in f.args:
            out |= term_vars(t)
        return out
    if isinstance(f, Bot):
        return frozenset()
    if isinstance(f, (And, Or, Imp)):
        return free_vars(f.left) | free_vars(f.right)
    return free_vars(f.body) - {f.var}


def is_closed(f: Formula) -> bool:
    return not free_vars(f)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Syntactic subformulas (quantified bodies are not instantiated)."""
    yield f
    if isinstance(f, (And, Or, Imp)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, (Forall, Exists)):
        yield from subformulas(f.body)


def atoms(f: Formula) -> list[Atom]:
    """Distinct atoms of f in first-occurrence order."""
    seen: dict[Atom, None] = {}
    for g in subformulas(f):
        if isinstance(g, Atom) and g not in seen:
            seen[g] = None
    return list(seen)


def signature(f: Formula, preds: Optional[dict[str, int]] = None,
              funcs: Optional[dict[str, int]] = None) -> tuple[dict[str, int], dict[str, int]]:
    """Predicate and function symbols with arities; rejects arity conflicts."""
    preds = {} if preds is None else preds
    funcs = {} if funcs is None else funcs

    def note(table: dict[str, int], name: str, arity: int, kind: str) -> None:
        old = table.setdefault(name, arity)
        if old != arity:
            raise ArityConflictError(
                f"{kind} symbol {name} used with arities {old} and {arity}")

    def walk_term(t: Term) -> None:
        if isinstance(t, App):
            note(funcs, t.name, len(t.args), "function")
            for a in t.args:
                walk_term(a)

    for g in subformulas(f):
        if isinstance(g, Atom):
            note(preds, g.pred, len(g.args), "predicate")
            for t in g.args:
                walk_term(t)
    return preds, funcs


def is_crisp(f: Formula) -> bool:
    """True iff every atom occurrence sits directly under ~ or ~~."""
    if isinstance(f, Atom):
        return False
    if isinstance(f, Bot):
        return True
    if isinstance(f, Imp):
        if isinstance(f.right, Bot) and isinstance(f.left, Atom):
            return True  # ~P(..)
        return is_crisp(f.left) and is_crisp(f.right)
    if isinstance(f, (And, Or)):
        return is_crisp(f.left) and is_crisp(f.right)
    return is_crisp(f.body)


def is_prenex(f: Formula) -> bool:
    while isinstance(f, (Forall, Exists)):
        f = f.body
    return not any(isinstance(g, (Forall, Exists)) for g in subformulas(f))


def prefix_and_matrix(f: Formula) -> tuple[list[tuple[str, str]], Formula]:
    """Quantifier prefix as (kind, var) pairs plus the matrix."""
    prefix: list[tuple[str, str]] = []
    while isinstance(f, (Forall, Exists)):
        prefix.append(("forall" if isinstance(f, Forall) else "exists", f.var))
        f = f.body
    return prefix, f


# ---------------------------------------------------------------------------
# Substitution and alpha-equivalence


def fresh_name(base: str, avoid: frozenset[str]) -> str:
    if base not in avoid:
        return base
    i = 1
    while f"{base}_{i}" in avoid:
        i += 1
    return f"{base}_{i}"


def substitute(f: Formula, var: str, t: Term) -> Formula:
    """Capture-avoiding substitution of t for the free occurrences of var."""
    tv = term_vars(t)

    def go(g: Formula) -> Formula:
        if isinstance(g, Atom):
            return Atom(g.pred, tuple(subst_term(a, {var: t}) for a in g.args))
        if isinstance(g, Bot):
            return g
        if isinstance(g, (And, Or, Imp)):
            return type(g)(go(g.left), go(g.right))
        if g.var == var:
            return g
        if g.var in tv and var in free_vars(g.body):
            new = fresh_name(g.var, tv | free_vars(g.body) | {var})
            body = substitute(g.body, g.var, Var(new))
            return type(g)(new, substitute(body, var, t))
        return type(g)(g.var, go(g.body))

    return go(f)


def alpha_eq(f: Formula, g: Formula) -> bool:
    """Structural equality up to renaming of bound variables."""

    def terms_eq(s: Term, t: Term, env1: dict[str, int], env2: dict[str, int]) -> bool:
        if isinstance(s, Var) and isinstance(t, Var):
            return env1.get(s.name, s.name) == env2.get(t.name, t.name)
        if isinstance(s, App) and isinstance(t, App):
            return (s.name == t.name and len(s.args) == len(t.args)
                    and all(terms_eq(a, b, env1, env2) for a, b in zip(s.args, t.args)))
        return False

    def go(a: Formula, b: Formula, env1: dict[str, int], env2: dict[str, int], depth: int) -> bool:
        if type(a) is not type(b):
            return False
        if isinstance(a, Atom):
            return (a.pred == b.pred and len(a.args) == len(b.args)
                    and all(terms_eq(s, t, env1, env2) for s, t in zip(a.args, b.args)))
        if isinstance(a, Bot):
            return True
        if isinstance(a, (And, Or, Imp)):
            return (go(a.left, b.left, env1, env2, depth)
                    and go(a.right, b.right, env1, env2, depth))
        e1 = dict(env1)
        e2 = dict(env2)
        e1[a.var] = depth
        e2[b.var] = depth
        return go(a.body, b.body, e1, e2, depth + 1)

    return go(f, g, {}, {}, 0)


def normalize(f: Formula) -> Formula:
    """Rename bound variables to a canonical x1, x2, ... numbering.

    Binders are numbered in pre-order, skipping names that occur free, so
    normalized formulas have pairwise distinct bound names (no shadowing)
    and alpha-equivalent formulas normalize to structurally equal ASTs.
    """
    avoid = free_vars(f)
    counter = [0]

    def next_name() -> str:
        while True:
            counter[0] += 1
            name = f"x{counter[0]}"
            if name not in avoid:
                return name

    def go(g: Formula, env: dict[str, Term]) -> Formula:
        if isinstance(g, Atom):
            return Atom(g.pred, tuple(subst_term(t, env) for t in g.args))
        if isinstance(g, Bot):
            return g
        if isinstance(g, (And, Or, Imp)):
            return type(g)(go(g.left, env), go(g.right, env))
        new = next_name()
        env2 = dict(env)
        env2[g.var] = Var(new)
        return type(g)(new, go(g.body, env2))

    return go(f, {})


# ---------------------------------------------------------------------------
# Parser

_TOKEN_RE = re.compile(r"->|[()~&|.,]|[A-Za-z_][A-Za-z0-9_]*|\S")

_KEYWORDS = {"forall", "exists", "bot", "top"}


@dataclass(frozen=True)
class _Tok:
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(line, pos)
            if m is None or (len(m.group()) == 1 and not m.group().isprintable()):
                raise ParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
            toks.append(_Tok(m.group(), lineno, m.start() + 1))
            pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.preds: dict[str, int] = {}
        self.funcs: dict[str, int] = {}

    def peek(self) -> Optional[str]:
        return self.toks[self.pos].text if self.pos < len(self.toks) else None

    def next(self) -> _Tok:
        if self.pos >= len(self.toks):
            last = self.toks[-1] if self.toks else _Tok("", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.col + len(last.text))
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def error(self, msg: str) -> ParseError:
        tok = self.toks[self.pos] if self.pos < len(self.toks) else (
            self.toks[-1] if self.toks else _Tok("", 1, 1))
        return ParseError(msg, tok.line, tok.col)

    def note_arity(self, table: dict[str, int], name: str, arity: int, tok: _Tok) -> None:
        old = table.setdefault(name, arity)
        if old != arity:
            raise ArityConflictError(
                f"{tok.line}:{tok.col}: symbol {name} used with arities {old} and {arity}")

    # formula := quant | imp ; imp := or ("->" formula)?
    def formula(self) -> Formula:
        if self.peek() in ("forall", "exists"):
            return self.quant()
        left = self.disjunction()
        if self.peek() == "->":
            self.next()
            return Imp(left, self.formula())
        return left

    def quant(self) -> Formula:
        kw = self.next().text
        tok = self.next()
        if not re.fullmatch(r"[a-z_][A-Za-z0-9_]*", tok.text) or tok.text in _KEYWORDS:
            raise ParseError(f"expected variable after {kw}, found {tok.text!r}",
                             tok.line, tok.col)
        self.expect(".")
        body = self.formula()
        return Forall(tok.text, body) if kw == "forall" else Exists(tok.text, body)

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.next()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "~":
            self.next()
            return Neg(self.unary())
        if tok == "bot":
            self.next()
            return BOT
        if tok == "top":
            self.next()
            return Top()
        if tok == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if tok is not None and tok[0].isupper():
            return self.atom()
        raise self.error(f"expected a formula, found {tok!r}")

    def atom(self) -> Atom:
        tok = self.next()
        args: tuple[Term, ...] = ()
        if self.peek() == "(":
            self.next()
            args = self.termlist()
            self.expect(")")
        self.note_arity(self.preds, tok.text, len(args), tok)
        return Atom(tok.text, args)

    def termlist(self) -> tuple[Term, ...]:
        if self.peek() == ")":
            return ()
        out = [self.term()]
        while self.peek() == ",":
            self.next()
            out.append(self.term())
        return tuple(out)

    def term(self) -> Term:
        tok = self.next()
        if not re.fullmatch(r"[a-z_][A-Za-z0-9_]*", tok.text) or tok.text in _KEYWORDS:
            raise ParseError(f"expected a term, found {tok.text!r}", tok.line, tok.col)
        if self.peek() == "(":
            self.next()
            args = self.termlist()
            self.expect(")")
            self.note_arity(self.funcs, tok.text, len(args), tok)
            return App(tok.text, args)
        return Var(tok.text)


def parse(text: str) -> Formula:
    """Parse concrete syntax into a raw AST (bound names kept as written)."""
    p = _Parser(text)
    f = p.formula()
    if p.pos != len(p.toks):
        raise p.error(f"trailing input {p.peek()!r}")
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.pos != len(p.toks):
        raise p.error(f"trailing input {p.peek()!r}")
    return t


# ---------------------------------------------------------------------------
# Printer

_LEVEL_FORMULA = 0  # quantifiers and -> live here
_LEVEL_OR = 1
_LEVEL_AND = 2
_LEVEL_UNARY = 3


def _print(f: Formula, level: int) -> str:
    if is_top(f):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(print_term(t) for t in f.args)})"
    if is_neg(f):
        return "~" + _print(f.left, _LEVEL_UNARY)
    if isinstance(f, Imp):
        # right-associative, so the right side stays at formula level
        s = f"{_print(f.left, _LEVEL_OR)} -> {_print(f.right, _LEVEL_FORMULA)}"
        return f"({s})" if level > _LEVEL_FORMULA else s
    if isinstance(f, Or):
        s = f"{_print(f.left, _LEVEL_OR)} | {_print(f.right, _LEVEL_AND)}"
        return f"({s})" if level > _LEVEL_OR else s
    if isinstance(f, And):
        s = f"{_print(f.left, _LEVEL_AND)} & {_print(f.right, _LEVEL_UNARY)}"
        return f"({s})" if level > _LEVEL_AND else s
    kw = "forall" if isinstance(f, Forall) else "exists"
    s = f"{kw} {f.var}. {_print(f.body, _LEVEL_FORMULA)}"
    return f"({s})" if level > _LEVEL_FORMULA else s


def print_formula(f: Formula) -> str:
    """Grammar-conformant text with minimal parentheses.

    Bound variables are first renamed to the canonical numbering, so
    ``parse(print_formula(f))`` equals ``normalize(f)``.
    """
    return _print(normalize(f), _LEVEL_FORMULA)


def print_raw(f: Formula) -> str:
    """Like print_formula but keeps the bound-variable names as given."""
    return _print(f, _LEVEL_FORMULA)
