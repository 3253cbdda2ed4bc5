"""Decision procedures for propositional G_m and Goedel-Dummett LC.

Quantifier-free formulas are decided by exhaustive evaluation: atoms
(ground first-order atoms included) are treated as opaque propositional
letters ranging over the m truth values of V_m.  LC is decided through
the finite reduction decide_Gm(f, n+2): whether a formula evaluates to 1
depends only on the relative order of its atom values together with 0
and 1, and n atoms realize at most n+2 order positions, so validity in
G_{n+2} coincides with validity over every infinite truth-value set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .formula import (
    Atom, Bot, And, Or, Imp, Forall, Exists, Formula, atoms, print_formula,
)

ONE = Fraction(1)


class DecideError(Exception):
    pass


class QuantifierError(DecideError):
    pass


class TooManyAtomsError(DecideError):
    pass


PropValuation = dict[Atom, Fraction]


def gm_values(m: int) -> list[Fraction]:
    """The m-element truth set V_m = {1 - 1/k : 1 <= k <= m-1} + {1}."""
    if m < 2:
        raise ValueError("m must be at least 2")
    vals = {Fraction(0), Fraction(1)}
    vals.update(1 - Fraction(1, k) for k in range(1, m))
    return sorted(vals)


def eval_prop(f: Formula, valuation: PropValuation) -> Fraction:
    if isinstance(f, Atom):
        try:
            return valuation[f]
        except KeyError:
            raise DecideError(f"atom {print_formula(f)} unassigned") from None
    if isinstance(f, Bot):
        return Fraction(0)
    if isinstance(f, And):
        return min(eval_prop(f.left, valuation), eval_prop(f.right, valuation))
    if isinstance(f, Or):
        return max(eval_prop(f.left, valuation), eval_prop(f.right, valuation))
    if isinstance(f, Imp):
        a = eval_prop(f.left, valuation)
        b = eval_prop(f.right, valuation)
        return ONE if a <= b else b
    raise QuantifierError(f"formula is not quantifier-free: {print_formula(f)}")


@dataclass
class DecideResult:
    valid: bool
    logic: str
    countermodel: Optional[PropValuation] = None
    value: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.valid


def _letters(f: Formula) -> list[Atom]:
    """Atoms sorted by their printed form; the enumeration and therefore
    the first countermodel are lexicographic in this order."""
    return sorted(atoms(f), key=print_formula)


def decide_Gm(f: Formula, m: int, budget: int = 10 ** 7) -> DecideResult:
    """Exhaustively decide validity over V_m; returns the first
    countermodel in lexicographic order when there is one."""
    letters = _letters(f)
    values = gm_values(m)
    if len(values) ** len(letters) > budget:
        raise TooManyAtomsError(
            f"{len(values)}^{len(letters)} valuations exceed the budget of {budget}")
    for choice in itertools.product(values, repeat=len(letters)):
        valuation = dict(zip(letters, choice))
        v = eval_prop(f, valuation)
        if v < ONE:
            return DecideResult(False, f"G{m}", valuation, v)
    return DecideResult(True, f"G{m}")


def decide_LC(f: Formula, budget: int = 10 ** 7) -> DecideResult:
    """Decide Goedel-Dummett LC via the G_{n+2} reduction."""
    n = len(atoms(f))
    result = decide_Gm(f, n + 2, budget)
    return DecideResult(result.valid, "LC", result.countermodel, result.value)


# ---------------------------------------------------------------------------
# Independent order-type oracle (used to validate the n+2 reduction)


def _ordered_partitions(items: Sequence[Atom]):
    """All ordered set partitions (weak orders) of the atoms."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _ordered_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
            yield part[:i] + [[first]] + part[i:]
        yield part + [[first]]


def order_type_valuations(letters: Sequence[Atom]):
    """One representative valuation per order type of the atom values.

    An order type is a weak order of the atoms plus flags telling whether
    the least block sits at 0 and the greatest at 1; representatives use
    evenly spaced interior values, which is harmless because evaluation
    only depends on the relative order.
    """
    for part in _ordered_partitions(list(letters)):
        k = len(part)
        if k == 0:
            yield {}
            continue
        for low_at_zero in (False, True):
            for high_at_one in (False, True):
                if k == 1 and low_at_zero and high_at_one:
                    continue  # a block cannot be both 0 and 1
                vals: list[Fraction] = []
                interior = k - int(low_at_zero) - int(high_at_one)
                step = Fraction(1, interior + 1)
                pos = step
                for i in range(k):
                    if i == 0 and low_at_zero:
                        vals.append(Fraction(0))
                    elif i == k - 1 and high_at_one:
                        vals.append(Fraction(1))
                    else:
                        vals.append(pos)
                        pos += step
                valuation = {}
                for block, v in zip(part, vals):
                    for atom in block:
                        valuation[atom] = v
                yield valuation


def decide_LC_by_order_types(f: Formula) -> DecideResult:
    """Oracle: enumerate all order types of atom values directly."""
    letters = _letters(f)
    for valuation in order_type_valuations(letters):
        v = eval_prop(f, valuation)
        if v < ONE:
            return DecideResult(False, "LC", valuation, v)
    return DecideResult(True, "LC")
