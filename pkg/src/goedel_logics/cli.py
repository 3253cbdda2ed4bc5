"""Command-line front end.

Exit codes: 0 valid/accepted/holds, 1 invalid/rejected/countermodel,
2 unknown (budget or level bound reached), 3 usage or input error.
``--json`` switches the report to a versioned machine-readable form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from . import decide, herbrand, proofkit, semantics, transforms
from .formula import (
    ArityConflictError, FormulaError, parse, parse_term, print_formula,
)
from .goedelset import (
    Cantor, EmptyKernelError, GoedelSet, Interval, SetSyntaxError, classify,
    embed_into_perfect, parse_set, print_set, saturate_above_kernel_inf,
)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3

SCHEMA = "goedel-workbench/1"


class _Failure(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload.setdefault("schema", SCHEMA)
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _default_budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("GOEDEL_BUDGET")
    return int(env) if env else 10 ** 7


def _read_formula(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source) as fh:
            return fh.read()
    return source


def _fmt_valuation(valuation) -> str:
    items = sorted((print_formula(a), str(v)) for a, v in valuation.items())
    return "{" + ", ".join(f"{a}={v}" for a, v in items) + "}"


# --- subcommands -----------------------------------------------------------


def _cmd_parse(args) -> int:
    f = parse(_read_formula(args.formula))
    _emit(args, {"formula": print_formula(f)}, print_formula(f))
    return EXIT_OK


def _cmd_eval(args) -> int:
    f = parse(_read_formula(args.formula))
    with open(args.interpretation) as fh:
        I = semantics.load_interpretation(json.load(fh))
    if isinstance(I, semantics.OmegaInterpretation):
        v = semantics.eval_omega(f, I)
    else:
        v = semantics.evaluate(f, I)
    _emit(args, {"value": str(v)}, f"value: {v}")
    return EXIT_OK


def _cmd_entail(args) -> int:
    V = parse_set(args.truth_set)
    premises = [parse(p) for p in args.premise]
    goal = parse(_read_formula(args.formula))
    fn = semantics.one_entails_bruteforce if args.one else semantics.entails_bruteforce
    result = fn(premises, goal, V, args.max_universe, _default_budget(args))
    if result.holds:
        _emit(args, {"result": "holds"}, "holds (no countermodel at this scale)")
        return EXIT_OK
    payload = semantics.dump_interpretation(result.countermodel)
    _emit(args, {"result": "countermodel", "interpretation": payload},
          "countermodel:\n" + json.dumps(payload, indent=2))
    return EXIT_REJECTED


def _cmd_classify(args) -> int:
    V = parse_set(args.set)
    c = classify(V)
    payload = {
        "set": print_set(V),
        "cardinality": c.cardinality,
        "size": c.size,
        "zero_isolated": c.zero_isolated,
        "zero_in_kernel": c.zero_in_kernel,
        "verdict": c.verdict,
        "n": c.n,
    }
    _emit(args, payload, c.describe())
    return EXIT_OK


def _cmd_decide(args) -> int:
    f = parse(_read_formula(args.formula))
    logic = args.logic.upper()
    if logic == "LC":
        result = decide.decide_LC(f, _default_budget(args))
    elif logic.startswith("G"):
        result = decide.decide_Gm(f, int(logic[1:]), _default_budget(args))
    else:
        raise _Failure(f"unknown logic {args.logic!r}")
    if result.valid:
        _emit(args, {"result": "valid", "logic": result.logic}, "valid")
        return EXIT_OK
    cm = {print_formula(a): str(v) for a, v in result.countermodel.items()}
    _emit(args, {"result": "countermodel", "logic": result.logic,
                 "countermodel": cm, "value": str(result.value)},
          f"countermodel: {_fmt_valuation(result.countermodel)} (value {result.value})")
    return EXIT_REJECTED


def _cmd_prove(args) -> int:
    if args.verify:
        with open(args.verify) as fh:
            cert = herbrand.certificate_from_json(fh.read())
        ok = herbrand.verify_certificate(cert, _default_budget(args))
        _emit(args, {"result": "verified" if ok else "rejected"},
              "certificate verified" if ok else "certificate rejected")
        return EXIT_OK if ok else EXIT_REJECTED
    if not args.formula:
        raise _Failure("prove needs a formula (or --verify <certificate>)")
    f = parse(_read_formula(args.formula))
    result = herbrand.prove_prenex(f, args.mode, args.max_level)
    if result.status == "valid":
        cert = result.certificate
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(cert.dumps())
        text = "valid\n" + "\n".join(
            f"  disjunct: {print_formula(d)}" for d in cert.disjuncts)
        _emit(args, cert.to_json(), text)
        return EXIT_OK
    _emit(args, {"result": "unknown", "level_reached": result.level_reached},
          f"unknown (open branches at level {result.level_reached})")
    return EXIT_UNKNOWN


def _cmd_check_proof(args) -> int:
    with open(args.prooffile) as fh:
        text = fh.read()
    d = proofkit.parse_derivation(text, args.system)
    result = proofkit.check(d)
    if result.accepted:
        _emit(args, {"result": "accepted",
                     "conclusion": print_formula(d.conclusion)},
              f"accepted: {print_formula(d.conclusion)}")
        return EXIT_OK
    _emit(args, {"result": "rejected", "step": result.step, "reason": result.reason},
          f"rejected at step {result.step}: {result.reason}")
    return EXIT_REJECTED


def _cmd_transform(args) -> int:
    f = parse(_read_formula(args.formula))
    kind = args.kind
    try:
        if kind == "ag":
            out = transforms.to_Ag(f)
            text = f"# {out.provenance}\n{print_formula(out.formula)}"
            payload = {"formula": print_formula(out.formula),
                       "fresh_predicates": out.fresh_predicates,
                       "fresh_functions": out.fresh_functions,
                       "provenance": out.provenance}
        elif kind == "ah":
            out = transforms.to_Ah(f)
            text = f"# {out.provenance}\n{print_formula(out.formula)}"
            payload = {"formula": print_formula(out.formula),
                       "fresh_predicates": out.fresh_predicates,
                       "fresh_functions": out.fresh_functions,
                       "provenance": out.provenance}
        elif kind == "botfree":
            g = transforms.to_bot_free(f)
            text = f"# bot-free rewriting\n{print_formula(g)}"
            payload = {"formula": print_formula(g)}
        elif kind == "forallfree":
            g = transforms.forall_free_shift(f)
            text = f"# forall-free conditional shift\n{print_formula(g)}"
            payload = {"formula": print_formula(g)}
        elif kind == "prenex":
            g, used = transforms.prenex_crisp_report(f)
            text = f"# prenex via shifts: {', '.join(used) or 'none needed'}\n{print_formula(g)}"
            payload = {"formula": print_formula(g), "shifts": list(used)}
        else:
            raise _Failure(f"unknown transform kind {kind!r}")
    except transforms.InadmissibleShiftError as e:
        _emit(args, {"result": "rejected", "reason": str(e)}, f"rejected: {e}")
        return EXIT_REJECTED
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_embed(args) -> int:
    target_set = parse_set(args.target)
    perfect = [a for a in target_set.atoms if isinstance(a, (Interval, Cantor))]
    if len(perfect) != 1:
        raise _Failure("target must denote a single interval or cantor atom")
    points = [Fraction(p) for p in args.points.split(",")]
    image = embed_into_perfect(points, perfect[0])
    _emit(args, {"image": [str(q) for q in image]},
          ", ".join(str(q) for q in image))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="goedel",
        description="Workbench for first-order Goedel logics")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and reprint a formula")
    p.add_argument("formula")
    p.set_defaults(fn=_cmd_parse)

    p = sub.add_parser("eval", help="evaluate a formula under an interpretation file")
    p.add_argument("--interpretation", "-i", required=True)
    p.add_argument("formula")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("entail", help="brute-force entailment over a finite truth set")
    p.add_argument("--truth-set", required=True)
    p.add_argument("--premise", action="append", default=[])
    p.add_argument("--max-universe", type=int, default=2)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--one", action="store_true", help="use 1-entailment")
    p.add_argument("formula")
    p.set_defaults(fn=_cmd_entail)

    p = sub.add_parser("classify", help="axiomatizability class of a truth-value set")
    p.add_argument("set")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("decide", help="propositional decision for LC or G<m>")
    p.add_argument("--logic", required=True, help="LC or G<m>")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("formula")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("prove", help="Herbrand semantic-tree prover for prenex formulas")
    p.add_argument("--mode", default="uncountable",
                   help="uncountable or finite:<n>")
    p.add_argument("--max-level", type=int, default=8)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", help="write the certificate JSON here")
    p.add_argument("--verify", help="verify an existing certificate file instead")
    p.add_argument("formula", nargs="?")
    p.set_defaults(fn=_cmd_prove)

    p = sub.add_parser("check-proof", help="check a Hilbert-style derivation file")
    p.add_argument("--system", default=None, help="IL, H, H0 or H<n>")
    p.add_argument("prooffile")
    p.set_defaults(fn=_cmd_check_proof)

    p = sub.add_parser("transform", help="formula reductions")
    p.add_argument("--kind", required=True,
                   choices=["ag", "ah", "botfree", "forallfree", "prenex"])
    p.add_argument("formula")
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("embed", help="embed points into a perfect set atom")
    p.add_argument("--target", required=True, help="e.g. 'cantor(0,1)' or '[1/2,1]'")
    p.add_argument("points", help="comma-separated rationals")
    p.set_defaults(fn=_cmd_embed)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _Failure as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (FormulaError, ArityConflictError, SetSyntaxError, EmptyKernelError,
            transforms.TransformError, proofkit.ProofError, herbrand.HerbrandError,
            decide.DecideError, semantics.SemanticsError, ValueError,
            OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
