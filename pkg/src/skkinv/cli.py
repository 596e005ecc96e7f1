"""Command-line interface.

Exit codes: 0 success, 1 a verification found a violation, 2 input error.
Scalars print exactly, as rationals or exp(p/q) strings; machine-readable
reports carry a schema version and are emitted with --json.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import skk, surfaces as sf, virtual_bordism as vb
from .cobordism import ArityMismatch, WordSyntaxError, normal_form, parse_word
from .intersection_form import DegeneratePairing, WrongDimension, signature
from .simplicial import (
    ComplexFormatError,
    NotClosed,
    NotOrientable,
    OddEulerCharacteristic,
    complex_from_json,
    euler_characteristic,
    homology,
    kervaire_semicharacteristic,
    validate_closed,
)
from .tqft import (
    InvertibleTQFT2,
    VariantMismatch,
    corrupted_tqft,
    evaluate,
    exp_scalar,
    rational,
    verify_axioms,
)
from .selftest import run_selftest

SCHEMA = 1

_INPUT_ERRORS = (
    ComplexFormatError,
    NotClosed,
    NotOrientable,
    DegeneratePairing,
    WrongDimension,
    WordSyntaxError,
    ArityMismatch,
    VariantMismatch,
    vb.CatalogFormatError,
    vb.MissingBSigma,
    vb.LabelMismatch,
    sf.ScriptError,
    sf.InvalidSpec,
    sf.InvalidMatching,
    skk.UnsupportedDimension,
    skk.OddParity,
    skk.NotClosedManifold,
    ValueError,
    OSError,
)


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    report: str
    json_report: dict | None = None


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _parse_surface_expr(expr: str) -> sf.Surface:
    """Surface expressions: g<genus>b<boundary> terms joined by '+'."""
    comps = []
    for term in expr.split("+"):
        term = term.strip().lower()
        if not term.startswith("g") or "b" not in term:
            raise ValueError(f"bad surface term {term!r}; expected like g1b0")
        g_text, b_text = term[1:].split("b", 1)
        comps.append((int(g_text), int(b_text)))
    return sf.surface(*comps)


def _scalar_pair(args) -> InvertibleTQFT2:
    has_rat = args.cap is not None or args.cup is not None
    has_exp = getattr(args, "cap_exp", None) is not None or getattr(args, "cup_exp", None) is not None
    if has_rat and has_exp:
        raise VariantMismatch("do not mix --cap/--cup with --cap-exp/--cup-exp")
    if has_rat:
        if args.cap is None or args.cup is None:
            raise ValueError("--cap and --cup must be given together")
        return InvertibleTQFT2(rational(Fraction(args.cap)), rational(Fraction(args.cup)))
    if has_exp:
        if args.cap_exp is None or args.cup_exp is None:
            raise ValueError("--cap-exp and --cup-exp must be given together")
        return InvertibleTQFT2(exp_scalar(Fraction(args.cap_exp)),
                               exp_scalar(Fraction(args.cup_exp)))
    raise ValueError("give --cap/--cup or --cap-exp/--cup-exp")


def _cmd_homology(args) -> CommandResult:
    K = complex_from_json(_read(args.file))
    profile = homology(K, args.coefficients)
    lines = [f"dim {K.dim}, {len(K.facets)} facets"]
    lines.append(f"betti ({args.coefficients}): {list(profile.betti)}")
    if args.coefficients == "integers":
        lines.append(f"torsion: {[list(t) for t in profile.torsion]}")
    doc = {
        "schema": SCHEMA,
        "command": "homology",
        "dim": K.dim,
        "coefficients": args.coefficients,
        "betti": list(profile.betti),
        "torsion": [list(t) for t in profile.torsion],
    }
    return CommandResult(0, "\n".join(lines), doc)


def _cmd_invariants(args) -> CommandResult:
    K = complex_from_json(_read(args.file))
    chi = euler_characteristic(K)
    closed = validate_closed(K)
    lines = [f"dim {K.dim}", f"chi = {chi}", f"closed = {closed}"]
    doc = {"schema": SCHEMA, "command": "invariants", "dim": K.dim,
           "chi": chi, "closed": closed}
    if closed:
        try:
            semi = kervaire_semicharacteristic(K)
            lines.append(f"kervaire_semicharacteristic = {semi}"
                         + (" (mod 2)" if K.dim % 2 else ""))
            doc["kervaire_semicharacteristic"] = semi
        except OddEulerCharacteristic:
            lines.append("kervaire_semicharacteristic undefined (odd chi)")
            doc["kervaire_semicharacteristic"] = None
        if K.dim == 4:
            sigma = signature(K)
            lines.append(f"sigma = {sigma}")
            doc["sigma"] = sigma
    return CommandResult(0, "\n".join(lines), doc)


def _cmd_cutpaste(args) -> CommandResult:
    S = _parse_surface_expr(args.start)
    moves = sf.parse_script(_read(args.script))
    trace = [(sf.chi(S), S.as_multiset())]
    for move in moves:
        S = sf.apply_script(S, [move])
        trace.append((sf.chi(S), S.as_multiset()))
    lines = [f"start: {trace[0][1]} chi {trace[0][0]}"]
    for i, (chi, shape) in enumerate(trace[1:], start=1):
        lines.append(f"after move {i}: {shape} chi {chi}")
    doc = {"schema": SCHEMA, "command": "cutpaste",
           "trace": [{"chi": c, "components": [list(x) for x in shape]}
                     for c, shape in trace]}
    return CommandResult(0, "\n".join(lines), doc)


def _cmd_cob_normal_form(args) -> CommandResult:
    w = parse_word(args.word, dim=args.dim)
    nf = normal_form(w)
    lines = [f"word: {w.text()} ({w.in_arity} -> {w.out_arity})"]
    comps = []
    for c in nf.components:
        if nf.dim == 2:
            desc = f"genus {c.genus}, in {list(c.in_positions)}, out {list(c.out_positions)}"
        else:
            kind = "circle" if c.is_closed else "arc"
            desc = f"{kind}, in {list(c.in_positions)}, out {list(c.out_positions)}"
        lines.append("component: " + desc)
        comps.append({"genus": c.genus, "in": list(c.in_positions),
                      "out": list(c.out_positions)})
    doc = {"schema": SCHEMA, "command": "cob normal-form",
           "in_arity": nf.in_arity, "out_arity": nf.out_arity, "components": comps}
    return CommandResult(0, "\n".join(lines), doc)


def _cmd_cob_eval(args) -> CommandResult:
    T = _scalar_pair(args)
    w = parse_word(args.word, dim=2)
    value = evaluate(T, w)
    doc = {"schema": SCHEMA, "command": "cob eval", "word": w.text(),
           "value": str(value)}
    return CommandResult(0, str(value), doc)


def _cmd_tqft_verify(args) -> CommandResult:
    T = _scalar_pair(args)
    if args.corrupt:
        T = corrupted_tqft(T)
    report = verify_axioms(T, seed=args.seed, budget=args.budget)
    doc = {"schema": SCHEMA, "command": "tqft verify", "seed": args.seed,
           "budget": args.budget, "corrupt": bool(args.corrupt),
           "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                      for c in report.checks]}
    return CommandResult(0 if report.all_passed else 1, report.summary(), doc)


def _cmd_skk_class(args) -> CommandResult:
    if args.surface is not None:
        M = _parse_surface_expr(args.surface)
        dim = 2
    else:
        if args.file is None:
            raise ValueError("give a complex file or --surface")
        M = complex_from_json(_read(args.file))
        dim = M.dim
    cls = skk.skk_class(M, dim)
    value = list(cls.value) if isinstance(cls.value, tuple) else cls.value
    text = f"dim {dim} class: {cls.value}"
    doc = {"schema": SCHEMA, "command": "skk class", "dim": dim, "value": value}
    return CommandResult(0, text, doc)


def _cmd_skk_verify_sequence(args) -> CommandResult:
    grid = skk.default_grid(args.grid)
    splitting = skk.corrupted_splitting if args.corrupt_splitting else skk.splitting_S
    report = skk.verify_split_sequence(grid=grid, seed=args.seed, splitting=splitting)
    doc = {"schema": SCHEMA, "command": "skk verify-sequence", "seed": args.seed,
           "grid_half_width": args.grid,
           "corrupt_splitting": bool(args.corrupt_splitting),
           "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                      for c in report.checks]}
    return CommandResult(0 if report.all_passed else 1, report.summary(), doc)


def _cmd_skk_demo_bsigma(args) -> CommandResult:
    catalog = vb.catalog_from_json(_read(args.catalog)) if args.catalog else vb.dim8_catalog()
    disk_value, cp_value = skk.b_sigma_dependence_demo(catalog)
    text = (f"capping choice D8 => {disk_value}; "
            f"capping choice CP4_minus_D8 => {cp_value}")
    doc = {"schema": SCHEMA, "command": "skk demo-bsigma",
           "values": {"D8": str(disk_value), "CP4_minus_D8": str(cp_value)}}
    return CommandResult(0, text, doc)


def _cmd_selftest(args) -> CommandResult:
    report = run_selftest(seed=args.seed)
    doc = {"schema": SCHEMA, "command": "selftest", "seed": args.seed,
           "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                      for c in report.checks]}
    return CommandResult(0 if report.all_passed else 1, report.summary(), doc)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skkinv",
        description="Exact cut-and-paste, cobordism, and invertible-TQFT checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common],
                       help="Betti numbers and torsion of a complex file")
    p.add_argument("file")
    p.add_argument("--coefficients", choices=("integers", "rationals", "mod2"),
                   default="integers")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("invariants", parents=[common],
                       help="chi, semicharacteristic, and sigma (dim 4)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("cutpaste", parents=[common],
                       help="run a cut/paste script on a surface")
    p.add_argument("script")
    p.add_argument("--start", required=True, help="surface expression, e.g. 'g1b0 + g0b3'")
    p.set_defaults(func=_cmd_cutpaste)

    cob = sub.add_parser("cob", help="cobordism word operations")
    cob_sub = cob.add_subparsers(dest="cob_command", required=True)
    p = cob_sub.add_parser("normal-form", parents=[common],
                           help="classify a word's components")
    p.add_argument("word")
    p.add_argument("--dim", type=int, choices=(1, 2), default=2)
    p.set_defaults(func=_cmd_cob_normal_form)
    p = cob_sub.add_parser("eval", parents=[common], help="evaluate a TQFT on a word")
    p.add_argument("word")
    p.add_argument("--cap")
    p.add_argument("--cup")
    p.add_argument("--cap-exp", dest="cap_exp")
    p.add_argument("--cup-exp", dest="cup_exp")
    p.set_defaults(func=_cmd_cob_eval)

    tq = sub.add_parser("tqft", help="TQFT verification")
    tq_sub = tq.add_subparsers(dest="tqft_command", required=True)
    p = tq_sub.add_parser("verify", parents=[common],
                          help="check the functor laws on random words")
    p.add_argument("--cap")
    p.add_argument("--cup")
    p.add_argument("--cap-exp", dest="cap_exp")
    p.add_argument("--cup-exp", dest="cup_exp")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--corrupt", action="store_true",
                   help="use the corrupted negative control")
    p.set_defaults(func=_cmd_tqft_verify)

    sk = sub.add_parser("skk", help="class computations and sequence checks")
    sk_sub = sk.add_subparsers(dest="skk_command", required=True)
    p = sk_sub.add_parser("class", parents=[common],
                          help="class of a complex file or surface expression")
    p.add_argument("file", nargs="?")
    p.add_argument("--surface", help="surface expression, e.g. 'g2b0'")
    p.set_defaults(func=_cmd_skk_class)
    p = sk_sub.add_parser("verify-sequence", parents=[common],
                          help="split exact sequence checks")
    p.add_argument("--grid", type=int, default=4, help="exponent half-width")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt-splitting", action="store_true", dest="corrupt_splitting")
    p.set_defaults(func=_cmd_skk_verify_sequence)
    p = sk_sub.add_parser("demo-bsigma", parents=[common],
                          help="capping-choice dependence demo")
    p.add_argument("--catalog")
    p.set_defaults(func=_cmd_skk_demo_bsigma)

    p = sub.add_parser("selftest", parents=[common], help="run every property suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(2 if exc.code else 0, "")
    try:
        result = args.func(args)
    except _INPUT_ERRORS as exc:
        return CommandResult(2, f"error: {exc}")
    if args.json and result.json_report is not None:
        return CommandResult(result.exit_code,
                             json.dumps(result.json_report, indent=2, sort_keys=True),
                             result.json_report)
    return result


def main() -> None:
    result = run(sys.argv[1:])
    if result.report:
        print(result.report)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
