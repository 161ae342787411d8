"""Command-line interface: tables, classification, verification, witnesses.

Subcommands:
    table     render a Cayley table (canonical, geometric, bullet, biquaternion)
    classify  print the algebra quintuple attached to a signature (p, q)
    verify    run a named verification suite
    witness   produce a zero-divisor / non-associativity / isomorphism witness

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
The default seed is 0; the environment variable HURWITZ_GA_SEED overrides
it, and an explicit --seed flag overrides both.  Identical command line plus
seed gives byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional

from hurwitz_ga.canonical import (
    AlgebraTable,
    HurwitzClass,
    build_biquaternion,
    build_table,
    table_to_csv,
    table_to_json,
    table_to_text,
)
from hurwitz_ga.ga_core import (
    BLADE_LABELS,
    BLADE_MASKS,
    Signature,
    blade_product,
    format_multivector,
)
from hurwitz_ga.isomorphism import classification_row, find_isomorphism, verify_witness
from hurwitz_ga.octonify import (
    BulletVariant,
    bullet_product,
    cayley_table_bullet,
    classify,
    nonassociativity_witness,
    octonion_norm,
    zero_divisor_witness,
)
from hurwitz_ga.verify import SUITES, CheckResult, run_suite

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _default_seed() -> int:
    env = os.environ.get("HURWITZ_GA_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"HURWITZ_GA_SEED must be an integer, got {env!r}")


def _signature(p: int, q: int) -> Signature:
    if p < 0 or q < 0 or p + q != 3:
        raise UsageError(f"p + q must equal 3, got p={p} q={q}")
    return Signature.from_pq(p, q)


def _variant(text: str) -> BulletVariant:
    try:
        return BulletVariant(text)
    except ValueError:
        raise UsageError(f"variant must be '+' or '-', got {text!r}")


def geometric_cayley_table(sig: Signature) -> AlgebraTable:
    """The geometric product on the blade basis, as a signed table."""
    index_of = {m: i for i, m in enumerate(BLADE_MASKS)}
    prod = []
    for a in BLADE_MASKS:
        row = []
        for b in BLADE_MASKS:
            s, m = blade_product(a, b, sig)
            row.append((index_of[m], s))
        prod.append(tuple(row))
    # conj column records Clifford conjugation (grade signs +,-,-,+)
    grade_sign = (1, -1, -1, 1)
    conj = tuple(grade_sign[bin(m).count("1")] for m in BLADE_MASKS)
    return AlgebraTable(
        name=f"ga:{sig.p},{sig.q}",
        dim=8,
        basis_labels=BLADE_LABELS,
        product=tuple(prod),
        conj_signs=conj,
    )


def _resolve_table(spec: str) -> AlgebraTable:
    names = {c.value: c for c in HurwitzClass}
    if spec in names:
        return build_table(names[spec])
    if spec.startswith("ga:"):
        p, q = _parse_pq(spec[3:])
        return geometric_cayley_table(_signature(p, q))
    if spec.startswith("bullet:"):
        rest = spec[len("bullet:"):]
        parts = rest.rsplit(":", 1)
        if len(parts) != 2:
            raise UsageError(f"bullet spec must be bullet:p,q:+|-, got {spec!r}")
        p, q = _parse_pq(parts[0])
        return cayley_table_bullet(_signature(p, q), _variant(parts[1]))
    if spec.startswith("biq:"):
        parts = spec[len("biq:"):].split(",")
        if len(parts) != 2:
            raise UsageError(f"biq spec must be biq:C|Cs,H|Hs, got {spec!r}")
        try:
            c = HurwitzClass(parts[0])
            h = HurwitzClass(parts[1])
        except ValueError:
            raise UsageError(f"unknown algebra class in {spec!r}")
        if c not in (HurwitzClass.C, HurwitzClass.Cs) or h not in (
            HurwitzClass.H,
            HurwitzClass.Hs,
        ):
            raise UsageError(f"biq spec must pair C|Cs with H|Hs, got {spec!r}")
        return build_biquaternion(c, h)
    raise UsageError(
        f"unknown algebra spec {spec!r}; expected one of "
        f"{'/'.join(names)}, ga:p,q, bullet:p,q:+|-, biq:C|Cs,H|Hs"
    )


def _parse_pq(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected p,q in algebra spec, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"p and q must be integers, got {text!r}")


# -- report rendering ------------------------------------------------------

def _report_dict(command: str, checks: list[CheckResult]) -> dict:
    records = []
    for c in checks:
        rec = {"name": c.name, "status": "pass" if c.passed else "fail"}
        if c.counterexample is not None:
            rec["counterexample"] = c.counterexample
        records.append(rec)
    n_pass = sum(1 for c in checks if c.passed)
    return {
        "command": command,
        "checks": records,
        "summary": {"pass": n_pass, "fail": len(checks) - n_pass},
    }


def _emit_report(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "status", "counterexample"])
        for rec in report["checks"]:
            writer.writerow([rec["name"], rec["status"], rec.get("counterexample", "")])
        out.write(buf.getvalue())
        return
    for rec in report["checks"]:
        line = f"{rec['status'].upper():4s} {rec['name']}"
        if "counterexample" in rec:
            line += f"  [{rec['counterexample']}]"
        out.write(line + "\n")
    s = report["summary"]
    out.write(f"{s['pass']} passed, {s['fail']} failed\n")


# -- subcommands -----------------------------------------------------------

def cmd_table(args, out) -> int:
    table = _resolve_table(args.spec)
    if args.format == "json":
        out.write(json.dumps(table_to_json(table), indent=2) + "\n")
    elif args.format == "csv":
        out.write(table_to_csv(table))
    else:
        out.write(table_to_text(table) + "\n")
    return 0


def cmd_classify(args, out) -> int:
    sig = _signature(args.p, args.q)
    row = classification_row(sig)
    if args.format == "json":
        data = {
            "signature": f"G({sig.p},{sig.q})",
            "tensor": row.tensor_label,
            "even": row.even.value,
            "pseudoscalar": row.ps.value,
            "bullet_plus": row.bullet_plus.value,
            "bullet_minus": row.bullet_minus.value,
        }
        out.write(json.dumps(data, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["signature", "tensor", "even", "pseudoscalar", "bullet_plus", "bullet_minus"]
        )
        writer.writerow(
            [
                f"G({sig.p},{sig.q})",
                row.tensor_label,
                row.even.value,
                row.ps.value,
                row.bullet_plus.value,
                row.bullet_minus.value,
            ]
        )
        out.write(buf.getvalue())
    else:
        out.write(
            f"G({sig.p},{sig.q}): {row.tensor_label}, {row.even.value}, "
            f"{row.ps.value}, {row.bullet_plus.value}, {row.bullet_minus.value}\n"
        )
    return 0


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all"
        )
    checks = run_suite(args.suite, trials=args.trials, seed=args.seed)
    report = _report_dict(f"verify {args.suite}", checks)
    _emit_report(report, args.format, out)
    return 0 if report["summary"]["fail"] == 0 else 1


def _witness_zero_divisor(sig: Signature, variant: BulletVariant) -> tuple[list[CheckResult], list[str]]:
    pair = zero_divisor_witness(sig, variant)
    if pair is None:
        return (
            [CheckResult("zero-divisor-absent", True, None)],
            ["none exists (norm positive definite)"],
        )
    x, y = pair
    prod = bullet_product(x, y, variant)
    lines = [
        f"x = {format_multivector(x)}",
        f"y = {format_multivector(y)}",
        f"x . y = {format_multivector(prod)}",
        f"N(x) = {octonion_norm(x, variant)}",
    ]
    checks = [
        CheckResult("product-vanishes", prod.is_zero(), None),
        CheckResult("x-isotropic", octonion_norm(x, variant) == 0, None),
    ]
    return checks, lines


def _witness_non_assoc(sig: Signature, variant: BulletVariant) -> tuple[list[CheckResult], list[str]]:
    x, y, z = nonassociativity_witness(sig, variant)
    lhs = bullet_product(bullet_product(x, y, variant), z, variant)
    rhs = bullet_product(x, bullet_product(y, z, variant), variant)
    assoc = lhs - rhs
    lines = [
        f"x = {format_multivector(x)}",
        f"y = {format_multivector(y)}",
        f"z = {format_multivector(z)}",
        f"(x . y) . z = {format_multivector(lhs)}",
        f"x . (y . z) = {format_multivector(rhs)}",
        f"associator = {format_multivector(assoc)}",
    ]
    return [CheckResult("associator-nonzero", not assoc.is_zero(), None)], lines


def _witness_isomorphism(sig: Signature, variant: BulletVariant) -> tuple[list[CheckResult], list[str]]:
    source = cayley_table_bullet(sig, variant)
    target = build_table(classify(sig, variant))
    w = find_isomorphism(source, target)
    if w is None:
        return [CheckResult("witness-found", False, f"{source.name} -> {target.name}")], []
    ok = verify_witness(w)
    lines = [json.dumps(w.to_json(), indent=2)]
    for i, (k, s) in enumerate(w.mapping):
        image = target.basis_labels[k] if s > 0 else f"-{target.basis_labels[k]}"
        lines.append(f"{source.basis_labels[i]} -> {image}")
    return [
        CheckResult("witness-found", True, None),
        CheckResult("witness-verifies", ok, None),
    ], lines


def cmd_witness(args, out) -> int:
    sig = _signature(args.p, args.q)
    variant = _variant(args.variant)
    builders = {
        "zero-divisor": _witness_zero_divisor,
        "non-assoc": _witness_non_assoc,
        "isomorphism": _witness_isomorphism,
    }
    checks, lines = builders[args.kind](sig, variant)
    report = _report_dict(f"witness {args.kind}", checks)
    if args.format == "json":
        report["witness"] = lines
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
        _emit_report(report, args.format, out)
    return 0 if report["summary"]["fail"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-ga",
        description="Hurwitz algebras inside 3D geometric algebras: "
        "tables, classification, verification, witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default text)",
        )

    p_table = sub.add_parser("table", help="render a Cayley table")
    p_table.add_argument(
        "spec",
        help="R|C|Cs|H|Hs|O|Os, ga:p,q, bullet:p,q:+|-, or biq:C|Cs,H|Hs",
    )
    add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_classify = sub.add_parser("classify", help="classify the algebras of G(p,q)")
    p_classify.add_argument("p", type=int)
    p_classify.add_argument("q", type=int)
    add_format(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    p_verify.add_argument("--trials", type=int, default=10_000)
    p_verify.add_argument("--seed", type=int, default=None)
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_witness = sub.add_parser("witness", help="produce a verified witness")
    p_witness.add_argument("kind", choices=("zero-divisor", "non-assoc", "isomorphism"))
    p_witness.add_argument("p", type=int)
    p_witness.add_argument("q", type=int)
    p_witness.add_argument("variant", nargs="?", default="+", help="+ or - (default +)")
    add_format(p_witness)
    p_witness.set_defaults(func=cmd_witness)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "seed", None) is None and args.command == "verify":
            args.seed = _default_seed()
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
