"""Command-line front end.

Subcommands: ``matrices`` (print the derived matrices of a tree file),
``det`` / ``inverse`` (closed form next to the elimination oracle, with an
agreement flag), ``verify`` (the full identity battery over a file or
generated trees) and ``gen`` (emit a random tree file).

Exit codes: 0 success / all-pass, 1 verification failure, 2 input or parse
error, 3 violated formula hypothesis. Rationals always print as exact
``p/q`` strings, never floats, in both output formats.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .closedforms import (
    HypothesisViolation,
    det_d_closed,
    det_delta_closed,
    det_h_closed,
    inv_d_closed,
    inv_delta_closed,
    inv_h_closed,
    ones_inv_ones,
)
from .matrices import build_bundle
from .rational import RationalMatrix, det, mat_mul
from .tree import TreeError, WeightedTree, format_tree_text, parse_tree_file
from .verify import (
    IdentityReport,
    Status,
    TreeGenSpec,
    TreeShape,
    generate_tree,
    run_identity_suite,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3

MATRIX_ORDER = ("D", "Delta", "L", "Q", "F", "H")


class _InputError(Exception):
    """Bad file, flags or gen spec; maps to exit code 2."""


def _matrix_to_strings(m: RationalMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.to_lists()]


def _format_matrix_block(name: str, m: RationalMatrix) -> list[str]:
    lines = [f"{name} ({m.rows}x{m.cols}):"]
    if m.rows == 0 or m.cols == 0:
        return lines
    cells = _matrix_to_strings(m)
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    for row in cells:
        lines.append("  " + "  ".join(s.rjust(w) for s, w in zip(row, widths)))
    return lines


def _new_doc(n: int) -> dict:
    return {"n": n, "matrices": {}, "scalars": {}, "reports": []}


def _emit(doc: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _parse_gen_spec(spec_text: str, seed: int) -> TreeGenSpec:
    n = None
    shape = TreeShape.UNIFORM_PRUFER
    pool = None
    for item in spec_text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise _InputError(f"bad gen spec item {item!r}: expected key=value")
        key, value = item.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key == "n":
            try:
                n = int(value)
            except ValueError:
                raise _InputError(f"bad gen spec: n must be an integer, got {value!r}") from None
        elif key == "shape":
            names = {s.value.lower(): s for s in TreeShape}
            if value.lower() not in names:
                choices = ", ".join(s.value for s in TreeShape)
                raise _InputError(f"bad gen spec: unknown shape {value!r} (choices: {choices})")
            shape = names[value.lower()]
        elif key == "pool":
            try:
                pool = tuple(Fraction(tok) for tok in value.split(":") if tok)
            except (ValueError, ZeroDivisionError):
                raise _InputError(f"bad gen spec: unparsable pool {value!r}") from None
        else:
            raise _InputError(f"bad gen spec: unknown key {key!r}")
    if n is None:
        raise _InputError("bad gen spec: missing n=<count>")
    try:
        if pool is None:
            return TreeGenSpec(n=n, seed=seed, shape=shape)
        return TreeGenSpec(n=n, weight_pool=pool, seed=seed, shape=shape)
    except ValueError as exc:
        raise _InputError(f"bad gen spec: {exc}") from None


def _load_tree(path: str) -> WeightedTree:
    try:
        return parse_tree_file(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from None
    except TreeError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _cmd_matrices(args) -> int:
    tree = _load_tree(args.file)
    bundle = build_bundle(tree)
    if args.which:
        requested = {name.strip() for name in args.which.split(",") if name.strip()}
        unknown = requested.difference(MATRIX_ORDER)
        if unknown:
            raise _InputError(f"unknown matrix name(s): {', '.join(sorted(unknown))} (choices: {', '.join(MATRIX_ORDER)})")
    else:
        requested = set(MATRIX_ORDER)
    doc = _new_doc(tree.n)
    lines = [f"n = {tree.n}"]
    for name in MATRIX_ORDER:
        if name not in requested:
            continue
        m = getattr(bundle, name)
        doc["matrices"][name] = _matrix_to_strings(m)
        lines.extend(_format_matrix_block(name, m))
    _emit(doc, lines, args.format)
    return EXIT_OK


def _cmd_det(args) -> int:
    tree = _load_tree(args.file)
    bundle = build_bundle(tree)
    doc = _new_doc(tree.n)
    lines = [f"target: {args.target}"]
    if args.target == "D":
        closed, oracle = det_d_closed(tree), det(bundle.D)
        report_id = "det-d-closed"
    elif args.target == "H":
        closed, oracle = det_h_closed(tree), det(bundle.H)
        report_id = "det-h-closed"
    else:
        result = det_delta_closed(tree)
        closed, oracle = result.value, det(bundle.Delta)
        report_id = "det-sqdist-closed"
        doc["scalars"]["regime"] = result.regime.value
        lines.append(f"regime: {result.regime.value}")
        if result.beta is not None:
            doc["scalars"]["beta"] = str(result.beta)
            lines.append(f"beta: {result.beta}")
    agree = closed == oracle
    doc["scalars"]["closed_form"] = str(closed)
    doc["scalars"]["oracle"] = str(oracle)
    doc["scalars"]["agree"] = "true" if agree else "false"
    status = Status.PASS if agree else Status.FAIL
    doc["reports"].append({"id": report_id, "status": status.value})
    lines.append(f"closed_form: {closed}")
    lines.append(f"oracle: {oracle}")
    lines.append(f"agree: {'true' if agree else 'false'}")
    _emit(doc, lines, args.format)
    return EXIT_OK if agree else EXIT_VERIFY_FAIL


def _cmd_inverse(args) -> int:
    tree = _load_tree(args.file)
    bundle = build_bundle(tree)
    doc = _new_doc(tree.n)
    lines = [f"target: {args.target}"]
    checks: list[bool] = []
    if args.target == "D":
        inv = inv_d_closed(tree)
        original = bundle.D
    elif args.target == "H":
        inv = inv_h_closed(tree)
        original = bundle.H
    else:
        cert = inv_delta_closed(tree)
        inv = cert.matrix
        original = bundle.Delta
        doc["scalars"]["beta"] = str(cert.beta)
        doc["matrices"]["eta"] = _matrix_to_strings(RationalMatrix.column(cert.eta))
        lines.append(f"beta: {cert.beta}")
        lines.append("eta: [" + ", ".join(str(x) for x in cert.eta) + "]")
        entry_total = sum((x for row in inv for x in row), Fraction(0))
        expected_total = ones_inv_ones(tree)
        checks.append(entry_total == expected_total)
        doc["scalars"]["ones_bilinear_form"] = str(entry_total)
        doc["scalars"]["ones_bilinear_expected"] = str(expected_total)
        lines.append(f"ones_bilinear_form: {entry_total}")
        lines.append(f"ones_bilinear_expected: {expected_total}  (4/beta)")
    product_ok = mat_mul(original, inv) == RationalMatrix.identity(original.rows)
    checks.append(product_ok)
    agree = all(checks)
    doc["matrices"]["inverse"] = _matrix_to_strings(inv)
    doc["scalars"]["product_is_identity"] = "true" if product_ok else "false"
    doc["scalars"]["agree"] = "true" if agree else "false"
    report_id = {"D": "inv-d-closed", "H": "inv-h-closed", "Delta": "inv-sqdist-closed"}[args.target]
    doc["reports"].append({"id": report_id, "status": (Status.PASS if agree else Status.FAIL).value})
    lines.extend(_format_matrix_block("inverse", inv))
    lines.append(f"product_is_identity: {'true' if product_ok else 'false'}")
    lines.append(f"agree: {'true' if agree else 'false'}")
    _emit(doc, lines, args.format)
    return EXIT_OK if agree else EXIT_VERIFY_FAIL


def _report_entry(report: IdentityReport) -> dict:
    entry = {"id": report.identity_id, "status": report.status.value}
    if report.reason is not None:
        entry["reason"] = report.reason
    return entry


def _cmd_verify(args) -> int:
    if args.file and args.gen:
        raise _InputError("give either a tree file or --gen, not both")
    if not args.file and not args.gen:
        raise _InputError("give a tree file or --gen n=<count>[,shape=...,pool=...]")
    if args.file:
        trees = [_load_tree(args.file)]
        n = trees[0].n
    else:
        base = _parse_gen_spec(args.gen, args.seed)
        count = args.count
        trees = [
            generate_tree(
                TreeGenSpec(n=base.n, weight_pool=base.weight_pool, seed=args.seed + i, shape=base.shape)
            )
            for i in range(count)
        ]
        n = base.n
    doc = _new_doc(n)
    lines: list[str] = []
    passed = skipped = failed = 0
    for index, tree in enumerate(trees):
        reports = sorted(run_identity_suite(tree), key=lambda r: r.identity_id)
        for report in reports:
            doc["reports"].append(_report_entry(report))
            if report.status is Status.PASS:
                passed += 1
            elif report.status is Status.SKIPPED:
                skipped += 1
            else:
                failed += 1
                lines.append(f"FAIL tree {index}: {report.identity_id}")
                lines.append(f"  tree: {format_tree_text(tree).strip()!r}")
                if report.counterexample is not None:
                    lhs, rhs = report.counterexample
                    lines.append(f"  lhs: {lhs!r}")
                    lines.append(f"  rhs: {rhs!r}")
    doc["scalars"]["passed"] = str(passed)
    doc["scalars"]["skipped"] = str(skipped)
    doc["scalars"]["failed"] = str(failed)
    lines.append(f"identities: {passed} passed, {skipped} skipped, {failed} failed")
    _emit(doc, lines, args.format)
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAIL


def _cmd_gen(args) -> int:
    spec = _parse_gen_spec(args.spec, args.seed)
    tree = generate_tree(spec)
    sys.stdout.write(format_tree_text(tree))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treemat",
        description="Exact matrices of weighted trees: closed-form determinants and inverses, cross-checked against exact elimination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text", help="output format (default: text)")

    p_matrices = sub.add_parser("matrices", help="print matrices derived from a tree file")
    p_matrices.add_argument("file", help="tree file (first line n, then 'tail head weight' lines)")
    p_matrices.add_argument("--which", help="comma-separated subset of D,Delta,L,Q,F,H (default: all)")
    add_format(p_matrices)
    p_matrices.set_defaults(func=_cmd_matrices)

    p_det = sub.add_parser("det", help="closed-form determinant vs. the exact elimination oracle")
    p_det.add_argument("file")
    p_det.add_argument("--target", choices=("D", "H", "Delta"), required=True)
    add_format(p_det)
    p_det.set_defaults(func=_cmd_det)

    p_inv = sub.add_parser("inverse", help="closed-form inverse, certified against the original matrix")
    p_inv.add_argument("file")
    p_inv.add_argument("--target", choices=("D", "H", "Delta"), required=True)
    add_format(p_inv)
    p_inv.set_defaults(func=_cmd_inverse)

    p_verify = sub.add_parser("verify", help="run the full identity battery")
    p_verify.add_argument("file", nargs="?", help="tree file (or use --gen)")
    p_verify.add_argument("--gen", help="generation spec: n=<count>[,shape=<name>][,pool=w1:w2:...]")
    p_verify.add_argument("--count", type=int, default=1, help="number of trees to generate (with --gen)")
    p_verify.add_argument("--seed", type=int, default=0, help="base RNG seed")
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="emit a random tree file")
    p_gen.add_argument("spec", help="generation spec: n=<count>[,shape=<name>][,pool=w1:w2:...]")
    p_gen.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
