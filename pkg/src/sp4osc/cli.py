"""
Command-line entry point.

    sp4osc verify [--suite all|matrix|desitter|fock|jordan|chiral|su11] [--cutoff N] [--n n] [--json]
    sp4osc table generators|structure|polynomials [--n n] [--format json|csv|pretty]
    sp4osc spectrum H|L3|J|<label> [--cutoff N]

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import chiral, fock, jordan, quantization, suites
from .lie_matrix import LABELS, sp4_generators, structure_constants
from .serialize import format_float, format_scalar, matrix_to_json, to_csv
from .symplectic_geometry import LinearField, coordinate_names, form_from_field, format_form

DEFAULT_CUTOFF = 8
DEFAULT_N = 2


class UsageError(Exception):
    pass


def generator_table(n: int) -> list[tuple[str, np.ndarray]]:
    """Named generator matrices: S1..S3 for n=1, the ten de Sitter labels for n=2, Sp(2n) basis otherwise."""
    if n < 1:
        raise UsageError(f"--n must be >= 1, got {n}")
    if n == 1:
        return list(zip(("S1", "S2", "S3"), quantization.su11_matrices()))
    if n == 2:
        gens = sp4_generators()
        return [(k, gens[k]) for k in LABELS]
    return jordan.sp2n_basis_labelled(n)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pretty_matrix(m: np.ndarray) -> str:
    cells = [[format_scalar(z) for z in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  [" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def cmd_verify(args) -> int:
    try:
        report = suites.run_suite(args.suite, args.cutoff, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = report.format() + "\n"
    _emit(text, args.output)
    return 0 if report.ok else 1


def cmd_table(args) -> int:
    table = generator_table(args.n)
    fmt = args.format
    if args.what == "generators":
        if fmt == "json":
            obj = {
                "n": args.n,
                "ordering": coordinate_names(table[0][1].shape[0] // 2),
                "generators": [{"label": lab, "matrix": matrix_to_json(m)} for lab, m in table],
            }
            text = json.dumps(obj, indent=2) + "\n"
        elif fmt == "csv":
            rows = [
                (lab, r + 1, c + 1, format_float(m[r, c].real), format_float(m[r, c].imag))
                for lab, m in table
                for r in range(m.shape[0])
                for c in range(m.shape[1])
            ]
            text = to_csv(("label", "row", "col", "re", "im"), rows)
        else:
            text = "".join(f"{lab} =\n{_pretty_matrix(m)}\n" for lab, m in table)
    elif args.what == "structure":
        st = structure_constants(dict(table))
        entries = [
            (st.labels[i], st.labels[j], st.labels[k], complex(st.c[i, j, k]))
            for i in range(st.n_gen)
            for j in range(st.n_gen)
            for k in range(st.n_gen)
            if i < j and abs(st.c[i, j, k]) > 1e-12
        ]
        if fmt == "json":
            obj = {
                "labels": list(st.labels),
                "constants": [
                    {"i": a, "j": b, "k": c, "re": v.real, "im": v.imag} for a, b, c, v in entries
                ],
                "max_residual": st.max_residual,
            }
            text = json.dumps(obj, indent=2) + "\n"
        elif fmt == "csv":
            rows = [(a, b, c, format_float(v.real), format_float(v.imag)) for a, b, c, v in entries]
            text = to_csv(("i", "j", "k", "re", "im"), rows)
        else:
            lines = []
            for i in range(st.n_gen):
                for j in range(i + 1, st.n_gen):
                    terms = [f"({format_scalar(v)}) {c}" for a, b, c, v in entries if a == st.labels[i] and b == st.labels[j]]
                    lines.append(f"[{st.labels[i]},{st.labels[j]}] = {' + '.join(terms) if terms else '0'}")
            text = "\n".join(lines) + "\n"
    else:
        # the polynomials as quantized: -i times the form recovered from each matrix
        forms = [(lab, -1j * form_from_field(LinearField(m))) for lab, m in table]
        if fmt == "json":
            obj = {
                lab: {"terms": {mono: [c.real, c.imag] for mono, c in f.terms().items()}, "text": format_form(f)}
                for lab, f in forms
            }
            text = json.dumps(obj, indent=2) + "\n"
        elif fmt == "csv":
            rows = [
                (lab, mono, format_float(c.real), format_float(c.imag))
                for lab, f in forms
                for mono, c in f.terms().items()
            ]
            text = to_csv(("label", "monomial", "re", "im"), rows)
        else:
            text = "".join(f"{lab}: {format_form(f)}\n" for lab, f in forms)
    _emit(text, args.output)
    return 0


def spectrum_operator(label: str, cutoff: int) -> fock.FockOperator:
    space = fock.FockSpace(2, cutoff)
    if label == "J":
        return chiral.compose_chiral_pair(space)[1]
    if label in LABELS:
        return quantization.dirac_representation(space)[label]
    raise UsageError(f"unknown operator {label!r}; choose H, L3, J or one of {', '.join(LABELS)}")


def cmd_spectrum(args) -> int:
    if args.cutoff < 1:
        raise UsageError(f"--cutoff must be >= 1, got {args.cutoff}")
    op = spectrum_operator(args.operator, args.cutoff)
    try:
        values = fock.spectrum(op)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [(format_float(v), count) for v, count in fock.multiplicities(values)]
    _emit(to_csv(("eigenvalue", "multiplicity"), rows), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sp4osc", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=suites.SUITES, default="all")
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF, help="per-mode occupation cutoff")
    p.add_argument("--n", type=int, default=DEFAULT_N, help="Sp(2n) size for the jordan suite")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="export generators, structure constants or polynomials")
    p.add_argument("what", choices=("generators", "structure", "polynomials"))
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("spectrum", help="eigenvalues with multiplicities as CSV")
    p.add_argument("operator", help="H, L3, J or any generator label")
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--output")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"sp4osc: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
