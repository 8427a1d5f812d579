"""Write generator, structure-constant, polynomial and spectrum tables to a directory.

    python scripts/export_tables.py out/ [--cutoff 8]
"""

import argparse
import pathlib

from sp4osc import cli


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("outdir", type=pathlib.Path)
    parser.add_argument("--cutoff", type=int, default=8)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for n in (1, 2, 3):
        for what in ("generators", "structure", "polynomials"):
            for fmt in ("json", "csv"):
                path = args.outdir / f"{what}_n{n}.{fmt}"
                cli.main(["table", what, "--n", str(n), "--format", fmt, "--output", str(path)])
    for op in ("H", "L3", "J"):
        path = args.outdir / f"spectrum_{op}_N{args.cutoff}.csv"
        cli.main(["spectrum", op, "--cutoff", str(args.cutoff), "--output", str(path)])
    print(f"wrote {len(list(args.outdir.iterdir()))} files to {args.outdir}")


if __name__ == "__main__":
    main()
