"""Solve every corpus instance and print a results table.

Usage:
    python scripts/run_corpus.py [--oracle] [--f quotient density ...]

With --oracle each value is cross-checked against brute force; a mismatch
aborts the run.  Values are exact rationals printed as p/q.
"""

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from surfcut.balance import make_balance
from surfcut.embedding import parse_embedding
from surfcut.oracle import brute_force_cut
from surfcut.solver import SolveContext


def frac(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--oracle", action="store_true", help="cross-check every value")
    ap.add_argument(
        "--f",
        nargs="+",
        default=["quotient", "density", "expansion"],
        help="balance functions to run",
    )
    args = ap.parse_args()
    funcs = [(spec, make_balance(spec)) for spec in args.f]

    manifest = json.loads((ROOT / "corpus" / "manifest.json").read_text())
    header = ["name", "n", "m", "g", "states"] + [spec for spec, _ in funcs]
    widths = [18, 3, 3, 2, 7] + [12] * len(funcs)
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))

    t0 = time.monotonic()
    for item in manifest:
        g = parse_embedding((ROOT / "corpus" / item["file"]).read_text())
        ctx = SolveContext(g)
        row = [item["name"], g.n, g.m, ctx.genus, ctx.cover.max_states]
        for spec, f in funcs:
            r = ctx.solve(f)
            if args.oracle:
                want = brute_force_cut(g, f).best.value
                if r.value != want:
                    sys.exit(f"MISMATCH on {item['name']} ({spec}): {r.value} vs {want}")
            row.append(frac(r.value))
        print("  ".join(str(c).ljust(w) for c, w in zip(row, widths)))
    note = " (oracle checked)" if args.oracle else ""
    print(f"done: {len(manifest)} instances in {time.monotonic() - t0:.1f}s{note}")


if __name__ == "__main__":
    main()
