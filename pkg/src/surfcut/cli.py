"""Command line front end: solve one embedding file, optionally cross-check.

Exit codes: 0 on success (and oracle agreement), 3 when the oracle check was
requested and disagrees, 1 for any input problem.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from surfcut.balance import BalanceError, make_balance
from surfcut.cover import dump_walks
from surfcut.embedding import EmbeddingError, parse_embedding
from surfcut.oracle import brute_force_cut
from surfcut.solver import SolveContext


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    f: str = "quotient"
    root: int = 0
    oracle: bool = False
    as_json: bool = False
    dump_walks_path: str | None = None


def _frac(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_args(argv: list[str]) -> RunConfig:
    p = argparse.ArgumentParser(
        prog="surfcut",
        description="Exact minimum quotient cuts of multigraphs embedded on orientable surfaces.",
    )
    p.add_argument("input", help="embedding file (vertices / edge / rot lines)")
    p.add_argument(
        "--f",
        default="quotient",
        help="balance function: quotient, density, expansion, or custom:<path>",
    )
    p.add_argument("--root", type=int, default=0, help="root vertex for the weight tree")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--json", action="store_true", dest="as_json", help="print a JSON report")
    p.add_argument("--dump-walks", metavar="PATH", help="write the tagged walk table to PATH")
    a = p.parse_args(argv)
    return RunConfig(
        input_path=a.input,
        f=a.f,
        root=a.root,
        oracle=a.oracle,
        as_json=a.as_json,
        dump_walks_path=a.dump_walks,
    )


def run(cfg: RunConfig) -> int:
    try:
        text = Path(cfg.input_path).read_text(encoding="utf-8")
        g = parse_embedding(text)
        f = make_balance(cfg.f)
        if not (0 <= cfg.root < g.n):
            raise ValueError(f"root {cfg.root} out of range for {g.n} vertices")
        ctx = SolveContext(g, cfg.root)
        det = ctx.solve_detailed(f)
        report = None
        if cfg.oracle:
            report = brute_force_cut(g, f)
    except (EmbeddingError, BalanceError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    if cfg.dump_walks_path:
        try:
            Path(cfg.dump_walks_path).write_text(dump_walks(det.cover), encoding="utf-8")
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1

    r = det.result
    agree = report is not None and report.best.value == r.value

    if cfg.as_json:
        payload = {
            "genus": det.genus,
            "f": cfg.f,
            "value": _frac(r.value),
            "cut_size": r.cut_size,
            "balance": _frac(r.balance),
            "expansion": _frac(r.expansion),
            "S": list(r.S),
        }
        if report is not None:
            payload["oracle_value"] = _frac(report.best.value)
            payload["agree"] = agree
        print(json.dumps(payload))
    else:
        lines = [
            f"genus: {det.genus}",
            f"f: {cfg.f}",
            f"value: {_frac(r.value)}",
            f"cut_size: {r.cut_size}",
            f"balance: {_frac(r.balance)}",
            f"expansion: {_frac(r.expansion)}",
        ]
        if cfg.f == "expansion":
            lines.append(
                f"identity: value = n * expansion ({_frac(r.value)} = {g.n} * {_frac(r.expansion)})"
            )
        lines.append("S: " + " ".join(map(str, r.S)))
        if report is not None:
            lines.append(f"oracle_value: {_frac(report.best.value)}")
            lines.append(f"agreement: {'AGREE' if agree else 'DISAGREE'}")
        print("\n".join(lines))

    if report is not None and not agree:
        return 3
    return 0


def main():
    sys.exit(run(parse_args(sys.argv[1:])))


if __name__ == "__main__":
    main()
