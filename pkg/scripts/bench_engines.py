"""Sweep the matrix and BFS shortest-cycle engines over n and density.

    python scripts/bench_engines.py --out bench.csv

Writes one CSV (engine,n,density,m,set,k_min,millis,seed) by calling the
``modcycle bench`` subcommand per grid point, and prints which engine was
faster at each point.
"""
import argparse
import csv
import io
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from modcycle.cli import run

GRID = [(128, 0.5), (256, 0.5), (512, 0.5), (512, 0.01), (1024, 0.002), (2048, 0.001)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="bench.csv")
    ap.add_argument("--m", default="2")
    ap.add_argument("--set", default="1")
    ap.add_argument("--trials", type=int, default=2)
    args = ap.parse_args()
    rows = []
    with tempfile.TemporaryDirectory() as tmp:
        for n, dens in GRID:
            path = Path(tmp) / "point.csv"
            argv = ["bench", "--n", str(n), "--density", str(dens), "--m", args.m, "--set", args.set,
                    "--csv", str(path), "--trials", str(args.trials)]
            with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
                run(argv)
            point = list(csv.DictReader(path.open()))
            rows.extend(point)
            tot = {}
            for r in point:
                tot[r["engine"]] = tot.get(r["engine"], 0.0) + float(r["millis"])
            winner = min(tot, key=tot.get)
            print(f"n={n:5d} density={dens:<6} " + "  ".join(f"{e}={ms:9.1f}ms" for e, ms in tot.items()) + f"  -> {winner}")
    with open(args.out, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)


if __name__ == "__main__":
    main()
