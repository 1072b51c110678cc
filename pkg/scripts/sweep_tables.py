"""Existence tables for the open cases: every two-element D on cycles.

    python3 scripts/sweep_tables.py --n-max 7 --out-dir results/

Writes pairs_all.csv (every orientation, n <= n-max) and pairs_uni.csv
(unidirectional cycles, n <= uni-max), then prints a short summary of
which {0,k} sets exist on even unidirectional cycles.
"""

from __future__ import annotations

import argparse
import csv
from collections import Counter
from pathlib import Path

from dantimagic.search import SWEEP_COLUMNS, SearchBudget, Verdict, sweep_pairs


def write(rows, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, SWEEP_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r.csv_row())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--uni-max", type=int, default=12)
    ap.add_argument("--budget-ms", type=int, default=60_000)
    ap.add_argument("--reduce-symmetry", action="store_true")
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    budget = SearchBudget(max_millis=args.budget_ms)

    rows = sweep_pairs(args.n_max, "all", budget=budget, reduce_symmetry=args.reduce_symmetry)
    write(rows, out / "pairs_all.csv")
    print(f"pairs_all.csv: {len(rows)} rows", dict(Counter(r.outcome.value for r in rows)))

    uni = sweep_pairs(args.uni_max, "uni", budget=budget)
    write(uni, out / "pairs_uni.csv")
    print(f"pairs_uni.csv: {len(uni)} rows", dict(Counter(r.outcome.value for r in uni)))
    for n in range(4, args.uni_max + 1, 2):
        ks = {r.d.max: r.outcome for r in uni if r.n == n and r.d.min == 0}
        missing = [k for k, v in sorted(ks.items()) if v is not Verdict.EXISTS]
        print(f"even n={n}: {{0,k}} without a labeling for k in {missing}")


if __name__ == "__main__":
    main()
