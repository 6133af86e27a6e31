"""Density sweep over a range of k: one CSV row per k with counts and ratios."""

import argparse
import csv
import sys
import time

from markoff_forge.density import DensityReport, default_workers, density_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kappa-min", type=int, default=0)
    ap.add_argument("--kappa-max", type=int, default=10)
    ap.add_argument("--X", type=int, default=100_000)
    ap.add_argument("--threads", type=int, default=default_workers())
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    fields = DensityReport.CSV_FIELDS + ("ratio_n1", "ratio_n2B", "ratio_special", "admissible", "seconds")
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.DictWriter(fh, fieldnames=fields)
    w.writeheader()
    for k in range(args.kappa_min, args.kappa_max + 1):
        t0 = time.perf_counter()
        rep = density_sweep(k, args.X, args.threads)
        row = rep.csv_row()
        row.update({f"ratio_{t}": f"{rep.ratios[t]:.6f}" for t in ("n1", "n2B", "special")})
        row["admissible"] = rep.admissible
        row["seconds"] = f"{time.perf_counter() - t0:.2f}"
        w.writerow(row)
        fh.flush()
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
