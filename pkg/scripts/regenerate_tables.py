"""Regenerate the n = 2 and n = 3 tables and diff them against the shipped golden text."""

import argparse
import sys
from pathlib import Path

from markoff_forge.tables import check_tables


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results/tables"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for chk in check_tables():
        (args.out / f"table_n{chk.n}.txt").write_text(chk.rendered)
        print(f"n={chk.n}: {'matches golden' if chk.matches else 'DIFFERS'}")
        if not chk.matches:
            print(chk.diff())
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
