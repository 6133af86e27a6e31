"""List primes satisfying each construction condition for given k, up to a bound."""

import argparse

from markoff_forge.criteria import THEOREM_TAGS, congruence_classes_n2B, verdict
from markoff_forge.density import sieve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kappa", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--limit", type=int, default=1000)
    args = ap.parse_args()
    primes = [p for p in sieve(args.limit) if p > 3]
    for k in args.kappa:
        print(f"kappa = {k}")
        for tag in THEOREM_TAGS:
            hits = [p for p in primes if verdict(tag, k, p).holds]
            print(f"  {tag:17s} {len(hits):4d}  {hits[:20]}{' ...' if len(hits) > 20 else ''}")
        try:
            M, res = congruence_classes_n2B(k)
            print(f"  (B) classes mod {M}: {res}")
        except ValueError:
            print("  (B) classes: eta_2 vanishes")


if __name__ == "__main__":
    main()
