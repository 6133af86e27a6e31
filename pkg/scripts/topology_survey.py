"""Cycle census, Euler bound check and K33 / 2K33 search for k = 0 over small primes.

The census columns show the value of 6s + 2h measured directly next to the value
the p mod 12 branch of the bound presupposes.
"""

import argparse
import json

from markoff_forge.density import sieve
from markoff_forge.markoff import enumerate_graph
from markoff_forge.topo import (crossover_prime_bound, cycle_census, euler_bound, euler_bound_branch,
                                find_2k33, find_k33, implied_square_hexagon_term)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=61)
    ap.add_argument("--budget", type=float, default=60.0)
    ap.add_argument("--kappa", type=int, default=0)
    args = ap.parse_args()

    print(f"largest p where the totient bound does not beat 26p - 82: {crossover_prime_bound()}")
    print("p  V  s  h  6s+2h  implied  bound(chi=0)  k33  2k33")
    for p in [q for q in sieve(args.p_max) if q > 3]:
        g = enumerate_graph(args.kappa, p)
        V = g.to_networkx().number_of_nodes()
        c = cycle_census(g, 6)
        bound = euler_bound(p, 0, c.s, c.h)
        k33 = find_k33(g, args.budget, exhaustive=(p == 7))
        k33_s = "absent" if k33.proven_absent else ("yes" if k33.cert else "?")
        two = find_2k33(g, args.budget) if k33.cert else None
        two_s = "yes" if two and two.cert else "-"
        print(f"{p} {V} {c.s} {c.h} {6 * c.s + 2 * c.h} {implied_square_hexagon_term(p)} "
              f"{bound}/{euler_bound_branch(p, 0)} {k33_s} {two_s}")
        if two and two.cert and p in (11, 13, 17):
            with open(f"twok33_p{p}.json", "w") as fh:
                json.dump(two.cert.to_dict(), fh)


if __name__ == "__main__":
    main()
