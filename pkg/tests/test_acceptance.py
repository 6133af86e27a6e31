"""One test per acceptance criterion; each prints a PASS/FAIL line with its timing.

Run directly (`python tests/test_acceptance.py`) or through pytest, where the
lines are also collected into the terminal summary.
"""

import os
import time

import pytest

from markoff_forge.chebyshev import identity_suite
from markoff_forge.criteria import (congruence_classes_n2B, count_quartic_roots, eta2_int, quartic_guard,
                                    quartic_profile, verdict)
from markoff_forge.density import density_sweep, sieve
from markoff_forge.elimination import DEFAULT_PIT_PRIMES, compute_B, poly_identity_check
from markoff_forge.ff import field
from markoff_forge.markoff import carlitz_count, enumerate_brute, enumerate_codes, enumerate_graph
from markoff_forge.poly import roots
from markoff_forge.subdivision import (brute_sextuples, build_cert, disjoint_copies, extract_cycles,
                                       predicted_sextuples, properness_resultants, solve_n1, solve_special)
from markoff_forge.tables import check_tables, parse_table, golden_table
from markoff_forge.topo import find_2k33, find_k33

RESULTS: list[str] = []


def report(num: int, name: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"criterion {num:2d} {status}  {name}  ({elapsed:.2f}s / {limit:.0f}s){'  ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert elapsed < limit, f"{line}: over the runtime budget"


def primes_between(lo, hi):
    return [p for p in sieve(hi) if p >= lo]


def test_criterion_01_tables():
    t0 = time.perf_counter()
    checks = check_tables()
    ok = all(c.matches for c in checks)
    report(1, "tables regenerate byte-exact", ok, time.perf_counter() - t0, 5,
           "" if ok else checks[0].diff() + checks[1].diff())


def test_criterion_02_example_forms():
    t0 = time.perf_counter()
    assert all(p > 1 << 16 for p in DEFAULT_PIT_PRIMES) and len(DEFAULT_PIT_PRIMES) == 3
    reps = [poly_identity_check(4, c, DEFAULT_PIT_PRIMES, kappa_samples=6) for c in ("B", "C", "xi", "eta")]
    ok = all(r.ok for r in reps) and all(r.samples >= 4 * 6 * 3 for r in reps)
    report(2, "B, C, xi, eta for n = 1..4 match closed forms", ok, time.perf_counter() - t0, 5,
           f"{sum(r.samples for r in reps)} samples")


def test_criterion_03_carlitz():
    t0 = time.perf_counter()
    bad = []
    for p in primes_between(5, 200):
        for k in range(-10, 11):
            codes = enumerate_codes(k % p, p)
            if len(codes) != carlitz_count(k, p):
                bad.append((p, k))
            if p <= 31 and not (codes == enumerate_brute(k % p, p)).all():
                bad.append((p, k, "brute"))
    report(3, "point counts equal the closed form; brute agrees for p <= 31", not bad,
           time.perf_counter() - t0, 60, str(bad[:3]) if bad else "")


def _certificate_jobs():
    jobs = []
    for n in (2, 3):
        for (p, k), cell in parse_table(golden_table(n)).items():
            if cell != "***":
                jobs += [(pr, n, k, p) for pr in cell]
    for p in primes_between(5, 200):
        for k in range(-10, 11):
            jobs += [(pr, 1, k, p) for pr in solve_n1(k, p).dist_pairs]
            sp = solve_special(k, p)
            jobs += [(pr, sp.n, k, p) for pr in sp.dist_pairs]
    return jobs


def _certificate_failures(jobs):
    bad = []
    for pair, n, k, p in jobs:
        cert = build_cert(pair, n, k, p)
        if not cert.verified:
            bad.append((pair, n, k, p))
            continue
        lengths = [c.length for c in extract_cycles(cert)]
        if lengths != [4 * n + 2, 6 * n + 3, 8 * n + 2]:
            bad.append((pair, n, k, p, lengths))
    return bad


# Four n = 3 cells at p = 43 (k = 0, 1) are listed although the cubic factor of
# the n = 3 properness hypothesis vanishes there; their walks hit loop vertices
# and no subdivision arises. The literal criterion cannot hold.
@pytest.mark.xfail(strict=True, reason="table pairs at p = 43, n = 3 violate the properness hypothesis")
def test_criterion_04_certificates():
    t0 = time.perf_counter()
    jobs = _certificate_jobs()
    bad = _certificate_failures(jobs)
    report(4, "every table / n=1 / special pair gives a verified subdivision with 3 tours", not bad,
           time.perf_counter() - t0, 60, f"{len(jobs)} certificates" + (f"; unverified {bad}" if bad else ""))


def test_criterion_04_failures_are_exactly_the_improper_cells():
    jobs = _certificate_jobs()
    bad = _certificate_failures(jobs)
    expected = [((26, 8), 3, 0, 43), ((38, 8), 3, 0, 43), ((12, 15), 3, 1, 43), ((41, 15), 3, 1, 43)]
    assert sorted(bad) == sorted(expected)
    for _, n, k, p in bad:
        rep = properness_resultants(n, k, p)
        assert not rep.hypotheses and not rep.guaranteed
    assert len(jobs) - len(bad) > 1800


def test_criterion_05_completeness():
    t0 = time.perf_counter()
    bad = []
    for p in primes_between(5, 31):
        for k in range(-3, 7):
            g = enumerate_graph(k, p)
            for n in (1, 2, 3):
                if brute_sextuples(g, n) != predicted_sextuples(n, k, p):
                    bad.append((p, k, n))
    report(5, "brute sextuple search equals sign orbits of T^all plus exceptional set", not bad,
           time.perf_counter() - t0, 120, str(bad[:3]) if bad else "")


def test_criterion_06_root_count():
    t0 = time.perf_counter()
    bad, compared, branch = [], 0, 0
    for p in primes_between(5, 500):
        F = field(p)
        for k in range(-10, 11):
            if quartic_guard(k, F):
                continue
            want = sum(m for _, m in roots(compute_B(2, k % p, F)))
            prof = quartic_profile(k, F)
            compared += 1
            if prof.count != want:
                bad.append((p, k, prof.count, want))
            if F.legendre(eta2_int(k)) == -1:
                branch += 1
                if prof.S_p1 != 275 * F.inv(16) % p or prof.mu != 5 * F.inv(4) % p:
                    bad.append((p, k, "branch constants"))
    report(6, "quartic root count equals brute count; S_{p+1} = 275/16, mu = 5/4", not bad and branch > 0,
           time.perf_counter() - t0, 30, f"{compared} cases, {branch} in the eta = -1 branch")


def test_criterion_07_disjointness():
    t0 = time.perf_counter()
    ok = True
    notes = []
    rep = disjoint_copies(build_cert(solve_n1(0, 11).dist_pairs[0], 1, 0, 11))
    ok &= rep.disjoint
    checked = 0
    for p in primes_between(7, 100):
        if field(p).legendre(5) != 1:
            continue
        sol = solve_n1(3, p)
        if not sol.dist_pairs:
            continue
        r = disjoint_copies(build_cert(sol.dist_pairs[0], 1, 3, p))
        checked += 1
        if not r.disjoint:
            ok = False
            notes.append(p)
    rep2 = disjoint_copies(build_cert(solve_n1(2, 11).dist_pairs[0], 1, 2, 11))
    comp = set(enumerate_graph(2, 11).component_of((1, 1, 1)))
    g = enumerate_graph(2, 11)
    inside = all(g.index(t) in comp for c in rep2.copies for t in c.vertex_set)
    ok &= (not rep2.disjoint) and inside and len(comp) == 16
    report(7, "sign copies disjoint (k=0 p=11, k=3 with (5/p)=1); k=2 overlap detected", ok,
           time.perf_counter() - t0, 10, f"{checked} k=3 primes" + (f" overlapping at {notes}" if notes else ""))


LISTED_B = {
    0: (205, sorted({r % 205 for v in (6, 11, 14, 19, 24, 26, 29, 34, 44, 54, 56, 69, 71, 76, 79, 89, 94, 96, 99, 101)
                     for r in (v, -v)})),
    1: (55, [6, 19, 21, 24, 29, 39, 41, 46, 51, 54]),
    2: (155, [6, 11, 21, 24, 26, 29, 34, 44, 46, 54, 61, 74, 79, 84, 86, 89, 91, 96, 99, 104, 106, 114, 116,
              119, 136, 139, 141, 146, 151, 154]),
    3: (95, [14, 21, 29, 31, 34, 41, 46, 51, 56, 59, 69, 71, 79, 84, 86, 89, 91, 94]),
}


def test_criterion_08_density():
    t0 = time.perf_counter()
    rep = density_sweep(0, 100_000, workers=int(os.environ.get("MF_THREADS", "4")))
    r = rep.ratios
    ok = r["union"] >= 13 / 16 - 0.02
    ok &= abs(r["n1"] - 0.5) <= 0.02 and abs(r["special"] - 0.5) <= 0.02 and abs(r["n2B"] - 0.25) <= 0.02
    for k, (M, listed) in LISTED_B.items():
        ok &= congruence_classes_n2B(k) == (M, listed)
        for p in primes_between(5, 3000):
            v = verdict("n2B", k, p)
            if v.guard is None and M % p:
                ok &= v.holds == (p % M in listed)
    report(8, "density ratios near 13/16, 1/2, 1/4, 1/2; (B) congruence lists exact", ok,
           time.perf_counter() - t0, 120,
           f"union {r['union']:.4f} n1 {r['n1']:.4f} n2B {r['n2B']:.4f} special {r['special']:.4f}")


def test_criterion_09_topology():
    t0 = time.perf_counter()
    absent = find_k33(enumerate_graph(0, 7), 120, exhaustive=True)
    found = {p: find_2k33(enumerate_graph(0, p), 120).cert is not None for p in (11, 13, 17)}
    ids = identity_suite(m_max=12, primes=(101, 65537, 1000003))
    ok = absent.proven_absent and all(found.values()) and ids.ok
    report(9, "G(7) has no K33 (exhaustive); 2K33 in G(11), G(13), G(17); identity suites", ok,
           time.perf_counter() - t0, 300, f"{ids.checks} identity checks")


def test_criterion_10_declared():
    t0 = time.perf_counter()
    # Declared out of reach at desk scale. As a proxy, G(p) minus the origin is
    # connected for every prime p < 400.
    ok = all(len(enumerate_graph(0, p).components()) == 2 for p in primes_between(5, 400))
    line = (f"criterion 10 DECLARED  connectivity to 1e6, effective bound, expansion, exact densities "
            f"are not reproduced; proxy connectivity p < 400 {'holds' if ok else 'FAILS'} "
            f"({time.perf_counter() - t0:.2f}s)")
    RESULTS.append(line)
    print(line)
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
