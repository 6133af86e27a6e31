"""Prime sweeps measuring how often each construction applies.

For admissible k the four Legendre conditions behave like independent coin
flips, giving ratios 1/2 (n1, special) and 1/4 (n2B), and 13/16 for their union.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from math import isqrt

import numpy as np

from .criteria import eta2_int, verdict
from .ff import field

CONDITIONS = ("n1", "n2A", "n2B", "special")
UNION_PARTS = ("n1", "n2B", "special")
EXPECTED_RATIO = {"n1": 0.5, "n2B": 0.25, "special": 0.5, "union": 13 / 16}


def sieve(X: int) -> list[int]:
    if X < 2:
        return []
    flags = np.ones(X + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, isqrt(X) + 1):
        if flags[q]:
            flags[q * q::q] = False
    return np.flatnonzero(flags).tolist()


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("MF_THREADS", "1")))
    except ValueError:
        return 1


def _classify(args: tuple[int, list[int]]) -> list[tuple[int, bool, bool, bool, bool, bool]]:
    kappa, primes = args
    out = []
    for p in primes:
        ctx = field(p)
        excluded = verdict("density-excluded", kappa, ctx).holds
        flags = tuple(verdict(t, kappa, ctx).holds for t in CONDITIONS)
        out.append((p, excluded) + flags)
    return out


@dataclass
class DensityReport:
    kappa: int
    X: int
    primes: int = 0
    excluded: int = 0
    counts: dict = dc_field(default_factory=dict)
    ratios: dict = dc_field(default_factory=dict)
    inclusion_exclusion: dict = dc_field(default_factory=dict)
    admissible: bool = False
    label: str = ""

    CSV_FIELDS = ("kappa", "X", "count_n1", "count_n2A", "count_n2B", "count_special",
                  "count_union", "ratio_union")

    def csv_row(self) -> dict:
        return {
            "kappa": self.kappa, "X": self.X,
            "count_n1": self.counts["n1"], "count_n2A": self.counts["n2A"],
            "count_n2B": self.counts["n2B"], "count_special": self.counts["special"],
            "count_union": self.counts["union"], "ratio_union": f"{self.ratios['union']:.6f}",
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=self.CSV_FIELDS)
        w.writeheader()
        w.writerow(self.csv_row())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"schema": "markoff-forge/1", **asdict(self)})


def density_sweep(kappa: int, X: int, workers: int | None = None) -> DensityReport:
    """Evaluate every verdict for 3 < p <= X; guard-violating primes are tallied apart."""
    primes = [p for p in sieve(X) if p > 3]
    workers = workers or default_workers()
    if workers > 1 and len(primes) > 2000:
        chunks = [primes[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            rows = [r for part in pool.map(_classify, [(kappa, c) for c in chunks]) for r in part]
    else:
        rows = _classify((kappa, primes))
    rep = DensityReport(kappa, X)
    rep.primes = len(rows)
    kept = [r for r in rows if not r[1]]
    rep.excluded = len(rows) - len(kept)
    marks = {t: np.array([r[2 + i] for r in kept], dtype=bool) for i, t in enumerate(CONDITIONS)}
    union = marks["n1"] | marks["n2B"] | marks["special"]
    rep.counts = {t: int(m.sum()) for t, m in marks.items()}
    rep.counts["union"] = int(union.sum())
    rep.counts["union_with_n2A"] = int((union | marks["n2A"]).sum())
    total = max(1, len(kept))
    rep.ratios = {t: c / total for t, c in rep.counts.items()}
    a, b, c = (marks[t] for t in UNION_PARTS)
    terms = {
        "n1": int(a.sum()), "n2B": int(b.sum()), "special": int(c.sum()),
        "n1&n2B": int((a & b).sum()), "n1&special": int((a & c).sum()),
        "n2B&special": int((b & c).sum()), "n1&n2B&special": int((a & b & c).sum()),
    }
    terms["formula"] = (terms["n1"] + terms["n2B"] + terms["special"] - terms["n1&n2B"]
                        - terms["n1&special"] - terms["n2B&special"] + terms["n1&n2B&special"])
    rep.inclusion_exclusion = terms
    adm = kappa_admissibility(kappa)
    rep.admissible = adm.admissible
    rep.label = "admissible" if adm.admissible else "unconditional-empirical"
    return rep


# --- admissibility ------------------------------------------------------------

def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def ratio_is_square(a: int, b: int) -> bool:
    """a/b is the square of a rational number (a, b nonzero)."""
    return a * b > 0 and is_square(a * b)


@dataclass
class Admissibility:
    kappa: int
    quantities: dict
    squares: list[str]
    square_ratios: list[tuple[str, str]]
    eta1_square: bool

    @property
    def admissible(self) -> bool:
        return (self.kappa != 4 and all(v != 0 for v in self.quantities.values())
                and not self.squares and not self.square_ratios)


def kappa_admissibility(kappa: int) -> Admissibility:
    """Exact squareness of 5, k-4, 4k-7, eta_2 and of their pairwise ratios."""
    q = {"5": 5, "kappa-4": kappa - 4, "4kappa-7": 4 * kappa - 7, "eta2": eta2_int(kappa)}
    squares = [name for name, v in q.items() if is_square(v)]
    names = list(q)
    ratios = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = q[names[i]], q[names[j]]
            if a and b and ratio_is_square(a, b):
                ratios.append((names[i], names[j]))
    return Admissibility(kappa, q, squares, ratios, is_square(4 * kappa - 7))


def exceptional_kappas(lo: int, hi: int) -> dict[int, Admissibility]:
    """Inadmissible k in the closed window [lo, hi]; the search is exact inside the window only."""
    out = {}
    for k in range(lo, hi + 1):
        adm = kappa_admissibility(k)
        if not adm.admissible:
            out[k] = adm
    return out
