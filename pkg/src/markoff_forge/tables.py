"""Regeneration of the T^dist tables for n = 2, 3 and comparison with shipped golden text."""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from importlib import resources

from .criteria import w_int
from .density import sieve
from .subdivision import solve

TABLE_PRIMES = tuple(p for p in sieve(47) if p > 3)
TABLE_KAPPAS = (0, 1, 2, 3)
GOLDEN = {2: "table_n2.txt", 3: "table_n3.txt"}
HEADERS = {
    2: "# T^dist_{2,k}(p) for k = 0, 1, 2, 3; *** marks W_k = 0 mod p",
    3: "# T^dist_{3,k}(p) for k = 0, 1, 2, 3",
}
DEGENERATE_MARK = "***"


def format_cell(pairs) -> str:
    return "{" + ", ".join(f"({a},{b})" for a, b in pairs) + "}"


def table_cell(n: int, kappa: int, p: int) -> str:
    # only the n = 2 table marks degenerate cells, and only through W
    if n == 2 and w_int(kappa) % p == 0:
        return DEGENERATE_MARK
    return format_cell(solve(n, kappa, p).dist_pairs)


def render_table(n: int, primes=TABLE_PRIMES, kappas=TABLE_KAPPAS) -> str:
    lines = [HEADERS[n], "p | " + " | ".join(f"k={k}" for k in kappas)]
    for p in primes:
        lines.append(" | ".join([str(p)] + [table_cell(n, k, p) for k in kappas]))
    return "\n".join(lines) + "\n"


def golden_table(n: int) -> str:
    return resources.files("markoff_forge.data").joinpath(GOLDEN[n]).read_text()


@dataclass
class TableCheck:
    n: int
    rendered: str
    golden: str

    @property
    def matches(self) -> bool:
        return self.rendered == self.golden

    def diff(self) -> str:
        return "".join(difflib.unified_diff(
            self.golden.splitlines(True), self.rendered.splitlines(True),
            fromfile=f"golden/{GOLDEN[self.n]}", tofile="regenerated"))


def check_tables() -> list[TableCheck]:
    return [TableCheck(n, render_table(n), golden_table(n)) for n in (2, 3)]


def parse_table(text: str) -> dict[tuple[int, int], str | list[tuple[int, int]]]:
    """{(p, k): pairs or '***'} from the golden text layout."""
    rows = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    kappas = [int(h.split("=")[1]) for h in rows[0].split(" | ")[1:]]
    out: dict = {}
    for ln in rows[1:]:
        cells = ln.split(" | ")
        p = int(cells[0])
        for k, cell in zip(kappas, cells[1:]):
            if cell == DEGENERATE_MARK:
                out[(p, k)] = cell
                continue
            body = cell.strip("{}")
            pairs = []
            for chunk in body.split("), ") if body else []:
                a, b = chunk.strip("()").split(",")
                pairs.append((int(a), int(b)))
            out[(p, k)] = pairs
    return out
