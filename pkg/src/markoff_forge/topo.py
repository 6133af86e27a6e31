"""Short-cycle census, Euler-characteristic bounds, and K_{3,3} / 2K_{3,3} searches.

All searches run on the simple graph underlying G_k(p) (loops and parallel
edges dropped, origin removed for k = 0); a subdivision never uses either.
Every certificate returned is re-checked by :func:`verify_obstruction`.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

import networkx as nx

from .ff import field
from .markoff import MarkoffGraph, SignChange, Triple, sign_change
from .subdivision import SCHEMA, SubdivisionCert, build_cert, solve, solve_special


# --- census -------------------------------------------------------------------

@dataclass
class CycleCensus:
    counts: dict[int, int]
    girth: int | None

    @property
    def s(self) -> int:
        return self.counts.get(4, 0)

    @property
    def h(self) -> int:
        return self.counts.get(6, 0)


def count_cycles(G: nx.Graph, max_len: int) -> dict[int, int]:
    """Simple cycles of each length 3..max_len, each counted once."""
    order = {v: i for i, v in enumerate(G.nodes)}
    adj = {v: [w for w in G[v] if w != v] for v in G.nodes}
    counts = {k: 0 for k in range(3, max_len + 1)}
    for v in G.nodes:
        rv = order[v]
        stack = [(v, [v])]
        while stack:
            u, path = stack.pop()
            for w in adj[u]:
                if w == v and len(path) >= 3:
                    counts[len(path)] += 1
                elif order[w] > rv and w not in path and len(path) < max_len:
                    stack.append((w, path + [w]))
    return {k: c // 2 for k, c in counts.items()}


def cycle_census(g: MarkoffGraph | nx.Graph, max_len: int = 6) -> CycleCensus:
    if max_len > 8:
        raise ValueError("max_len is capped at 8")
    G = g.to_networkx() if isinstance(g, MarkoffGraph) else g
    counts = count_cycles(G, max_len)
    girth = min((k for k, c in counts.items() if c), default=None)
    return CycleCensus(counts, girth)


# --- Euler bounds -------------------------------------------------------------

def euler_bound(p: int, chi: int, s: int, h: int) -> int:
    """V <= 15 (p - 4 - (-1/p)) + 6s + 2h - 14 chi."""
    return 15 * (p - 4 - field(p).legendre(-1)) + 6 * s + 2 * h - 14 * chi


_BRANCHES = {1: (26, -90), 5: (26, -82), 7: (17, -51), 11: (17, -43)}


def euler_bound_branch(p: int, chi: int) -> int:
    """The bound with the square/hexagon counts substituted, by p mod 12."""
    a, b = _BRANCHES[p % 12]
    return a * p + b - 14 * chi


def implied_square_hexagon_term(p: int) -> int:
    """The value of 6s + 2h that turns the general bound into its p mod 12 branch."""
    return euler_bound_branch(p, 0) - euler_bound(p, 0, 0, 0)


def totient(n: int) -> int:
    out, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            out -= out // q
        q += 1
    if m > 1:
        out -= out // m
    return out


def totient_lower_bound(p: int) -> float:
    return p * (p + 1) / (1000 * math.log(math.log(p + 1)))


def crossover_prime_bound(chi: int = 0) -> int:
    """Largest integer p with p(p+1)/(1000 loglog(p+1)) <= 26p - 82 - 14 chi.

    Newton's method on the real gap function, then an integer scan around the root.
    """
    def gap(x: float) -> float:
        return x * (x + 1) / (1000 * math.log(math.log(x + 1))) - (26 * x - 82 - 14 * chi)

    def dgap(x: float) -> float:
        L = math.log(x + 1)
        LL = math.log(L)
        return (2 * x + 1) / (1000 * LL) - x / (1000 * LL * LL * L) - 26

    x = 1e5
    for _ in range(100):
        step = gap(x) / dgap(x)
        x -= step
        if abs(step) < 1e-9:
            break
    p = int(math.floor(x)) + 2
    while gap(p) > 0:
        p -= 1
    return p


# --- obstruction certificates -------------------------------------------------

@dataclass
class PathSystem:
    """A K_{3,3}-subdivision: sides A, B of branch vertices and nine connecting paths."""

    side_a: tuple
    side_b: tuple
    paths: list[list]

    @property
    def vertex_set(self) -> set:
        out = set(self.side_a) | set(self.side_b)
        for pth in self.paths:
            out.update(pth)
        return out

    @classmethod
    def from_subdivision(cls, cert: SubdivisionCert) -> "PathSystem":
        s = cert.sextuple
        return cls(tuple(s.X), tuple(s.Y), [list(pr.vertices) for pr in cert.paths])


@dataclass
class ObstructionCert:
    kind: str  # "K33", "TwoK33" or "Custom"
    p: int
    kappa: int
    parts: list
    source: str = ""
    pattern: list | None = None

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA, "kind": self.kind, "p": self.p, "kappa": self.kappa,
               "source": self.source, "parts": []}
        for part in self.parts:
            if isinstance(part, PathSystem):
                out["parts"].append({
                    "side_a": [list(t) for t in part.side_a],
                    "side_b": [list(t) for t in part.side_b],
                    "paths": [[list(t) for t in pth] for pth in part.paths],
                })
            else:
                out["parts"].append({"branch": {str(k): list(v) for k, v in part["branch"].items()},
                                     "paths": [[list(t) for t in pth] for pth in part["paths"]]})
        if self.pattern is not None:
            out["pattern"] = [list(e) for e in self.pattern]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _is_edge(G: nx.Graph, u, v) -> bool:
    return u != v and G.has_edge(u, v)


def verify_path_system(G: nx.Graph, ps: PathSystem) -> bool:
    """Nine paths joining every A-B pair once, internally disjoint, all edges in G."""
    branch = list(ps.side_a) + list(ps.side_b)
    if len(set(branch)) != 6 or len(ps.paths) != 9:
        return False
    if not all(v in G for v in branch):
        return False
    seen_pairs = set()
    inner_all: list = []
    for pth in ps.paths:
        if len(pth) < 2:
            return False
        ends = {pth[0], pth[-1]}
        a = [v for v in ends if v in ps.side_a]
        b = [v for v in ends if v in ps.side_b]
        if len(a) != 1 or len(b) != 1:
            return False
        seen_pairs.add((a[0], b[0]))
        if not all(_is_edge(G, u, v) for u, v in zip(pth, pth[1:])):
            return False
        if len(set(pth)) != len(pth):
            return False
        inner_all.extend(pth[1:-1])
    if len(seen_pairs) != 9:
        return False
    return len(inner_all) == len(set(inner_all)) and not set(inner_all) & set(branch)


def verify_obstruction(G: nx.Graph, cert: ObstructionCert) -> bool:
    if cert.kind == "K33":
        return len(cert.parts) == 1 and verify_path_system(G, cert.parts[0])
    if cert.kind == "TwoK33":
        if len(cert.parts) != 2 or not all(verify_path_system(G, ps) for ps in cert.parts):
            return False
        return not (cert.parts[0].vertex_set & cert.parts[1].vertex_set)
    if cert.kind == "Custom":
        return verify_pattern_embedding(G, cert.pattern, cert.parts[0])
    return False


# --- graph views keyed by triples ---------------------------------------------

def triple_graph(g: MarkoffGraph) -> nx.Graph:
    """Simple graph on Triple labels (origin excluded for k = 0)."""
    H = g.to_networkx()
    return nx.relabel_nodes(H, {i: g.triple(i) for i in H.nodes})


def graph_automorphisms(p: int):
    """Sign changes composed with coordinate permutations (all commute with the involution set)."""
    for s in SignChange:
        for perm in permutations(range(3)):
            yield lambda t, s=s, perm=perm: sign_change(s, tuple(t[i] for i in perm), p)


def orbit_representatives(G: nx.Graph, p: int) -> list:
    seen: set = set()
    reps = []
    autos = list(graph_automorphisms(p))
    for v in sorted(G.nodes):
        if v in seen:
            continue
        reps.append(v)
        for f in autos:
            seen.add(Triple(*f(v)))
    return reps


# --- exhaustive K33 search ----------------------------------------------------

class SearchBudgetExceeded(RuntimeError):
    pass


def _crosses(pos: dict, e1: tuple, e2: tuple) -> bool:
    a, b = sorted((pos[e1[0]], pos[e1[1]]))
    inside = [a < pos[x] < b for x in e2]
    return inside[0] != inside[1]


def _cycle_paths(G: nx.Graph, cyc: list, deadline: float) -> list[tuple[tuple, frozenset, list]]:
    """All C-paths: endpoints on the cycle, interior (possibly empty) off it, not a cycle edge."""
    on = set(cyc)
    L = len(cyc)
    cyc_edges = {frozenset((cyc[i], cyc[(i + 1) % L])) for i in range(L)}
    out = []
    for u in cyc:
        for w in G[u]:
            if w in on:
                if frozenset((u, w)) not in cyc_edges and u < w:
                    out.append(((u, w), frozenset(), [u, w]))
                continue
            stack = [(w, [u, w])]
            while stack:
                if time.monotonic() > deadline:
                    raise SearchBudgetExceeded
                x, path = stack.pop()
                for y in G[x]:
                    if y in on:
                        if y != u and u < y:
                            out.append(((u, y), frozenset(path[1:]), path + [y]))
                    elif y not in path:
                        stack.append((y, path + [y]))
    return out


def _k33_on_cycle(G: nx.Graph, cyc: list, deadline: float) -> PathSystem | None:
    pos = {v: i for i, v in enumerate(cyc)}
    cps = _cycle_paths(G, cyc, deadline)
    for i in range(len(cps)):
        e1, m1, p1 = cps[i]
        for j in range(i + 1, len(cps)):
            e2, m2, p2 = cps[j]
            if set(e1) & set(e2) or m1 & m2 or not _crosses(pos, e1, e2):
                continue
            for k in range(j + 1, len(cps)):
                e3, m3, p3 = cps[k]
                if set(e3) & (set(e1) | set(e2)) or m3 & (m1 | m2):
                    continue
                if _crosses(pos, e1, e3) and _crosses(pos, e2, e3):
                    return _system_from_cycle(cyc, [p1, p2, p3])
    return None


def _system_from_cycle(cyc: list, chords: list[list]) -> PathSystem:
    pos = {v: i for i, v in enumerate(cyc)}
    ends = sorted([pos[c[0]] for c in chords] + [pos[c[-1]] for c in chords])
    branch = [cyc[i] for i in ends]
    side_a, side_b = tuple(branch[0::2]), tuple(branch[1::2])
    paths = [list(c) for c in chords]
    L = len(cyc)
    for t in range(6):
        i, j = ends[t], ends[(t + 1) % 6]
        seg = [cyc[(i + d) % L] for d in range(((j - i) % L) + 1)]
        paths.append(seg)
    return PathSystem(side_a, side_b, paths)


@dataclass
class SearchResult:
    cert: ObstructionCert | None
    exhaustive: bool
    elapsed: float
    note: str = ""

    @property
    def proven_absent(self) -> bool:
        return self.cert is None and self.exhaustive


def exhaustive_k33(G: nx.Graph, p: int, kappa: int, time_budget: float = 60.0,
                   use_symmetry: bool = True) -> SearchResult:
    """Try every cycle as the hexagon of a K_{3,3}; the three remaining branch
    paths must then be pairwise crossing, disjoint cycle chords.

    Cycles are enumerated through one vertex per automorphism orbit only.
    """
    t0 = time.monotonic()
    deadline = t0 + time_budget
    # an automorphism maps any cycle onto one through a representative
    reps = set(orbit_representatives(G, p)) if use_symmetry else set(G.nodes)
    checked = 0
    try:
        for cyc in nx.simple_cycles(G):
            if time.monotonic() > deadline:
                raise SearchBudgetExceeded
            if len(cyc) < 6 or reps.isdisjoint(cyc):
                continue
            checked += 1
            ps = _k33_on_cycle(G, cyc, deadline)
            if ps is not None:
                cert = ObstructionCert("K33", p, kappa, [ps], "exhaustive")
                if not verify_obstruction(G, cert):
                    raise RuntimeError("exhaustive search produced an invalid certificate")
                return SearchResult(cert, True, time.monotonic() - t0)
    except SearchBudgetExceeded:
        return SearchResult(None, False, time.monotonic() - t0, "time budget exhausted")
    return SearchResult(None, True, time.monotonic() - t0, f"{checked} hexagon candidates checked")


# --- constructive K33 search --------------------------------------------------

def kuratowski_k33(G: nx.Graph) -> PathSystem | None:
    """Path system from a Kuratowski subgraph, when G is non-planar and it is K_{3,3}-type."""
    planar, sub = nx.check_planarity(G, counterexample=True)
    if planar:
        return None
    deg = dict(sub.degree())
    branch = [v for v, d in deg.items() if d == 3]
    if len(branch) != 6 or any(d not in (2, 3) for d in deg.values()):
        return None
    bset = set(branch)
    paths = []
    for b in branch:
        for w in sub[b]:
            path = [b, w]
            while path[-1] not in bset:
                nxt = [y for y in sub[path[-1]] if y != path[-2]]
                path.append(nxt[0])
            if path[0] < path[-1] or (path[0] == path[-1]):
                paths.append(path)
    contracted = nx.Graph((pth[0], pth[-1]) for pth in paths)
    if not nx.is_bipartite(contracted):
        return None
    a, b = nx.bipartite.sets(contracted)
    return PathSystem(tuple(sorted(a)), tuple(sorted(b)), paths)


def candidate_subdivisions(g: MarkoffGraph, n_max: int | None = None) -> list[SubdivisionCert]:
    """Verified certificates from the sextuple construction, all n and sign copies."""
    p, k = g.p, g.kappa
    n_max = n_max or (p - 1) // 2
    found = []
    seen = set()
    sols = [solve(n, k, p) for n in range(1, n_max + 1)]
    sp = solve_special(k, p)
    if sp.all_pairs:
        sols.append(sp)
    for sol in sols:
        for pair in sol.dist_pairs:
            for sg in SignChange:
                try:
                    cert = build_cert(pair, sol.n, k, p, sg)
                except (ValueError, RuntimeError):
                    continue
                key = frozenset(cert.vertex_set)
                if cert.verified and key not in seen:
                    seen.add(key)
                    found.append(cert)
    return sorted(found, key=lambda c: len(c.vertex_set))


def find_k33(g: MarkoffGraph, time_budget: float = 60.0, exhaustive: bool = False) -> SearchResult:
    t0 = time.monotonic()
    G = triple_graph(g)
    if exhaustive:
        return exhaustive_k33(G, g.p, g.kappa, time_budget)
    for cert in candidate_subdivisions(g):
        ob = ObstructionCert("K33", g.p, g.kappa, [PathSystem.from_subdivision(cert)], f"sextuple n={cert.n}")
        if verify_obstruction(G, ob):
            return SearchResult(ob, False, time.monotonic() - t0)
    ps = kuratowski_k33(G)
    if ps is not None:
        ob = ObstructionCert("K33", g.p, g.kappa, [ps], "kuratowski")
        if verify_obstruction(G, ob):
            return SearchResult(ob, False, time.monotonic() - t0)
    return SearchResult(None, False, time.monotonic() - t0, "not found within budget")


def find_2k33(g: MarkoffGraph, time_budget: float = 120.0) -> SearchResult:
    """Two vertex-disjoint K_{3,3}-subdivisions.

    First pairs of sextuple certificates (including sign copies), then for each
    known copy a Kuratowski search in the graph with that copy deleted.
    """
    t0 = time.monotonic()
    deadline = t0 + time_budget
    G = triple_graph(g)
    systems = [(PathSystem.from_subdivision(c), f"sextuple n={c.n} sign={c.sextuple.sign.label}")
               for c in candidate_subdivisions(g)]
    for (a, sa), (b, sb) in combinations(systems, 2):
        if not a.vertex_set & b.vertex_set:
            ob = ObstructionCert("TwoK33", g.p, g.kappa, [a, b], f"{sa} + {sb}")
            if verify_obstruction(G, ob):
                return SearchResult(ob, False, time.monotonic() - t0)
    seeds = list(systems)
    first = kuratowski_k33(G)
    if first is not None:
        seeds.append((first, "kuratowski"))
    for ps, label in seeds:
        if time.monotonic() > deadline:
            break
        rest = G.subgraph(set(G.nodes) - ps.vertex_set).copy()
        other = kuratowski_k33(rest)
        if other is not None:
            ob = ObstructionCert("TwoK33", g.p, g.kappa, [ps, other], f"{label} + kuratowski on complement")
            if verify_obstruction(G, ob):
                return SearchResult(ob, False, time.monotonic() - t0)
    return SearchResult(None, False, time.monotonic() - t0, "not found within budget")


# --- custom pattern search ----------------------------------------------------

def verify_pattern_embedding(G: nx.Graph, pattern: Sequence[tuple], emb: dict) -> bool:
    """emb = {"branch": {pattern vertex: host vertex}, "paths": [host path per pattern edge]}."""
    branch = emb["branch"]
    hosts = list(branch.values())
    if len(set(hosts)) != len(hosts) or len(emb["paths"]) != len(pattern):
        return False
    inner: list = []
    for (a, b), pth in zip(pattern, emb["paths"]):
        if {pth[0], pth[-1]} != {branch[a], branch[b]} or len(set(pth)) != len(pth):
            return False
        if not all(_is_edge(G, u, v) for u, v in zip(pth, pth[1:])):
            return False
        inner.extend(pth[1:-1])
    return len(inner) == len(set(inner)) and not set(inner) & set(hosts)


def find_pattern(G: nx.Graph, pattern: Sequence[tuple], time_budget: float = 30.0,
                 max_path: int | None = None) -> tuple[dict | None, bool]:
    """Backtracking search for a subdivision of `pattern` in G.

    Returns (embedding or None, exhaustive). Pattern edges are routed one at a
    time along simple paths through unused vertices.
    """
    deadline = time.monotonic() + time_budget
    pattern = [tuple(e) for e in pattern]
    pdeg: dict = {}
    for a, b in pattern:
        pdeg[a] = pdeg.get(a, 0) + 1
        pdeg[b] = pdeg.get(b, 0) + 1
    # route edges so each new edge touches an already placed vertex when possible
    order: list = []
    placed: set = set()
    remaining = list(pattern)
    while remaining:
        nxt = next((e for e in remaining if e[0] in placed or e[1] in placed), remaining[0])
        remaining.remove(nxt)
        order.append(nxt)
        placed.update(nxt)
    limit = max_path or len(G)
    nodes = sorted(G.nodes)
    hdeg = dict(G.degree())

    def routes(src, dst_fixed, used):
        stack = [(src, [src])]
        while stack:
            if time.monotonic() > deadline:
                raise SearchBudgetExceeded
            x, path = stack.pop()
            for y in G[x]:
                if y in path:
                    continue
                if dst_fixed is not None:
                    if y == dst_fixed:
                        yield path + [y]
                    elif y not in used and len(path) < limit:
                        stack.append((y, path + [y]))
                elif y not in used:
                    yield path + [y]
                    if len(path) < limit:
                        stack.append((y, path + [y]))

    def rec(idx, branch, used, paths):
        if idx == len(order):
            return {"branch": dict(branch), "paths": [paths[order.index(e)] for e in pattern]}
        a, b = order[idx]
        if a not in branch and b in branch:
            a, b = b, a
        starts = [branch[a]] if a in branch else [v for v in nodes if v not in used and hdeg[v] >= pdeg[a]]
        for s in starts:
            new_a = a not in branch
            if new_a:
                branch[a] = s
                used.add(s)
            dst = branch.get(b)
            for pth in routes(s, dst, used):
                end = pth[-1]
                if dst is None and hdeg[end] < pdeg[b]:
                    continue
                inner = pth[1:-1]
                if dst is None:
                    branch[b] = end
                    used.add(end)
                used.update(inner)
                res = rec(idx + 1, branch, used, paths + [pth])
                if res:
                    return res
                used.difference_update(inner)
                if dst is None:
                    used.discard(end)
                    del branch[b]
            if new_a:
                used.discard(s)
                del branch[a]
        return None

    try:
        res = rec(0, {}, set(), [])
    except SearchBudgetExceeded:
        return None, False
    # the search is complete only when path lengths were not capped
    return res, max_path is None


def find_custom(g: MarkoffGraph, pattern: Sequence[tuple], time_budget: float = 30.0) -> SearchResult:
    t0 = time.monotonic()
    G = triple_graph(g)
    emb, exhaustive = find_pattern(G, pattern, time_budget)
    if emb is None:
        return SearchResult(None, exhaustive, time.monotonic() - t0)
    ob = ObstructionCert("Custom", g.p, g.kappa, [emb], "pattern search", [tuple(e) for e in pattern])
    if not verify_obstruction(G, ob):
        raise RuntimeError("pattern search produced an invalid embedding")
    return SearchResult(ob, exhaustive, time.monotonic() - t0)


def read_pattern(text: str) -> list[tuple[str, str]]:
    """Edge-list text: one `u v` pair per line, '#' comments allowed."""
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            u, v = line.split()[:2]
            edges.append((u, v))
    return edges


K33_PATTERN = [(a, b) for a in ("a1", "a2", "a3") for b in ("b1", "b2", "b3")]

