"""The graph G_k(p) on solutions of x^2 + y^2 + z^2 = xyz + k over F_p.

Edges come from the three Vieta involutions R_1, R_2, R_3. Vertices are kept
as a sorted int64 array of codes (x*p + y)*p + z so lookups are binary searches
and the whole graph lives in a handful of numpy arrays.
"""

from __future__ import annotations

import enum
import json
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .ff import FpContext, field

MAX_GRAPH_MODULUS = 1 << 20


class CountMismatch(RuntimeError):
    """Enumeration disagrees with the closed-form point count."""


class Triple(NamedTuple):
    x: int
    y: int
    z: int

    def __str__(self) -> str:
        return f"{self.x},{self.y},{self.z}"


class SignChange(enum.Enum):
    IDENTITY = (1, 1, 1)
    FLIP_YZ = (1, -1, -1)
    FLIP_XZ = (-1, 1, -1)
    FLIP_XY = (-1, -1, 1)

    def compose(self, other: "SignChange") -> "SignChange":
        return SignChange(tuple(a * b for a, b in zip(self.value, other.value)))

    @property
    def label(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.value)

    @classmethod
    def from_label(cls, label: str) -> "SignChange":
        for s in cls:
            if s.label == label:
                return s
        raise ValueError(f"unknown sign change {label!r}")


def on_surface(t: Sequence[int], kappa: int, p: int) -> bool:
    x, y, z = t
    return (x * x + y * y + z * z - x * y * z - kappa) % p == 0


def vieta(i: int, t: Sequence[int], p: int) -> Triple:
    """R_i: swap the i-th coordinate (1-based) for the other root of its quadratic."""
    x, y, z = t
    if i == 1:
        return Triple((y * z - x) % p, y, z)
    if i == 2:
        return Triple(x, (z * x - y) % p, z)
    if i == 3:
        return Triple(x, y, (x * y - z) % p)
    raise ValueError(f"axis must be 1, 2 or 3, got {i}")


def sign_change(s: SignChange, t: Sequence[int], p: int) -> Triple:
    return Triple(*((c * e) % p for c, e in zip(s.value, t)))


def path_walk(start: Sequence[int], word: Iterable[int], p: int) -> list[Triple]:
    out = [Triple(*start)]
    for i in word:
        out.append(vieta(i, out[-1], p))
    return out


def carlitz_count(kappa: int, p: int) -> int:
    ctx = field(p)
    return p * p + (3 + ctx.legendre(kappa)) * ctx.legendre(kappa - 4) * p + 1


def _sqrt_table(p: int) -> np.ndarray:
    """table[a] = smallest square root of a, or -1 for non-residues."""
    r = np.arange(p, dtype=np.int64)
    sq = r * r % p
    table = np.full(p, -1, dtype=np.int64)
    # assign in descending order so the smaller root wins
    table[sq[::-1]] = r[::-1]
    return table


def enumerate_codes(kappa: int, p: int, chunk: int = 1 << 22) -> np.ndarray:
    """Sorted codes of all solutions, solving the quadratic in z per (x, y)."""
    kappa %= p
    table = _sqrt_table(p)
    inv2 = (p + 1) // 2
    ys = np.arange(p, dtype=np.int64)
    rows = max(1, chunk // p)
    parts = []
    for x0 in range(0, p, rows):
        xs = np.arange(x0, min(p, x0 + rows), dtype=np.int64)
        X = np.repeat(xs, p)
        Y = np.tile(ys, len(xs))
        b = X * Y % p
        disc = (b * b - 4 * ((X * X + Y * Y - kappa) % p)) % p
        s = table[disc]
        ok = s >= 0
        X, Y, b, s = X[ok], Y[ok], b[ok], s[ok]
        z1 = (b + s) % p * inv2 % p
        z2 = (b - s) % p * inv2 % p
        base = (X * p + Y) * p
        parts.append(base + z1)
        double = s != 0
        parts.append(base[double] + z2[double])
    codes = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    codes.sort()
    return codes


def enumerate_brute(kappa: int, p: int) -> np.ndarray:
    """O(p^3) reference enumeration."""
    r = np.arange(p, dtype=np.int64)
    X, Y, Z = np.meshgrid(r, r, r, indexing="ij")
    mask = (X * X + Y * Y + Z * Z - X * Y * Z - kappa) % p == 0
    return np.sort(((X * p + Y) * p + Z)[mask])


class MarkoffGraph:
    """G_k(p) with implicit adjacency: neighbour j of vertex i along axis a is nbr[a, i]."""

    def __init__(self, kappa: int, ctx: FpContext, codes: np.ndarray):
        p = ctx.p
        self.ctx = ctx
        self.p = p
        self.kappa = kappa % p
        self.codes = codes
        self.xs = codes // (p * p)
        self.ys = codes // p % p
        self.zs = codes % p
        # each (x, y) prefix carries at most two z values, so a prefix offset
        # table turns lookups into O(1) gathers
        counts = np.bincount(codes // p, minlength=p * p)
        self._start = np.concatenate(([0], np.cumsum(counts)[:-1])).astype(np.int64)
        n1 = (self.ys * self.zs - self.xs) % p
        n2 = (self.zs * self.xs - self.ys) % p
        n3 = (self.xs * self.ys - self.zs) % p
        self.nbr = np.stack([
            self.lookup_codes((n1 * p + self.ys) * p + self.zs),
            self.lookup_codes((self.xs * p + n2) * p + self.zs),
            self.lookup_codes((self.xs * p + self.ys) * p + n3),
        ])
        self.origin = self.index((0, 0, 0)) if self.kappa == 0 else None

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def vertex_count(self) -> int:
        return len(self.codes)

    def code(self, t: Sequence[int]) -> int:
        x, y, z = (int(c) % self.p for c in t)
        return (x * self.p + y) * self.p + z

    def lookup_codes(self, codes: np.ndarray) -> np.ndarray:
        n = len(self.codes)
        if n == 0:
            return np.empty(0, dtype=np.int64)
        idx = np.minimum(self._start[codes // self.p], n - 1)
        second = np.minimum(idx + 1, n - 1)
        idx = np.where(self.codes[idx] == codes, idx, second)
        if not np.all(self.codes[idx] == codes):
            raise CountMismatch("involution image missing from vertex set")
        return idx

    def index(self, t: Sequence[int]) -> int | None:
        c = self.code(t)
        i = int(np.searchsorted(self.codes, c))
        if i < len(self.codes) and self.codes[i] == c:
            return i
        return None

    def __contains__(self, t) -> bool:
        return self.index(t) is not None

    def triple(self, i: int) -> Triple:
        return Triple(int(self.xs[i]), int(self.ys[i]), int(self.zs[i]))

    def vertices(self) -> Iterable[Triple]:
        for i in range(len(self.codes)):
            yield self.triple(i)

    def neighbors(self, i: int) -> tuple[int, int, int]:
        return tuple(int(self.nbr[a, i]) for a in range(3))

    def edges(self) -> list[tuple[int, int, int]]:
        """Edge multiset as (i, j, axis) with i <= j; loops appear once."""
        out = []
        for a in range(3):
            src = np.arange(len(self.codes))
            dst = self.nbr[a]
            keep = src <= dst
            out.extend(zip(src[keep].tolist(), dst[keep].tolist(), [a + 1] * int(keep.sum())))
        return out

    def loops(self) -> int:
        return int(sum((self.nbr[a] == np.arange(len(self.codes))).sum() for a in range(3)))

    def component_labels(self) -> tuple[int, np.ndarray]:
        n = len(self.codes)
        src = np.tile(np.arange(n), 3)
        dst = self.nbr.reshape(-1)
        adj = coo_matrix((np.ones(3 * n, dtype=np.int8), (src, dst)), shape=(n, n))
        return connected_components(adj, directed=False)

    def components(self) -> list[tuple[int, Triple]]:
        """(size, smallest member) per component, sizes descending."""
        ncomp, labels = self.component_labels()
        sizes = np.bincount(labels, minlength=ncomp)
        _, first = np.unique(labels, return_index=True)
        comps = [(int(sizes[c]), self.triple(int(first[c]))) for c in range(ncomp)]
        return sorted(comps, key=lambda sr: (-sr[0], sr[1]))

    def component_of(self, t: Sequence[int]) -> list[int]:
        i = self.index(t)
        if i is None:
            raise KeyError(f"{tuple(t)} is not a vertex")
        _, labels = self.component_labels()
        return [int(j) for j in np.flatnonzero(labels == labels[i])]

    def to_networkx(self, simple: bool = True, exclude_origin: bool = True, vertices=None):
        """networkx view; loops and parallel edges dropped when simple=True."""
        import networkx as nx

        g = nx.Graph() if simple else nx.MultiGraph()
        keep = set(range(len(self.codes)) if vertices is None else vertices)
        if exclude_origin and self.origin is not None:
            keep.discard(self.origin)
        g.add_nodes_from(keep)
        for i, j, a in self.edges():
            if i in keep and j in keep and not (simple and i == j):
                g.add_edge(i, j, axis=a)
        return g

    def summary(self) -> dict:
        return {
            "p": self.p,
            "kappa": self.kappa,
            "vertex_count": self.vertex_count,
            "carlitz_count": carlitz_count(self.kappa, self.p),
            "component_sizes": [s for s, _ in self.components()],
        }

    def to_dot(self, color_axes: bool = True) -> str:
        colors = {1: "red", 2: "blue", 3: "darkgreen"}
        lines = ["graph G {"]
        for i in range(len(self.codes)):
            lines.append(f'  {i} [label="{self.triple(i)}"];')
        for i, j, a in self.edges():
            attr = f' [color={colors[a]}]' if color_axes else ""
            lines.append(f"  {i} -- {j}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_graphml(self) -> str:
        import networkx as nx

        g = nx.MultiGraph()
        for i in range(len(self.codes)):
            g.add_node(i, label=str(self.triple(i)))
        for i, j, a in self.edges():
            g.add_edge(i, j, axis=a)
        return "\n".join(nx.generate_graphml(g)) + "\n"

    def summary_json(self) -> str:
        return json.dumps(self.summary())


def enumerate_graph(kappa: int, ctx: FpContext | int) -> MarkoffGraph:
    """Build G_k(p); the vertex count is checked against the closed-form count."""
    if isinstance(ctx, int):
        ctx = field(ctx)
    if ctx.p >= MAX_GRAPH_MODULUS:
        raise ValueError(f"p={ctx.p} is too large to materialise the graph")
    codes = enumerate_codes(kappa, ctx.p)
    want = carlitz_count(kappa, ctx.p)
    if len(codes) != want:
        raise CountMismatch(f"enumerated {len(codes)} points, expected {want} (kappa={kappa}, p={ctx.p})")
    return MarkoffGraph(kappa, ctx, codes)
