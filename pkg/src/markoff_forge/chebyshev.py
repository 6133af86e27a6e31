"""Chebyshev polynomials T_m, U_m, the family A_m = U_m + U_{m-1}, and the 2x2
transfer matrices describing iterated pairs of Vieta moves.

Graph-facing code always works in the half-argument convention: A_m(x/2) and
U_m(x/2) have integer coefficients, so they are built over Z first and then
reduced mod p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb

from .ff import FpContext, FpElt
from .poly import Poly, discriminant

IntPoly = tuple[int, ...]


# --- integer polynomials (low degree first) -----------------------------------

def _ip_trim(c: list[int]) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def ip_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return _ip_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def ip_scale(a: IntPoly, k: int) -> IntPoly:
    return _ip_trim([k * c for c in a])


def ip_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ip_trim(out)


def ip_shift(a: IntPoly, k: int = 1) -> IntPoly:
    return (0,) * k + a if a else a


def ip_neg_arg(a: IntPoly) -> IntPoly:
    """f(x) -> f(-x)."""
    return tuple(c if i % 2 == 0 else -c for i, c in enumerate(a))


def ip_eval(a: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _three_term(m: int, p0: IntPoly, p1: IntPoly, mult: IntPoly) -> IntPoly:
    """Sequence with P_{k+1} = mult * P_k - P_{k-1}."""
    if m == 0:
        return p0
    prev, cur = p0, p1
    for _ in range(m - 1):
        prev, cur = cur, ip_add(ip_mul(mult, cur), ip_scale(prev, -1))
    return cur


@lru_cache(maxsize=None)
def T_int(m: int) -> IntPoly:
    """T_m(x) over Z (m >= -2)."""
    if m == -2:
        return (-1, 0, 2)
    if m == -1:
        return (0, 1)
    return _three_term(m, (1,), (0, 1), (0, 2))


@lru_cache(maxsize=None)
def U_int(m: int) -> IntPoly:
    """U_m(x) over Z (m >= -2)."""
    if m == -2:
        return (-1,)
    if m == -1:
        return ()
    return _three_term(m, (1,), (0, 2), (0, 2))


@lru_cache(maxsize=None)
def A_int(m: int) -> IntPoly:
    """A_m(x) = U_m(x) + U_{m-1}(x) over Z."""
    return ip_add(U_int(m), U_int(m - 1))


@lru_cache(maxsize=None)
def U_half_int(m: int) -> IntPoly:
    """U_m(x/2), a monic integer polynomial of degree m."""
    if m == -2:
        return (-1,)
    if m == -1:
        return ()
    return _three_term(m, (1,), (0, 1), (0, 1))


@lru_cache(maxsize=None)
def A_half_int(m: int) -> IntPoly:
    """A_m(x/2), monic of degree m."""
    if m == 0:
        return (1,)
    return _three_term(m, (1,), (1, 1), (0, 1))


@lru_cache(maxsize=None)
def L_half_int(m: int) -> IntPoly:
    """2 T_m(x/2) (Lucas-type), monic of degree m for m >= 1."""
    return _three_term(m, (2,), (0, 1), (0, 1))


def A_half_closed_form(m: int) -> IntPoly:
    """Coefficients of A_m(x/2) from the binomial closed form, no recurrence."""
    out = [0] * (m + 1)
    for j in range(m + 1):
        out[m - j] = (-1) ** (j // 2) * comb((2 * m - j) // 2, j // 2)
    return _ip_trim(out)


def T_closed_form(m: int) -> IntPoly:
    """T_m(x) via t_{m,j} = (-1)^j/2 * (C(m-j, j) + C(m-j-1, j-1)), m >= 1."""
    out = [0] * (m + 1)
    for j in range(m // 2 + 1):
        t = comb(m - j, j) + (comb(m - j - 1, j - 1) if j >= 1 else 0)
        out[m - 2 * j] = (-1) ** j * t * 2 ** (m - 2 * j) // 2
    return _ip_trim(out)


def U_closed_form(m: int) -> IntPoly:
    out = [0] * (m + 1)
    for j in range(m // 2 + 1):
        out[m - 2 * j] = (-1) ** j * comb(m - j, j) * 2 ** (m - 2 * j)
    return _ip_trim(out)


def A_poly(m: int, ctx: FpContext) -> Poly:
    """A_m(x/2) reduced mod p."""
    return Poly(A_half_int(m), ctx)


def U_poly(m: int, ctx: FpContext) -> Poly:
    """U_m(x/2) reduced mod p."""
    return Poly(U_half_int(m), ctx)


# --- pointwise evaluation -----------------------------------------------------

class ChebEvaluator:
    """Memoized T_m(x), U_m(x), A_m(x) values over one field.

    Not thread-safe; make one per worker.
    """

    def __init__(self, ctx: FpContext):
        self.ctx = ctx
        self._memo: dict[tuple[str, int], list[int]] = {}

    def _seq(self, kind: str, x: int, m: int) -> int:
        p = self.ctx.p
        x %= p
        if m == -1:
            return x if kind == "T" else 0
        if m == -2:
            return (2 * x * x - 1) % p if kind == "T" else p - 1
        key = (kind, x)
        seq = self._memo.get(key)
        if seq is None:
            seq = [1, x if kind == "T" else 2 * x % p]
            self._memo[key] = seq
        while len(seq) <= m:
            seq.append((2 * x * seq[-1] - seq[-2]) % p)
        return seq[m]

    def T(self, m: int, x) -> int:
        return self._seq("T", int(x), m)

    def U(self, m: int, x) -> int:
        return self._seq("U", int(x), m)

    def A(self, m: int, x) -> int:
        return (self.U(m, x) + self.U(m - 1, x)) % self.ctx.p

    def half(self, x) -> int:
        return self.ctx.half(int(x))


def T(m: int, x: FpElt) -> FpElt:
    return FpElt(ChebEvaluator(x.ctx).T(m, x.value), x.ctx)


def U(m: int, x: FpElt) -> FpElt:
    return FpElt(ChebEvaluator(x.ctx).U(m, x.value), x.ctx)


def A(m: int, x: FpElt) -> FpElt:
    return FpElt(ChebEvaluator(x.ctx).A(m, x.value), x.ctx)


# --- transfer matrices --------------------------------------------------------

TRANSFER_TAGS = ("F", "G", "G'", "G''")


@dataclass(frozen=True)
class TransferMatrix:
    tag: str
    index: int
    x: int
    entries: tuple[tuple[int, int], tuple[int, int]]
    ctx: FpContext

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.entries
        return (a * d - b * c) % self.ctx.p

    def __matmul__(self, other: "TransferMatrix") -> tuple[tuple[int, int], tuple[int, int]]:
        return mat_mul(self.entries, other.entries, self.ctx.p)


def mat_mul(m1, m2, p: int):
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return (((a * e + b * g) % p, (a * f + b * h) % p), ((c * e + d * g) % p, (c * f + d * h) % p))


def transfer(tag: str, index: int, x, ctx: FpContext) -> TransferMatrix:
    """F_m, G_m, G'_n or G''_n evaluated at x (entries are U-values at x/2)."""
    if tag not in TRANSFER_TAGS:
        raise ValueError(f"unknown transfer tag {tag!r}")
    p = ctx.p
    xv = int(x) % p
    ev = ChebEvaluator(ctx)
    h = ctx.half(xv)

    def u(k: int) -> int:
        return ev.U(k, h)

    m = index
    if tag == "F":
        ent = ((u(2 * m), -u(2 * m - 1)), (u(2 * m - 1), -u(2 * m - 2)))
    elif tag == "G":
        ent = ((u(2 * m), -u(2 * m - 1)), (u(2 * m + 1), -u(2 * m)))
    elif tag == "G'":
        ent = ((u(2 * m + 1), -u(2 * m)), (u(2 * m), -u(2 * m - 1)))
    else:
        s = u(2 * m)
        ent = ((s * xv, -2 * s), (2 * s, -s * xv))
    ent = tuple(tuple(e % p for e in row) for row in ent)
    return TransferMatrix(tag, index, xv, ent, ctx)


def R_matrix(x, ctx: FpContext):
    xv = int(x) % ctx.p
    return (((xv * xv - 1) % ctx.p, -xv % ctx.p), (xv, ctx.p - 1))


def apply(M: TransferMatrix, v: tuple[int, int]) -> tuple[int, int]:
    (a, b), (c, d) = M.entries
    p = M.ctx.p
    return ((a * v[0] + b * v[1]) % p, (c * v[0] + d * v[1]) % p)


# --- identity suite -----------------------------------------------------------

@dataclass
class IdentityReport:
    checks: int = 0
    failures: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, label: str) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(label)


def _pointwise_identities(ev: ChebEvaluator, m: int, x: int) -> dict[str, tuple[int, int]]:
    p = ev.ctx.p
    T_, U_, A_ = ev.T, ev.U, ev.A
    return {
        "U2m+1=2TmUm": ((U_(2 * m, x) + 1) % p, 2 * T_(m, x) * U_(m, x) % p),
        "U2m-1=2Tm+1Um-1": ((U_(2 * m, x) - 1) % p, 2 * T_(m + 1, x) * U_(m - 1, x) % p),
        "U2m-1=2TmUm-1": (U_(2 * m - 1, x), 2 * T_(m, x) * U_(m - 1, x) % p),
        "U2m=AmAm": (U_(2 * m, x), (-1) ** m * A_(m, x) * A_(m, -x) % p),
        "U2m-1+1": ((U_(2 * m - 1, x) + 1) % p, (-1) ** (m - 1) * A_(m - 1, -x) * A_(m, x) % p),
        "U2m-1-1": ((U_(2 * m - 1, x) - 1) % p, (-1) ** m * A_(m - 1, x) * A_(m, -x) % p),
    }


def _symbolic_identities(m: int) -> dict[str, tuple[IntPoly, IntPoly]]:
    one = (1,)
    neg = ip_neg_arg
    s = (-1) ** m
    return {
        "U2m+1=2TmUm": (ip_add(U_int(2 * m), one), ip_scale(ip_mul(T_int(m), U_int(m)), 2)),
        "U2m-1=2Tm+1Um-1": (ip_add(U_int(2 * m), (-1,)), ip_scale(ip_mul(T_int(m + 1), U_int(m - 1)), 2)),
        "U2m-1=2TmUm-1": (U_int(2 * m - 1), ip_scale(ip_mul(T_int(m), U_int(m - 1)), 2)),
        "U2m=AmAm": (U_int(2 * m), ip_scale(ip_mul(A_int(m), neg(A_int(m))), s)),
        "U2m-1+1": (ip_add(U_int(2 * m - 1), one), ip_scale(ip_mul(neg(A_int(m - 1)), A_int(m)), -s)),
        "U2m-1-1": (ip_add(U_int(2 * m - 1), (-1,)), ip_scale(ip_mul(A_int(m - 1), neg(A_int(m))), s)),
    }


def identity_suite(m_max: int = 12, sample_count: int = 20, primes=(101, 65537, 1000003),
                   seed: int = 0) -> IdentityReport:
    """Check the product identities, closed forms and disc(A_m) for 1 <= m <= m_max."""
    from .ff import field

    rep = IdentityReport()
    rng = random.Random(seed)
    for m in range(1, m_max + 1):
        for name, (lhs, rhs) in _symbolic_identities(m).items():
            rep.expect(lhs == rhs, f"{name} symbolic m={m}")
        rep.expect(A_half_closed_form(m) == A_half_int(m), f"A closed form m={m}")
        rep.expect(T_closed_form(m) == T_int(m), f"T closed form m={m}")
        rep.expect(U_closed_form(m) == U_int(m), f"U closed form m={m}")
    for p in primes:
        ctx = field(p)
        ev = ChebEvaluator(ctx)
        for m in range(1, m_max + 1):
            for _ in range(sample_count):
                x = rng.randrange(p)
                for name, (lhs, rhs) in _pointwise_identities(ev, m, x).items():
                    rep.expect(lhs == rhs, f"{name} m={m} x={x} p={p}")
            if m >= 2:
                d = discriminant(Poly(A_int(m), ctx))
                want = 2 ** (m * (m - 1)) * (2 * m + 1) ** (m - 1) % p
                rep.expect(d == want, f"disc(A_{m}) p={p}: {d} != {want}")
    return rep
