"""Theorem-level predicates on (k, p) and the root count of the n = 2 quartic.

The quartic B_2(y + 3/4) = y^4 + a y^2 + b y + c has its number of F_p roots
read off the power sums S_n of its resolvent, computed in O(log p) with a 3x3
companion matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .elimination import DegenerateParameters
from .ff import FpContext, field, jacobi

THEOREM_TAGS = ("n1", "n2A", "n2B", "special", "density-excluded")


def eta2_int(kappa: int) -> int:
    return 16 * kappa * kappa - 68 * kappa + 41


def xi2_int(kappa: int) -> int:
    return kappa * kappa - 13 * kappa + 11


def w_int(kappa: int) -> int:
    """5 (k^2 - 73k + 61) xi_2 eta_2 as an integer."""
    return 5 * (kappa * kappa - 73 * kappa + 61) * xi2_int(kappa) * eta2_int(kappa)


def quartic_coefficients(kappa: int, ctx: FpContext) -> tuple[int, int, int]:
    p = ctx.p
    k = kappa % p
    a = -(16 * k - 29) * ctx.inv(8) % p
    b = 25 * ctx.inv(8) % p
    c = (256 * k * k - 1248 * k + 1021) * ctx.inv(256) % p
    return a, b, c


def quartic_discriminant(a: int, b: int, c: int, p: int) -> int:
    return (-(4 * a ** 3 + 27 * b * b) * b * b + 16 * c * (a ** 4 + 9 * a * b * b - 8 * a * a * c + 16 * c * c)) % p


def _mat_mul3(A, B, p):
    return [[sum(A[i][t] * B[t][j] for t in range(3)) % p for j in range(3)] for i in range(3)]


def power_sum(N: int, a: int, b: int, c: int, p: int) -> int:
    """S_N of the order-3 recurrence by companion-matrix powering."""
    s0, s1, s2 = 3 % p, -2 * a % p, (2 * a * a + 8 * c) % p
    if N < 3:
        return (s0, s1, s2)[N]
    M = [[-2 * a % p, (4 * c - a * a) % p, b * b % p], [1, 0, 0], [0, 1, 0]]
    R = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    e = N - 2
    while e:
        if e & 1:
            R = _mat_mul3(R, M, p)
        M = _mat_mul3(M, M, p)
        e >>= 1
    return (R[0][0] * s2 + R[0][1] * s1 + R[0][2] * s0) % p


def power_sums_iterative(N: int, a: int, b: int, c: int, p: int) -> list[int]:
    """S_0..S_N by running the recurrence (slow reference)."""
    S = [3 % p, -2 * a % p, (2 * a * a + 8 * c) % p]
    while len(S) <= N:
        S.append((-2 * a * S[-1] + (4 * c - a * a) * S[-2] + b * b * S[-3]) % p)
    return S[:N + 1]


@dataclass
class QuarticProfile:
    kappa: int
    p: int
    a: int
    b: int
    c: int
    S0: int
    S1: int
    S2: int
    S_p1: int
    S_half: int
    mu: int | None = None
    count: int | None = None


def quartic_guard(kappa: int, ctx: FpContext) -> list[str]:
    p = ctx.p
    k = kappa % p
    reasons = []
    if (k - 4) % p == 0:
        reasons.append("kappa = 4")
    if w_int(k) % p == 0:
        reasons.append("W = 0")
    a, b, c = quartic_coefficients(k, ctx)
    if (a * a + 12 * c) * b * quartic_discriminant(a, b, c, p) % p == 0:
        reasons.append("non-generic quartic")
    return reasons


def quartic_profile(kappa: int, ctx: FpContext | int) -> QuarticProfile:
    """Root count of B_2 over F_p via the four-case power-sum criterion."""
    if isinstance(ctx, int):
        ctx = field(ctx)
    reasons = quartic_guard(kappa, ctx)
    if reasons:
        raise DegenerateParameters(f"{', '.join(reasons)} (kappa={kappa}, p={ctx.p})")
    p = ctx.p
    k = kappa % p
    a, b, c = quartic_coefficients(k, ctx)
    s_p1 = power_sum(p + 1, a, b, c, p)
    s_half = power_sum((p - 1) // 2, a, b, c, p)
    prof = QuarticProfile(k, p, a, b, c, 3, -2 * a % p, (2 * a * a + 8 * c) % p, s_p1, s_half)
    disc_val = (a * a - 4 * c) % p
    if s_p1 == prof.S2 and s_half == 3:
        prof.count = 4
    elif s_p1 == disc_val:
        prof.count = 1
    elif s_p1 != prof.S2:
        num = (4 * a ** 3 - 16 * a * c + 9 * b * b - 2 * a * s_p1) % p
        den = (-5 * a * a - 12 * c + 3 * s_p1) % p
        prof.mu = num * ctx.inv(den) % p if den else None
        prof.count = 2 if prof.mu is not None and ctx.legendre(prof.mu) == 1 else 0
    else:
        prof.count = 0
    return prof


def count_quartic_roots(kappa: int, ctx: FpContext | int) -> int:
    return quartic_profile(kappa, ctx).count


# --- verdicts -----------------------------------------------------------------

@dataclass
class ConditionVerdict:
    tag: str
    kappa: int
    p: int
    holds: bool
    witnesses: dict = dc_field(default_factory=dict)
    guard: str | None = None


def _guard_n1(k: int, p: int) -> str | None:
    if (k - 4) % p == 0:
        return "xi_1 = 0"
    if (4 * k - 7) % p == 0:
        return "eta_1 = 0"
    return None


def _guard_n2(k: int, p: int) -> str | None:
    if (k - 4) % p == 0:
        return "kappa = 4"
    if w_int(k) % p == 0:
        return "W = 0"
    return None


def verdict(tag: str, kappa: int, ctx: FpContext | int) -> ConditionVerdict:
    if isinstance(ctx, int):
        ctx = field(ctx)
    if tag not in THEOREM_TAGS:
        raise ValueError(f"unknown theorem tag {tag!r}")
    p = ctx.p
    k = kappa % p
    L = ctx.legendre
    if tag == "n1":
        g = _guard_n1(k, p)
        w = {"eta1": L(4 * k - 7)}
        return ConditionVerdict(tag, k, p, g is None and w["eta1"] == 1, w, g)
    if tag == "special":
        w = {"kappa-4": L(k - 4)}
        return ConditionVerdict(tag, k, p, w["kappa-4"] == 1, w)
    if tag == "density-excluded":
        g = _guard_n1(k, p) or _guard_n2(k, p)
        return ConditionVerdict(tag, k, p, g is not None, {}, g)
    g = _guard_n2(k, p)
    e2 = eta2_int(k)
    w = {"eta2": L(e2), "5": L(5)}
    if tag == "n2B":
        return ConditionVerdict(tag, k, p, g is None and w["eta2"] == -1 and w["5"] == 1, w, g)
    holds = False
    if g is None and w["eta2"] == 1:
        per_root = []
        for r in ctx.sqrt(e2):
            plus, minus = L(8 * k - 17 + 2 * r), L(8 * k - 17 - 2 * r)
            per_root.append(w["5"] == 1 and plus == 1 and minus == 1)
            w.setdefault("8k-17+2r", plus)
            w.setdefault("8k-17-2r", minus)
        if per_root[0] != per_root[1]:
            raise AssertionError("condition (A) depends on the choice of square root")
        holds = per_root[0]
    return ConditionVerdict(tag, k, p, holds, w, g)


def congruence_classes_n2B(kappa: int) -> tuple[int, list[int]]:
    """Modulus 5|eta_2| and the residues whose primes satisfy condition (B).

    eta_2 is 1 mod 4, so (eta_2/p) = (p/|eta_2|) by Jacobi reciprocity and
    (5/p) = (p/5); both depend on p only through its class.
    """
    e = eta2_int(kappa)
    if e == 0:
        raise ValueError("eta_2 vanishes")
    M = 5 * abs(e)
    res = [r for r in range(1, M)
           if gcd(r, M) == 1 and jacobi(r, abs(e)) == -1 and jacobi(r, 5) == 1]
    return M, res
