"""Dense univariate polynomials over F_p: arithmetic, gcd, resultants, roots."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

import numpy as np

from .ff import ContextMismatch, FpContext, FpElt

SCAN_LIMIT = 1 << 16


class Poly:
    """Polynomial with canonical residue coefficients, lowest degree first.

    The zero polynomial has empty ``coeffs`` and degree -1.
    """

    __slots__ = ("coeffs", "ctx")

    def __init__(self, coeffs: Iterable[int], ctx: FpContext):
        p = ctx.p
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)
        self.ctx = ctx

    @classmethod
    def zero(cls, ctx: FpContext) -> "Poly":
        return cls((), ctx)

    @classmethod
    def const(cls, a: int, ctx: FpContext) -> "Poly":
        return cls((a,), ctx)

    @classmethod
    def x(cls, ctx: FpContext) -> "Poly":
        return cls((0, 1), ctx)

    @classmethod
    def from_roots(cls, roots: Iterable[int], ctx: FpContext) -> "Poly":
        out = cls.const(1, ctx)
        for r in roots:
            out = out * cls((-r, 1), ctx)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"Poly(0 mod {self.ctx.p})"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            terms.append(f"{a}{'*' if mono else ''}{mono}" if a != 1 or not mono else mono)
        return f"Poly({' + '.join(terms)} mod {self.ctx.p})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly((other,), self.ctx).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.ctx.p))

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"mod {self.ctx.p} vs mod {other.ctx.p}")
            return other
        if isinstance(other, FpElt):
            return Poly((other.value,), self.ctx)
        if isinstance(other, int):
            return Poly((other,), self.ctx)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)], self.ctx)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-a for a in self.coeffs], self.ctx)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly.zero(self.ctx)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out, self.ctx)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        return Poly([c * a for a in self.coeffs], self.ctx)

    def shift(self, k: int) -> "Poly":
        """Multiply by y^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs, self.ctx)

    def __pow__(self, e: int) -> "Poly":
        out, base = Poly.const(1, self.ctx), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other) -> tuple["Poly", "Poly"]:
        d = self._lift(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.ctx.p
        r = list(self.coeffs)
        db = d.degree
        inv_lc = pow(d.lc, -1, p)
        if len(r) - 1 < db:
            return Poly.zero(self.ctx), self
        q = [0] * (len(r) - db)
        dc = d.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] * inv_lc % p
            if c:
                q[k - db] = c
                off = k - db
                for j in range(db + 1):
                    r[off + j] = (r[off + j] - c * dc[j]) % p
        return Poly(q, self.ctx), Poly(r[:db], self.ctx)

    def __floordiv__(self, other) -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(pow(self.lc, -1, self.ctx.p))

    def __call__(self, a) -> int:
        v = a.value if isinstance(a, FpElt) else int(a)
        p = self.ctx.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % p
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * a for i, a in enumerate(self.coeffs)][1:], self.ctx)

    def compose(self, other: "Poly") -> "Poly":
        out = Poly.zero(self.ctx)
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        out, base = Poly.const(1, self.ctx) % mod, self % mod
        while e:
            if e & 1:
                out = (out * base) % mod
            base = (base * base) % mod
            e >>= 1
        return out


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, s, t) with s*f + t*g = d = monic gcd(f, g)."""
    ctx = f.ctx
    r0, r1 = f, g
    s0, s1 = Poly.const(1, ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.const(1, ctx)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    k = pow(r0.lc, -1, ctx.p)
    return r0.scale(k), s0.scale(k), t0.scale(k)


def invmod(f: Poly, m: Poly) -> Poly:
    d, s, _ = xgcd(f % m, m)
    if d.degree != 0:
        raise ZeroDivisionError("polynomial not invertible modulo the given modulus")
    return s % m


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) in the Sylvester-determinant convention, via Euclid over F_p.

    Uses Res(f, g) = (-1)^(deg f deg g) Res(g, f) and
    Res(g, f) = lc(g)^(deg f - deg r) Res(g, r) for r = f mod g.
    """
    if f.ctx != g.ctx:
        raise ContextMismatch(f"mod {f.ctx.p} vs mod {g.ctx.p}")
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return 0
    p = f.ctx.p
    acc = 1
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return acc * pow(g.lc, m, p) % p
        if m == 0:
            return acc * pow(f.lc, n, p) % p
        # Res(f, g) = (-1)^{mn} Res(g, f); reduce f modulo g
        r = f % g
        if r.is_zero():
            return 0
        if (m * n) % 2:
            acc = -acc
        acc = acc * pow(g.lc, m - r.degree, p) % p
        f, g = g, r


def sylvester_matrix(f: Poly, g: Poly) -> list[list[int]]:
    m, n = f.degree, g.degree
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def det_mod(mat: Sequence[Sequence[int]], p: int) -> int:
    """Determinant over F_p by Gaussian elimination."""
    a = [[x % p for x in row] for row in mat]
    n = len(a)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col] % p
        inv = pow(a[col][col], -1, p)
        for r in range(col + 1, n):
            if a[r][col]:
                k = a[r][col] * inv % p
                a[r] = [(x - k * y) % p for x, y in zip(a[r], a[col])]
    return det % p


def sylvester_resultant(f: Poly, g: Poly) -> int:
    """Resultant straight from the Sylvester determinant (slow reference)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree + g.degree == 0:
        return 1
    return det_mod(sylvester_matrix(f, g), f.ctx.p)


def discriminant(f: Poly) -> int:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * r * f.ctx.inv(f.lc) % f.ctx.p


def _scan_roots(f: Poly) -> list[int]:
    p = f.ctx.p
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = (acc * xs + c) % p
    return [int(r) for r in np.flatnonzero(acc == 0)]


def _split_roots(f: Poly, rng: random.Random) -> list[int]:
    """Distinct roots of a squarefree product of linear factors (Cantor-Zassenhaus)."""
    ctx = f.ctx
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [(-f.coeffs[0] * pow(f.coeffs[1], -1, ctx.p)) % ctx.p]
    while True:
        a = rng.randrange(ctx.p)
        h = Poly((a, 1), ctx).powmod((ctx.p - 1) // 2, f) - 1
        d = gcd(h, f)
        if 0 < d.degree < f.degree:
            return _split_roots(d, rng) + _split_roots(f // d, rng)


def _field_roots(f: Poly, seed: int = 0) -> list[int]:
    ctx = f.ctx
    xp = Poly.x(ctx).powmod(ctx.p, f)
    lin = gcd(xp - Poly.x(ctx), f)
    return _split_roots(lin, random.Random(seed))


def roots(f: Poly, seed: int = 0) -> list[tuple[int, int]]:
    """All roots of f in F_p with multiplicities, ascending."""
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    if f.degree == 0:
        return []
    found = _scan_roots(f) if f.ctx.p < SCAN_LIMIT else sorted(_field_roots(f, seed))
    out = []
    for r in found:
        lin = Poly((-r, 1), f.ctx)
        mult, g = 0, f
        while g.degree >= 1:
            q, rem = g.divmod(lin)
            if not rem.is_zero():
                break
            mult += 1
            g = q
        out.append((r, mult))
    return sorted(out)


def interpolate(xs: Sequence[int], ys: Sequence[int], ctx: FpContext) -> Poly:
    """Lagrange interpolation through distinct points."""
    out = Poly.zero(ctx)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = Poly.const(1, ctx)
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly((-xj, 1), ctx)
                den = den * (xi - xj)
        out = out + num.scale(yi * ctx.inv(den))
    return out
