"""Arithmetic in the prime field F_p.

Hot loops elsewhere in the package work on plain ``int`` residues and call the
integer-level methods of :class:`FpContext`; :class:`FpElt` is the checked,
operator-overloaded wrapper used at API boundaries and in tests.
"""

from __future__ import annotations

from functools import lru_cache

MAX_MODULUS = 1 << 62

# Deterministic Miller-Rabin witnesses for n < 3.3e24 (covers 2^64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ContextMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 2^64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


class FpContext:
    """The field F_p for a prime 3 < p < 2^62."""

    __slots__ = ("p", "_half", "_q", "_s", "_nonres")

    def __init__(self, p: int):
        if not isinstance(p, int) or p <= 3:
            raise ValueError(f"modulus must be a prime > 3, got {p!r}")
        if p >= MAX_MODULUS:
            raise ValueError(f"modulus {p} exceeds 2^62")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self._half = (p + 1) // 2
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        self._q, self._s = q, s
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        self._nonres = z

    def __repr__(self) -> str:
        return f"FpContext({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FpContext) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("FpContext", self.p))

    def __call__(self, a: int) -> "FpElt":
        return FpElt(a, self)

    # integer-level operations (inputs may be any int, outputs canonical)

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def half(self, a: int) -> int:
        return a * self._half % self.p

    def legendre(self, a: int) -> int:
        a %= self.p
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    def sqrt(self, a: int) -> tuple[int, int] | None:
        """Both square roots (r, p - r) with r <= p - r, or None for a non-residue."""
        p = self.p
        a %= p
        if a == 0:
            return (0, 0)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
        else:
            r = self._tonelli_shanks(a)
        return (r, p - r) if r <= p - r else (p - r, r)

    def _tonelli_shanks(self, a: int) -> int:
        p, m = self.p, self._s
        c = pow(self._nonres, self._q, p)
        t = pow(a, self._q, p)
        r = pow(a, (self._q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r


@lru_cache(maxsize=None)
def field(p: int) -> FpContext:
    """Shared context per modulus."""
    return FpContext(p)


class FpElt:
    """Immutable residue modulo ``ctx.p``."""

    __slots__ = ("value", "ctx")

    def __init__(self, value: int, ctx: FpContext):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "value", int(value) % ctx.p)

    def __setattr__(self, name, value):
        raise AttributeError("FpElt is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FpElt):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"mod {self.ctx.p} vs mod {other.ctx.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, v: int) -> "FpElt":
        return FpElt(v, self.ctx)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value * self.ctx.inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o * self.ctx.inv(self.value))

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self._new(pow(self.ctx.inv(self.value), -e, self.ctx.p))
        return self._new(pow(self.value, e, self.ctx.p))

    def __eq__(self, other) -> bool:
        if isinstance(other, FpElt):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.ctx.p))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ctx.p})"

    def inv(self) -> "FpElt":
        return self._new(self.ctx.inv(self.value))


def legendre(a: FpElt) -> int:
    return a.ctx.legendre(a.value)


def sqrt(a: FpElt) -> tuple[FpElt, FpElt] | None:
    roots = a.ctx.sqrt(a.value)
    if roots is None:
        return None
    return (FpElt(roots[0], a.ctx), FpElt(roots[1], a.ctx))


def inv(a: FpElt) -> FpElt:
    return a.inv()
