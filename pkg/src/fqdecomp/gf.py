"""Arithmetic in GF(p^m) with a fixed irreducible modulus.

Elements are stored as integer codes ``sum(c_i * p**i)`` where ``c_i`` are
the coordinates in the basis 1, t, ..., t^(m-1).  The code is a bijection
with coordinate vectors, so equality and hashing are structural.  Addition,
multiplication and inversion go through precomputed tables.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

__all__ = [
    "FieldCtx",
    "FieldElement",
    "make_field",
    "field_arith",
    "enumerate_elements",
    "parse_modulus",
    "is_prime",
    "prime_power",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


# -- polynomials over F_p as int lists (constant term first); used only for
# -- building the field tables.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _prime_mod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        if c:
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
        _trim(a)
    return a


def _is_irreducible(modulus, p):
    m = len(modulus) - 1
    if m == 1:
        return True
    for k in range(1, m // 2 + 1):
        for lower in itertools.product(range(p), repeat=k):
            if not _prime_mod(modulus, list(lower) + [1], p):
                return False
    return True


class FieldCtx:
    """The finite field F_q, q = p^m, presented as F_p[t]/(modulus)."""

    __slots__ = ("p", "m", "q", "modulus", "add", "sub", "mul", "neg", "inv",
                 "_hash")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus)
        self._hash = hash((p, self.modulus))
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        coords = [self._coords(c) for c in range(q)]
        self.add = [[self._code([(x + y) % p for x, y in zip(coords[a], coords[b])])
                     for b in range(q)] for a in range(q)]
        self.neg = [self._code([(-x) % p for x in coords[a]]) for a in range(q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        if m == 1:
            self.mul = [[a * b % p for b in range(q)] for a in range(q)]
        else:
            mod = list(self.modulus)
            self.mul = [[0] * q for _ in range(q)]
            for a in range(q):
                for b in range(a, q):
                    prod = [0] * (2 * m - 1)
                    for i, x in enumerate(coords[a]):
                        if x:
                            for j, y in enumerate(coords[b]):
                                prod[i + j] = (prod[i + j] + x * y) % p
                    r = _prime_mod(_trim(prod), mod, p)
                    code = self._code(r + [0] * (m - len(r)))
                    self.mul[a][b] = self.mul[b][a] = code
        self.inv = [None] * q
        for a in range(1, q):
            row = self.mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    self.inv[a] = b
                    break

    def _coords(self, code):
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _code(self, coords):
        c = 0
        for x in reversed(coords):
            c = c * self.p + x
        return c

    def coords(self, code: int) -> tuple[int, ...]:
        return tuple(self._coords(code))

    def from_coords(self, coords) -> int:
        coords = [int(x) % self.p for x in coords]
        if len(coords) > self.m:
            raise ValueError("too many coordinates")
        return self._code(coords + [0] * (self.m - len(coords)))

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv_checked(a), -e
        r = 1
        mul = self.mul
        while e:
            if e & 1:
                r = mul[r][a]
            a = mul[a][a]
            e >>= 1
        return r

    def inv_checked(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + str(self))
        return self.inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul[a][self.inv_checked(b)]

    def format(self, code: int) -> str:
        """Element as a polynomial in t; prime-field elements as integers."""
        if self.m == 1:
            return str(code)
        terms = []
        for i, c in reversed(list(enumerate(self._coords(code)))):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def modulus_str(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.modulus))):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return "+".join(terms)

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={self.modulus_str()})"

    def __reduce__(self):
        return (FieldCtx, (self.p, self.m, self.modulus))


def make_field(p: int, m: int = 1, modulus=None) -> FieldCtx:
    """Build F_{p^m}.

    Without an explicit modulus, the monic irreducible of degree m whose
    coefficient vector (c_0, ..., c_{m-1}) is lexicographically smallest is
    used.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be at least 1")
    if modulus is None:
        for lower in itertools.product(range(p), repeat=m):
            cand = list(lower) + [1]
            if _is_irreducible(cand, p):
                return FieldCtx(p, m, tuple(cand))
        raise AssertionError("no irreducible polynomial found")  # unreachable
    if isinstance(modulus, str):
        modulus = parse_modulus(modulus, p)
    mod = _trim([int(c) % p for c in modulus])
    if len(mod) - 1 != m:
        raise ValueError(f"modulus has degree {len(mod) - 1}, expected {m}")
    if mod[-1] != 1:
        raise ValueError("modulus must be monic")
    if not _is_irreducible(mod, p):
        raise ValueError(f"modulus {mod} is reducible over F_{p}")
    return FieldCtx(p, m, tuple(mod))


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*(t(?:\s*\^\s*(\d+))?)?\s*")


def parse_modulus(text: str, p: int) -> list[int]:
    """Parse e.g. ``"t^2+t+1"`` into ``[1, 1, 1]`` (constant term first)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty modulus")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos or not (mt.group(2) or mt.group(3)):
            raise ValueError(f"cannot parse modulus {text!r} at position {pos}")
        sign = -1 if mt.group(1) == "-" else 1
        c = int(mt.group(2)) if mt.group(2) else 1
        e = 0 if not mt.group(3) else int(mt.group(4) or 1)
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = mt.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse modulus {text!r} at position {pos}")
    deg = max(coeffs)
    return [coeffs.get(i, 0) % p for i in range(deg + 1)]


@dataclass(frozen=True)
class FieldElement:
    """User-facing wrapper of an element code; hot paths use raw codes."""

    ctx: FieldCtx
    code: int

    @property
    def coords(self) -> tuple[int, ...]:
        return self.ctx.coords(self.code)

    def _other(self, b):
        if isinstance(b, FieldElement):
            if b.ctx != self.ctx:
                raise ValueError("elements belong to different fields")
            return b.code
        if isinstance(b, int):
            return self.ctx.from_int(b)
        return NotImplemented

    def __add__(self, b):
        return FieldElement(self.ctx, self.ctx.add[self.code][self._other(b)])

    def __sub__(self, b):
        return FieldElement(self.ctx, self.ctx.sub[self.code][self._other(b)])

    def __mul__(self, b):
        return FieldElement(self.ctx, self.ctx.mul[self.code][self._other(b)])

    def __truediv__(self, b):
        return FieldElement(self.ctx, self.ctx.div(self.code, self._other(b)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg[self.code])

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv_checked(self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.ctx.format(self.code)


_OPS = {"add", "sub", "mul", "div", "inv", "neg", "pow"}


def field_arith(ctx: FieldCtx, op: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatch one field operation; ``b`` is an int exponent for ``pow``."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if a.ctx != ctx or (isinstance(b, FieldElement) and b.ctx != ctx):
        raise ValueError("operand from a different field")
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** int(b)
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__,
            "div": a.__truediv__}[op](b)


def enumerate_elements(ctx: FieldCtx) -> list[FieldElement]:
    """All q elements ordered by code (0, 1, t, t+1, ... for F_4)."""
    return [FieldElement(ctx, c) for c in ctx.elements()]
