"""Dense polynomials and reduced rational functions over F_q.

Coefficients are element codes from :mod:`fqdecomp.gf`, constant term
first.  A :class:`RatFunc` is always kept in canonical form: coprime
numerator and denominator, denominator monic, so structural equality is
equality of functions.
"""

from __future__ import annotations

import random

from .gf import FieldCtx
from .linalg import nullspace

__all__ = [
    "Poly",
    "RatFunc",
    "poly_gcd",
    "normalize",
    "degree",
    "delta",
    "compose",
    "compose_all",
    "unit_inverse",
    "left_divide",
    "normalize_at_infinity",
    "random_ratfunc",
    "random_poly",
]


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(ctx: FieldCtx, a, b) -> list:
    if not a or not b:
        return []
    if ctx.m == 1:
        p = ctx.p
        r = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    r[i + j] += x * y
        return _trim([v % p for v in r])
    add, mul = ctx.add, ctx.mul
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            mx = mul[x]
            for j, y in enumerate(b):
                if y:
                    k = i + j
                    r[k] = add[r[k]][mx[y]]
    return _trim(r)


def _add(ctx: FieldCtx, a, b) -> list:
    if len(a) < len(b):
        a, b = b, a
    add = ctx.add
    r = list(a)
    for i, y in enumerate(b):
        if y:
            r[i] = add[r[i]][y]
    return _trim(r)


def _scale(ctx: FieldCtx, a, c: int) -> list:
    if c == 0:
        return []
    if c == 1:
        return list(a)
    mc = ctx.mul[c]
    return [mc[v] for v in a]


def _divmod(ctx: FieldCtx, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    add, mul, neg = ctx.add, ctx.mul, ctx.neg
    inv_lead = ctx.inv[b[-1]]
    quot = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if not c:
            continue
        c = mul[c][inv_lead]
        quot[k] = c
        mc = mul[neg[c]]
        for i, bc in enumerate(b):
            if bc:
                r[k + i] = add[r[k + i]][mc[bc]]
    return _trim(quot), _trim(r[:db])


class Poly:
    """Polynomial in x over F_q; ``coeffs`` is a tuple with no trailing zeros."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        self.ctx = ctx
        self.coeffs = tuple(_trim(list(coeffs)))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (0, 1))

    @classmethod
    def const(cls, ctx, c: int):
        return cls(ctx, (c,))

    @classmethod
    def monomial(cls, ctx, c: int, k: int):
        return cls(ctx, [0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def _check(self, other):
        if other.ctx != self.ctx:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return Poly(self.ctx, _add(self.ctx, self.coeffs, other.coeffs))

    def __neg__(self):
        neg = self.ctx.neg
        return Poly(self.ctx, [neg[c] for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.ctx, _scale(self.ctx, self.coeffs, other))
        self._check(other)
        return Poly(self.ctx, _mul(self.ctx, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = [1], list(self.coeffs)
        while e:
            if e & 1:
                result = _mul(self.ctx, result, base)
            e >>= 1
            if e:
                base = _mul(self.ctx, base, base)
        return Poly(self.ctx, result)

    def __divmod__(self, other):
        self._check(other)
        q, r = _divmod(self.ctx, self.coeffs, other.coeffs)
        return Poly(self.ctx, q), Poly(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self * self.ctx.inv[self.coeffs[-1]]

    def derivative(self):
        ctx = self.ctx
        return Poly(ctx, [ctx.mul[ctx.from_int(i)][c]
                          for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, a: int) -> int:
        add, mul = self.ctx.add, self.ctx.mul
        r = 0
        for c in reversed(self.coeffs):
            r = add[mul[r][a]][c]
        return r

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return _format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only if both inputs are zero)."""
    ctx = a.ctx
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        x, y = y, _divmod(ctx, x, y)[1]
    return Poly(ctx, x).monic()


def _format_coeff(ctx, c: int) -> str:
    s = ctx.format(c)
    return f"({s})" if "+" in s else s


def _format_poly(f: Poly) -> str:
    ctx = f.ctx
    if not f.coeffs:
        return "0"
    terms = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            terms.append(_format_coeff(ctx, c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{_format_coeff(ctx, c)}*{mono}")
    return "+".join(terms)


class RatFunc:
    """Element of F_q(x) in canonical form num/den.

    Constants are representable (needed for intermediate symmetric
    functions); composition operations reject them.
    """

    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, *, _canonical=False):
        ctx = num.ctx
        if den is None:
            den = Poly.const(ctx, 1)
        if not _canonical:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if not den.is_one():
                g = poly_gcd(num, den)
                if not g.is_one():
                    num, den = num // g, den // g
                lead = den.lc
                if lead != 1:
                    s = ctx.inv[lead]
                    num, den = num * s, den * s
        self.ctx = ctx
        self.num = num
        self.den = den
        self._hash = hash((num.coeffs, den.coeffs))

    @classmethod
    def x(cls, ctx):
        return cls(Poly.x(ctx), _canonical_den(ctx), _canonical=True)

    @classmethod
    def const(cls, ctx, c: int):
        return cls(Poly.const(ctx, c), _canonical_den(ctx), _canonical=True)

    @classmethod
    def from_poly(cls, f: Poly):
        return cls(f, _canonical_den(f.ctx), _canonical=True)

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    @property
    def delta(self) -> int:
        """deg num - deg den (positive iff infinity is a pole)."""
        if self.num.is_zero():
            raise ValueError("delta of the zero function")
        return self.num.degree - self.den.degree

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_unit(self) -> bool:
        return self.degree == 1

    def value_at_infinity(self) -> int | None:
        """f(inf) as an element code, or None when it is infinity."""
        d = self.delta
        if d > 0:
            return None
        if d < 0:
            return 0
        return self.ctx.div(self.num.lc, self.den.lc)

    def __call__(self, a: int) -> int | None:
        """Evaluate at a finite point; None means a pole."""
        d = self.den(a)
        if d == 0:
            return None
        return self.ctx.div(self.num(a), d)

    def _check(self, other):
        if other.ctx != self.ctx:
            raise ValueError("functions over different fields")

    def __add__(self, other):
        self._check(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RatFunc(self.num * other, self.den, _canonical=other != 0)
        self._check(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        self._check(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def compose(self, h):
        return compose(self, h)

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.ctx == other.ctx
                and self.num.coeffs == other.num.coeffs
                and self.den.coeffs == other.den.coeffs)

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.degree, self.den.coeffs, self.num.coeffs)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = str(self.num)
        if self.den.is_one():
            return n
        d = str(self.den)
        if "+" in n:
            n = f"({n})"
        if "+" in d or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"


def _canonical_den(ctx):
    return Poly.const(ctx, 1)


def normalize(num: Poly, den: Poly) -> RatFunc:
    """Cancel the gcd and make the denominator monic."""
    return RatFunc(num, den)


def degree(f: RatFunc) -> int:
    return f.degree


def delta(f: RatFunc) -> int:
    return f.delta


def _require_nonconstant(*fs):
    for f in fs:
        if f.is_constant():
            raise ValueError(f"constant function {f} is not in the composition semigroup")


def _homogeneous_eval(ctx, coeffs, e, hn, hd_pows):
    """sum_i coeffs[i] * hn^i * hd^(e-i) by Horner in hn."""
    r = [coeffs[e]] if e < len(coeffs) and coeffs[e] else []
    for i in range(e - 1, -1, -1):
        r = _mul(ctx, r, hn)
        c = coeffs[i] if i < len(coeffs) else 0
        if c:
            r = _add(ctx, r, _scale(ctx, hd_pows[e - i], c))
    return r


def compose(g: RatFunc, h: RatFunc) -> RatFunc:
    """g(h(x))."""
    _require_nonconstant(g, h)
    g._check(h)
    ctx = g.ctx
    e = g.degree
    hn, hd = h.num.coeffs, h.den.coeffs
    hd_pows = [[1]]
    for _ in range(e):
        hd_pows.append(_mul(ctx, hd_pows[-1], hd))
    num = _homogeneous_eval(ctx, g.num.coeffs, e, hn, hd_pows)
    den = _homogeneous_eval(ctx, g.den.coeffs, e, hn, hd_pows)
    # coprime inputs stay coprime under homogeneous substitution
    lead = den[-1]
    if lead != 1:
        s = ctx.inv[lead]
        num, den = _scale(ctx, num, s), _scale(ctx, den, s)
    return RatFunc(Poly(ctx, num), Poly(ctx, den), _canonical=True)


def compose_all(components) -> RatFunc:
    """g_1 o g_2 o ... o g_r (outermost first)."""
    components = list(components)
    f = components[-1]
    for g in reversed(components[:-1]):
        f = compose(g, f)
    return f


def unit_inverse(u: RatFunc) -> RatFunc:
    """Compositional inverse of a degree-1 function via the adjugate matrix."""
    if u.degree != 1:
        raise ValueError(f"{u} is not a unit (degree {u.degree})")
    ctx = u.ctx
    n, d = u.num.coeffs, u.den.coeffs
    b, a = (n + (0, 0))[:2]
    dd, c = (d + (0, 0))[:2]
    neg = ctx.neg
    return RatFunc(Poly(ctx, (neg[b], dd)), Poly(ctx, (a, neg[c])))


def _poly_left_divide(f: Poly, h: Poly, e: int):
    """h-adic digits of f; all must be constants for f = g(h)."""
    ctx = f.ctx
    digits = []
    rest = list(f.coeffs)
    hc = list(h.coeffs)
    for _ in range(e + 1):
        quo, rem = _divmod(ctx, rest, hc)
        if len(rem) > 1:
            return None
        digits.append(rem[0] if rem else 0)
        rest = quo
    if rest:
        return None
    return Poly(ctx, digits)


def left_divide(f: RatFunc, h: RatFunc, *, method: str = "auto") -> RatFunc | None:
    """The unique g with g(h) = f, or None.

    ``method`` is "auto" (h-adic digits when both are polynomials, nullspace
    otherwise) or "nullspace".
    """
    _require_nonconstant(f, h)
    f._check(h)
    n, d = f.degree, h.degree
    if n % d:
        return None
    e = n // d
    ctx = f.ctx
    if method == "auto" and f.is_polynomial() and h.is_polynomial():
        g = _poly_left_divide(f.num, h.num, e)
        return None if g is None else RatFunc.from_poly(g)
    hn, hd = h.num.coeffs, h.den.coeffs
    hn_pows, hd_pows = [[1]], [[1]]
    for _ in range(e):
        hn_pows.append(_mul(ctx, hn_pows[-1], hn))
        hd_pows.append(_mul(ctx, hd_pows[-1], hd))
    basis = [_mul(ctx, hn_pows[i], hd_pows[e - i]) for i in range(e + 1)]
    fn, fd = f.num.coeffs, f.den.coeffs
    neg = ctx.neg
    # unknowns: a_0..a_e (numerator of g), then b_0..b_e (denominator)
    cols = [[neg[c] for c in _mul(ctx, fd, bi)] for bi in basis]
    cols += [_mul(ctx, fn, bi) for bi in basis]
    nrows = max((len(c) for c in cols), default=0)
    rows = [[c[r] if r < len(c) else 0 for c in cols] for r in range(nrows)]
    sols = nullspace(ctx, rows, 2 * (e + 1))
    for v in sols:
        A = Poly(ctx, v[: e + 1])
        B = Poly(ctx, v[e + 1:])
        if B.is_zero():
            continue
        g = RatFunc(A, B)
        if g.is_constant() or g.degree != e:
            continue
        if compose(g, h) == f:
            return g
    return None


def normalize_at_infinity(g: RatFunc, h: RatFunc):
    """Rewrite (g, h) as (g o u, u^-1 o h) with both components fixing infinity."""
    f = compose(g, h)
    if f.delta <= 0:
        raise ValueError("composition does not map infinity to infinity")
    w = h.value_at_infinity()
    if w is None:
        return g, h
    ctx = g.ctx
    u = RatFunc(Poly(ctx, (1, w)), Poly.x(ctx))  # w + 1/x
    return compose(g, u), compose(unit_inverse(u), h)


def random_poly(ctx: FieldCtx, deg: int, rng: random.Random, monic=False) -> Poly:
    coeffs = [rng.randrange(ctx.q) for _ in range(deg)]
    coeffs.append(1 if monic else rng.randrange(1, ctx.q))
    return Poly(ctx, coeffs)


def random_ratfunc(ctx: FieldCtx, max_deg: int, rng: random.Random,
                   polynomial: bool = False) -> RatFunc:
    """Random nonconstant function of degree between 1 and max_deg."""
    while True:
        dn = rng.randint(0, max_deg)
        dd = 0 if polynomial else rng.randint(0, max_deg)
        num = random_poly(ctx, dn, rng)
        den = random_poly(ctx, dd, rng, monic=True)
        f = RatFunc(num, den)
        if not f.is_constant():
            return f
