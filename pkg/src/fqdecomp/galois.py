"""Fixing groups, fixed fields and Lueroth generators.

``fixing_group`` and ``fixed_field`` realise the two directions of the
(non-bijective) Galois correspondence between subgroups of Gamma(F_q) and
intermediate fields F_q <= F <= F_q(x).  Fields are always represented by a
generator; "same field" is decided by left-divisibility both ways plus a
degree comparison, never by comparing generators directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldCtx
from .moebius import Subgroup, enumerate_gamma
from .ratfunc import Poly, RatFunc, _add, _mul, compose, left_divide

__all__ = [
    "FixedFieldGenerator",
    "EnumerationTooLarge",
    "fixing_group",
    "fixed_field",
    "phi_map",
    "is_normal_extension",
    "component_for_subgroup",
    "joint_generator",
    "same_field",
    "is_right_component",
]

# |Gamma| = q^3 - q; 720 at q = 9
DEFAULT_UNIT_BOUND = 1000


class EnumerationTooLarge(ValueError):
    def __init__(self, size: int, bound: int):
        super().__init__(f"exhaustive scan of {size} units exceeds bound {bound}")
        self.size = size
        self.bound = bound


_gamma_cache: dict = {}


def _gamma(ctx: FieldCtx) -> Subgroup:
    if ctx not in _gamma_cache:
        _gamma_cache[ctx] = enumerate_gamma(ctx, "full")
    return _gamma_cache[ctx]


def fixing_group(f: RatFunc, bound: int = DEFAULT_UNIT_BOUND) -> Subgroup:
    """G(f) = {u : f o u = f}, by scanning every unit of Gamma(F_q)."""
    if f.is_constant():
        raise ValueError("fixing group of a constant is all of Gamma")
    ctx = f.ctx
    size = ctx.q ** 3 - ctx.q
    if size > bound:
        raise EnumerationTooLarge(size, bound)
    fixed = [u for u in _gamma(ctx) if compose(f, u.to_ratfunc()) == f]
    G = Subgroup(ctx, fixed, check=False)
    if f.degree % G.order:
        raise AssertionError(f"|G(f)| = {G.order} does not divide deg f = {f.degree}")
    return G


@dataclass
class FixedFieldGenerator:
    generator: RatFunc
    group: Subgroup
    witness: int  # k such that generator is the k-th elementary symmetric function


def fixed_field(H: Subgroup) -> FixedFieldGenerator:
    """Generator of Fix(H): the first nonconstant elementary symmetric
    function of the members of H.

    With h_i = N_i / D_i, prod (T - h_i) = prod (D_i T - N_i) / prod D_i, so
    the coefficients are computed with polynomial arithmetic only.
    """
    ctx = H.ctx
    neg = ctx.neg
    # P[j] = coefficient of T^j, a polynomial in x
    P = [[1]]
    D = [1]
    for u in H:
        a, b, c, d = u.key
        lin_n = [b, a]  # a x + b
        lin_d = [d, c]  # c x + d
        new = [[] for _ in range(len(P) + 1)]
        for j, coeff in enumerate(P):
            # coeff * (lin_d * T - lin_n)
            t1 = _mul(ctx, coeff, lin_d)
            t0 = [neg[v] for v in _mul(ctx, coeff, lin_n)]
            new[j + 1] = _add(ctx, new[j + 1], t1)
            new[j] = _add(ctx, new[j], t0)
        P = new
        D = _mul(ctx, D, lin_d)
    m = len(H)
    den = Poly(ctx, D)
    for k in range(1, m + 1):
        coeff = Poly(ctx, P[m - k])
        if k % 2:
            coeff = -coeff
        e_k = RatFunc(coeff, den)
        if not e_k.is_constant():
            if e_k.degree != m:
                raise AssertionError(f"fixed field generator of degree {e_k.degree} != |H| = {m}")
            return FixedFieldGenerator(e_k, H, k)
    raise AssertionError("all elementary symmetric functions are constant")


def is_right_component(f: RatFunc, h: RatFunc) -> bool:
    return left_divide(f, h) is not None


def same_field(f: RatFunc, g: RatFunc) -> bool:
    """F_q(f) == F_q(g): equal degree and each is a function of the other."""
    return (f.degree == g.degree and left_divide(f, g) is not None
            and left_divide(g, f) is not None)


def phi_map(f: RatFunc, bound: int = DEFAULT_UNIT_BOUND, check_fq: bool = True) -> RatFunc:
    """f' with F_q(f') = Fix(G(f)); checks f' is a right component of f (and of f_q)."""
    G = fixing_group(f, bound)
    fprime = fixed_field(G).generator
    if not is_right_component(f, fprime):
        raise AssertionError(f"{fprime} is not a right component of {f}")
    if check_fq:
        from .constructions import build_constructions
        fq = build_constructions(f.ctx).f_q
        if not is_right_component(fq, fprime):
            raise AssertionError(f"{fprime} is not a right component of f_q")
    return fprime


def is_normal_extension(f: RatFunc, bound: int = DEFAULT_UNIT_BOUND) -> str:
    """Classify F_q(f) <= F_q(x) as "normal", "not_normal" or "inseparable_unsupported".

    The minimal polynomial of x over F_q(f) is f_N(y) - f f_D(y); it is
    irreducible, so it is separable iff its y-derivative f_N' - f f_D' is
    nonzero, i.e. iff f_N' and f_D' are not both zero.
    """
    if f.is_constant():
        raise ValueError("constant function")
    if f.num.derivative().is_zero() and f.den.derivative().is_zero():
        return "inseparable_unsupported"
    return "normal" if fixing_group(f, bound).order == f.degree else "not_normal"


def component_for_subgroup(H: Subgroup, Hsub: Subgroup) -> RatFunc:
    """Right component of the generator of Fix(H) corresponding to Hsub <= H."""
    if not Hsub.issubset(H):
        raise ValueError("Hsub is not a subgroup of H")
    h = fixed_field(Hsub).generator
    top = fixed_field(H).generator
    if left_divide(top, h) is None:
        raise AssertionError(f"{h} is not a right component of {top}")
    return h


# -- polynomials in y over F_q(x): lists of RatFunc, constant term first

def _ypoly_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _ypoly_monic(a):
    lead = a[-1]
    return [c / lead for c in a]


def _ypoly_rem(a, b):
    """Remainder of a modulo the monic polynomial b."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1]
        if not c.is_zero():
            shift = len(a) - 1 - db
            for i in range(db):
                if not b[i].is_zero():
                    a[shift + i] = a[shift + i] - c * b[i]
        a.pop()
        _ypoly_trim(a)
    return a


def _minimal_poly(f: RatFunc):
    """f_N(y) - f(x) f_D(y) as coefficients in F_q(x)."""
    ctx = f.ctx
    n = max(f.num.degree, f.den.degree)
    out = []
    for i in range(n + 1):
        cn = f.num.coeffs[i] if i < len(f.num.coeffs) else 0
        cd = f.den.coeffs[i] if i < len(f.den.coeffs) else 0
        out.append(RatFunc.const(ctx, cn) - f * cd)
    return _ypoly_trim(out)


def joint_generator(f: RatFunc, g: RatFunc) -> RatFunc:
    """Lueroth generator of F_q(f, g) from the monic gcd in F_q(x)[y] of the
    minimal polynomials of x over F_q(f) and over F_q(g)."""
    if f.is_constant() or g.is_constant():
        raise ValueError("constant input")
    a, b = _minimal_poly(f), _minimal_poly(g)
    if len(a) < len(b):
        a, b = b, a
    b = _ypoly_monic(b)
    while True:
        r = _ypoly_rem(a, b)
        if not r:
            break
        a, b = b, _ypoly_monic(r)
    for c in b[:-1]:
        if not c.is_constant():
            return c
    raise AssertionError("gcd has only constant coefficients")
