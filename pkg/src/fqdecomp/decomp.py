"""Decomposition of rational functions over F_q.

Right components are searched up to equivalence h ~ u o h.  Every class has
exactly one *normal* representative: h(inf) = inf, monic numerator, and the
numerator coefficient at x^(deg den) equal to zero.  Exhaustive sweeps run
over normal forms only, so they never produce duplicates.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .galois import EnumerationTooLarge, fixed_field, fixing_group
from .moebius import DEFAULT_SUBGROUP_BOUND, enumerate_subgroups, maximal_chains
from .ratfunc import Poly, RatFunc, compose, compose_all, left_divide, poly_gcd

__all__ = [
    "BudgetExceeded",
    "Decomposition",
    "Bidecomposition",
    "RittReport",
    "DEFAULT_BUDGET",
    "canonical_component",
    "sweep_size",
    "right_components",
    "delta_obstruction",
    "is_indecomposable",
    "decomposition_witness",
    "complete_decompositions",
    "decompositions_equivalent",
    "is_tame",
    "is_bidecomposition",
    "ritt_degree_consistent",
]

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    def __init__(self, size: int, budget: int, what: str = "candidate space"):
        super().__init__(f"{what} of size {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


@dataclass(frozen=True)
class Decomposition:
    """f = components[0] o components[1] o ... (outermost first)."""

    components: tuple
    target: RatFunc

    @property
    def length(self) -> int:
        return len(self.components)

    @property
    def degrees(self) -> tuple:
        return tuple(c.degree for c in self.components)

    def recomposes(self) -> bool:
        return compose_all(self.components) == self.target

    def __str__(self):
        return " ∘ ".join(str(c) for c in self.components)


@dataclass(frozen=True)
class Bidecomposition:
    f1: RatFunc
    g1: RatFunc
    f2: RatFunc
    g2: RatFunc


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def canonical_component(h: RatFunc) -> RatFunc:
    """The normal representative of {u o h : u a unit}."""
    if h.is_constant():
        raise ValueError("constant function")
    ctx = h.ctx
    w = h.value_at_infinity()
    if w is not None:
        h = RatFunc(h.den, h.num - h.den * w)  # 1 / (h - w)
    A, B = h.num, h.den
    A = A * ctx.inv[A.lc]
    k = B.degree
    c = A.coeffs[k] if k < len(A.coeffs) else 0
    if c:
        A = A - B * c
    return RatFunc(A, B, _canonical=True)


def sweep_size(q: int, d: int, polynomial: bool) -> int:
    if polynomial:
        return q ** (d - 1)
    return q ** (d - 1) * sum(q ** k for k in range(d))


def _sweep(f: RatFunc, d: int, budget: int) -> list:
    ctx = f.ctx
    q = ctx.q
    poly = f.is_polynomial()
    size = sweep_size(q, d, poly)
    if size > budget:
        raise BudgetExceeded(size, budget, f"degree-{d} component search")
    found = []
    one = Poly.const(ctx, 1)
    dens = [one] if poly else [Poly(ctx, list(low) + [1])
                               for k in range(d) for low in product(range(q), repeat=k)]
    for B in dens:
        k = B.degree
        for free in product(range(q), repeat=d - 1):
            coeffs = list(free)
            coeffs.insert(k, 0)
            coeffs.append(1)
            A = Poly(ctx, coeffs)
            if k and not poly_gcd(A, B).is_one():
                continue
            h = RatFunc(A, B, _canonical=True)
            if left_divide(f, h) is not None:
                found.append(h)
    return found


def _subgroup_route(f: RatFunc, d: int, G) -> list:
    L = enumerate_subgroups(G)
    out = set()
    for S in L.subgroups_of_order(d):
        h = canonical_component(fixed_field(S).generator)
        if left_divide(f, h) is None:
            raise AssertionError(f"fixed field of an order-{d} subgroup gave {h}, "
                                 f"not a right component of {f}")
        out.add(h)
    return list(out)


def right_components(f: RatFunc, d: int, budget: int = DEFAULT_BUDGET,
                     method: str = "auto") -> list:
    """All degree-d right components of f, one normal representative per class.

    ``method``: "subgroup" (requires |G(f)| = deg f), "sweep", or "auto".
    """
    if f.is_constant():
        raise ValueError("constant function")
    n = f.degree
    if not (1 < d < n) or n % d:
        raise ValueError(f"{d} is not a proper divisor of deg f = {n}")
    if method not in ("auto", "subgroup", "sweep"):
        raise ValueError(f"unknown method {method!r}")
    found = None
    if method in ("auto", "subgroup"):
        try:
            G = fixing_group(f)
        except EnumerationTooLarge:
            if method == "subgroup":
                raise
            G = None
        if G is not None and G.order == n and n <= DEFAULT_SUBGROUP_BOUND:
            found = _subgroup_route(f, d, G)
        elif method == "subgroup":
            raise ValueError(f"subgroup route needs |G(f)| = deg f; got {G.order} != {n}")
    if found is None:
        found = _sweep(f, d, budget)
    return sorted(found, key=RatFunc.sort_key)


def delta_obstruction(f: RatFunc) -> set:
    """Degrees d of right components ruled out by pole-order multiplicativity at infinity.

    If f = g o h with deg h = d, normalizing both components to fix infinity
    gives delta(f) = delta(g) delta(h) with 1 <= delta(g) <= deg g and
    1 <= delta(h) <= d.  Empty when delta(f) <= 0.
    """
    n = f.degree
    if f.delta <= 0:
        return set()
    dl = f.delta
    ruled = set()
    for d in _divisors(n)[1:-1]:
        e = n // d
        if not any(dl % a == 0 and a <= e and dl // a <= d for a in range(1, dl + 1)):
            ruled.add(d)
    return ruled


def decomposition_witness(f: RatFunc, budget: int = DEFAULT_BUDGET):
    """A nontrivial (g, h) with g o h = f, or None if f is indecomposable."""
    n = f.degree
    ruled = delta_obstruction(f)
    for d in _divisors(n)[1:-1]:
        if d in ruled:
            continue
        comps = right_components(f, d, budget)
        if comps:
            h = comps[0]
            return left_divide(f, h), h
    return None


def is_indecomposable(f: RatFunc, budget: int = DEFAULT_BUDGET) -> bool:
    if f.is_constant():
        raise ValueError("constant function")
    n = f.degree
    if n == 1:
        return False  # units are excluded by definition
    if len(_divisors(n)) == 2:
        return True
    return decomposition_witness(f, budget) is None


def _lattice_chains(f: RatFunc, G) -> list:
    """Complete decompositions of a Galois f read off the maximal chains of G(f).

    Each chain {x} = G_0 < ... < G_n = G(f) gives the fields Fix(G_i); the
    components are normal forms of the left quotients of consecutive
    generators, matching the representatives of the recursive route.
    """
    L = enumerate_subgroups(G)
    gens = {}
    for i, S in enumerate(L.nodes):
        if i not in (L.bottom, L.top):
            gens[S] = canonical_component(fixed_field(S).generator)
    out = []
    for chain in maximal_chains(L):
        comps = []
        cur = None  # composition of the components found so far
        for S in chain.groups[1:-1]:
            h = gens[S]
            c = h if cur is None else canonical_component(left_divide(h, cur))
            comps.append(c)
            cur = c if cur is None else compose(c, cur)
        comps.append(f if cur is None else left_divide(f, cur))
        out.append(tuple(reversed(comps)))
    return out


def complete_decompositions(f: RatFunc, budget: int = DEFAULT_BUDGET,
                            method: str = "auto") -> list:
    """Every complete decomposition of f up to equivalence, canonically ordered.

    All components except the outermost are normal representatives, so each
    equivalence class of chains appears exactly once.  ``method``:
    "recursive" peels off indecomposable right components and recurses on the
    left factor; "auto" reads chains off the subgroup lattice when
    |G(f)| = deg f and falls back to "recursive" otherwise.
    """
    if f.is_constant() or f.degree == 1:
        raise ValueError("complete decompositions need a nonconstant nonunit")
    if method not in ("auto", "recursive"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto" and len(_divisors(f.degree)) > 2:
        try:
            G = fixing_group(f)
        except EnumerationTooLarge:
            G = None
        if G is not None and G.order == f.degree and G.order <= DEFAULT_SUBGROUP_BOUND:
            return _sorted_decompositions(_lattice_chains(f, G), f)
    memo: dict = {}

    def chains(g):
        if g in memo:
            return memo[g]
        n = g.degree
        divs = _divisors(n)[1:-1]
        if not divs:
            memo[g] = [(g,)]
            return memo[g]
        comps = {d: right_components(g, d, budget) for d in divs}
        out = []
        for d in divs:
            for h in comps[d]:
                smaller = (h2 for d2 in divs if d2 < d and d % d2 == 0 for h2 in comps[d2])
                if any(left_divide(h, h2) is not None for h2 in smaller):
                    continue  # h itself decomposes
                left = left_divide(g, h)
                for tail in chains(left):
                    out.append(tail + (h,))
        if not out:
            out = [(g,)]
        memo[g] = out
        return out

    return _sorted_decompositions(chains(f), f)


def _sorted_decompositions(chains, f):
    result = [Decomposition(c, f) for c in chains]
    result.sort(key=lambda dc: (dc.length, [c.sort_key() for c in dc.components]))
    return result


def decompositions_equivalent(g1, h1, g2, h2):
    """The unit u with h1 = u o h2 (so g1 = g2 o u^-1), or None."""
    if compose(g1, h1) != compose(g2, h2):
        raise ValueError("the two decompositions have different compositions")
    if h1.degree != h2.degree:
        return None
    from .galois import _gamma
    for u in _gamma(h1.ctx):
        if compose(u.to_ratfunc(), h2) == h1:
            return u
    return None


def _as_poly(f) -> Poly:
    if isinstance(f, Poly):
        return f
    if isinstance(f, RatFunc) and f.is_polynomial():
        return f.num
    raise ValueError(f"{f} is not a polynomial")


def is_tame(f) -> bool:
    f = _as_poly(f)
    if f.degree < 1:
        raise ValueError("constant polynomial")
    return f.degree % f.ctx.p != 0


def is_bidecomposition(f1, g1, f2, g2) -> bool:
    polys = [_as_poly(v) for v in (f1, g1, f2, g2)]
    f1, g1, f2, g2 = (RatFunc.from_poly(v) for v in polys)
    if any(v.is_constant() for v in (f1, g1, f2, g2)):
        raise ValueError("components must be nonconstant")
    return (math.gcd(f1.degree, g1.degree) == 1 and f1.degree == g2.degree
            and compose(f1, g1) == compose(f2, g2))


@dataclass
class RittReport:
    tame: bool
    lengths: list
    multisets: list  # sorted degree tuple of each chain
    consistent: bool

    def as_dict(self):
        return {"tame": self.tame, "lengths": self.lengths,
                "multisets": [list(m) for m in self.multisets],
                "consistent": self.consistent}


def ritt_degree_consistent(f, budget: int = DEFAULT_BUDGET) -> RittReport:
    """Compare lengths and degree multisets of all complete decompositions."""
    f = RatFunc.from_poly(_as_poly(f))
    decs = complete_decompositions(f, budget)
    lengths = sorted(Counter(d.length for d in decs).elements())
    multisets = [tuple(sorted(d.degrees)) for d in decs]
    consistent = len(set(multisets)) == 1
    return RittReport(is_tame(f), lengths, multisets, consistent)
