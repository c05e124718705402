"""The unit group of F_q(x): Moebius transformations, their subgroups,
subgroup lattices and maximal chains.

Group elements are :class:`Moebius` values; exhaustive computations (closure,
lattices) index the elements of the ambient group and represent subgroups
as bitmasks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .gf import FieldCtx, is_prime
from .ratfunc import Poly, RatFunc

__all__ = [
    "Moebius",
    "Subgroup",
    "Lattice",
    "Chain",
    "Gamma0Structure",
    "GroupTooLarge",
    "enumerate_gamma",
    "closure",
    "enumerate_subgroups",
    "maximal_chains",
    "chain_length_counts",
    "gamma0_structure",
    "big_omega",
]

DEFAULT_SUBGROUP_BOUND = 200


class GroupTooLarge(ValueError):
    """The group exceeds the exhaustive-enumeration bound."""

    def __init__(self, order: int, bound: int):
        super().__init__(f"group of order {order} exceeds enumeration bound {bound}")
        self.order = order
        self.bound = bound


class Moebius:
    """(ax+b)/(cx+d) with ad-bc != 0, scaled so the first nonzero entry is 1."""

    __slots__ = ("ctx", "key")

    def __init__(self, ctx: FieldCtx, a: int, b: int, c: int, d: int):
        mul, sub = ctx.mul, ctx.sub
        if sub[mul[a][d]][mul[b][c]] == 0:
            raise ValueError("singular Moebius matrix (ad - bc = 0)")
        lead = next(v for v in (a, b, c, d) if v)
        if lead != 1:
            s = ctx.inv[lead]
            ms = mul[s]
            a, b, c, d = ms[a], ms[b], ms[c], ms[d]
        self.ctx = ctx
        self.key = (a, b, c, d)

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, 1, 0, 0, 1)

    @classmethod
    def from_ratfunc(cls, u: RatFunc):
        if u.degree != 1:
            raise ValueError(f"{u} is not a unit")
        n = u.num.coeffs + (0, 0)
        d = u.den.coeffs + (0, 0)
        return cls(u.ctx, n[1], n[0], d[1], d[0])

    def to_ratfunc(self) -> RatFunc:
        a, b, c, d = self.key
        ctx = self.ctx
        return RatFunc(Poly(ctx, (b, a)), Poly(ctx, (d, c)))

    def compose(self, other: "Moebius") -> "Moebius":
        """self o other, i.e. x -> self(other(x))."""
        return Moebius(self.ctx, *_matmul(self.ctx, self.key, other.key))

    __matmul__ = compose

    def inverse(self) -> "Moebius":
        a, b, c, d = self.key
        neg = self.ctx.neg
        return Moebius(self.ctx, d, neg[b], neg[c], a)

    def is_affine(self) -> bool:
        return self.key[2] == 0

    def affine_coeffs(self) -> tuple[int, int]:
        """(a, b) with self = a*x + b."""
        if not self.is_affine():
            raise ValueError(f"{self} is not affine")
        _, b, _, d = self.key  # key = (1, b/a, 0, 1/a)
        s = self.ctx.inv[d]
        return s, self.ctx.mul[b][s]

    def __eq__(self, other):
        return isinstance(other, Moebius) and self.key == other.key and self.ctx == other.ctx

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Moebius({self.to_ratfunc()})"

    def __str__(self):
        return str(self.to_ratfunc())


def _matmul(ctx, k1, k2):
    add, mul = ctx.add, ctx.mul
    a, b, c, d = k1
    e, f, g, h = k2
    return (add[mul[a][e]][mul[b][g]], add[mul[a][f]][mul[b][h]],
            add[mul[c][e]][mul[d][g]], add[mul[c][f]][mul[d][h]])


class Subgroup:
    """A finite subgroup of Gamma(F_q), stored as a sorted tuple of elements."""

    __slots__ = ("ctx", "elements", "_keys")

    def __init__(self, ctx: FieldCtx, elements, check: bool = True):
        elems = sorted(set(elements))
        self.ctx = ctx
        self.elements = tuple(elems)
        self._keys = frozenset(u.key for u in elems)
        if check:
            self._verify()

    def _verify(self):
        ctx = self.ctx
        if (1, 0, 0, 1) not in self._keys:
            raise ValueError("subgroup must contain the identity x")
        for u in self.elements:
            for v in self.elements:
                if _canon(ctx, _matmul(ctx, u.key, v.key)) not in self._keys:
                    raise ValueError("element set is not closed under composition")
        full = self.ctx.q ** 3 - self.ctx.q
        if full % len(self.elements):
            raise ValueError("order does not divide |Gamma|")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, u: Moebius):
        return u.key in self._keys

    def issubset(self, other: "Subgroup") -> bool:
        return self._keys <= other._keys

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.ctx, [u for u in self.elements if u in other], check=False)

    def conjugate(self, u: Moebius) -> "Subgroup":
        """u^-1 H u."""
        ui = u.inverse()
        return Subgroup(self.ctx, [ui @ h @ u for h in self.elements], check=False)

    def sort_key(self):
        return (len(self.elements), tuple(u.key for u in self.elements))

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self._keys == other._keys and self.ctx == other.ctx

    def __hash__(self):
        return hash(self._keys)

    def __repr__(self):
        return f"Subgroup(order={self.order})"

    def to_strings(self) -> list[str]:
        return [str(u) for u in self.elements]


def _canon(ctx, key):
    a, b, c, d = key
    lead = next(v for v in key if v)
    if lead == 1:
        return key
    ms = ctx.mul[ctx.inv[lead]]
    return (ms[a], ms[b], ms[c], ms[d])


def enumerate_gamma(ctx: FieldCtx, which: str = "full") -> Subgroup:
    """Gamma (all units), Gamma_0 (``affine``: ax+b) or H_0 (``translations``)."""
    q = ctx.q
    if which == "full":
        elems = []
        for b, c, d in product(range(q), repeat=3):  # a = 1
            try:
                elems.append(Moebius(ctx, 1, b, c, d))
            except ValueError:
                pass
        for c, d in product(range(q), repeat=2):  # a = 0, b = 1
            if c:
                elems.append(Moebius(ctx, 0, 1, c, d))
    elif which == "affine":
        elems = [Moebius(ctx, a, b, 0, 1) for a in range(1, q) for b in range(q)]
    elif which == "translations":
        elems = [Moebius(ctx, 1, b, 0, 1) for b in range(q)]
    else:
        raise ValueError(f"unknown group {which!r}")
    return Subgroup(ctx, elems, check=False)


def closure(ctx: FieldCtx, generators) -> Subgroup:
    """Smallest subgroup containing ``generators``."""
    gens = [g.key for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    ident = (1, 0, 0, 1)
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = _canon(ctx, _matmul(ctx, x, g))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(ctx, [Moebius(ctx, *k) for k in seen], check=False)


class _Table:
    """Multiplication table of a finite group given by its element list."""

    def __init__(self, group: Subgroup):
        ctx = group.ctx
        self.elements = list(group.elements)
        index = {u.key: i for i, u in enumerate(self.elements)}
        keys = [u.key for u in self.elements]
        self.mul = [[index[_canon(ctx, _matmul(ctx, a, b))] for b in keys] for a in keys]
        self.identity = index[(1, 0, 0, 1)]

    def closure(self, start_mask: int, gens) -> int:
        mask = start_mask | (1 << self.identity)
        queue = [i for i in range(len(self.elements)) if mask >> i & 1]
        mul = self.mul
        while queue:
            x = queue.pop()
            row = mul[x]
            for g in gens:
                y = row[g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    queue.append(y)
        return mask


@dataclass
class Chain:
    """Strictly increasing chain {x} = G_0 < ... < G_n of covering inclusions."""

    groups: list

    @property
    def length(self) -> int:
        """Number of groups in the chain (n + 1)."""
        return len(self.groups)

    @property
    def orders(self) -> list[int]:
        return [g.order for g in self.groups]


@dataclass
class Lattice:
    """All subgroups of ``group`` with their covering relation."""

    group: Subgroup
    nodes: list
    covers: list  # (i, j): nodes[i] is maximal in nodes[j]
    bottom: int
    top: int
    _up: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._up = {i: [] for i in range(len(self.nodes))}
        for i, j in self.covers:
            self._up[i].append(j)

    def above(self, i: int) -> list[int]:
        return self._up[i]

    def __len__(self):
        return len(self.nodes)

    def subgroups_of_order(self, n: int) -> list[Subgroup]:
        return [h for h in self.nodes if h.order == n]

    def to_json(self) -> dict:
        ctx = self.group.ctx
        return {
            "field": {"p": ctx.p, "m": ctx.m, "modulus": ctx.modulus_str() or "t"},
            "order": self.group.order,
            "nodes": [{"id": i, "order": h.order, "elements": h.to_strings()}
                      for i, h in enumerate(self.nodes)],
            "edges": [list(e) for e in self.covers],
        }


def enumerate_subgroups(G: Subgroup, bound: int = DEFAULT_SUBGROUP_BOUND) -> Lattice:
    """All subgroups of G, by joining cyclic subgroups until nothing new appears."""
    if G.order > bound:
        raise GroupTooLarge(G.order, bound)
    table = _Table(G)
    n = len(table.elements)
    cyclic = {}
    for i in range(n):
        mask = table.closure(0, [i])
        cyclic.setdefault(mask, i)
    gens = {mask: [i] for mask, i in cyclic.items()}
    gens[1 << table.identity] = []
    frontier = list(gens)
    cyc_items = sorted(cyclic.items())
    while frontier:
        new = []
        for h in frontier:
            for cmask, c in cyc_items:
                if cmask & ~h == 0:
                    continue
                j = table.closure(h, gens[h] + [c])
                if j not in gens:
                    gens[j] = gens[h] + [c]
                    new.append(j)
        frontier = new

    masks = list(gens)
    subgroups = [Subgroup(G.ctx, [table.elements[i] for i in range(n) if m >> i & 1],
                          check=False) for m in masks]
    order = sorted(range(len(masks)), key=lambda i: subgroups[i].sort_key())
    masks = [masks[i] for i in order]
    subgroups = [subgroups[i] for i in order]
    pop = [bin(m).count("1") for m in masks]

    covers = []
    for j, big in enumerate(masks):
        below = [i for i in range(j) if pop[i] < pop[j] and masks[i] & ~big == 0]
        for i in below:
            small = masks[i]
            if not any(pop[k] > pop[i] and masks[k] & small == small for k in below):
                covers.append((i, j))
    return Lattice(G, subgroups, covers, bottom=0, top=len(masks) - 1)


def maximal_chains(L: Lattice) -> list[Chain]:
    """Every maximal chain from the trivial group to the top of the lattice."""
    out = []

    def walk(i, path):
        if i == L.top:
            out.append(Chain([L.nodes[k] for k in path]))
            return
        for j in L.above(i):
            walk(j, path + [j])

    walk(L.bottom, [L.bottom])
    return out


def chain_length_counts(L: Lattice) -> Counter:
    """Multiset {chain length: number of maximal chains} without listing chains."""
    memo: dict[int, Counter] = {L.top: Counter({1: 1})}

    def up(i):
        if i in memo:
            return memo[i]
        acc = Counter()
        for j in L.above(i):
            for length, k in up(j).items():
                acc[length + 1] += k
        memo[i] = acc
        return acc

    return up(L.bottom)


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    count, p = 0, 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    return count + (1 if n > 1 else 0)


@dataclass
class Gamma0Structure:
    translations: Subgroup  # G intersect H_0
    multipliers: list  # G_0 as sorted element codes
    semidirect: bool  # |G| = |G n H_0| * |G_0|
    contains_h0: bool
    cyclic_generator: Moebius | None  # an a0*x+b0 generating G, if cyclic
    case: str  # "contains_translations", "cyclic" or "other"
    dichotomy_holds: bool | None  # None when q is not prime


def gamma0_structure(ctx: FieldCtx, G: Subgroup) -> Gamma0Structure:
    """Split a subgroup of Gamma_0 into translation part and multiplier group."""
    if any(not u.is_affine() for u in G):
        raise ValueError("subgroup is not contained in Gamma_0")
    h0 = enumerate_gamma(ctx, "translations")
    trans = G.intersection(h0)
    mults = sorted({u.affine_coeffs()[0] for u in G})
    semidirect = G.order == trans.order * len(mults)
    contains_h0 = trans.order == ctx.q
    if contains_h0:
        # G = H_0 x| {a*x : a in G_0}
        ok = all(Moebius(ctx, a, 0, 0, 1) in G for a in mults)
        semidirect = semidirect and ok
    gen = None
    for u in G:
        if closure(ctx, [u]).order == G.order:
            gen = u
            break
    if contains_h0:
        case = "contains_translations"
    elif gen is not None:
        case = "cyclic"
    else:
        case = "other"
    dichotomy = (case != "other") if is_prime(ctx.q) else None
    return Gamma0Structure(trans, mults, semidirect, contains_h0, gen, case, dichotomy)
