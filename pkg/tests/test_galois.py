import random

import pytest
from hypothesis import given, settings, strategies as st

from fqdecomp.constructions import build_constructions
from fqdecomp.expr import parse_function
from fqdecomp.galois import (EnumerationTooLarge, component_for_subgroup, fixed_field,
                             fixing_group, is_normal_extension, joint_generator, phi_map,
                             same_field)
from fqdecomp.gf import make_field
from fqdecomp.moebius import Moebius, closure, enumerate_gamma, enumerate_subgroups
from fqdecomp.ratfunc import compose, left_divide, random_ratfunc

from conftest import field, point_values, pointwise_compose


def fn(text, q):
    return parse_function(text, field(q))


def brute_fixing_keys(f, ext):
    """Units u with f o u = f, decided by values on P^1 of an extension field."""
    fv = point_values(f, ext)
    keys = set()
    for u in enumerate_gamma(f.ctx):
        uv = point_values(u.to_ratfunc(), ext)
        if pointwise_compose(fv, uv, ext) == fv:
            keys.add(u.key)
    return keys


@pytest.mark.parametrize("q,text,k", [
    (3, "x^2*(x-1)^2", 3), (5, "x^2*(x-1)^2", 2), (5, "x^3", 2), (7, "x^3", 2),
    (3, "(x^2+1)/x", 3), (5, "x^5-x", 2), (3, "x^3-x", 3), (2, "(x^2+x+1)/(x^2+x)", 5),
])
def test_fixing_group_matches_pointwise_oracle(q, text, k):
    f = fn(text, q)
    ext = make_field(q, k)
    assert 2 * f.degree < ext.q + 1
    G = fixing_group(f)
    assert {u.key for u in G} == brute_fixing_keys(f, ext)


def test_fixing_group_examples():
    assert [str(u) for u in fixing_group(fn("x^3", 5))] == ["x"]
    assert fixing_group(fn("x^3", 7)).order == 3
    assert fixing_group(fn("x^2*(x-1)^2", 3)).to_strings() == ["x", "2*x+1"]
    assert fixing_group(fn("x^4+x", 4)) == enumerate_gamma(field(4), "translations")


def test_fixing_group_bound():
    with pytest.raises(EnumerationTooLarge):
        fixing_group(fn("x^2", 9), bound=100)
    with pytest.raises(ValueError):
        fixing_group(fn("3", 5))


def test_degenerate_square_in_characteristic_two():
    # x^2 (x-1)^2 = (x^2+x)^2 over F_2: an inseparable square, still fixed by x+1
    f = fn("x^2*(x-1)^2", 2)
    assert fixing_group(f).to_strings() == ["x", "x+1"]
    assert is_normal_extension(f) == "inseparable_unsupported"


def test_fixed_field_example():
    ctx = field(3)
    H = closure(ctx, [Moebius(ctx, 0, 1, 1, 0)])
    gen = fixed_field(H)
    assert gen.generator == fn("(x^2+1)/x", 3)
    assert gen.witness == 1


def test_fixed_field_of_translations():
    for q in (2, 3, 4, 5):
        ctx = field(q)
        gen = fixed_field(enumerate_gamma(ctx, "translations")).generator
        assert same_field(gen, fn(f"x^{q}-x", q))


@pytest.mark.parametrize("q,which", [(2, "full"), (3, "full"), (4, "affine"), (5, "affine")])
def test_fixed_field_round_trip_every_subgroup(q, which):
    # for finite H: deg Fix-generator = |H| and its fixing group is exactly H
    L = enumerate_subgroups(enumerate_gamma(field(q), which))
    for H in L.nodes:
        gen = fixed_field(H).generator
        assert gen.degree == H.order
        assert all(compose(gen, u.to_ratfunc()) == gen for u in H)
        assert fixing_group(gen) == H


@pytest.mark.parametrize("q", [3, 4])
def test_inclusion_reverses(q):
    L = enumerate_subgroups(enumerate_gamma(field(q), "affine"))
    gens = [fixed_field(H).generator for H in L.nodes]
    for i, j in L.covers:
        # H_i < H_j  means  Fix(H_j) is inside Fix(H_i)
        assert left_divide(gens[j], gens[i]) is not None


def test_component_for_subgroup():
    ctx = field(3)
    G0 = enumerate_gamma(ctx, "affine")
    h = component_for_subgroup(G0, enumerate_gamma(ctx, "translations"))
    assert same_field(h, fn("x^3-x", 3))
    with pytest.raises(ValueError):
        component_for_subgroup(enumerate_gamma(ctx, "translations"), G0)


@pytest.mark.parametrize("q,text,expected", [
    (7, "x^3", "normal"), (5, "x^3", "not_normal"), (5, "x^5", "inseparable_unsupported"),
    (4, "x^4+x", "normal"), (3, "x^2*(x-1)^2", "not_normal"), (3, "(x^2+1)/x", "normal"),
])
def test_is_normal_extension(q, text, expected):
    assert is_normal_extension(fn(text, q)) == expected


@pytest.mark.parametrize("q", [2, 3])
def test_phi_map_is_common_right_component(q):
    ctx = field(q)
    fq = build_constructions(ctx).f_q
    rng = random.Random(7 * q)
    for _ in range(10):
        f = random_ratfunc(ctx, 4, rng)
        fp = phi_map(f)
        G = fixing_group(f)
        assert fp.degree == G.order
        assert left_divide(f, fp) is not None
        assert left_divide(fq, fp) is not None


def test_joint_generator_examples():
    x = fn("x", 5)
    assert same_field(joint_generator(fn("x^2", 5), fn("x^3", 5)), x)
    assert same_field(joint_generator(fn("x^4", 5), fn("x^6", 5)), fn("x^2", 5))
    assert same_field(joint_generator(fn("x^4", 5), fn("x^4+x^2", 5)), fn("x^2", 5))
    with pytest.raises(ValueError):
        joint_generator(fn("2", 5), x)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 2 ** 32))
def test_fixing_group_conjugation(q, seed):
    # G(f o u) = u^-1 G(f) u and G(v o f) = G(f)
    ctx = field(q)
    rng = random.Random(seed)
    f = random_ratfunc(ctx, 4, rng)
    units = list(enumerate_gamma(ctx))
    u, v = rng.choice(units), rng.choice(units)
    G = fixing_group(f)
    assert fixing_group(compose(f, u.to_ratfunc())) == G.conjugate(u)
    assert fixing_group(compose(v.to_ratfunc(), f)) == G


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(0, 2 ** 32))
def test_fixing_group_order_divides_degree(q, seed):
    f = random_ratfunc(field(q), 6, random.Random(seed))
    assert f.degree % fixing_group(f).order == 0
