import random

import pytest
from hypothesis import given, settings, strategies as st

from fqdecomp.expr import ParseError, format_function, parse_function
from fqdecomp.ratfunc import Poly, RatFunc, random_ratfunc

from conftest import field


def test_basic_parse():
    ctx = field(5)
    f = parse_function("(x^2 + 3*x) / (x - 1)", ctx)
    assert f.num == Poly(ctx, (0, 3, 1))
    assert f.den == Poly(ctx, (4, 1))


def test_integers_reduced_mod_p():
    ctx = field(3)
    assert parse_function("7*x+5", ctx) == parse_function("x+2", ctx)


def test_extension_generator():
    ctx = field(4)
    f = parse_function("x^2+t*x+(t+1)", ctx)
    assert str(f) == "x^2+t*x+(t+1)"
    assert f.num.coeffs == (3, 2, 1)  # t + 1 has code 3, t has code 2


def test_t_rejected_in_prime_field():
    with pytest.raises(ParseError):
        parse_function("x+t", field(5))


@pytest.mark.parametrize("text", ["x^", "(x+1", "x+*2", "x^-1", "x $ 2", ""])
def test_syntax_errors(text):
    with pytest.raises(ValueError):
        parse_function(text, field(5))


def test_division_by_zero_function():
    with pytest.raises(ParseError, match="division by zero"):
        parse_function("x/(x-x)", field(5))


def test_printing_examples():
    ctx = field(3)
    assert format_function(parse_function("(x^4+x+1)/x^3", ctx)) == "(x^4+x+1)/x^3"
    assert str(parse_function("2/(x+1)", ctx)) == "2/(x+1)"
    assert str(RatFunc.x(ctx)) == "x"


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(0, 2 ** 32))
def test_round_trip(q, seed):
    ctx = field(q)
    f = random_ratfunc(ctx, 5, random.Random(seed))
    assert parse_function(str(f), ctx) == f
