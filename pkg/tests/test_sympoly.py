import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.utilities.iterables import partitions as sympy_partitions

from flagchern.errors import ParseError, ZeroGeneratorIndex
from flagchern.sympoly import (
    Partition,
    SymPolyExpr,
    c_lambda,
    elementary_symmetric,
    evaluate,
    is_homogeneous,
    make_partition,
    parse_expr,
    partitions,
    power_sum,
)

W12 = [1, 2, 3, 1, 2]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
multisets = st.lists(rationals, max_size=8)


def brute_elementary(k, values):
    return sum((math.prod(c) for c in itertools.combinations(values, k)), Fraction(0))


def expr_strategy():
    gen = st.builds(lambda kind, k: SymPolyExpr.generator(kind, k), st.sampled_from("ep"), st.integers(1, 4))
    const = st.builds(SymPolyExpr.constant, st.fractions(min_value=-5, max_value=5, max_denominator=4))
    leaf = st.one_of(gen, const)
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.builds(lambda a, b: a + b, inner, inner),
            st.builds(lambda a, b: a - b, inner, inner),
            st.builds(lambda a, b: a * b, inner, inner),
        ),
        max_leaves=6,
    )


def test_parse_examples():
    f = parse_expr("e1^5")
    assert f == SymPolyExpr.generator("e", 1) ** 5
    assert f.degree == 5
    g = parse_expr("e1^2 - 2*e2")
    assert g.terms == {((("e", 1), 2),): 1, ((("e", 2), 1),): -2}
    h = parse_expr("e2*e1")
    assert h == SymPolyExpr.from_partition((2, 1))
    assert h.is_homogeneous() == 3


def test_parse_canonicalizes():
    assert parse_expr("(e1 + e2)^2") == parse_expr("e1^2 + 2*e1*e2 + e2^2")
    assert parse_expr("e1 - e1") == SymPolyExpr()
    assert parse_expr(" 1/2 * p3 + 3/6*p3 ") == parse_expr("p3")
    assert parse_expr("-e1 + 2") == parse_expr("2 - e1")


@pytest.mark.parametrize(
    "text, pos",
    [("e1 +", 4), ("e1 ** e2", 4), ("x1", 0), ("e", 0), ("(e1", 3), ("e1^0", 3), ("e1 e2", 3), ("1/0", 2)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.position == pos


def test_zero_generator_index():
    with pytest.raises(ZeroGeneratorIndex):
        parse_expr("e0")
    with pytest.raises(ZeroGeneratorIndex):
        parse_expr("e1 + p0^2")


def test_elementary_examples():
    assert elementary_symmetric(1, W12) == 9
    assert elementary_symmetric(5, W12) == 12
    assert elementary_symmetric(2, [1, 2, 3]) == brute_elementary(2, [1, 2, 3]) == 11
    assert elementary_symmetric(0, []) == 1
    assert elementary_symmetric(4, [1, 2, 3]) == 0


def test_power_sum_examples():
    assert power_sum(1, W12) == 9
    assert power_sum(2, [1, 2]) == 5
    assert power_sum(2, W12) == 19
    assert evaluate("e1^2 - 2*e2", W12) == 19
    with pytest.raises(ValueError):
        power_sum(0, [1])


def test_evaluate_examples():
    assert evaluate("e1^5", W12) == 59049
    assert evaluate("e5", W12) == math.prod(W12)
    assert evaluate("e1^2-2*e2", [1, 2]) == 5
    # generators past the multiset size
    assert evaluate("e3 + p3", [1, 2]) == 9


def test_c_lambda_examples():
    assert c_lambda((5,), W12) == 12
    assert c_lambda((1, 1, 1, 1, 1), W12) == 59049
    assert c_lambda((1,), [5]) == 5


@pytest.mark.parametrize("text, deg", [("e1^5", 5), ("e1+e2", None), ("e2*e1 + 3*e3", 3), ("7", 0), ("0", None)])
def test_is_homogeneous(text, deg):
    assert is_homogeneous(text) == deg


def test_partition_type():
    assert make_partition([1, 3, 2]).parts == (3, 2, 1)
    assert make_partition([2, 2, 1]).weight == 5
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


@pytest.mark.parametrize("n", range(0, 12))
def test_partitions_match_sympy(n):
    ours = [p.parts for p in partitions(n)]
    theirs = {tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True)) for p in sympy_partitions(n)}
    if n == 0:
        theirs = {()}
    assert len(ours) == len(set(ours)) == len(theirs)
    assert set(ours) == theirs


@settings(max_examples=200, deadline=None)
@given(multisets, st.integers(0, 9))
def test_elementary_matches_brute_force(values, k):
    assert elementary_symmetric(k, values) == brute_elementary(k, values)


@settings(max_examples=200, deadline=None)
@given(multisets, st.integers(1, 8))
def test_newton_identities(values, k):
    e = [elementary_symmetric(i, values) for i in range(k + 1)]
    p = [None] + [power_sum(i, values) for i in range(1, k + 1)]
    assert k * e[k] == sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1))


@settings(max_examples=100, deadline=None)
@given(expr_strategy(), expr_strategy(), multisets)
def test_evaluate_linear_and_multiplicative(f, g, values):
    assert (f + g).evaluate(values) == f.evaluate(values) + g.evaluate(values)
    assert (f - g).evaluate(values) == f.evaluate(values) - g.evaluate(values)
    assert (f * g).evaluate(values) == f.evaluate(values) * g.evaluate(values)
    assert (3 * f).evaluate(values) == 3 * f.evaluate(values)


@settings(max_examples=200, deadline=None)
@given(expr_strategy())
def test_print_parse_round_trip(f):
    text = str(f)
    assert parse_expr(text) == f
    assert str(parse_expr(text)) == text


def test_immutable():
    f = parse_expr("e1")
    with pytest.raises(AttributeError):
        f.foo = 1
