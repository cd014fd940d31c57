import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagchern.combinatorics import (
    default_assignment,
    derive_dims,
    enumerate_decompositions,
    make_assignment,
    make_decomposition,
    weight_multiset,
)
from flagchern.errors import (
    DuplicateAssignmentValue,
    EmptyOrShortVector,
    NonPositivePart,
    TooManyDecompositions,
)


def compositions(n):
    """All compositions of n with at least two parts."""
    for cuts in itertools.product([False, True], repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        if len(parts) >= 2:
            yield tuple(parts)


dims_strategy = st.lists(st.integers(1, 3), min_size=2, max_size=4).filter(lambda p: sum(p) <= 6)


@pytest.mark.parametrize(
    "parts, N, d, count",
    [((1, 1, 2), 4, 5, 12), ((1, 1), 2, 1, 2), ((2, 2), 4, 4, 6)],
)
def test_derive_dims(parts, N, d, count):
    dims = derive_dims(parts)
    assert (dims.N, dims.d, dims.count) == (N, d, count)


def test_derive_dims_errors():
    with pytest.raises(EmptyOrShortVector):
        derive_dims([3])
    with pytest.raises(EmptyOrShortVector):
        derive_dims([])
    with pytest.raises(NonPositivePart):
        derive_dims([1, 0, 2])


@pytest.mark.parametrize("N", range(2, 9))
def test_dimension_closed_form(N):
    for parts in compositions(N):
        dims = derive_dims(parts)
        assert dims.d == N * (N - 1) // 2 - sum(m * (m - 1) // 2 for m in parts)


@pytest.mark.parametrize("N", range(2, 9))
def test_enumeration_count_and_validity(N):
    for parts in compositions(N):
        dims = derive_dims(parts)
        seen = set()
        for I in enumerate_decompositions(dims):
            assert tuple(len(b) for b in I.blocks) == parts
            assert sorted(a for b in I.blocks for a in b) == list(range(1, N + 1))
            assert all(list(b) == sorted(b) for b in I.blocks)
            seen.add(I)
        expected = math.factorial(N) // math.prod(math.factorial(m) for m in parts)
        assert len(seen) == expected == dims.count


def test_enumeration_is_lexicographic_and_deterministic():
    for parts in [(1, 1, 2), (2, 1, 2), (1, 2, 1, 1)]:
        first = list(enumerate_decompositions(parts))
        keys = [tuple(a for b in I.blocks for a in b) for I in first]
        assert keys == sorted(keys)
        assert first == list(enumerate_decompositions(parts))


def test_enumeration_examples():
    decs = list(enumerate_decompositions((1, 1, 2)))
    assert len(decs) == 12
    assert make_decomposition([[1], [2], [3, 4]]) in decs
    assert make_decomposition([[4], [3], [1, 2]]) in decs
    assert [I.blocks for I in enumerate_decompositions((1, 1))] == [((1,), (2,)), ((2,), (1,))]


def test_all_ones_gives_permutations():
    decs = list(enumerate_decompositions((1, 1, 1)))
    perms = {tuple(b[0] for b in I.blocks) for I in decs}
    assert perms == set(itertools.permutations([1, 2, 3]))


def test_ceiling():
    with pytest.raises(TooManyDecompositions):
        enumerate_decompositions((1, 1, 1, 1), max_decompositions=23)
    assert len(list(enumerate_decompositions((1, 1, 1, 1), max_decompositions=24))) == 24


@pytest.mark.parametrize(
    "blocks, x, expected",
    [
        ([[1], [2], [3, 4]], (1, 2, 3, 4), [1, 2, 3, 1, 2]),
        ([[4], [3], [1, 2]], (1, 2, 3, 4), [-1, -3, -2, -2, -1]),
        ([[1], [2]], (0, 5), [5]),
    ],
)
def test_weight_multiset_examples(blocks, x, expected):
    assert list(weight_multiset(make_decomposition(blocks), x)) == expected


def test_weight_multiset_duplicates():
    with pytest.raises(DuplicateAssignmentValue):
        weight_multiset(make_decomposition([[1], [2]]), (3, 3))
    with pytest.raises(DuplicateAssignmentValue):
        make_assignment([1, Fraction(2, 2)])


def test_make_decomposition_rejects_bad_blocks():
    with pytest.raises(ValueError):
        make_decomposition([[1], [1, 2]])
    with pytest.raises(ValueError):
        make_decomposition([[1], [3]])


@settings(max_examples=60, deadline=None)
@given(dims_strategy, st.randoms(use_true_random=False))
def test_weight_multiset_size_and_nonzero(parts, rnd):
    dims = derive_dims(parts)
    x = [Fraction(v, rnd.randint(1, 5)) for v in rnd.sample(range(-50, 50), dims.N)]
    x = list(dict.fromkeys(x))
    if len(x) < dims.N:
        x = default_assignment(dims)
    for I in enumerate_decompositions(dims):
        w = weight_multiset(I, x)
        assert len(w) == dims.d
        assert 0 not in w


def test_weight_multiset_keeps_multiplicity():
    # x in arithmetic progression forces repeated weights
    w = weight_multiset(make_decomposition([[1], [2], [3, 4]]), (1, 2, 3, 4))
    assert Counter(w) == Counter({1: 2, 2: 2, 3: 1})


@settings(max_examples=40, deadline=None)
@given(dims_strategy, st.randoms(use_true_random=False))
def test_reversal_negates_weights(parts, rnd):
    dims = derive_dims(parts)
    x = rnd.sample(range(-100, 100), dims.N)
    rev = list(enumerate_decompositions(dims.reversed()))
    for I in enumerate_decompositions(dims):
        J = I.reversed()
        assert J in rev
        assert Counter(weight_multiset(J, x)) == Counter(-v for v in weight_multiset(I, x))


def test_palindromic_dims_reversal_is_a_bijection():
    decs = set(enumerate_decompositions((1, 2, 1)))
    assert {I.reversed() for I in decs} == decs
