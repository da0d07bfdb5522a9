import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asg.designs import (
    CoveringDesign,
    SearchLimitError,
    binom_quotient,
    cover_number_bounds,
    design_for,
    exact_cover_number,
    greedy_cover,
    is_covering_design,
)


def naive_lex_first_minimum(v, k, t):
    """Independent oracle: scan families by size, then lex, return first cover."""
    blocks = list(combinations(range(1, v + 1), k))
    tsubsets = [set(ts) for ts in combinations(range(1, v + 1), t)]

    def covers(family):
        return all(any(ts <= set(b) for b in family) for ts in tsubsets)

    for size in range(1, len(blocks) + 1):
        for family in combinations(blocks, size):
            if covers(family):
                return CoveringDesign(v, k, t, family)
    raise AssertionError("unreachable")


def test_is_covering_design():
    good = CoveringDesign(4, 3, 2, ((1, 2, 3), (1, 2, 4), (1, 3, 4)))
    assert is_covering_design(good)
    assert not is_covering_design(CoveringDesign(4, 3, 2, ((1, 2, 3),)))
    assert not is_covering_design(CoveringDesign(4, 3, 2, ((1, 2, 5), (1, 2, 4), (1, 3, 4))))
    assert not is_covering_design(CoveringDesign(4, 3, 2, ((3, 2, 1), (1, 2, 4), (1, 3, 4))))
    assert not is_covering_design(CoveringDesign(4, 3, 2, ((1, 2, 2), (1, 2, 4), (1, 3, 4))))


def test_exact_examples():
    d = exact_cover_number(4, 3, 2)
    assert d.size == 3
    assert d.blocks == ((1, 2, 3), (1, 2, 4), (1, 3, 4))
    d = exact_cover_number(4, 2, 1)
    assert d.size == 2
    assert d.blocks == ((1, 2), (3, 4))


def test_exact_edge_cases():
    assert exact_cover_number(5, 3, 0).blocks == ((1, 2, 3),)
    assert exact_cover_number(5, 5, 2).blocks == ((1, 2, 3, 4, 5),)
    # k = t: every t-subset is its own block
    d = exact_cover_number(4, 2, 2)
    assert d.size == math.comb(4, 2)
    with pytest.raises(ValueError):
        exact_cover_number(3, 4, 2)


def test_exact_matches_naive_scan():
    for v, k, t in [(4, 2, 1), (4, 3, 2), (5, 3, 2), (5, 4, 2), (6, 3, 2), (5, 3, 3), (6, 4, 3)]:
        got = exact_cover_number(v, k, t)
        want = naive_lex_first_minimum(v, k, t)
        assert got.blocks == want.blocks, (v, k, t)


def test_exact_determinism():
    a = exact_cover_number(6, 3, 2)
    b = exact_cover_number(6, 3, 2)
    assert a.blocks == b.blocks


def test_known_cover_numbers():
    # Classic values, independently pinned: the Fano plane and the size-11
    # pair cover on 8 points.
    assert exact_cover_number(7, 3, 2).size == 7
    assert exact_cover_number(8, 3, 2).size == 11
    assert exact_cover_number(6, 4, 2).size == 3


def test_greedy_examples():
    d = greedy_cover(6, 3, 2)
    assert is_covering_design(d)
    bound = cover_number_bounds(6, 3, 2)
    assert bound.upper == 10  # floor((15/3)(1 + ln 3))
    assert d.size <= bound.upper
    assert d.size >= bound.lower == 5


def test_greedy_determinism_and_tie_break():
    a = greedy_cover(6, 3, 2)
    b = greedy_cover(6, 3, 2)
    assert a.blocks == b.blocks
    # first pick covers the most pairs; all size-3 blocks tie, so lex-first wins
    assert a.blocks[0] == (1, 2, 3)


def test_binom_quotient():
    assert binom_quotient(6, 4, 2) == Fraction(15, 6) == Fraction(5, 2)


def test_sandwich_all_small_params():
    # ceil(quotient) <= exact <= greedy <= floor(quotient * (1 + ln binom(k,t)))
    for v in range(1, 9):
        for k in range(1, v + 1):
            for t in range(0, k + 1):
                exact = exact_cover_number(v, k, t)
                greedy = greedy_cover(v, k, t)
                bounds = cover_number_bounds(v, k, t)
                assert is_covering_design(exact), (v, k, t)
                assert is_covering_design(greedy), (v, k, t)
                assert bounds.lower <= exact.size <= greedy.size <= bounds.upper, (v, k, t)


def test_monotonicity_in_k():
    # larger blocks never need more of them
    for v in [6, 7]:
        for t in [1, 2, 3]:
            sizes = [exact_cover_number(v, k, t).size for k in range(t, v + 1)]
            assert sizes == sorted(sizes, reverse=True)


def test_search_guard():
    with pytest.raises(SearchLimitError):
        exact_cover_number(30, 10, 8)
    with pytest.raises(SearchLimitError):
        exact_cover_number(6, 3, 2, limit=10)
    with pytest.raises(SearchLimitError):
        greedy_cover(40, 20, 2, limit=1000)


def test_design_for_modes():
    exact = design_for(6, 4, 2)
    assert exact.size == exact_cover_number(6, 4, 2).size
    forced_greedy = design_for(6, 4, 2, exact_limit=1)
    assert forced_greedy.blocks == greedy_cover(6, 4, 2).blocks
    assert is_covering_design(forced_greedy)


def test_json_round_trip():
    d = exact_cover_number(5, 3, 2)
    assert CoveringDesign.from_json(d.to_json()) == d


@settings(deadline=None, max_examples=40)
@given(st.integers(min_value=1, max_value=7).flatmap(
    lambda v: st.tuples(st.just(v), st.integers(min_value=1, max_value=v))
).flatmap(
    lambda vk: st.tuples(st.just(vk[0]), st.just(vk[1]), st.integers(min_value=0, max_value=vk[1]))
))
def test_exact_is_valid_and_minimal_hypothesis(vkt):
    v, k, t = vkt
    d = exact_cover_number(v, k, t)
    assert is_covering_design(d)
    # no strictly smaller family can cover: spot-check against the counting bound
    assert d.size >= math.ceil(binom_quotient(v, k, t))
