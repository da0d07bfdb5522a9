import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asg import core
from asg.core import (
    MINUS_INF,
    PLUS_INF,
    AdviceTape,
    FiniteBits,
    MalformedAdviceError,
    OnlineAlgorithm,
    Variant,
    all_bitstrings,
    asg_opt,
    asg_score,
    as_ratio,
    bit_at,
    ceil_log2,
    decode_int,
    dominates,
    encode_int,
    encoded_length,
    run_asg,
    score_from_json,
    score_to_json,
    verify_competitive,
)

bitstrings = st.text(alphabet="01", max_size=24)


def test_bit_helpers():
    assert bit_at("011010", 1) == 0
    assert bit_at("011010", 2) == 1
    assert bit_at("011010", 6) == 0
    with pytest.raises(IndexError):
        bit_at("011", 4)
    assert core.one_positions("011010") == (2, 3, 5)
    assert core.zero_positions("011010") == (1, 4, 6)


def test_dominates_examples():
    assert dominates("011010", "011011")
    assert not dominates("011010", "001111")
    assert dominates("0000", "1111")
    assert dominates("", "")
    with pytest.raises(ValueError):
        dominates("01", "011")


def test_scores():
    assert asg_score("min", "011010", "011011") == 4
    assert asg_score("min", "011010", "001111") == PLUS_INF
    assert asg_score("max", "011010", "011011") == 2
    assert asg_score("max", "011010", "110111") == MINUS_INF
    assert asg_opt("min", "011010") == 3
    assert asg_opt("max", "011010") == 3


def test_score_json_round_trip():
    for s in (0, 7, PLUS_INF, MINUS_INF):
        assert score_from_json(score_to_json(s)) == s
    with pytest.raises(ValueError):
        score_from_json("oops")


@given(bitstrings)
def test_self_score_is_optimal(x):
    assert asg_score("min", x, x) == x.count("1") == asg_opt("min", x)
    assert asg_score("max", x, x) == x.count("0") == asg_opt("max", x)


def test_min_score_of_x_is_minimum_over_feasible_outputs():
    # Exhaustive for n <= 10 via subset enumeration: y's feasible inputs are
    # exactly the sub-masks of y, so it suffices that no y strictly below
    # weight(x) dominates x.
    for n in range(0, 11):
        best = {}
        for yv in range(1 << n):
            w = bin(yv).count("1")
            sub = yv
            while True:
                if w < best.get(sub, n + 1):
                    best[sub] = w
                if sub == 0:
                    break
                sub = (sub - 1) & yv
        for xv in range(1 << n):
            assert best[xv] == bin(xv).count("1")


@given(bitstrings, bitstrings)
def test_feasibility_agrees_across_variants(x, y):
    if len(x) == len(y):
        min_feasible = asg_score("min", x, y) != PLUS_INF
        max_feasible = asg_score("max", x, y) != MINUS_INF
        assert min_feasible == max_feasible == dominates(x, y)


def test_all_bitstrings():
    assert list(all_bitstrings(0)) == [""]
    assert list(all_bitstrings(2)) == ["00", "01", "10", "11"]
    assert len(set(all_bitstrings(4))) == 16


def test_as_ratio():
    assert as_ratio("3/2") == Fraction(3, 2)
    assert as_ratio(2) == Fraction(2)
    assert as_ratio(Fraction(7, 3)) == Fraction(7, 3)
    with pytest.raises(TypeError):
        as_ratio(1.5)


def test_tape_semantics():
    tape = AdviceTape([1, 0, 1])
    assert tape.read(2) == [1, 0]
    assert tape.bits_read == 2
    assert tape.read(3) == [1, 0, 0]  # past the written prefix: zeros
    assert tape.bits_read == 5
    with pytest.raises(ValueError):
        AdviceTape([2])


def test_ceil_log2():
    assert [ceil_log2(m) for m in [0, 1, 2, 3, 4, 5, 8, 9]] == [0, 0, 1, 2, 2, 3, 3, 4]


def test_encode_examples():
    assert encode_int(0) == [0]
    assert encode_int(1) == [1, 0, 1]
    assert encode_int(5) == [1, 1, 1, 0, 1, 0, 1]  # three 1s, 0, then 101
    assert encoded_length(5) == 7 == len(encode_int(5))


@given(st.integers(min_value=0, max_value=2**20))
def test_encode_decode_round_trip(m):
    bits = encode_int(m)
    assert len(bits) == 2 * m.bit_length() + 1 == encoded_length(m)
    assert decode_int(FiniteBits(bits)) == m
    # and via a tape, with trailing content untouched
    tape = AdviceTape(bits + [1, 1, 0])
    assert decode_int(tape) == m
    assert tape.bits_read == len(bits)


@given(st.integers(min_value=0, max_value=4000), st.integers(min_value=0, max_value=4000))
def test_encoding_prefix_free(m1, m2):
    if m1 != m2:
        b1, b2 = encode_int(m1), encode_int(m2)
        shorter, longer = sorted((b1, b2), key=len)
        assert longer[: len(shorter)] != shorter


def test_decode_malformed():
    with pytest.raises(MalformedAdviceError):
        decode_int(FiniteBits([1, 1]))  # unary part never terminated
    with pytest.raises(MalformedAdviceError):
        decode_int(FiniteBits([1, 1, 0, 1]))  # binary part cut short


class _Echo(OnlineAlgorithm):
    """Answers the advice tape verbatim, one bit per round."""

    def answer(self, i, request):
        return self.tape.read_bit()


class _Pair:
    def __init__(self, oracle, factory):
        self.oracle = oracle
        self.algorithm = factory


def test_run_asg_echo_pair():
    pair = _Pair(lambda x: [int(ch) for ch in x], _Echo)
    res = run_asg(Variant.MIN_UNKNOWN, pair, "011010")
    assert res.y == "011010"
    assert res.score == 3
    assert res.bits == 6
    assert res.to_json() == {"y": "011010", "score": 3, "bits": 6}


def test_unknown_history_depends_only_on_tape():
    # Same tape, different inputs: identical output and identical bits_read.
    fixed = [1, 0, 1, 1, 0, 0]
    pair = _Pair(lambda x: fixed, _Echo)
    outs = {run_asg(Variant.MAX_UNKNOWN, pair, x).y for x in all_bitstrings(6)}
    bits = {run_asg(Variant.MAX_UNKNOWN, pair, x).bits for x in all_bitstrings(6)}
    assert outs == {"101100"}
    assert bits == {6}


class _CopyPrev(OnlineAlgorithm):
    """Known history: guess that the current bit equals the previous one."""

    def answer(self, i, request):
        return 0 if request is None else request


def test_known_history_receives_previous_bits():
    pair = _Pair(lambda x: [], _CopyPrev)
    res = run_asg(Variant.MIN_KNOWN, pair, "0110")
    assert res.y == "0011"
    assert res.bits == 0


def test_run_rejects_bad_answers():
    class Bad(OnlineAlgorithm):
        def answer(self, i, request):
            return 2

    with pytest.raises(ValueError):
        run_asg(Variant.MIN_UNKNOWN, _Pair(lambda x: [], Bad), "01")


def test_verify_competitive_vacuous_additive():
    # Any feasible-only algorithm is (1, n)-competitive: cost <= n <= OPT + n.
    pair = _Pair(lambda x: [], _AllOnes)
    n = 5

    def run_one(x):
        res = run_asg(Variant.MIN_UNKNOWN, pair, x)
        return res.score, asg_opt("min", x)

    verdict = verify_competitive(run_one, "min", 1, n, all_bitstrings(n))
    assert verdict.holds and not verdict.strict
    assert verdict.checked == 32


class _AllOnes(OnlineAlgorithm):
    def answer(self, i, request):
        return 1


def test_verify_competitive_reports_witness():
    pair = _Pair(lambda x: [], _AllOnes)

    def run_one(x):
        res = run_asg(Variant.MIN_UNKNOWN, pair, x)
        return res.score, asg_opt("min", x)

    verdict = verify_competitive(run_one, "min", 2, 0, all_bitstrings(3))
    assert not verdict.holds
    assert verdict.witness == "000"  # cost 3 > 2 * 0


def test_infeasible_output_fails_any_finite_ratio():
    assert not core.competitive_ok("min", PLUS_INF, 3, Fraction(100), 100)
    assert not core.competitive_ok("max", MINUS_INF, 3, Fraction(100), 100)
    assert core.competitive_ok("min", 4, 2, Fraction(2), 0)
    assert not core.competitive_ok("min", 5, 2, Fraction(2), 0)
    assert core.competitive_ok("max", 2, 4, Fraction(2), 0)


def test_empty_input_has_no_rounds_in_either_history_model():
    pair = _Pair(lambda x: [], _AllOnes)
    for variant in Variant:
        res = run_asg(variant, pair, "")
        assert res.y == ""
        assert res.bits == 0
