import math
import random
from fractions import Fraction

import mpmath
import pytest

from asg import bounds
from asg.bounds import (
    advice_bound,
    binary_entropy,
    binom_ratio_identity_ok,
    binomial_entropy_ok,
    bound_report,
    check_entropy_properties,
    check_max_quotient_approx,
    check_min_quotient_approx,
    entropy_gap,
    envelope,
    exp_growth_floor_ok,
    exp_growth_floor_sweep,
    forms_within_factor_n,
    gap_maximizer,
    log_max_weight_quotient,
    sg_comparison_value,
)


def test_entropy_values():
    assert binary_entropy(0) == 0
    assert binary_entropy(1) == 0
    assert abs(binary_entropy(Fraction(1, 2)) - 1) < 1e-30
    # H(1/4) = 2 - (3/4) log2 3
    want = 2 - 0.75 * math.log2(3)
    assert abs(float(binary_entropy(Fraction(1, 4))) - want) < 1e-12
    with pytest.raises(ValueError):
        binary_entropy(Fraction(3, 2))


def test_advice_bound_values():
    # B(1000, 2) = 1000 log2(5/4)
    assert abs(float(advice_bound(1000, 2)) - 1000 * math.log2(1.25)) < 1e-9
    assert float(advice_bound(1000, 2)) == pytest.approx(321.928094887, abs=1e-6)
    with pytest.raises(ValueError):
        advice_bound(10, 1)
    with pytest.raises(TypeError):
        advice_bound(10, 1.5)


def test_advice_bound_stable_near_one():
    # rewritten form stays finite and between the envelopes as c -> 1+
    for c in (Fraction(101, 100), Fraction(1001, 1000), Fraction(10001, 10000)):
        b = advice_bound(10**6, c)
        lo, hi = envelope(10**6, c)
        assert lo <= b <= hi


def test_envelope_sandwich_grid():
    for c in (Fraction(101, 100), Fraction(11, 10), Fraction(3, 2), 2, 3, 5, 10, 100):
        lo, hi = envelope(10**6, c)
        b = advice_bound(10**6, c)
        assert float(lo) * (1 - 1e-9) <= float(b) <= float(hi) * (1 + 1e-9)
        assert lo < hi


def test_entropy_gap_peaks_at_bound():
    # M(n, t*) = B(n, c), and t* = n/5 for c = 2
    n = 1000
    m = gap_maximizer(n, 2)
    assert abs(float(m.x_value) - 5) < 1e-25
    assert abs(float(m.t_star) - 200) < 1e-22
    with mpmath.workprec(128):
        peak = entropy_gap(n, 200, 2)
        assert abs(float(peak - advice_bound(n, 2))) < 1e-20


def test_maximizer_interval():
    # t* lies strictly between n/(e c) and n/(2 c): equivalently 2c < x < e c
    for c in (Fraction(3, 2), 2, 3, 5, Fraction(7, 3), 10):
        m = gap_maximizer(100, c)
        cf = float(Fraction(c))
        assert 2 * cf < float(m.x_value) < math.e * cf


def test_gap_concave_in_t():
    n = 400
    vals = [float(entropy_gap(n, t, 2)) for t in range(1, n // 2)]
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    assert all(d2 <= d1 + 1e-12 for d1, d2 in zip(diffs, diffs[1:]))


def test_entropy_properties_all_hold():
    assert check_entropy_properties() == []


def test_binomial_entropy_bounds():
    for n in range(1, 201):
        for m in range(0, n + 1):
            assert binomial_entropy_ok(n, m), (n, m)


def test_min_quotient_approx_example():
    # n=100, c=2: the exact log-max quotient within [B - 2log(101) - 5, B + 3log(101)]
    rep = check_min_quotient_approx(100, 2)
    assert rep.ok
    assert rep.bound_bits == pytest.approx(100 * math.log2(1.25), abs=1e-9)
    value, argmax = log_max_weight_quotient(100, 2)
    assert 0 < argmax < 50
    # brute cross-check of the maximum with exact arithmetic
    best = max(
        math.log2(math.comb(100, t)) - math.log2(math.comb(2 * t, t))
        for t in range(0, 50)
    )
    assert float(value) == pytest.approx(best, abs=1e-9)


def test_quotient_approx_small_grid():
    for n in (3, 10, 37, 100, 256):
        for c in (Fraction(3, 2), 2, 3, 5):
            assert check_min_quotient_approx(n, c).ok, (n, c)
            if n >= 2:
                assert check_max_quotient_approx(n, c).ok, (n, c)
                assert forms_within_factor_n(n, c), (n, c)


def test_binom_ratio_identity_random_triples():
    rng = random.Random(20260816)
    for _ in range(200):
        a = rng.randrange(0, 60)
        b = rng.randrange(0, a + 1)
        c = rng.randrange(0, b + 1)
        assert binom_ratio_identity_ok(a, b, c)


def test_exp_growth_floor():
    for c in range(2, 11):
        for n in (10, 50, 137, 1000):
            assert exp_growth_floor_ok(n, c), (n, c)
    with pytest.raises(TypeError):
        exp_growth_floor_ok(100, Fraction(3, 2))


def test_sg_comparison_curve():
    assert abs(float(sg_comparison_value(2))) < 1e-25
    assert float(sg_comparison_value(Fraction(101, 100))) > 0.9
    with pytest.raises(ValueError):
        sg_comparison_value(3)


def test_bound_report_fields():
    rep = bound_report(1000, 2)
    assert rep.lower_envelope < rep.bound_bits < rep.upper_envelope
    data = rep.to_json()
    assert data["c"] == "2"
    assert set(data["slack_terms"]) == {
        "min_form_lower",
        "min_form_upper",
        "max_form_lower",
        "max_form_upper",
    }


def test_growth_floor_sweep_matches_the_pointwise_check():
    # default tolerance: no failures anywhere on a modest range
    for c in (2, 3):
        assert exp_growth_floor_sweep(80, c) == []
        # a hostile tolerance flips rows exactly where the pointwise form flips
        expected = [n for n in range(1, 81) if not exp_growth_floor_ok(n, c, tol=-1e6)]
        assert exp_growth_floor_sweep(80, c, tol=-1e6) == expected
        assert expected  # the cross-check is not vacuous
    with pytest.raises(TypeError):
        exp_growth_floor_sweep(100, Fraction(3, 2))
    with pytest.raises(ValueError):
        exp_growth_floor_sweep(0, 2)
