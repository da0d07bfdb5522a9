"""Closed-form advice bounds, entropy tools, and approximation checks.

The central quantity is the per-input advice bound

    B(n, c) = n * log2(1 + (c-1)^(c-1) / c^c),

the number of advice bits needed and sufficient for strict c-competitiveness
on length-n inputs, up to O(log n).  It is sandwiched between the linear
envelopes n/(e ln2 c) and n/c, and is approximated within stated additive
slacks by the exact log of the maximal binomial quotient
binom(n,t)/binom(floor(c t), t) over weights t (minimization form) and by
binom(n,u)/binom(n - ceil(u/c), n - u) over zero counts u (maximization
form).

All binomials are exact big integers; logs are applied last at PRECISION
bits (>= 64 fractional bits for every magnitude used here).  Ratios are
exact rationals; floats are rejected at the API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from asg.core import as_ratio

__all__ = [
    "PRECISION",
    "binary_entropy",
    "advice_bound",
    "envelope",
    "entropy_gap",
    "gap_maximizer",
    "Maximizer",
    "BoundReport",
    "bound_report",
    "check_entropy_properties",
    "binomial_entropy_ok",
    "log2_binom",
    "log_max_weight_quotient",
    "log_max_cozero_quotient",
    "QuotientApproxReport",
    "check_min_quotient_approx",
    "check_max_quotient_approx",
    "forms_within_factor_n",
    "binom_ratio_identity_ok",
    "exp_growth_floor_ok",
    "exp_growth_floor_sweep",
    "sg_comparison_value",
]

PRECISION = 128  # working precision in bits for every mpmath computation


def _mpf(value) -> mpmath.mpf:
    """Exact conversion of int/Fraction (floats rejected upstream)."""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def binary_entropy(p) -> mpmath.mpf:
    """H(p) = -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0."""
    with mpmath.workprec(PRECISION):
        p = _mpf(p) if isinstance(p, (int, Fraction)) else mpmath.mpf(p)
        if p < 0 or p > 1:
            raise ValueError(f"entropy argument {p} outside [0, 1]")
        if p == 0 or p == 1:
            return mpmath.mpf(0)
        q = 1 - p
        return -(p * mpmath.log(p, 2) + q * mpmath.log(q, 2))


def advice_bound(n: int, c) -> mpmath.mpf:
    """B(n, c) for rational c > 1, bits of advice for strict c-competitiveness.

    Evaluated in the algebraically equal form
    n * log2(1 + ((c-1)/c)^(c-1) / c), which stays stable as c -> 1+.
    """
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("the bound needs c > 1")
    with mpmath.workprec(PRECISION):
        cm = _mpf(c)
        ratio = mpmath.power((cm - 1) / cm, cm - 1) / cm
        return n * mpmath.log(1 + ratio, 2)


def envelope(n: int, c) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(lower, upper) linear envelopes n/(e ln2 c) and n/c around B(n, c)."""
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("the envelope needs c > 1")
    with mpmath.workprec(PRECISION):
        cm = _mpf(c)
        return n / (mpmath.e * mpmath.ln(2) * cm), n / cm


def entropy_gap(n: int, t: int, c) -> mpmath.mpf:
    """n H(t/n) - c t H(1/c): the entropy estimate of the log quotient."""
    c = as_ratio(c)
    with mpmath.workprec(PRECISION):
        return n * binary_entropy(Fraction(t, n)) - _mpf(c) * t * binary_entropy(1 / c)


@dataclass(frozen=True)
class Maximizer:
    c: Fraction
    x_value: mpmath.mpf  # (c/(c-1))^c (c-1) + 1
    t_star: mpmath.mpf  # n / x_value


def gap_maximizer(n: int, c) -> Maximizer:
    """Where the entropy gap peaks: t* = n/x with x = (c/(c-1))^c (c-1) + 1."""
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("the maximizer needs c > 1")
    with mpmath.workprec(PRECISION):
        cm = _mpf(c)
        x = mpmath.power(cm / (cm - 1), cm) * (cm - 1) + 1
        return Maximizer(c, x, n / x)


@dataclass(frozen=True)
class BoundReport:
    n: int
    c: Fraction
    bound_bits: float
    lower_envelope: float
    upper_envelope: float
    slack_terms: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "c": str(self.c),
            "bound_bits": self.bound_bits,
            "lower_envelope": self.lower_envelope,
            "upper_envelope": self.upper_envelope,
            "slack_terms": dict(self.slack_terms),
        }


def bound_report(n: int, c) -> BoundReport:
    c = as_ratio(c)
    lo, hi = envelope(n, c)
    lg = math.log2(n + 1)
    slacks = {
        "min_form_lower": 2 * lg + 5,
        "min_form_upper": 3 * lg,
        "max_form_lower": 3 * math.log2(n) + 6 if n > 1 else 6.0,
        "max_form_upper": 4 * lg,
    }
    return BoundReport(n, c, float(advice_bound(n, c)), float(lo), float(hi), slacks)


def check_entropy_properties(
    s_values=range(2, 60),
    fd_step: Fraction = Fraction(1, 10000),
    fd_tol: float = 1e-6,
) -> list[str]:
    """Verify the standard entropy facts used by the bound proofs.

    Returns a list of violation descriptions (empty when all hold):
      1. H(1/s) = log s + ((1-s)/s) log(s-1) for s > 1
      2. s H(1/s) <= log s + 2
      3. H is strictly concave: second differences at step fd_step are < -fd_tol
      4. s H(t/s) is increasing in s for s > t
      5. n H(1/x) - n H(1/x + 1/n) < 3 for n >= 3, x > 2
    """
    bad = []
    with mpmath.workprec(PRECISION):
        tol = mpmath.mpf(10) ** -25
        for s in s_values:
            lhs = binary_entropy(Fraction(1, s))
            rhs = mpmath.log(s, 2) + mpmath.mpf(1 - s) / s * mpmath.log(s - 1, 2)
            if abs(lhs - rhs) > tol:
                bad.append(f"H(1/s) identity fails at s={s}")
            if s * binary_entropy(Fraction(1, s)) > mpmath.log(s, 2) + 2 + tol:
                bad.append(f"s H(1/s) <= log s + 2 fails at s={s}")
        h = fd_step
        for num in range(1, 50):
            p = Fraction(num, 50)
            if p - h <= 0 or p + h >= 1:
                continue
            d2 = (binary_entropy(p + h) - 2 * binary_entropy(p) + binary_entropy(p - h)) / _mpf(
                h * h
            )
            if not d2 < -fd_tol:
                bad.append(f"concavity fails at p={p}")
        for t in range(1, 8):
            prev = None
            for s in range(t + 1, 40):
                val = s * binary_entropy(Fraction(t, s))
                if prev is not None and not val > prev - tol:
                    bad.append(f"s H(t/s) not increasing at t={t}, s={s}")
                prev = val
        for n in (3, 4, 5, 10, 100, 1000):
            for x in (Fraction(21, 10), Fraction(5, 2), Fraction(3), Fraction(10), Fraction(50)):
                if x <= 2:
                    continue
                gap = n * binary_entropy(1 / x) - n * binary_entropy(1 / x + Fraction(1, n))
                if not gap < 3:
                    bad.append(f"entropy shift bound fails at n={n}, x={x}")
    return bad


def log2_binom(n: int, m: int) -> mpmath.mpf:
    """log2 of the exact binomial, precise to the working precision."""
    with mpmath.workprec(PRECISION):
        return mpmath.log(mpmath.mpf(math.comb(n, m)), 2)


def binomial_entropy_ok(n: int, m: int) -> bool:
    """2^{n H(m/n)} / (n+1) <= binom(n, m) <= 2^{n H(m/n)}, checked in log space."""
    if not 0 <= m <= n or n < 1:
        raise ValueError("need 1 <= n and 0 <= m <= n")
    with mpmath.workprec(PRECISION):
        lhs = log2_binom(n, m)
        ent = n * binary_entropy(Fraction(m, n))
        return ent - mpmath.log(n + 1, 2) <= lhs <= ent


def _lgamma_log2_binom(lg: list[float], n: int, m: int) -> float:
    return (lg[n] - lg[m] - lg[n - m]) / math.log(2)


def log_max_weight_quotient(n: int, c) -> tuple[mpmath.mpf, int]:
    """max over t with floor(c t) < n of log2(binom(n,t)/binom(floor(ct),t)).

    A float sweep (lgamma) locates candidate maximizers; every candidate
    within a safety margin is re-evaluated with exact binomials at working
    precision before taking the max.
    """
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("needs c > 1")
    lg = [0.0] * (n + 2)
    for i in range(2, n + 2):
        lg[i] = lg[i - 1] + math.log(i)
    approx = {}
    t = 0
    while True:
        ct = (c.numerator * t) // c.denominator
        if ct >= n:
            break
        approx[t] = _lgamma_log2_binom(lg, n, t) - _lgamma_log2_binom(lg, ct, min(t, ct))
        t += 1
    if not approx:
        raise ValueError(f"no weight t has floor(c t) < n for n={n}, c={c}")
    peak = max(approx.values())
    best, best_t = None, -1
    with mpmath.workprec(PRECISION):
        for t, a in approx.items():
            if a < peak - 1e-6:
                continue
            ct = (c.numerator * t) // c.denominator
            exact = log2_binom(n, t) - log2_binom(ct, min(t, ct))
            if best is None or exact > best:
                best, best_t = exact, t
    return best, best_t


def log_max_cozero_quotient(n: int, c) -> tuple[mpmath.mpf, int]:
    """max over 0 < u < n of log2(binom(n,u)/binom(n - ceil(u/c), n - u))."""
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("needs c > 1")
    if n < 2:
        raise ValueError("needs n >= 2")
    lg = [0.0] * (n + 2)
    for i in range(2, n + 2):
        lg[i] = lg[i - 1] + math.log(i)
    approx = {}
    for u in range(1, n):
        k = n - math.ceil(Fraction(u) / c)
        if k < n - u:
            continue
        approx[u] = _lgamma_log2_binom(lg, n, u) - _lgamma_log2_binom(lg, k, n - u)
    if not approx:
        raise ValueError(f"no interior u is usable for n={n}, c={c}")
    peak = max(approx.values())
    best, best_u = None, -1
    with mpmath.workprec(PRECISION):
        for u, a in approx.items():
            if a < peak - 1e-6:
                continue
            k = n - math.ceil(Fraction(u) / c)
            exact = log2_binom(n, u) - log2_binom(k, n - u)
            if best is None or exact > best:
                best, best_u = exact, u
    return best, best_u


@dataclass(frozen=True)
class QuotientApproxReport:
    n: int
    c: Fraction
    log_max_quotient: float
    argmax: int
    bound_bits: float
    lower_slack: float
    upper_slack: float
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def check_min_quotient_approx(n: int, c, tol: float = 1e-9) -> QuotientApproxReport:
    """The minimization-form quotient tracks B(n,c) within the stated slacks:
    B - 2 log(n+1) - 5 <= log max quotient <= B + 3 log(n+1)."""
    c = as_ratio(c)
    value, argmax = log_max_weight_quotient(n, c)
    with mpmath.workprec(PRECISION):
        b = advice_bound(n, c)
        slack_lo = 2 * mpmath.log(n + 1, 2) + 5
        slack_hi = 3 * mpmath.log(n + 1, 2)
        lower_ok = bool(value >= b - slack_lo - tol)
        upper_ok = bool(value <= b + slack_hi + tol)
    return QuotientApproxReport(
        n, c, float(value), argmax, float(b), float(slack_lo), float(slack_hi), lower_ok, upper_ok
    )


def check_max_quotient_approx(n: int, c, tol: float = 1e-9) -> QuotientApproxReport:
    """The maximization-form quotient tracks B(n,c) within
    B - 3 log n - 6 <= log max quotient <= B + 4 log(n+1)."""
    c = as_ratio(c)
    value, argmax = log_max_cozero_quotient(n, c)
    with mpmath.workprec(PRECISION):
        b = advice_bound(n, c)
        slack_lo = 3 * mpmath.log(max(n, 2), 2) + 6
        slack_hi = 4 * mpmath.log(n + 1, 2)
        lower_ok = bool(value >= b - slack_lo - tol)
        upper_ok = bool(value <= b + slack_hi + tol)
    return QuotientApproxReport(
        n, c, float(value), argmax, float(b), float(slack_lo), float(slack_hi), lower_ok, upper_ok
    )


def forms_within_factor_n(n: int, c, tol: float = 1e-9) -> bool:
    """The two quotient forms agree within a multiplicative factor n each way."""
    min_form, _ = log_max_weight_quotient(n, c)
    max_form, _ = log_max_cozero_quotient(n, c)
    with mpmath.workprec(PRECISION):
        gap = mpmath.log(n, 2)
        return bool(abs(min_form - max_form) <= gap + tol)


def binom_ratio_identity_ok(a: int, b: int, c: int) -> bool:
    """binom(a,c)/binom(b,c) = binom(a,b)/binom(a-c,a-b) for c <= b <= a, exactly."""
    if not 0 <= c <= b <= a:
        raise ValueError("need c <= b <= a")
    lhs = Fraction(math.comb(a, c), math.comb(b, c))
    rhs = Fraction(math.comb(a, b), math.comb(a - c, a - b))
    return lhs == rhs


def exp_growth_floor_ok(n: int, c: int, tol: float = 1e-9) -> bool:
    """binom(n,t)/binom(ct,t) >= e^t at t = floor(n/(e c)), in log space.

    Only defined for integer c >= 2 with c t < n; t = 0 holds trivially.
    """
    if not isinstance(c, int) or c < 2:
        raise TypeError("needs an integer ratio c >= 2")
    with mpmath.workprec(PRECISION):
        t = int(mpmath.floor(n / (mpmath.e * c)))
        if t == 0:
            return True
        if c * t >= n:
            raise ValueError("c t must stay below n")
        lhs = math.log2(math.comb(n, t)) - math.log2(math.comb(c * t, t))
        return bool(lhs >= t * float(mpmath.log(mpmath.e, 2)) - tol)


def exp_growth_floor_sweep(n_max: int, c: int, tol: float = 1e-9) -> list[int]:
    """Every n <= n_max where the exp_growth_floor_ok inequality fails
    (empty when the floor bound holds throughout).

    Same claim as the pointwise check, but the exact binomial C(n, t) is
    maintained incrementally: C(n,t) = C(n-1,t) * n/(n-t), and each
    threshold crossing t-1 -> t uses C(n,t) = C(n-1,t-1) * n/t.  Both
    divisions are exact.  Logs are applied last, per row.
    """
    if not isinstance(c, int) or c < 2:
        raise TypeError("needs an integer ratio c >= 2")
    if n_max < 1:
        raise ValueError("needs n_max >= 1")
    log2e = math.log2(math.e)
    bad: list[int] = []
    with mpmath.workprec(PRECISION):
        def first_n_with(t_next: int) -> int:
            # smallest n with floor(n / (e c)) = t_next; e c is irrational
            return int(mpmath.ceil(t_next * mpmath.e * c))

        t, num, den_log = 0, 1, 0.0  # num = C(n, t) exactly
        nxt = first_n_with(1)
        for n in range(1, n_max + 1):
            if n == nxt:
                t += 1
                num = num * n // t
                den_log = math.log2(math.comb(c * t, t))
                nxt = first_n_with(t + 1)
            elif t:
                num = num * n // (n - t)
            if t and math.log2(num) - den_log < t * log2e - tol:
                bad.append(n)
    return bad


def sg_comparison_value(c) -> mpmath.mpf:
    """Per-request advice for plain string guessing: log2((c-1)^(c-1)/((c/2)^c))/c,
    meaningful for 1 < c <= 2."""
    c = as_ratio(c)
    if not 1 < c <= 2:
        raise ValueError("comparison curve defined for 1 < c <= 2")
    with mpmath.workprec(PRECISION):
        cm = _mpf(c)
        val = mpmath.power(cm - 1, cm - 1) / mpmath.power(cm / 2, cm)
        return mpmath.log(val, 2) / cm
