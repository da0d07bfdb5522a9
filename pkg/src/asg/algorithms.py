"""Oracle/algorithm pairs: the advice protocols.

Each pair bundles the oracle (sees the whole input, writes the tape), a
factory for the per-run algorithm state, and a declared advice budget.  The
run engine measures actual bits read; tests hold every pair to
bits_read <= budget(n).

Protocols implemented here:

* trivial_min(c): residue classes mod p = ceil(n/c); the oracle sends p
  self-delimited and the OR of each class; strictly ceil(c)-competitive.
* trivial_max(c): ceil(c) consecutive blocks of at most ceil(n/c) bits; the
  oracle sends the endpoints of a block with the most 0s (leftmost wins)
  and its literal content; the algorithm answers 1 outside it.
* covering_min(c) / covering_max(c): oracle and algorithm deterministically
  build the same covering design for the input's weight class and the
  oracle sends a block index; costs are exact in the interior cases.
* aoc_generic(problem, c): covers any problem where feasible outputs are
  scored by their 1s (min) or 0s (max) and shrinking toward an optimal
  solution preserves feasibility; the oracle feeds the covering protocol an
  optimal solution string and the algorithm never looks at the requests.
* knapsack_two_competitive(): unit-value knapsack, m = |OPT| as advice,
  accept while items are small (<= 2/m) and fit; strictly 2-competitive.
* greedy_matching(): edge arrivals, no advice, accept anything disjoint;
  2-competitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from asg.core import (
    OnlineAlgorithm,
    as_ratio,
    ceil_log2,
    check_bits,
    decode_int,
    encode_int,
    encoded_length,
    one_positions,
    ones,
    zeros,
)
from asg.designs import design_for

__all__ = [
    "AdvicePair",
    "trivial_min",
    "trivial_max",
    "covering_min",
    "covering_max",
    "aoc_generic",
    "knapsack_two_competitive",
    "greedy_matching",
]


@dataclass(frozen=True)
class AdvicePair:
    """An advice oracle with its matching algorithm and declared bit budget."""

    oracle: Callable  # full input -> list of tape bits
    algorithm: Callable[[], OnlineAlgorithm]  # fresh state per run
    budget: Callable[[int], int]  # input length -> bit budget


def _fixed_width(value: int, width: int) -> list[int]:
    if value >= (1 << width) and width >= 0:
        raise ValueError(f"{value} does not fit in {width} bits")
    return [(value >> shift) & 1 for shift in range(width - 1, -1, -1)]


def _read_fixed(tape, width: int) -> int:
    value = 0
    for _ in range(width):
        value = (value << 1) | tape.read_bit()
    return value


# --- trivial protocols ----------------------------------------------------


class _ResidueClassAlg(OnlineAlgorithm):
    def begin(self, tape):
        self.p = decode_int(tape)
        self.class_bits = tape.read(self.p)

    def answer(self, i, request):
        return self.class_bits[i % self.p]


def trivial_min(c) -> AdvicePair:
    """Residue-class protocol for the minimization game, strictly
    ceil(c)-competitive with ceil(n/c) + O(log n) advice bits."""
    c = as_ratio(c)
    if c < 1:
        raise ValueError("needs c >= 1")

    def oracle(x: str) -> list[int]:
        check_bits(x)
        n = len(x)
        p = math.ceil(n / c)
        bits = encode_int(p)
        for j in range(p):
            # OR over the class {x_i : i = j (mod p)}, 1-based i
            bits.append(int(any(x[i - 1] == "1" for i in range(1, n + 1) if i % p == j)))
        return bits

    def budget(n: int) -> int:
        p = math.ceil(n / c)
        return p + encoded_length(p)

    return AdvicePair(oracle, _ResidueClassAlg, budget)


class _BlockCopyAlg(OnlineAlgorithm):
    def begin(self, tape):
        self.start = decode_int(tape)
        self.end = decode_int(tape)
        self.block = tape.read(max(0, self.end - self.start + 1))

    def answer(self, i, request):
        if self.start <= i <= self.end:
            return self.block[i - self.start]
        return 1


def trivial_max(c) -> AdvicePair:
    """Block-copy protocol for the maximization game, strictly
    ceil(c)-competitive: the best of ceil(c) blocks holds a ceil(c)-th of
    the zeros, and the algorithm reproduces it exactly."""
    c = as_ratio(c)
    if c < 1:
        raise ValueError("needs c >= 1")

    def blocks_of(n: int) -> list[tuple[int, int]]:
        if n == 0:
            return []
        width = math.ceil(n / c)
        return [(lo, min(lo + width - 1, n)) for lo in range(1, n + 1, width)]

    def oracle(x: str) -> list[int]:
        check_bits(x)
        n = len(x)
        if n == 0:
            return encode_int(1) + encode_int(0)
        best = max(blocks_of(n), key=lambda b: x.count("0", b[0] - 1, b[1]))
        # max() keeps the first maximum: leftmost block wins ties
        lo, hi = best
        bits = encode_int(lo) + encode_int(hi)
        bits.extend(int(ch) for ch in x[lo - 1 : hi])
        return bits

    def budget(n: int) -> int:
        return math.ceil(n / c) + 2 * encoded_length(n) if n else 2 * encoded_length(1)

    return AdvicePair(oracle, _BlockCopyAlg, budget)


# --- covering design protocols --------------------------------------------


def _design_params_min(n: int, t: int, c: Fraction) -> int:
    return math.floor(c * t)


class _CoveringAlgBase(OnlineAlgorithm):
    def __init__(self, c: Fraction, exact_limit, greedy_limit):
        self.c = c
        self.exact_limit = exact_limit
        self.greedy_limit = greedy_limit

    def _load_block(self, n: int, k: int, t: int):
        design = design_for(n, k, t, self.exact_limit, self.greedy_limit)
        index = _read_fixed(self.tape, ceil_log2(design.size))
        self.in_block = set(design.blocks[index])


class _CoveringMinAlg(_CoveringAlgBase):
    def begin(self, tape):
        self.tape = tape
        n = decode_int(tape)
        t = _read_fixed(tape, ceil_log2(n + 1))
        if math.floor(self.c * t) >= n:
            self.mode = "ones"
        elif t == 0:
            self.mode = "zeros"
        else:
            self.mode = "block"
            self._load_block(n, math.floor(self.c * t), t)

    def answer(self, i, request):
        if self.mode == "ones":
            return 1
        if self.mode == "zeros":
            return 0
        return int(i in self.in_block)


def covering_min(c, exact_limit: int | None = None, greedy_limit: int | None = None) -> AdvicePair:
    """Covering-design protocol for the minimization game.

    The oracle sends n (self-delimited), t = |x|_1 on a fixed ceil(log(n+1))
    bits, and, in the interior case 0 < floor(c t) < n, the index of a
    design block whose characteristic vector dominates x.  Cost is then
    exactly floor(c t); the boundary cases answer all 1s or all 0s.
    """
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("needs c > 1")

    def oracle(x: str) -> list[int]:
        check_bits(x)
        n = len(x)
        t = ones(x)
        bits = encode_int(n)
        bits.extend(_fixed_width(t, ceil_log2(n + 1)))
        k = math.floor(c * t)
        if 0 < k < n:
            design = design_for(n, k, t, exact_limit, greedy_limit)
            support = set(one_positions(x))
            index = next(
                i for i, block in enumerate(design.blocks) if support <= set(block)
            )
            bits.extend(_fixed_width(index, ceil_log2(design.size)))
        return bits

    def budget(n: int) -> int:
        header = encoded_length(n) + ceil_log2(n + 1)
        widest = 0
        for t in range(1, n + 1):
            k = math.floor(c * t)
            if 0 < k < n:
                design = design_for(n, k, t, exact_limit, greedy_limit)
                widest = max(widest, ceil_log2(design.size))
        return header + widest

    return AdvicePair(oracle, lambda: _CoveringMinAlg(c, exact_limit, greedy_limit), budget)


class _CoveringMaxAlg(_CoveringAlgBase):
    def begin(self, tape):
        self.tape = tape
        n = decode_int(tape)
        u = _read_fixed(tape, ceil_log2(n + 1))
        if u == 0:
            self.mode = "ones"
        elif u == n:
            self.mode = "zeros"
        else:
            self.mode = "block"
            self._load_block(n, n - math.ceil(u / self.c), n - u)

    def answer(self, i, request):
        if self.mode == "ones":
            return 1
        if self.mode == "zeros":
            return 0
        return int(i in self.in_block)


def covering_max(c, exact_limit: int | None = None, greedy_limit: int | None = None) -> AdvicePair:
    """Covering-design protocol for the maximization game.

    With u = |x|_0, the interior case 0 < u < n uses an
    (n, n - ceil(u/c), n - u) design: the chosen block dominates x and
    leaves exactly ceil(u/c) zeros.
    """
    c = as_ratio(c)
    if c <= 1:
        raise ValueError("needs c > 1")

    def oracle(x: str) -> list[int]:
        check_bits(x)
        n = len(x)
        u = zeros(x)
        bits = encode_int(n)
        bits.extend(_fixed_width(u, ceil_log2(n + 1)))
        if 0 < u < n:
            design = design_for(n, n - math.ceil(u / c), n - u, exact_limit, greedy_limit)
            support = set(one_positions(x))
            index = next(
                i for i, block in enumerate(design.blocks) if support <= set(block)
            )
            bits.extend(_fixed_width(index, ceil_log2(design.size)))
        return bits

    def budget(n: int) -> int:
        header = encoded_length(n) + ceil_log2(n + 1)
        widest = 0
        for u in range(1, n):
            design = design_for(n, n - math.ceil(u / c), n - u, exact_limit, greedy_limit)
            widest = max(widest, ceil_log2(design.size))
        return header + widest

    return AdvicePair(oracle, lambda: _CoveringMaxAlg(c, exact_limit, greedy_limit), budget)


# --- the generic reduction to covering protocols ---------------------------


def aoc_generic(problem, c, exact_limit: int | None = None, greedy_limit: int | None = None) -> AdvicePair:
    """Generic strictly c-competitive pair for any asymmetrically scored
    binary-choice problem (see problems.check_aoc_membership).

    The oracle computes the lexicographically smallest optimal solution
    string of the instance and runs the matching covering oracle on it; the
    algorithm is the covering algorithm verbatim and ignores the requests
    entirely.  Domination of the optimal string keeps the output feasible,
    and the covering guarantee bounds its score.
    """
    c = as_ratio(c)
    if problem.objective == "min":
        base = covering_min(c, exact_limit, greedy_limit)
    else:
        base = covering_max(c, exact_limit, greedy_limit)

    def oracle(instance) -> list[int]:
        best = problem.optimal_strings(instance)[0]
        return base.oracle(best)

    return AdvicePair(oracle, base.algorithm, base.budget)


# --- knapsack and matching -------------------------------------------------


class _KnapsackAlg(OnlineAlgorithm):
    def begin(self, tape):
        self.m = decode_int(tape)
        self.weight = Fraction(0)

    def answer(self, i, request):
        a = Fraction(request)
        if self.m == 0:
            return 1
        if a <= Fraction(2, self.m) and self.weight + a <= 1:
            self.weight += a
            return 0  # accept
        return 1


def knapsack_two_competitive() -> AdvicePair:
    """Unit-value knapsack with item weights in [0, 1], one item per round.

    Advice is m = |OPT| self-delimited; the algorithm accepts any item of
    weight at most 2/m that still fits.  Accepted rounds answer 0 so the
    score is the count of 0s; an overweight selection is infeasible.
    """

    def oracle(instance) -> list[int]:
        weights = sorted(Fraction(w) for w in instance)
        total, m = Fraction(0), 0
        for w in weights:
            if total + w > 1:
                break
            total += w
            m += 1
        return encode_int(m)

    return AdvicePair(oracle, _KnapsackAlg, lambda n: encoded_length(n))


class _GreedyMatchingAlg(OnlineAlgorithm):
    def begin(self, tape):
        self.tape = tape
        self.used = set()

    def answer(self, i, request):
        u, v = request
        if u in self.used or v in self.used:
            return 1
        self.used.update((u, v))
        return 0  # accept


def greedy_matching() -> AdvicePair:
    """Edge-arrival matching: accept every edge disjoint from the accepted
    ones.  No advice; the result is maximal, hence 2-competitive."""
    return AdvicePair(lambda instance: [], _GreedyMatchingAlg, lambda n: 0)
