"""Lifting problem pairs back into the guessing game.

Each lift takes an oracle/algorithm pair for one of the six target
problems and produces a pair for the matching guessing variant.  The
lifted oracle builds the hard instance for the input string, runs the
problem pair on it, and classifies the outcome: either every required
round was accepted, or the run strayed in the one way a feasible output
allows (rejecting a single required round, possibly compensated by an
extra acceptance).  A short header - flag or case bits plus self-delimited
round indices - records the classification ahead of the problem pair's
own advice.  The lifted algorithm replays the problem algorithm against
the reconstructed request sequence and patches the rounds named in the
header, so the output dominates the input whenever the problem run was
feasible, at the same score.

Vertex cover, cycle finding, independent set, and path allocation lift
into the known-history games: the revealed prefix is exactly what is
needed to rebuild their instances one round at a time (cycle finding
additionally learns from the header when the cycle-closing vertex
arrives).  Dominating set and set cover lift into the unknown-history
games: their instances carry no information before the sweep-up round,
which the header pins down, and nothing after it matters.
"""

from __future__ import annotations

from asg.algorithms import AdvicePair
from asg.core import (
    MINUS_INF,
    PLUS_INF,
    AdviceTape,
    MalformedAdviceError,
    OnlineAlgorithm,
    Variant,
    check_bits,
    decode_int,
    encode_int,
    encoded_length,
    one_positions,
    ones,
    run_online,
    zero_positions,
)
from asg.problems import (
    PROBLEMS,
    halving_paths_instance,
    singleton_cover_instance,
    split_graph,
    star_domination_graph,
    unique_cycle_graph,
)

__all__ = ["ReductionError", "REDUCTIONS", "REDUCTION_VARIANT", "lift_to_asg"]


class ReductionError(RuntimeError):
    """The problem pair violated the contract the lift relies on."""


REDUCTION_VARIANT = {
    "vc": Variant.MIN_KNOWN,
    "cf": Variant.MIN_KNOWN,
    "ds": Variant.MIN_UNKNOWN,
    "sc": Variant.MIN_UNKNOWN,
    "is": Variant.MAX_KNOWN,
    "dpa": Variant.MAX_KNOWN,
}

REDUCTIONS = tuple(REDUCTION_VARIANT)


# --- oracle side -------------------------------------------------------------


def _feasible_run(pair: AdvicePair, problem, instance):
    """Run the problem pair on the instance; the advice it read and its
    answer string.  An infeasible answer breaks the lift's contract."""
    phi = list(pair.oracle(instance))
    y = run_online(pair.algorithm(), AdviceTape(phi), problem.requests(instance))
    if problem.score(instance, y) in (PLUS_INF, MINUS_INF):
        raise ReductionError(f"{problem.name} pair produced an infeasible output {y!r}")
    return phi, y


def _case_header(to_one: list[int], to_zero: list[int]) -> list[int]:
    """Case bits and indices for the lifts that patch at most one round in
    each direction: 00 nothing to patch, 01 one round forced to 1 and one
    to 0, 10 only the forced 1.  Code 11 stays unused."""
    if not to_one:
        return [0, 0]
    if to_zero:
        return [0, 1] + encode_int(to_one[0]) + encode_int(to_zero[0])
    return [1, 0] + encode_int(to_one[0])


def _vc_tape(pair: AdvicePair, x: str) -> list[int]:
    check_bits(x)
    phi, y = _feasible_run(pair, PROBLEMS["vc"], split_graph(x))
    dropped = [i for i in one_positions(x) if y[i - 1] == "0"]
    extras = [i for i in zero_positions(x) if y[i - 1] == "1"]
    return _case_header(dropped, extras) + phi


def _is_tape(pair: AdvicePair, x: str) -> list[int]:
    check_bits(x)
    phi, y = _feasible_run(pair, PROBLEMS["is"], split_graph(x))
    overreach = [i for i in one_positions(x) if y[i - 1] == "0"]
    dropped = [i for i in zero_positions(x) if y[i - 1] == "1"]
    return _case_header(overreach, dropped) + phi


def _cf_tape(pair: AdvicePair, x: str) -> list[int]:
    check_bits(x)
    support = one_positions(x)
    if len(support) <= 2:
        # too few 1s for the cycle instance: name them outright
        bits = [1] + encode_int(len(support))
        for i in support:
            bits.extend(encode_int(i))
        return bits
    phi, _ = _feasible_run(pair, PROBLEMS["cf"], unique_cycle_graph(x))
    # a cycle exists only through all of the 1-rounds, so no patching
    return [0] + encode_int(support[-1]) + phi


def _ds_tape(pair: AdvicePair, x: str) -> list[int]:
    check_bits(x)
    if ones(x) == 0:
        return [1]
    top = one_positions(x)[-1]
    phi, y = _feasible_run(pair, PROBLEMS["ds"], star_domination_graph(x))
    if y[top - 1] == "1":
        return [0, 0] + encode_int(top) + phi
    # the hub was rejected, so everything else was taken; one of the
    # taken 0-rounds pays for answering 1 at the hub
    stand_in = next(i for i in zero_positions(x) if y[i - 1] == "1")
    return [0, 1] + encode_int(top) + encode_int(stand_in) + phi


def _sc_tape(pair: AdvicePair, x: str) -> list[int]:
    check_bits(x)
    if ones(x) == 0:
        return [1]
    top = one_positions(x)[-1]
    phi, _ = _feasible_run(pair, PROBLEMS["sc"], singleton_cover_instance(x))
    # every element outside the sweep-up set is covered only by its own
    # request, so all 1-rounds were accepted and nothing needs patching
    return [0] + encode_int(top) + phi


def _dpa_tape(pair: AdvicePair, x: str) -> list[int]:
    check_bits(x)
    phi, y = _feasible_run(pair, PROBLEMS["dpa"], halving_paths_instance(x))
    overreach = [i for i in one_positions(x) if y[i - 1] == "0"]
    dropped = [i for i in zero_positions(x) if y[i - 1] == "1"]
    return encode_int(len(x)) + _case_header(overreach, dropped) + phi


# --- algorithm side ----------------------------------------------------------


def _read_case_overrides(tape) -> dict[int, int]:
    first = tape.read_bit()
    second = tape.read_bit()
    if first and second:
        raise MalformedAdviceError("reserved case code")
    force = {}
    if first or second:
        force[decode_int(tape)] = 1
        if second:
            force[decode_int(tape)] = 0
    return force


def _checked(answer: int) -> int:
    if answer not in (0, 1):
        raise ReductionError(f"problem algorithm answered {answer!r}")
    return answer


class _SplitLift(OnlineAlgorithm):
    """Replay against the clique-over-ones graph grown from the revealed
    prefix, patching the header rounds."""

    def __init__(self, inner_factory):
        self._make = inner_factory

    def begin(self, tape):
        self.force = _read_case_overrides(tape)
        self.prior_ones: list[int] = []
        self.inner = self._make()
        self.inner.begin(tape)

    def answer(self, i, request):
        if request:
            self.prior_ones.append(i - 1)
        a = _checked(self.inner.answer(i, tuple(self.prior_ones)))
        return self.force.get(i, a)


class _CycleLift(OnlineAlgorithm):
    """Replay against the back-chain of 1-rounds; the header supplies the
    arrival round of the cycle-closing edge, or the whole answer when the
    input has at most two 1s."""

    def __init__(self, inner_factory):
        self._make = inner_factory

    def begin(self, tape):
        if tape.read_bit():
            count = decode_int(tape)
            self.support = {decode_int(tape) for _ in range(count)}
            self.inner = None
            return
        self.top = decode_int(tape)
        self.prior_ones: list[int] = []
        self.inner = self._make()
        self.inner.begin(tape)

    def answer(self, i, request):
        if self.inner is None:
            return int(i in self.support)
        if request:
            self.prior_ones.append(i - 1)
        back = []
        if self.prior_ones:
            back.append(self.prior_ones[-1])
            if i == self.top:
                back.append(self.prior_ones[0])
        return _checked(self.inner.answer(i, tuple(sorted(set(back)))))


class _StarLift(OnlineAlgorithm):
    """Rounds before the hub carry no edges, so the replay needs no
    history at all; the hub round answers 1 and later rounds 0."""

    def __init__(self, inner_factory):
        self._make = inner_factory

    def begin(self, tape):
        if tape.read_bit():
            self.top = None
            return
        has_stand_in = tape.read_bit()
        self.top = decode_int(tape)
        self.skip = decode_int(tape) if has_stand_in else 0
        self.inner = self._make()
        self.inner.begin(tape)

    def answer(self, i, request):
        if self.top is None or i > self.top:
            return 0
        if i == self.top:
            return 1
        a = _checked(self.inner.answer(i, ()))
        return 0 if i == self.skip else a


class _SingletonLift(OnlineAlgorithm):
    """Rounds before the sweep-up request are fixed singletons; as with
    the star lift the history is never consulted."""

    def __init__(self, inner_factory):
        self._make = inner_factory

    def begin(self, tape):
        if tape.read_bit():
            self.top = None
            return
        self.top = decode_int(tape)
        self.inner = self._make()
        self.inner.begin(tape)

    def answer(self, i, request):
        if self.top is None or i > self.top:
            return 0
        if i == self.top:
            return 1
        return _checked(self.inner.answer(i, (i,)))


class _HalvingLift(OnlineAlgorithm):
    """Replay against the halving subpaths; the previous input bit says
    whether the next span restarts where the last one started or ended."""

    def __init__(self, inner_factory):
        self._make = inner_factory

    def begin(self, tape):
        self.n = decode_int(tape)
        self.force = _read_case_overrides(tape)
        self.u = 0
        self.prev_end = 0
        self.inner = self._make()
        self.inner.begin(tape)

    def answer(self, i, request):
        if i > 1 and request == 0:
            self.u = self.prev_end
        span = (self.u, self.u + (1 << (self.n - i)))
        self.prev_end = span[1]
        a = _checked(self.inner.answer(i, span))
        return self.force.get(i, a)


# --- assembly ----------------------------------------------------------------

_LIFTS = {
    "vc": (_vc_tape, _SplitLift, lambda n: 2 + 2 * encoded_length(n)),
    "cf": (
        _cf_tape,
        _CycleLift,
        lambda n: 1 + encoded_length(min(n, 2)) + min(n, 2) * encoded_length(n),
    ),
    "ds": (_ds_tape, _StarLift, lambda n: 2 + 2 * encoded_length(n)),
    "sc": (_sc_tape, _SingletonLift, lambda n: 1 + encoded_length(n)),
    "is": (_is_tape, _SplitLift, lambda n: 2 + 2 * encoded_length(n)),
    "dpa": (_dpa_tape, _HalvingLift, lambda n: 2 + 3 * encoded_length(n)),
}


def lift_to_asg(problem_pair: AdvicePair, reduction: str) -> AdvicePair:
    """Turn a pair for the named problem into a pair for the matching
    guessing variant (REDUCTION_VARIANT[reduction]).

    The lifted pair inherits the problem pair's competitive quality on
    the hard-instance family and reads at most a header more: two case
    bits and up to three self-delimited values bounded by the input
    length.  The problem pair must answer deterministically, read only
    its own advice, and produce feasible outputs on the family;
    violations surface as ReductionError.
    """
    if reduction not in _LIFTS:
        raise ValueError(f"unknown reduction {reduction!r}")
    make_tape, lift_cls, overhead = _LIFTS[reduction]
    return AdvicePair(
        oracle=lambda x: make_tape(problem_pair, x),
        algorithm=lambda: lift_cls(problem_pair.algorithm),
        budget=lambda n: problem_pair.budget(n) + overhead(n),
    )
