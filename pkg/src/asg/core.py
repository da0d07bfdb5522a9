"""Core types and the run engine for string guessing with advice.

The guessing game: an adversary fixes a bit string x = x_1 ... x_n.  In round
i the algorithm answers a bit y_i.  Under known history it learns x_{i-1}
before answering round i (and x_n arrives with a final dummy request that
needs no answer); under unknown history it learns nothing until the end.
The oracle sees all of x in advance and writes an infinite advice tape that
the algorithm may read at will; reading past the written prefix yields 0s.

Scoring is asymmetric.  An output y is feasible iff x dominates into y
(every 1 of x is a 1 of y).  The minimization variant pays the number of 1s
in y and an infeasible output costs +inf; the maximization variant earns the
number of 0s in y and an infeasible output earns -inf.

Bit strings are plain str objects over '0'/'1'.  Indexing in the public API
is 1-based, matching x = x_1 ... x_n.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "PLUS_INF",
    "MINUS_INF",
    "Score",
    "Variant",
    "AdviceTape",
    "FiniteBits",
    "MalformedAdviceError",
    "RunResult",
    "CompetitiveVerdict",
    "OnlineAlgorithm",
    "check_bits",
    "bit_at",
    "ones",
    "zeros",
    "one_positions",
    "zero_positions",
    "dominates",
    "asg_feasible",
    "asg_score",
    "asg_opt",
    "all_bitstrings",
    "as_ratio",
    "ceil_log2",
    "encode_int",
    "decode_int",
    "encoded_length",
    "run_asg",
    "run_online",
    "verify_competitive",
    "score_to_json",
    "score_from_json",
]

# Scores are exact: a natural int when finite, one of these floats otherwise.
PLUS_INF = math.inf
MINUS_INF = -math.inf

Score = int | float


def is_finite_score(score: Score) -> bool:
    return not isinstance(score, float)


def score_to_json(score: Score):
    """Serialize a score: finite values as int, infinities as +inf/-inf."""
    if isinstance(score, float):
        return "+inf" if score > 0 else "-inf"
    return int(score)


def score_from_json(value) -> Score:
    if value == "+inf":
        return PLUS_INF
    if value == "-inf":
        return MINUS_INF
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"not a score: {value!r}")
    return value


class Variant(enum.Enum):
    """The four game variants: objective x what the rounds reveal."""

    MIN_UNKNOWN = ("min", "unknown")
    MIN_KNOWN = ("min", "known")
    MAX_UNKNOWN = ("max", "unknown")
    MAX_KNOWN = ("max", "known")

    @property
    def objective(self) -> str:
        return self.value[0]

    @property
    def history(self) -> str:
        return self.value[1]


def check_bits(x: str) -> str:
    if not isinstance(x, str) or any(ch not in "01" for ch in x):
        raise ValueError(f"not a bit string: {x!r}")
    return x


def bit_at(x: str, i: int) -> int:
    """x_i with 1-based i."""
    if not 1 <= i <= len(x):
        raise IndexError(f"position {i} out of range for length {len(x)}")
    return ord(x[i - 1]) - 48


def ones(x: str) -> int:
    return x.count("1")


def zeros(x: str) -> int:
    return x.count("0")


def one_positions(x: str) -> tuple[int, ...]:
    return tuple(i + 1 for i, ch in enumerate(x) if ch == "1")


def zero_positions(x: str) -> tuple[int, ...]:
    return tuple(i + 1 for i, ch in enumerate(x) if ch == "0")


def dominates(x: str, y: str) -> bool:
    """True iff every 1 of x is also a 1 of y (x and y of equal length)."""
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return all(a != "1" or b == "1" for a, b in zip(x, y))


def asg_feasible(x: str, y: str) -> bool:
    return dominates(x, y)


def asg_score(objective: str, x: str, y: str) -> Score:
    """Score of output y against input x under the given objective."""
    if objective == "min":
        return ones(y) if dominates(x, y) else PLUS_INF
    if objective == "max":
        return zeros(y) if dominates(x, y) else MINUS_INF
    raise ValueError(f"unknown objective: {objective!r}")


def asg_opt(objective: str, x: str) -> int:
    """Optimal score on input x: y = x is the best feasible output."""
    if objective == "min":
        return ones(x)
    if objective == "max":
        return zeros(x)
    raise ValueError(f"unknown objective: {objective!r}")


def all_bitstrings(n: int) -> Iterator[str]:
    """All 2^n strings of length n in lexicographic order."""
    for v in range(1 << n):
        yield format(v, f"0{n}b") if n else ""


def as_ratio(c) -> Fraction:
    """Coerce a competitive ratio to an exact rational; floats are rejected."""
    if isinstance(c, float):
        raise TypeError("competitive ratios must be exact rationals, not floats")
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)  # accepts "3/2" and "2"
    raise TypeError(f"cannot interpret {c!r} as a rational ratio")


class MalformedAdviceError(ValueError):
    """Raised when a finite bit source ends inside a self-delimited value."""


class AdviceTape:
    """One-way read access to an oracle-written tape.

    The tape is conceptually infinite: positions past the written prefix
    read as 0.  bits_read is the highest position ever reached and is the
    advice cost of a run.
    """

    def __init__(self, written: Iterable[int] = ()):
        self._written = [self._checked(b) for b in written]
        self._cursor = 0
        self._max_cursor = 0

    @staticmethod
    def _checked(b) -> int:
        if b not in (0, 1):
            raise ValueError(f"tape bits must be 0 or 1, got {b!r}")
        return int(b)

    def read_bit(self) -> int:
        b = self._written[self._cursor] if self._cursor < len(self._written) else 0
        self._cursor += 1
        if self._cursor > self._max_cursor:
            self._max_cursor = self._cursor
        return b

    def read(self, k: int) -> list[int]:
        return [self.read_bit() for _ in range(k)]

    @property
    def bits_read(self) -> int:
        return self._max_cursor

    @property
    def written(self) -> tuple[int, ...]:
        return tuple(self._written)


class FiniteBits:
    """A strict finite bit source; running out raises MalformedAdviceError.

    Used to decode self-delimited values out of raw bit lists, where there
    is no infinite zero extension to fall back on.
    """

    def __init__(self, bits: Sequence[int]):
        self._bits = list(bits)
        self._cursor = 0

    def read_bit(self) -> int:
        if self._cursor >= len(self._bits):
            raise MalformedAdviceError("bit source exhausted mid-value")
        b = self._bits[self._cursor]
        self._cursor += 1
        return b

    @property
    def remaining(self) -> int:
        return len(self._bits) - self._cursor


def ceil_log2(m: int) -> int:
    """ceil(log2 m) for m >= 1; by convention 0 for m in {0, 1}."""
    if m < 0:
        raise ValueError("ceil_log2 of a negative value")
    return (m - 1).bit_length() if m > 1 else 0


def encode_int(m: int) -> list[int]:
    """Self-delimiting code for m >= 0.

    k = ceil(log(m+1)) written as k 1s and a terminating 0, then m itself
    on k bits.  Total length 2k+1; the codeword set is prefix-free.
    """
    if m < 0:
        raise ValueError("cannot encode a negative value")
    k = m.bit_length()  # equals ceil(log2(m+1))
    out = [1] * k + [0]
    out.extend((m >> shift) & 1 for shift in range(k - 1, -1, -1))
    return out


def encoded_length(m: int) -> int:
    return 2 * m.bit_length() + 1


def decode_int(source) -> int:
    """Inverse of encode_int, reading from a tape or FiniteBits source."""
    k = 0
    while source.read_bit() == 1:
        k += 1
    m = 0
    for _ in range(k):
        m = (m << 1) | source.read_bit()
    return m


class OnlineAlgorithm:
    """Base class for online strategies driven by the run engine.

    begin() is called once with the advice tape before round 1; answer() is
    called once per round and must return 0 or 1.  Under known history the
    request argument is the previous input bit (None in round 1) and
    finish() receives the final dummy request carrying x_n; under unknown
    history both are always None.
    """

    def begin(self, tape: AdviceTape) -> None:
        self.tape = tape

    def answer(self, i: int, request) -> int:
        raise NotImplementedError

    def finish(self, request) -> None:
        pass


@dataclass(frozen=True)
class RunResult:
    y: str
    score: Score
    bits: int

    def to_json(self) -> dict:
        return {"y": self.y, "score": score_to_json(self.score), "bits": self.bits}

    @classmethod
    def from_json(cls, data: dict) -> "RunResult":
        return cls(check_bits(data["y"]), score_from_json(data["score"]), int(data["bits"]))


def run_online(algorithm: OnlineAlgorithm, tape: AdviceTape, requests: Sequence, final=None) -> str:
    """Drive one algorithm over a request sequence; returns the answer string."""
    algorithm.begin(tape)
    answers = []
    for i, request in enumerate(requests, start=1):
        a = algorithm.answer(i, request)
        if a not in (0, 1):
            raise ValueError(f"round {i}: algorithm answered {a!r}, expected 0 or 1")
        answers.append("1" if a else "0")
    algorithm.finish(final)
    return "".join(answers)


def run_asg(variant: Variant, pair, x: str) -> RunResult:
    """Run an oracle/algorithm pair on input x under the given variant."""
    check_bits(x)
    n = len(x)
    tape = AdviceTape(pair.oracle(x))
    algorithm = pair.algorithm()
    if variant.history == "known":
        requests = [None] + [bit_at(x, i) for i in range(1, n)] if n else []
        final = bit_at(x, n) if n else None
    else:
        requests = [None] * n
        final = None
    y = run_online(algorithm, tape, requests, final)
    return RunResult(y, asg_score(variant.objective, x, y), tape.bits_read)


@dataclass(frozen=True)
class CompetitiveVerdict:
    ratio: Fraction
    additive: int
    strict: bool
    holds: bool
    checked: int
    witness: object = None  # a failing instance, or None

    def to_json(self) -> dict:
        return {
            "ratio": str(self.ratio),
            "additive": self.additive,
            "strict": self.strict,
            "holds": self.holds,
            "checked": self.checked,
            "witness": None if self.witness is None else repr(self.witness),
        }


def competitive_ok(objective: str, alg_score: Score, opt_score: Score, c: Fraction, additive: int) -> bool:
    """The per-instance inequality: ALG <= c OPT + a (min), OPT <= c ALG + a (max)."""
    if objective == "min":
        return alg_score <= c * opt_score + additive
    if objective == "max":
        return opt_score <= c * alg_score + additive
    raise ValueError(f"unknown objective: {objective!r}")


def verify_competitive(
    run_one: Callable[[object], tuple[Score, Score]],
    objective: str,
    c,
    additive: int,
    instances: Iterable,
) -> CompetitiveVerdict:
    """Check the competitive inequality over an instance enumeration.

    run_one maps an instance to (algorithm score, optimal score).  Stops at
    the first violation, which is reported as the witness.
    """
    ratio = as_ratio(c)
    checked = 0
    for instance in instances:
        alg_score, opt_score = run_one(instance)
        checked += 1
        if not competitive_ok(objective, alg_score, opt_score, ratio, additive):
            return CompetitiveVerdict(ratio, additive, additive == 0, False, checked, instance)
    return CompetitiveVerdict(ratio, additive, additive == 0, True, checked)
