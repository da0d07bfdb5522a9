"""Covering designs: exact minimum search, greedy construction, bounds.

A (v, k, t) covering design is a family of k-element blocks of {1..v} such
that every t-element subset lies inside some block.  Block order and family
order are pinned so that two independent parties (an advice oracle and an
algorithm) construct the identical family: blocks are sorted element tuples
ordered lexicographically, and the exact search returns the
lexicographically first family among those of minimum size.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

__all__ = [
    "CoveringDesign",
    "CoverNumberBounds",
    "SearchLimitError",
    "DEFAULT_TSUBSET_LIMIT",
    "is_covering_design",
    "binom_quotient",
    "cover_number_bounds",
    "exact_cover_number",
    "greedy_cover",
    "design_for",
]

DEFAULT_TSUBSET_LIMIT = int(os.environ.get("ASG_DESIGN_LIMIT", "100000"))


class SearchLimitError(RuntimeError):
    """The instance exceeds the configured search guard."""


@dataclass(frozen=True)
class CoveringDesign:
    v: int
    k: int
    t: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.blocks)

    def to_json(self) -> dict:
        return {"v": self.v, "k": self.k, "t": self.t, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "CoveringDesign":
        blocks = tuple(tuple(int(e) for e in b) for b in data["blocks"])
        return cls(int(data["v"]), int(data["k"]), int(data["t"]), blocks)


@dataclass(frozen=True)
class CoverNumberBounds:
    v: int
    k: int
    t: int
    lower: int
    upper: int


def _check_params(v: int, k: int, t: int) -> None:
    if not 0 <= t <= k <= v:
        raise ValueError(f"need 0 <= t <= k <= v, got ({v}, {k}, {t})")
    if v < 1:
        raise ValueError("v must be at least 1")


def is_covering_design(design: CoveringDesign) -> bool:
    """Validate block shape and that every t-subset is covered."""
    v, k, t = design.v, design.k, design.t
    _check_params(v, k, t)
    for block in design.blocks:
        if len(block) != k or len(set(block)) != k:
            return False
        if any(not 1 <= e <= v for e in block):
            return False
        if tuple(sorted(block)) != block:
            return False
    block_sets = [set(b) for b in design.blocks]
    return all(
        any(ts_set <= bs for bs in block_sets)
        for ts_set in (set(ts) for ts in combinations(range(1, v + 1), t))
    )


def binom_quotient(v: int, k: int, t: int) -> Fraction:
    """binom(v,t) / binom(k,t): the counting lower bound for the cover number."""
    _check_params(v, k, t)
    return Fraction(math.comb(v, t), math.comb(k, t))


def cover_number_bounds(v: int, k: int, t: int) -> CoverNumberBounds:
    """Counting lower bound and the classic (1 + ln binom(k,t)) upper bound."""
    q = binom_quotient(v, k, t)
    lower = math.ceil(q)
    upper = math.floor(float(q) * (1.0 + math.log(math.comb(k, t))))
    return CoverNumberBounds(v, k, t, lower, max(lower, upper))


def _guard(v: int, t: int, limit: int | None) -> None:
    limit = DEFAULT_TSUBSET_LIMIT if limit is None else limit
    if math.comb(v, t) > limit:
        raise SearchLimitError(
            f"binom({v},{t}) = {math.comb(v, t)} exceeds the search guard {limit}"
        )


def _coverage_tables(v: int, k: int, t: int):
    """Blocks in lex order, per-block coverage masks, per-subset coverer lists."""
    tsubsets = list(combinations(range(1, v + 1), t))
    index_of = {ts: i for i, ts in enumerate(tsubsets)}
    blocks = list(combinations(range(1, v + 1), k))
    masks = []
    for block in blocks:
        m = 0
        for ts in combinations(block, t):
            m |= 1 << index_of[ts]
        masks.append(m)
    coverers: list[list[int]] = [[] for _ in tsubsets]
    for bi, block in enumerate(blocks):
        bs = set(block)
        for ti, ts in enumerate(tsubsets):
            if set(ts) <= bs:
                coverers[ti].append(bi)
    return blocks, masks, coverers


def _lowest_uncovered(uncovered: int) -> int:
    return (uncovered & -uncovered).bit_length() - 1


def _cover_exists(size: int, total: int, per_block: int, masks, coverers) -> bool:
    """Is there a family of exactly `size` blocks covering everything?

    Branches on the lowest uncovered t-subset; sibling branches ban earlier
    candidates so each family is visited at most once.
    """
    full = (1 << total) - 1

    def dfs(uncovered: int, slots: int, banned: frozenset[int]) -> bool:
        if uncovered == 0:
            return True
        if slots == 0:
            return False
        need = uncovered.bit_count()
        if need > slots * per_block:
            return False
        target = _lowest_uncovered(uncovered)
        newly_banned = set()
        for bi in coverers[target]:
            if bi in banned:
                continue
            if dfs(uncovered & ~masks[bi], slots - 1, banned | frozenset(newly_banned)):
                return True
            newly_banned.add(bi)
        return False

    return dfs(full, size, frozenset())


def _lex_first_cover(size: int, total: int, per_block: int, blocks, masks, coverers):
    """Lexicographically first covering family of exactly the minimum size.

    DFS over strictly increasing block indices in lex order.  Prunes are
    sound for minimum-size targets: a block covering nothing new would be
    redundant in any completed family, and a family is dead once some
    uncovered subset has no coverer beyond the current index.
    """
    full = (1 << total) - 1
    max_coverer = [c[-1] if c else -1 for c in coverers]
    nblocks = len(blocks)

    def dfs(uncovered: int, start: int, slots: int, chosen: list[int]):
        if uncovered == 0:
            return list(chosen)
        if slots == 0 or uncovered.bit_count() > slots * per_block:
            return None
        if max_coverer[_lowest_uncovered(uncovered)] < start:
            return None
        for bi in range(start, nblocks):
            gain = uncovered & masks[bi]
            if gain == 0:
                continue
            chosen.append(bi)
            found = dfs(uncovered & ~gain, bi + 1, slots - 1, chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    return dfs(full, 0, size, [])


def _degree_lower_bound(v: int, k: int, t: int, limit: int | None) -> int:
    """Each element joined with any (t-1)-subset of the rest forms a t-subset,
    so the blocks through one element carry a full (v-1, k-1, t-1) cover;
    summing degrees over elements bounds the family size from below."""
    if t == 0 or k == v:
        return 1
    if t == 1:
        return math.ceil(Fraction(v, k))
    inner = _exact_cached(v - 1, k - 1, t - 1, limit).size
    return math.ceil(Fraction(v * inner, k))


@lru_cache(maxsize=None)
def _exact_cached(v: int, k: int, t: int, limit: int | None) -> CoveringDesign:
    _check_params(v, k, t)
    _guard(v, t, limit)
    blocks, masks, coverers = _coverage_tables(v, k, t)
    if t == 0 or k == v:
        return CoveringDesign(v, k, t, (blocks[0],))
    total = math.comb(v, t)
    per_block = math.comb(k, t)
    size = max(math.ceil(Fraction(total, per_block)), _degree_lower_bound(v, k, t, limit))
    while not _cover_exists(size, total, per_block, masks, coverers):
        size += 1
    chosen = _lex_first_cover(size, total, per_block, blocks, masks, coverers)
    assert chosen is not None
    return CoveringDesign(v, k, t, tuple(blocks[i] for i in chosen))


def exact_cover_number(v: int, k: int, t: int, limit: int | None = None) -> CoveringDesign:
    """Minimum-size covering design, lexicographically first witness.

    Deterministic: repeated calls return the identical family.  Raises
    SearchLimitError when binom(v, t) exceeds the guard.
    """
    return _exact_cached(v, k, t, limit)


@lru_cache(maxsize=None)
def _greedy_cached(v: int, k: int, t: int, limit: int | None) -> CoveringDesign:
    _check_params(v, k, t)
    _guard(v, t, limit)
    lim = DEFAULT_TSUBSET_LIMIT if limit is None else limit
    if math.comb(v, k) > lim:
        raise SearchLimitError(f"binom({v},{k}) = {math.comb(v, k)} exceeds the search guard {lim}")
    blocks, masks, _ = _coverage_tables(v, k, t)
    uncovered = (1 << math.comb(v, t)) - 1
    chosen = []
    while uncovered:
        best_i, best_gain = -1, -1
        for i, m in enumerate(masks):
            gain = (uncovered & m).bit_count()
            if gain > best_gain:  # ties keep the lex-smaller block
                best_i, best_gain = i, gain
        chosen.append(best_i)
        uncovered &= ~masks[best_i]
    return CoveringDesign(v, k, t, tuple(blocks[i] for i in chosen))


def greedy_cover(v: int, k: int, t: int, limit: int | None = None) -> CoveringDesign:
    """Greedy covering design: repeatedly take the block covering the most
    still-uncovered t-subsets, ties broken toward the lex-smallest block."""
    return _greedy_cached(v, k, t, limit)


def design_for(
    v: int, k: int, t: int, exact_limit: int | None = None, greedy_limit: int | None = None
) -> CoveringDesign:
    """The design both the oracle and the algorithm agree on.

    Exact search while binom(v, t) is within the exact guard, the greedy
    construction beyond it (subject to its own guard).  Both parties must
    call this with the same limits to stay in sync.
    """
    lim = DEFAULT_TSUBSET_LIMIT if exact_limit is None else exact_limit
    if math.comb(v, t) <= lim:
        return exact_cover_number(v, k, t, lim)
    return greedy_cover(v, k, t, greedy_limit)
