"""The target online problems and their hard-instance constructions.

Graph problems use the vertex-arrival model: round i reveals vertex i plus
its edges to vertices 1..i-1, and the algorithm immediately answers.  For
minimization problems answering 1 accepts the request into the solution;
for maximization problems 0 accepts, so that a feasible score is always
the count dominated-side bits of the answer string (1s for min, 0s for
max) and domination toward an optimal answer string preserves feasibility.

Each Problem object bundles the arrival model (requests), the scorer, and
a brute-force optimum, so the covering protocols can be pointed at any of
them.  The construction functions build the instance families on which the
guessing game embeds into each problem: a split graph, a unique-cycle
graph, a star, a singleton cover, and a halving family of subpaths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from asg.core import (
    MINUS_INF,
    PLUS_INF,
    Score,
    all_bitstrings,
    check_bits,
    one_positions,
    ones,
    zeros,
)

__all__ = [
    "VertexArrivalGraph",
    "SetCoverInstance",
    "DisjointPathInstance",
    "all_graphs",
    "is_vertex_cover",
    "induced_has_cycle",
    "is_dominating_set",
    "is_independent_set",
    "covers_universe",
    "paths_edge_disjoint",
    "matching_vertex_disjoint",
    "Problem",
    "VertexCover",
    "CycleFinding",
    "DominatingSet",
    "SetCover",
    "IndependentSet",
    "DisjointPaths",
    "UnitKnapsack",
    "EdgeMatching",
    "PROBLEMS",
    "split_graph",
    "unique_cycle_graph",
    "star_domination_graph",
    "singleton_cover_instance",
    "halving_paths_instance",
    "CONSTRUCTIONS",
    "aoc_membership_check",
]

BRUTE_GUARD = 16  # selections are enumerated exhaustively up to this length


# --- instance types ---------------------------------------------------------


@dataclass(frozen=True)
class VertexArrivalGraph:
    """A graph revealed vertex by vertex; vertices are 1..n in arrival
    order and every edge (i, j) with i < j arrives together with j."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of order or range")

    def neighbors_before(self, j: int) -> tuple[int, ...]:
        return tuple(sorted(i for i, k in self.edges if k == j))

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def to_json(self) -> dict:
        return {"n": self.n, "arrivals": [list(self.neighbors_before(j)) for j in range(1, self.n + 1)]}

    @classmethod
    def from_json(cls, data: dict) -> "VertexArrivalGraph":
        edges = set()
        for j, back in enumerate(data["arrivals"], start=1):
            edges.update((i, j) for i in back)
        return cls(data["n"], frozenset(edges))


def all_graphs(n: int):
    """Every graph on n arrival-ordered vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for keep in range(1 << len(pairs)):
        yield VertexArrivalGraph(n, frozenset(p for b, p in enumerate(pairs) if keep >> b & 1))


@dataclass(frozen=True)
class SetCoverInstance:
    """Known universe, subsets arriving online; their union is the universe."""

    universe: tuple
    requests: tuple

    def __post_init__(self):
        union = set()
        for r in self.requests:
            union.update(r)
        if union != set(self.universe):
            raise ValueError("requests must union to the universe")

    def to_json(self) -> dict:
        return {"universe": list(self.universe), "requests": [list(r) for r in self.requests]}

    @classmethod
    def from_json(cls, data: dict) -> "SetCoverInstance":
        return cls(tuple(data["universe"]), tuple(tuple(r) for r in data["requests"]))


@dataclass(frozen=True)
class DisjointPathInstance:
    """Subpath requests (u, v), 0 <= u < v <= length, on a fixed path."""

    length: int
    requests: tuple

    def __post_init__(self):
        for u, v in self.requests:
            if not (0 <= u < v <= self.length):
                raise ValueError(f"request ({u},{v}) leaves the path")

    def to_json(self) -> dict:
        return {"length": self.length, "requests": [list(r) for r in self.requests]}

    @classmethod
    def from_json(cls, data: dict) -> "DisjointPathInstance":
        return cls(data["length"], tuple(tuple(r) for r in data["requests"]))


# --- feasibility predicates -------------------------------------------------


def is_vertex_cover(graph: VertexArrivalGraph, chosen: set) -> bool:
    return all(i in chosen or j in chosen for i, j in graph.edges)


def is_independent_set(graph: VertexArrivalGraph, chosen: set) -> bool:
    return not any(i in chosen and j in chosen for i, j in graph.edges)


def is_dominating_set(graph: VertexArrivalGraph, chosen: set) -> bool:
    for v in range(1, graph.n + 1):
        if v in chosen:
            continue
        if not any(graph.adjacent(v, u) for u in chosen):
            return False
    return True


def induced_has_cycle(graph: VertexArrivalGraph, chosen: set) -> bool:
    # union-find: an edge inside one component closes a cycle
    parent = {v: v for v in chosen}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in graph.edges:
        if i in chosen and j in chosen:
            ri, rj = find(i), find(j)
            if ri == rj:
                return True
            parent[ri] = rj
    return False


def covers_universe(instance: SetCoverInstance, chosen_indices: set) -> bool:
    got = set()
    for i in chosen_indices:
        got.update(instance.requests[i - 1])
    return got == set(instance.universe)


def paths_edge_disjoint(requests, chosen_indices: set) -> bool:
    spans = [requests[i - 1] for i in sorted(chosen_indices)]
    spans.sort()
    return all(a[1] <= b[0] for a, b in zip(spans, spans[1:]))


def matching_vertex_disjoint(edges, chosen_indices: set) -> bool:
    seen = set()
    for i in chosen_indices:
        for v in edges[i - 1]:
            if v in seen:
                return False
            seen.add(v)
    return True


# --- the problems -----------------------------------------------------------


class Problem:
    """An online problem with binary answers and asymmetric scoring."""

    name: str = ""
    objective: str = ""

    def requests(self, instance) -> list:
        raise NotImplementedError

    def score(self, instance, y: str) -> Score:
        raise NotImplementedError

    def _length(self, instance) -> int:
        return len(self.requests(instance))

    def opt(self, instance) -> Score:
        scores = self._all_scores(instance)
        return min(scores) if self.objective == "min" else max(scores)

    def optimal_strings(self, instance) -> list[str]:
        """All optimum answer strings, lexicographically sorted; empty when
        no output is feasible."""
        n = self._length(instance)
        best = self.opt(instance)
        if best in (PLUS_INF, MINUS_INF):
            return []
        return [y for y in all_bitstrings(n) if self.score(instance, y) == best]

    def _all_scores(self, instance) -> list[Score]:
        n = self._length(instance)
        if n > BRUTE_GUARD:
            raise ValueError(f"brute force capped at {BRUTE_GUARD} requests")
        return [self.score(instance, y) for y in all_bitstrings(n)]


def _check_len(y: str, n: int) -> None:
    check_bits(y)
    if len(y) != n:
        raise ValueError(f"answer length {len(y)} != {n} requests")


class _GraphProblem(Problem):
    def requests(self, instance: VertexArrivalGraph) -> list:
        return [instance.neighbors_before(j) for j in range(1, instance.n + 1)]


class VertexCover(_GraphProblem):
    name = "vc"
    objective = "min"

    def score(self, instance, y):
        _check_len(y, instance.n)
        chosen = set(one_positions(y))
        return ones(y) if is_vertex_cover(instance, chosen) else PLUS_INF


class CycleFinding(_GraphProblem):
    """Accept vertices whose induced subgraph ends up containing a cycle;
    only meaningful on graphs that contain one."""

    name = "cf"
    objective = "min"

    def score(self, instance, y):
        _check_len(y, instance.n)
        chosen = set(one_positions(y))
        return ones(y) if induced_has_cycle(instance, chosen) else PLUS_INF


class DominatingSet(_GraphProblem):
    name = "ds"
    objective = "min"

    def score(self, instance, y):
        _check_len(y, instance.n)
        chosen = set(one_positions(y))
        return ones(y) if is_dominating_set(instance, chosen) else PLUS_INF


class SetCover(Problem):
    name = "sc"
    objective = "min"

    def requests(self, instance: SetCoverInstance) -> list:
        return [tuple(sorted(r)) for r in instance.requests]

    def score(self, instance, y):
        _check_len(y, len(instance.requests))
        chosen = set(one_positions(y))
        return ones(y) if covers_universe(instance, chosen) else PLUS_INF


class IndependentSet(_GraphProblem):
    # 0 accepts a vertex: the profit of a feasible output is its zero count
    name = "is"
    objective = "max"

    def score(self, instance, y):
        _check_len(y, instance.n)
        chosen = {i for i in range(1, instance.n + 1) if y[i - 1] == "0"}
        return zeros(y) if is_independent_set(instance, chosen) else MINUS_INF


class DisjointPaths(Problem):
    name = "dpa"
    objective = "max"

    def requests(self, instance: DisjointPathInstance) -> list:
        return list(instance.requests)

    def score(self, instance, y):
        _check_len(y, len(instance.requests))
        chosen = {i for i in range(1, len(y) + 1) if y[i - 1] == "0"}
        if paths_edge_disjoint(instance.requests, chosen):
            return zeros(y)
        return MINUS_INF


class UnitKnapsack(Problem):
    name = "ks"
    objective = "max"

    def requests(self, instance) -> list:
        return [Fraction(w) for w in instance]

    def score(self, instance, y):
        weights = self.requests(instance)
        _check_len(y, len(weights))
        load = sum((w for w, b in zip(weights, y) if b == "0"), Fraction(0))
        return zeros(y) if load <= 1 else MINUS_INF


class EdgeMatching(Problem):
    name = "om"
    objective = "max"

    def requests(self, instance) -> list:
        return [tuple(e) for e in instance]

    def score(self, instance, y):
        edges = self.requests(instance)
        _check_len(y, len(edges))
        chosen = {i for i in range(1, len(y) + 1) if y[i - 1] == "0"}
        if matching_vertex_disjoint(edges, chosen):
            return zeros(y)
        return MINUS_INF


PROBLEMS = {
    p.name: p
    for p in (
        VertexCover(),
        CycleFinding(),
        DominatingSet(),
        SetCover(),
        IndependentSet(),
        DisjointPaths(),
        UnitKnapsack(),
        EdgeMatching(),
    )
}


# --- hard-instance constructions --------------------------------------------


def _max_one(x: str) -> int:
    pos = one_positions(x)
    if not pos:
        raise ValueError("needs at least one 1")
    return pos[-1]


def split_graph(x: str) -> VertexArrivalGraph:
    """Ones form a clique, zeros an independent set: edge (i, j) for every
    i < j with x_i = 1."""
    check_bits(x)
    n = len(x)
    edges = {(i, j) for i in range(1, n + 1) if x[i - 1] == "1" for j in range(i + 1, n + 1)}
    return VertexArrivalGraph(n, frozenset(edges))


def unique_cycle_graph(x: str) -> VertexArrivalGraph:
    """Each vertex links back to the latest 1 before it; one extra edge
    from the first 1 to the last closes a cycle through exactly the
    1-vertices (a real cycle once x has three or more 1s)."""
    check_bits(x)
    pos = one_positions(x)
    if not pos:
        raise ValueError("needs at least one 1")
    n = len(x)
    edges = set()
    last = None
    for i in range(1, n + 1):
        if last is not None:
            edges.add((last, i))
        if x[i - 1] == "1":
            last = i
    if pos[0] != pos[-1]:
        edges.add((pos[0], pos[-1]))
    return VertexArrivalGraph(n, frozenset(edges))


def star_domination_graph(x: str) -> VertexArrivalGraph:
    """Every zero-vertex hangs off the last 1-vertex; the 1-vertices are a
    smallest dominating set."""
    check_bits(x)
    top = _max_one(x)
    n = len(x)
    edges = {(min(i, top), max(i, top)) for i in range(1, n + 1) if x[i - 1] == "0"}
    return VertexArrivalGraph(n, frozenset(edges))


def singleton_cover_instance(x: str) -> SetCoverInstance:
    """Universe 1..n; request i is {i}, except the last 1-position also
    sweeps up every zero position."""
    check_bits(x)
    top = _max_one(x)
    n = len(x)
    requests = []
    for i in range(1, n + 1):
        if i == top:
            requests.append(tuple(sorted({top, *(j for j in range(1, n + 1) if x[j - 1] == "0")})))
        else:
            requests.append((i,))
    return SetCoverInstance(tuple(range(1, n + 1)), tuple(requests))


def halving_paths_instance(x: str, guard: int = 30) -> DisjointPathInstance:
    """Subpaths of halving lengths on a path with 2^n edges: request i has
    length 2^(n-i) and starts where request i-1 started (x_{i-1} = 1) or
    ended (x_{i-1} = 0).  A request at a 1-position overlaps every later
    request; one at a 0-position overlaps none of them."""
    check_bits(x)
    n = len(x)
    if n > guard:
        raise ValueError(f"length {n} exceeds the construction guard {guard}")
    if n == 0:
        return DisjointPathInstance(1, ())
    u, requests = 0, []
    for i in range(1, n + 1):
        if i > 1 and x[i - 2] == "0":
            u = requests[-1][1]
        requests.append((u, u + (1 << (n - i))))
    return DisjointPathInstance(1 << n, tuple(requests))


CONSTRUCTIONS = {
    "vc": split_graph,
    "cf": unique_cycle_graph,
    "ds": star_domination_graph,
    "sc": singleton_cover_instance,
    "is": split_graph,
    "dpa": halving_paths_instance,
}


# --- class membership -------------------------------------------------------


def aoc_membership_check(problem: Problem, instances) -> list[dict]:
    """Verify the two class conditions on every given instance and every
    output: a feasible output scores its 1s (min) or 0s (max), and any
    output dominating some optimal output is feasible.  Returns the list
    of violations, empty when the problem behaves like the guessing game
    on this family."""
    bad = []
    for instance in instances:
        n = problem._length(instance)
        best = problem.optimal_strings(instance)
        if not best:
            bad.append({"instance": instance, "reason": "no feasible output"})
            continue
        for y in all_bitstrings(n):
            s = problem.score(instance, y)
            finite = s not in (PLUS_INF, MINUS_INF)
            if finite:
                want = ones(y) if problem.objective == "min" else zeros(y)
                if s != want:
                    bad.append({"instance": instance, "y": y, "reason": "score is not the bit count"})
            expected_feasible = any(
                all(b != "1" or a == "1" for b, a in zip(opt, y)) for opt in best
            )
            if expected_feasible and not finite:
                bad.append({"instance": instance, "y": y, "reason": "dominates an optimum but infeasible"})
    return bad
