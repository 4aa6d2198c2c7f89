"""Exact solvers for clique number, k-colorability, and chromatic number.

All solvers run under a budget of search nodes and wall time.  Exhausting the
budget is not an error: results carry proven bounds and a completeness flag,
so "unknown" stays distinct from any definite answer.  Tie-breaking is always
toward the lowest vertex id, which makes every witness deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Coloring, Graph, bits

DEFAULT_NODE_LIMIT = 10_000_000
DEFAULT_TIME_LIMIT = 60.0

# How many nodes pass between wall-clock checks.
_CLOCK_STRIDE = 256


@dataclass(frozen=True)
class SolveBudget:
    """Limits for one exact solve: search nodes and wall-clock seconds."""

    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
        if self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")


class BudgetExhausted(RuntimeError):
    """Raised by callers that need a definite answer and did not get one."""


class _OutOfBudget(Exception):
    pass


class _Ticker:
    """Shared node counter and deadline for one top-level solve."""

    __slots__ = ("nodes", "node_limit", "deadline")

    def __init__(self, budget: SolveBudget):
        self.nodes = 0
        self.node_limit = budget.node_limit
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _OutOfBudget
        if self.nodes % _CLOCK_STRIDE == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


@dataclass(frozen=True)
class CliqueResult:
    """Best clique found plus proven bounds on the clique number."""

    vertices: tuple[int, ...]
    lower: int
    upper: int
    complete: bool
    nodes_used: int

    @property
    def value(self) -> int | None:
        return self.lower if self.complete else None


@dataclass(frozen=True)
class ColorabilityResult:
    """Three-valued answer to "is G k-colorable?"."""

    status: str  # "colorable" | "uncolorable" | "unknown"
    coloring: Coloring | None
    nodes_used: int


@dataclass(frozen=True)
class ChromaticResult:
    """Proven chromatic bounds; coloring witnesses the upper bound."""

    lower: int
    upper: int
    coloring: Coloring | None
    complete: bool
    nodes_used: int

    @property
    def value(self) -> int | None:
        return self.upper if self.complete else None


def greedy_coloring(g: Graph, order: list[int] | None = None) -> Coloring:
    """First-fit coloring along the given vertex order (default 0..n-1)."""
    if order is None:
        order = list(g.vertices())
    if sorted(order) != list(g.vertices()):
        raise ValueError("order must be a permutation of the vertices")
    colors = [-1] * g.n
    for v in order:
        taken = 0
        for w in bits(g.rows[v]):
            if colors[w] >= 0:
                taken |= 1 << colors[w]
        c = 0
        while taken >> c & 1:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def verify_coloring(g: Graph, coloring: Coloring) -> tuple[int, int] | None:
    """Return None when proper, else the lexicographically first bad edge."""
    if coloring.n != g.n:
        raise ValueError(
            f"coloring covers {coloring.n} vertices, graph has {g.n}"
        )
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            return (u, v)
    return None


def _greedy_maximal_clique(g: Graph) -> list[int]:
    """Grow a maximal clique greedily: best seed degree, then lowest ids."""
    if g.n == 0:
        return []
    seed = max(g.vertices(), key=lambda v: (g.rows[v].bit_count(), -v))
    clique = [seed]
    cand = g.rows[seed]
    while cand:
        v = next(bits(cand))
        clique.append(v)
        cand &= g.rows[v]
    return sorted(clique)


def _color_sort(g: Graph, p_mask: int) -> list[tuple[int, int]]:
    """Greedy color classes over the candidate set; returns (vertex, bound)
    pairs in class order, bound being the class index + 1."""
    out = []
    rest = p_mask
    bound = 0
    while rest:
        bound += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            out.append((v, bound))
            rest &= ~(1 << v)
            avail &= ~g.rows[v] & ~(1 << v)
    return out


def _max_clique_search(g: Graph, ticker: _Ticker) -> tuple[list[int], bool]:
    """Branch-and-bound maximum clique; returns (best clique, completed)."""
    best: list[int] = _greedy_maximal_clique(g)
    cur: list[int] = []

    def expand(p_mask: int):
        nonlocal best
        ticker.tick()
        for v, bound in reversed(_color_sort(g, p_mask)):
            if len(cur) + bound <= len(best):
                return
            cur.append(v)
            rest = p_mask & g.rows[v]
            if rest:
                expand(rest)
            elif len(cur) > len(best):
                best = sorted(cur)
            cur.pop()
            p_mask &= ~(1 << v)

    complete = True
    try:
        if g.n:
            expand(g.full_mask)
    except _OutOfBudget:
        complete = False
    return best, complete


def clique_number(g: Graph, budget: SolveBudget | None = None) -> CliqueResult:
    """Exact clique number with greedy-coloring upper bounds on exhaustion."""
    ticker = _Ticker(budget or SolveBudget())
    best, complete = _max_clique_search(g, ticker)
    lower = len(best)
    # A proper coloring bounds the clique number from above.
    upper = lower if complete else max(lower, greedy_coloring(g).palette)
    return CliqueResult(tuple(best), lower, upper, complete, ticker.nodes)


def _k_color_search(
    g: Graph, k: int, ticker: _Ticker, clique: list[int]
) -> ColorabilityResult:
    n = g.n
    if len(clique) > k:
        return ColorabilityResult("uncolorable", None, ticker.nodes)
    colors = [-1] * n
    # Color masks already present on each vertex's neighborhood.
    adj_colors = [0] * n
    for i, v in enumerate(clique):
        colors[v] = i
        for w in bits(g.rows[v]):
            adj_colors[w] |= 1 << i
    max_used = len(clique)
    uncolored = [v for v in range(n) if colors[v] < 0]

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1, 1)
        for v in uncolored:
            if colors[v] >= 0:
                continue
            key = (adj_colors[v].bit_count(), g.rows[v].bit_count(), -v)
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def solve(remaining: int, max_used: int) -> bool:
        ticker.tick()
        if remaining == 0:
            return True
        v = pick()
        # New color indices are tried only in ascending order: allowing one
        # fresh color per step breaks the color-permutation symmetry.
        limit = min(k, max_used + 1)
        avail = ~adj_colors[v] & ((1 << limit) - 1)
        for c in bits(avail):
            colors[v] = c
            touched = []
            ok = True
            for w in bits(g.rows[v]):
                if not adj_colors[w] >> c & 1:
                    adj_colors[w] |= 1 << c
                    touched.append(w)
                    if colors[w] < 0 and adj_colors[w].bit_count() >= k:
                        ok = False
            if ok and solve(remaining - 1, max(max_used, c + 1)):
                return True
            for w in touched:
                adj_colors[w] &= ~(1 << c)
            colors[v] = -1
        return False

    try:
        found = solve(len(uncolored), max_used)
    except _OutOfBudget:
        return ColorabilityResult("unknown", None, ticker.nodes)
    if found:
        return ColorabilityResult("colorable", Coloring(tuple(colors)), ticker.nodes)
    return ColorabilityResult("uncolorable", None, ticker.nodes)


def k_colorable(g: Graph, k: int, budget: SolveBudget | None = None) -> ColorabilityResult:
    """Decide k-colorability; a maximal clique is precolored first."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if g.n == 0:
        return ColorabilityResult("colorable", Coloring(()), 0)
    if k == 0:
        return ColorabilityResult("uncolorable", None, 0)
    ticker = _Ticker(budget or SolveBudget())
    return _k_color_search(g, k, ticker, _greedy_maximal_clique(g))


def chromatic_number(g: Graph, budget: SolveBudget | None = None) -> ChromaticResult:
    """Exact chromatic number by ascending k, under one shared budget.

    When the budget runs out the result carries the proven bounds: lower is
    the largest k shown uncolorable plus one (at least the best clique found)
    and upper comes from the best coloring seen.
    """
    if g.n == 0:
        return ChromaticResult(0, 0, Coloring(()), True, 0)
    ticker = _Ticker(budget or SolveBudget())
    clique, complete_omega = _max_clique_search(g, ticker)
    greedy = greedy_coloring(g).compacted()
    lower = len(clique)
    upper = greedy.palette
    witness = greedy
    if lower == upper:
        return ChromaticResult(lower, upper, witness, True, ticker.nodes)
    if not complete_omega:
        return ChromaticResult(lower, upper, witness, False, ticker.nodes)
    for k in range(lower, upper):
        res = _k_color_search(g, k, ticker, clique)
        if res.status == "colorable":
            assert res.coloring is not None
            return ChromaticResult(k, k, res.coloring.compacted(), True, ticker.nodes)
        if res.status == "unknown":
            return ChromaticResult(k, upper, witness, False, ticker.nodes)
        lower = k + 1
    return ChromaticResult(upper, upper, witness, True, ticker.nodes)


def require_chromatic(g: Graph, budget: SolveBudget | None = None) -> tuple[int, Coloring]:
    """Chromatic number or BudgetExhausted; for callers needing certainty."""
    res = chromatic_number(g, budget)
    if not res.complete:
        raise BudgetExhausted(
            f"chromatic number unresolved within budget: bounds [{res.lower}, {res.upper}]"
        )
    assert res.coloring is not None
    return res.upper, res.coloring


def require_clique_number(g: Graph, budget: SolveBudget | None = None) -> CliqueResult:
    """Clique number or BudgetExhausted."""
    res = clique_number(g, budget)
    if not res.complete:
        raise BudgetExhausted(
            f"clique number unresolved within budget: bounds [{res.lower}, {res.upper}]"
        )
    return res
