"""Immutable graphs on dense integer vertices with bitset adjacency.

Vertices are 0..n-1.  Adjacency rows are Python ints used as bitmasks, so set
algebra on neighborhoods runs word-parallel.  Vertex sets cross the API as
plain sets of ints; functions validate ids against the graph order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph, immutable after construction.

    Equality and hashing compare order and adjacency only; the name is a
    label for reports and round-trips.
    """

    __slots__ = ("n", "rows", "name")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), name: str = ""):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"order must be a non-negative int, got {n!r}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> set[int]:
        self.check_vertex(v)
        return set(bits(self.rows[v]))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            yield from ((u, v) for v in bits(self.rows[u] >> (u + 1) << (u + 1)))

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for order {self.n}")

    def check_vertex_set(self, xs: Iterable[int]) -> set[int]:
        s = set(xs)
        for v in s:
            self.check_vertex(v)
        return s

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertices: Iterable[int], name: str = "") -> Graph:
        """Induced subgraph on the given vertices, renumbered by ascending id."""
        keep = sorted(self.check_vertex_set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in bits(self.rows[u])
            if v in index and u < v
        ]
        return Graph(len(keep), edges, name=name)

    def with_name(self, name: str) -> Graph:
        return Graph(self.n, list(self.edges()), name=name)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count}>"


@dataclass(frozen=True)
class Coloring:
    """Total assignment of non-negative color ids to vertices 0..n-1."""

    colors: tuple[int, ...]

    def __post_init__(self):
        for c in self.colors:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"color ids must be non-negative ints, got {c!r}")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def palette(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))

    def compacted(self) -> Coloring:
        """Renumber colors densely by first appearance; properness is kept."""
        remap: dict[int, int] = {}
        out = []
        for c in self.colors:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return Coloring(tuple(out))


# -- constructors ----------------------------------------------------------


def empty(k: int) -> Graph:
    """Edgeless graph on k vertices."""
    if k < 0:
        raise ValueError(f"order must be >= 0, got {k}")
    return Graph(k, name=f"empty-{k}")


def complete(k: int) -> Graph:
    if k < 0:
        raise ValueError(f"order must be >= 0, got {k}")
    return Graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)], name=f"K{k}")


def path(k: int) -> Graph:
    """Path with k vertices (k-1 edges)."""
    if k < 1:
        raise ValueError(f"path needs k >= 1, got {k}")
    return Graph(k, [(i, i + 1) for i in range(k - 1)], name=f"P{k}")


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"cycle needs k >= 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)], name=f"C{k}")


def make_basic(kind: str, k: int) -> Graph:
    """Build one of the basic families by name: path, cycle, complete, empty."""
    makers = {"path": path, "cycle": cycle, "complete": complete, "empty": empty}
    if kind not in makers:
        raise ValueError(f"unknown basic family {kind!r}; expected one of {sorted(makers)}")
    return makers[kind](k)


# -- combinators -----------------------------------------------------------
#
# Vertex numbering of every combinator: left operand keeps its ids, the right
# operand is shifted to start at left.n; expansion concatenates the parts in
# host-vertex order.


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    edges = list(disjoint_union(g, h).edges())
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    edges = []
    for u in range(g.n):
        missing = full & ~g.rows[u] & ~(1 << u)
        edges += [(u, v) for v in bits(missing >> (u + 1) << (u + 1))]
    return Graph(g.n, edges)


def expansion(g: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex i of g by parts[i]; adjacent parts become complete to
    each other.  Empty parts delete the host vertex."""
    if len(parts) != g.n:
        raise ValueError(f"expected {g.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for part in parts:
        offsets.append(total)
        total += part.n
    edges = []
    for i, part in enumerate(parts):
        edges += [(u + offsets[i], v + offsets[i]) for u, v in part.edges()]
    for i, j in g.edges():
        edges += [
            (offsets[i] + a, offsets[j] + b)
            for a in range(parts[i].n)
            for b in range(parts[j].n)
        ]
    return Graph(total, edges)


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: originals 0..n-1, shadow of i is n+i, apex 2n.

    Raises chromatic number by one while keeping the graph triangle-free when
    the input is triangle-free.
    """
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges += [(n + i, 2 * n) for i in range(n)]
    return Graph(2 * n + 1, edges)


# -- neighborhoods ---------------------------------------------------------


def neighbor_set(g: Graph, xs: Iterable[int]) -> set[int]:
    """N(X): vertices outside X with a neighbor in X."""
    s = g.check_vertex_set(xs)
    acc = 0
    for v in s:
        acc |= g.rows[v]
    return set(bits(acc & ~mask_of(s)))


def closed_neighbor_set(g: Graph, xs: Iterable[int]) -> set[int]:
    """N[X] = X together with N(X)."""
    s = g.check_vertex_set(xs)
    return s | neighbor_set(g, s)


def non_neighbors(g: Graph, xs: Iterable[int]) -> set[int]:
    """M(X): vertices outside X with no neighbor in X."""
    return set(g.vertices()) - closed_neighbor_set(g, xs)


def distances_from(g: Graph, xs: Iterable[int]) -> list[int]:
    """BFS distance from the set X for every vertex; -1 when unreachable."""
    s = g.check_vertex_set(xs)
    dist = [-1] * g.n
    queue: deque[int] = deque()
    for v in sorted(s):
        dist[v] = 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        for w in bits(g.rows[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def neighborhood(g: Graph, xs: Iterable[int], level: int | str) -> set[int]:
    """Neighborhood of a vertex set at a named level.

    level is an exact BFS distance i >= 1, a string ">=i" for distance at
    least i (unreachable vertices excluded), "closed" for N[X], or "non" for
    the vertices with no neighbor in X.
    """
    if level == "closed":
        return closed_neighbor_set(g, xs)
    if level == "non":
        return non_neighbors(g, xs)
    if isinstance(level, str):
        if not level.startswith(">="):
            raise ValueError(f"unknown neighborhood level {level!r}")
        try:
            floor = int(level[2:])
        except ValueError:
            raise ValueError(f"unknown neighborhood level {level!r}") from None
        if floor < 1:
            raise ValueError(f"neighborhood level needs i >= 1, got {level!r}")
        dist = distances_from(g, xs)
        return {v for v in g.vertices() if dist[v] >= floor}
    if not isinstance(level, int) or level < 1:
        raise ValueError(f"neighborhood level needs i >= 1, got {level!r}")
    dist = distances_from(g, xs)
    return {v for v in g.vertices() if dist[v] == level}


def min_degree(g: Graph) -> int:
    """Minimum degree; undefined on the order-0 graph."""
    if g.n == 0:
        raise ValueError("minimum degree needs at least one vertex")
    return min(r.bit_count() for r in g.rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test, intended for small orders (<= 9)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return False
    if g.n > 9:
        raise ValueError("brute-force isomorphism is limited to order <= 9")
    gdeg = [r.bit_count() for r in g.rows]
    hdeg = [r.bit_count() for r in h.rows]
    for perm in permutations(range(g.n)):
        if any(gdeg[v] != hdeg[perm[v]] for v in range(g.n)):
            continue
        if all(
            (g.rows[u] >> v & 1) == (h.rows[perm[u]] >> perm[v] & 1)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return False
