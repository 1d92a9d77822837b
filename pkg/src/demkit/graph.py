"""Undirected simple graphs: BFS distances, bridges, and 2-core reduction.

Vertices are dense integers 0..n-1.  A Graph is immutable after construction
and safe to share between threads; every function in this module is a pure
function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import (
    BadParameterError,
    DisconnectedError,
    EdgeNotPresentError,
    OutOfRangeError,
    SelfLoopError,
)


class _UnreachableType:
    """Sentinel distance for "no path".

    Deliberately not a number: adding or comparing it arithmetically raises,
    so a missing reachability check fails loudly instead of producing a
    silently wrong distance.
    """

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = _UnreachableType()


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Order an edge's endpoints as (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Construction validates endpoints, rejects self-loops and collapses
    duplicate edge pairs.  Adjacency lists are kept sorted.
    """

    __slots__ = ("n", "_adj", "_m", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise BadParameterError("vertex count must be nonnegative")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise OutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            e = canonical_edge(u, v)
            if e in seen:
                continue
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._m = len(seen)
        self._hash: Optional[int] = None

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not (0 <= v < self.n):
            raise OutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n) or not (0 <= v < self.n):
            raise OutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as a (min, max) pair, in lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a canonical Graph; duplicate input pairs collapse to one edge."""
    return Graph(n, edges)


def _bfs(g: Graph, source: int, skip: Optional[tuple[int, int]] = None) -> list[int]:
    """Hop distances from source as plain ints; -1 marks unreachable.

    Internal fast path.  Callers must treat -1 as "no path" and never do
    arithmetic with it; the public wrappers convert -1 to UNREACHABLE.
    Pass skip=(u, v) to run on G-e without materialising the deletion.
    """
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    adj = g._adj
    if skip is None:
        while q:
            u = q.popleft()
            du1 = dist[u] + 1
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du1
                    q.append(w)
    else:
        a, b = skip
        while q:
            u = q.popleft()
            du1 = dist[u] + 1
            for w in adj[u]:
                if dist[w] < 0 and not ((u == a and w == b) or (u == b and w == a)):
                    dist[w] = du1
                    q.append(w)
    return dist


@dataclass(frozen=True)
class DistanceLayers:
    """Per-source BFS hop distances; entries are ints or UNREACHABLE."""

    source: int
    dist: tuple

    def __getitem__(self, v: int):
        return self.dist[v]

    def layer(self, i: int) -> frozenset:
        """N_i: the set of vertices at distance exactly i from the source."""
        return frozenset(v for v, d in enumerate(self.dist) if d == i)

    def layers(self) -> dict:
        out: dict = {}
        for v, d in enumerate(self.dist):
            out.setdefault(d, set()).add(v)
        return {k: frozenset(vs) for k, vs in out.items()}

    def eccentricity(self) -> int:
        finite = [d for d in self.dist if d is not UNREACHABLE]
        return max(finite)


def bfs_distances(g: Graph, x: int) -> DistanceLayers:
    """Exact hop distances from x; UNREACHABLE for other components."""
    if not (0 <= x < g.n):
        raise OutOfRangeError(f"vertex {x} outside 0..{g.n - 1}")
    raw = _bfs(g, x)
    return DistanceLayers(source=x, dist=tuple(d if d >= 0 else UNREACHABLE for d in raw))


def distance_after_deletion(g: Graph, e: tuple[int, int], x: int, y: int):
    """d_{G-e}(x, y); UNREACHABLE if deleting e disconnects x from y."""
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(f"edge ({u}, {v}) not in graph")
    if not (0 <= x < g.n) or not (0 <= y < g.n):
        raise OutOfRangeError(f"vertex outside 0..{g.n - 1}")
    d = _bfs(g, x, skip=canonical_edge(u, v))[y]
    return d if d >= 0 else UNREACHABLE


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _bfs(g, 0).count(-1) == 0


def component_sizes(g: Graph) -> list[int]:
    """Sizes of connected components, largest first (used in error hints)."""
    seen = [False] * g.n
    sizes = []
    for s in range(g.n):
        if seen[s]:
            continue
        size = 0
        q = deque([s])
        seen[s] = True
        while q:
            u = q.popleft()
            size += 1
            for w in g._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
        sizes.append(size)
    return sorted(sizes, reverse=True)


def require_connected(g: Graph, what: str = "operation") -> None:
    """Raise DisconnectedError with a per-component hint when g is disconnected."""
    if not is_connected(g):
        sizes = component_sizes(g)
        raise DisconnectedError(
            f"{what} requires a connected graph; found {len(sizes)} components of sizes {sizes}"
        )


def degree_extremes(g: Graph) -> tuple[int, int]:
    """(min degree, max degree); (0, 0) for graphs without vertices."""
    if g.n == 0:
        return (0, 0)
    degs = [len(a) for a in g._adj]
    return (min(degs), max(degs))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def bridges(g: Graph) -> set:
    """All cut edges, found by one iterative lowpoint traversal.

    A bridge is an edge whose deletion increases the number of connected
    components; the test suite cross-checks this against per-edge deletion.
    """
    n = g.n
    pre = [-1] * n
    low = [0] * n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if pre[root] >= 0:
            continue
        pre[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            u, parent, i = stack.pop()
            adj = g._adj[u]
            if i < len(adj):
                stack.append((u, parent, i + 1))
                w = adj[i]
                if w == parent:
                    continue
                if pre[w] < 0:
                    pre[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, 0))
                else:
                    if pre[w] < low[u]:
                        low[u] = pre[w]
            else:
                if parent >= 0:
                    if low[u] < low[parent]:
                        low[parent] = low[u]
                    if low[u] > pre[parent]:
                        out.add(canonical_edge(parent, u))
    return out


@dataclass(frozen=True)
class BaseGraphResult:
    """The 2-core of a graph plus the vertex mapping into it.

    For a tree the 2-core would be empty; instead a single surviving vertex
    is kept as a degenerate marker and was_tree is set, so downstream code
    never has to handle an empty graph.
    """

    graph: Graph
    old_to_new: tuple
    was_tree: bool

    @property
    def new_to_old(self) -> tuple:
        inv = [None] * self.graph.n
        for old, new in enumerate(self.old_to_new):
            if new is not None:
                inv[new] = old
        return tuple(inv)


def base_graph(g: Graph) -> BaseGraphResult:
    """Iteratively strip degree-1 vertices down to the 2-core.

    Idempotent; preserves every cycle of g.  Raises DisconnectedError for
    disconnected input.
    """
    if g.n == 0:
        raise BadParameterError("base graph of an empty graph is undefined")
    require_connected(g, "base-graph reduction")
    was_tree = is_tree(g)
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    q = deque(v for v in range(g.n) if deg[v] == 1)
    while q:
        u = q.popleft()
        if removed[u] or deg[u] != 1:
            continue
        removed[u] = True
        deg[u] = 0
        for w in g._adj[u]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    q.append(w)
    survivors = [v for v in range(g.n) if not removed[v]]
    old_to_new: list = [None] * g.n
    for new, old in enumerate(survivors):
        old_to_new[old] = new
    core_edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in g.edges()
        if old_to_new[u] is not None and old_to_new[v] is not None
    ]
    return BaseGraphResult(
        graph=Graph(len(survivors), core_edges),
        old_to_new=tuple(old_to_new),
        was_tree=was_tree,
    )
