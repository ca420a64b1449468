"""Immutable simple graphs over dense integer vertex ids, and exact distances.

Vertices are ``0 .. n-1``.  Distances come from breadth-first search; pairs in
different components get the :data:`UNREACHABLE` marker rather than an error,
and the operations that need connectedness check for it themselves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import Disconnected, FormatError, SelfLoop, VertexOutOfRange

UNREACHABLE = -1

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adjacency[u]`` is the ascending tuple of neighbours of ``u``.  Use
    :func:`build_graph` to construct one from an edge list; direct
    construction validates symmetry and simplicity.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adjacency) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        for u, row in enumerate(self.adjacency):
            prev = -1
            for v in row:
                if not 0 <= v < self.n:
                    raise VertexOutOfRange(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise SelfLoop(f"self-loop at {u}")
                if v <= prev:
                    raise ValueError(f"row {u} not strictly ascending")
                prev = v
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u not in self._adjsets[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    @property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        cached = self.__dict__.get("_adjsets_cache")
        if cached is None:
            cached = tuple(frozenset(row) for row in self.adjacency)
            object.__setattr__(self, "_adjsets_cache", cached)
        return cached

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> Iterator[Edge]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if v > u:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances.  ``dist`` is a read-only ``n x n`` int array."""

    dist: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __getitem__(self, key):
        return self.dist[key]

    @property
    def connected(self) -> bool:
        return not bool((self.dist == UNREACHABLE).any())


@dataclass(frozen=True)
class Bipartition:
    side_x: frozenset[int]
    side_y: frozenset[int]


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise VertexOutOfRange(f"vertex {u} not in [0, {g.n})")


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; :data:`UNREACHABLE` outside its component."""
    _check_vertex(g, source)
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    dist = np.array([bfs_distances(g, u) for u in range(g.n)], dtype=np.int64)
    dist = dist.reshape(g.n, g.n)
    dist.flags.writeable = False
    return DistanceMatrix(dist)


def require_connected(g: Graph, dm: DistanceMatrix | None = None) -> DistanceMatrix:
    """Return the distance matrix of ``g``, raising :class:`Disconnected` if needed."""
    if dm is None:
        dm = all_pairs_distances(g)
    if not dm.connected:
        raise Disconnected("graph is not connected")
    return dm


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def diameter(g: Graph, dm: DistanceMatrix | None = None) -> int:
    dm = require_connected(g, dm)
    if g.n == 0:
        return 0
    return int(dm.dist.max())


def distance_shell(g: Graph, u: int, i: int, dm: DistanceMatrix | None = None) -> frozenset[int]:
    """The set of vertices at distance exactly ``i`` from ``u``."""
    _check_vertex(g, u)
    if i < 0:
        raise ValueError("shell index must be nonnegative")
    row = dm[u] if dm is not None else bfs_distances(g, u)
    return frozenset(int(w) for w in np.flatnonzero(np.asarray(row) == i))


def bipartition(g: Graph) -> Bipartition | None:
    """Unique 2-colouring with the least vertex of each component on side X, or None."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    xs = frozenset(u for u in range(g.n) if color[u] == 0)
    ys = frozenset(u for u in range(g.n) if color[u] == 1)
    return Bipartition(xs, ys)


def complement(g: Graph) -> Graph:
    rows = []
    for u in range(g.n):
        present = g._adjsets[u]
        rows.append(tuple(v for v in range(g.n) if v != u and v not in present))
    return Graph(g.n, tuple(rows))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their least vertex."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``, relabelled densely in ascending vertex order."""
    kept = sorted(set(keep))
    for u in kept:
        _check_vertex(g, u)
    mapping = {old: new for new, old in enumerate(kept)}
    rows = tuple(
        tuple(sorted(mapping[v] for v in g.adjacency[old] if v in mapping)) for old in kept
    )
    return Graph(len(kept), rows), mapping


def degree_sequence(g: Graph) -> list[int]:
    return [len(row) for row in g.adjacency]


def is_regular(g: Graph) -> bool:
    return len(set(degree_sequence(g))) <= 1


# -- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: ``#`` comments, a vertex-count line, then ``u v`` lines."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("edge list is empty: missing vertex count")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"bad vertex count line: {lines[0]!r}") from None
    if n < 0:
        raise FormatError("vertex count must be nonnegative")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad edge line: {ln!r}") from None
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))
