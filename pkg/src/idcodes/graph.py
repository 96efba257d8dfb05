"""Immutable simple graphs plus the structural facts the rest of the package needs.

Vertices are always the integers ``0..n-1``.  Adjacency lists are kept as
sorted tuples so that every iteration order in the package is deterministic:
whenever an algorithm has to "pick some vertex", picking the first candidate
is reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

#: Sentinel girth of an acyclic graph.  ``math.inf`` compares correctly
#: against every finite cycle length, which keeps girth conditions readable.
INFINITE_GIRTH = math.inf


class GraphError(ValueError):
    """Malformed graph input: bad vertex ids, self-loops, or bad edge-list text."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids ``0..n-1``.

    Instances are immutable and hashable; all operations on them are pure,
    so they are safe to share between threads or processes.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted open neighborhood of ``v``."""
        return self.adj[v]

    def open_nbhd(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v])

    def closed_nbhd(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency tuples are tiny at desk scale; a scan beats building sets
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``, in lex order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabeled ``0..k-1`` in sorted id order."""
        kept = sorted(set(keep))
        if any(v < 0 or v >= self.n for v in kept):
            raise GraphError(f"induced(): vertex out of range 0..{self.n - 1}")
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges()
            if u in index and v in index
        ]
        return from_edge_list(len(kept), edges)


@dataclass(frozen=True)
class GraphProfile:
    """Bundle of structural facts needed to decide bound applicability."""

    leaf_set: frozenset[int]
    support_set: frozenset[int]
    leaf_count: int
    support_count: int
    girth: float  # an int for cyclic graphs, INFINITE_GIRTH for forests
    bipartition: tuple[int, ...] | None
    connected: bool
    identifiable: bool
    has_open_twins: bool
    has_closed_twins: bool
    has_twin_deg_ge2: bool

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def twin_free(self) -> bool:
        return not (self.has_open_twins or self.has_closed_twins)

    @property
    def is_tree(self) -> bool:
        return self.connected and self.girth == INFINITE_GIRTH

    @property
    def triangle_free(self) -> bool:
        return self.girth != 3


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating repeated edges.

    Raises :class:`GraphError` on self-loops or out-of-range endpoints.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_layers(g: Graph, root: int) -> list[int]:
    """Exact distances from ``root`` to every vertex of a connected graph."""
    if not (0 <= root < g.n):
        raise GraphError(f"root {root} out of range 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    if any(d < 0 for d in dist):
        raise GraphError("bfs_layers() requires a connected graph")
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def is_path_graph(g: Graph) -> bool:
    """True iff the graph is a path (includes the 1-vertex path)."""
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def _dist_avoiding_edge(g: Graph, u: int, v: int) -> int | None:
    """Shortest u-v distance when the edge (u, v) itself may not be used."""
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.adj[a]:
            if (a == u and b == v) or (a == v and b == u):
                continue
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                if b == v:
                    return dist[b]
                queue.append(b)
    return None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; INFINITE_GIRTH for forests.

    Computed by a shortest-cycle-through-each-edge search: the shortest cycle
    through edge (u, v) is 1 plus the shortest u-v path avoiding that edge.
    """
    best: float = INFINITE_GIRTH
    for u, v in g.edges():
        d = _dist_avoiding_edge(g, u, v)
        if d is not None and d + 1 < best:
            best = d + 1
    return best


def bipartition(g: Graph) -> tuple[int, ...] | None:
    """Two-coloring with side 0/1 per vertex, or None if an odd cycle exists.

    Each component is colored by BFS from its lowest-id vertex, which gets
    side 0, so the coloring is deterministic.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return tuple(side)


def _twin_classes(g: Graph, closed: bool) -> list[list[int]]:
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        key = g.closed_nbhd(v) if closed else g.open_nbhd(v)
        groups.setdefault(key, []).append(v)
    return [sorted(vs) for vs in groups.values() if len(vs) >= 2]


def open_twins(g: Graph) -> list[tuple[int, int]]:
    """All pairs (u, v), u < v, with equal open neighborhoods, in lex order."""
    pairs = [
        (c[i], c[j])
        for c in _twin_classes(g, closed=False)
        for i in range(len(c))
        for j in range(i + 1, len(c))
    ]
    return sorted(pairs)


def closed_twins(g: Graph) -> list[tuple[int, int]]:
    """All pairs (u, v), u < v, with equal closed neighborhoods, in lex order."""
    pairs = [
        (c[i], c[j])
        for c in _twin_classes(g, closed=True)
        for i in range(len(c))
        for j in range(i + 1, len(c))
    ]
    return sorted(pairs)


def has_twin_deg_ge2(g: Graph) -> bool:
    """True iff some open- or closed-twin pair has both degrees >= 2.

    Twins have equal degree, so it is enough to look at one class member.
    """
    for closed in (False, True):
        for cls in _twin_classes(g, closed):
            if g.degree(cls[0]) >= 2:
                return True
    return False


def profile(g: Graph) -> GraphProfile:
    """Compute every structural fact in one pass over the graph."""
    leaves = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    supports = frozenset(
        v for v in range(g.n) if any(w in leaves for w in g.adj[v])
    )
    has_open = bool(_twin_classes(g, closed=False))
    has_closed = bool(_twin_classes(g, closed=True))
    return GraphProfile(
        leaf_set=leaves,
        support_set=supports,
        leaf_count=len(leaves),
        support_count=len(supports),
        girth=girth(g),
        bipartition=bipartition(g),
        connected=is_connected(g),
        identifiable=not has_closed,
        has_open_twins=has_open,
        has_closed_twins=has_closed,
        has_twin_deg_ge2=has_twin_deg_ge2(g),
    )


# ---------------------------------------------------------------------------
# Edge-list text format, shared by all tools:
#   - optional comment lines starting with '#'
#   - first data line: "n m"
#   - then m lines "u v" with 0-indexed endpoints


def parse_edge_list(text: str) -> Graph:
    """Parse the shared edge-list text format."""
    data_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data_lines.append(line)
    if not data_lines:
        raise GraphError("empty edge-list input")
    head = data_lines[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {data_lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"header must be 'n m', got {data_lines[0]!r}") from exc
    if len(data_lines) - 1 != m:
        raise GraphError(
            f"expected {m} edge lines, found {len(data_lines) - 1}"
        )
    edges = []
    for line in data_lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"edge line must be 'u v', got {line!r}") from exc
        edges.append((u, v))
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render a graph in the shared edge-list text format (deterministic)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
