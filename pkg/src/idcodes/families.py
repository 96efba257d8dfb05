"""Graph family generators, exhaustive tree enumeration, and recognizers.

Every generator documents its vertex numbering so constructions and tests can
refer to specific vertices.  The corona convention used throughout: for the
k-corona of a graph H on ``nh`` vertices, inner vertex ``v`` keeps its id and
its attached path occupies ids ``nh + k*v .. nh + k*v + k - 1``, chained away
from ``v`` (so the far end of the path is the last id).
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, from_edge_list

TREE_ENUM_MAX = 14  # practical ceiling for exhaustive tree surveys


# ---------------------------------------------------------------------------
# Named families


def path(n: int) -> Graph:
    """Path P_n with vertices 0..n-1 in order."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n with vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star of order n: center 0, leaves 1..n-1."""
    if n < 2:
        raise ValueError("star needs order n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite(k1: int, k2: int) -> Graph:
    """K_{k1,k2} with sides 0..k1-1 and k1..k1+k2-1."""
    if k1 < 1 or k2 < 1:
        raise ValueError("complete_bipartite needs both sides >= 1")
    n = k1 + k2
    return from_edge_list(n, [(a, k1 + b) for a in range(k1) for b in range(k2)])


def double_star(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 with a leaves on 0 (ids 2..a+1) and b on 1."""
    if a < 1 or b < 1:
        raise ValueError("double_star needs a, b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return from_edge_list(2 + a + b, edges)


def spider(legs: tuple[int, ...]) -> Graph:
    """Spider: center 0 with paths (legs) of the given lengths attached.

    Leg i occupies the next ``legs[i]`` consecutive ids, chained from the
    center outward.
    """
    if len(legs) < 3:
        raise ValueError("spider needs at least 3 legs")
    if any(length < 1 for length in legs):
        raise ValueError("spider legs must have length >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def corona(h: Graph, k: int) -> Graph:
    """k-corona of h: attach a fresh path P_k to every vertex of h.

    Inner ids first, then the attached paths in inner-id order (see module
    docstring for the exact numbering).
    """
    if k < 1:
        raise ValueError("corona needs k >= 1")
    nh = h.n
    edges = list(h.edges())
    for v in range(nh):
        base = nh + k * v
        edges.append((v, base))
        edges.extend((base + j, base + j + 1) for j in range(k - 1))
    return from_edge_list(nh * (k + 1), edges)


def clique_corona1(m: int) -> Graph:
    """1-corona of the complete graph K_m: clique 0..m-1, pendant m+v on v."""
    if m < 1:
        raise ValueError("clique_corona1 needs m >= 1")
    clique = from_edge_list(
        m, [(u, v) for u in range(m) for v in range(u + 1, m)]
    )
    return corona(clique, 1)


def seven_cycle_star(k: int) -> Graph:
    """Star of 7-cycles: a star K_{1,k} with one 7-cycle hung off each leaf.

    Center 0; star leaves 1..k; the cycle attached to leaf i occupies ids
    ``k + 1 + 7*(i-1) .. k + 7*i`` in cyclic order, with its first vertex
    joined to leaf i.  The graph has 8k+1 vertices and girth 7.
    """
    if k < 1:
        raise ValueError("seven_cycle_star needs k >= 1")
    edges = []
    for i in range(1, k + 1):
        edges.append((0, i))
        base = k + 1 + 7 * (i - 1)
        edges.append((i, base))
        edges.extend((base + j, base + (j + 1) % 7) for j in range(7))
    return from_edge_list(8 * k + 1, edges)


def tight_tree_a() -> Graph:
    """7-vertex tree attaining the (n+l)/2 bound: root 0, internal 1 and 2,
    leaves 3,4 under 1 and 5,6 under 2."""
    return from_edge_list(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])


def tight_tree_b() -> Graph:
    """10-vertex tree attaining the (n+l)/2 bound.

    Root 0 with children 1 (internal), 5 (leaf) and 6 (internal); branch
    1-2 carries leaves 3,4 under 2; branch 6-7 carries leaves 8,9 under 7.
    """
    return from_edge_list(
        10,
        [(0, 1), (1, 2), (2, 3), (2, 4), (0, 5), (0, 6), (6, 7), (7, 8), (7, 9)],
    )


@dataclass(frozen=True)
class FamilySpec:
    """Parsed request for a named family, as accepted by :func:`gen`."""

    family: str
    params: tuple[int, ...] = ()
    inner: Graph | None = None


FAMILY_NAMES = (
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "double_star",
    "spider",
    "corona",
    "clique_corona1",
    "seven_cycle_star",
    "tight_tree_a",
    "tight_tree_b",
)


def gen(spec: FamilySpec) -> Graph:
    """Build the named family member, validating parameters."""
    fam, p = spec.family, spec.params
    if fam == "path":
        _expect(fam, p, 1)
        return path(p[0])
    if fam == "cycle":
        _expect(fam, p, 1)
        return cycle(p[0])
    if fam == "star":
        _expect(fam, p, 1)
        return star(p[0])
    if fam == "complete_bipartite":
        _expect(fam, p, 2)
        return complete_bipartite(p[0], p[1])
    if fam == "double_star":
        _expect(fam, p, 2)
        return double_star(p[0], p[1])
    if fam == "spider":
        if len(p) < 3:
            raise ValueError("spider needs at least 3 leg lengths")
        return spider(p)
    if fam == "corona":
        _expect(fam, p, 1)
        if spec.inner is None:
            raise ValueError("corona needs an inner graph")
        return corona(spec.inner, p[0])
    if fam == "clique_corona1":
        _expect(fam, p, 1)
        return clique_corona1(p[0])
    if fam == "seven_cycle_star":
        _expect(fam, p, 1)
        return seven_cycle_star(p[0])
    if fam == "tight_tree_a":
        _expect(fam, p, 0)
        return tight_tree_a()
    if fam == "tight_tree_b":
        _expect(fam, p, 0)
        return tight_tree_b()
    raise ValueError(f"unknown family {fam!r}")


def _expect(fam: str, params: tuple[int, ...], count: int) -> None:
    if len(params) != count:
        raise ValueError(f"{fam} takes {count} parameter(s), got {len(params)}")


# ---------------------------------------------------------------------------
# Tree canonical forms (centers + AHU encoding) and small-graph isomorphism


def tree_centers(g: Graph) -> list[int]:
    """The 1 or 2 centers of a tree: the middle of any longest path."""
    if g.n == 1:
        return [0]

    def farthest(root: int) -> tuple[int, list[int]]:
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        far = max(range(g.n), key=lambda x: (dist[x], -x))
        return far, parent

    a, _ = farthest(0)
    b, parent = farthest(a)
    path_ab = [b]
    while parent[path_ab[-1]] >= 0:
        path_ab.append(parent[path_ab[-1]])
    length = len(path_ab)
    if length % 2:
        return [path_ab[length // 2]]
    return sorted((path_ab[length // 2 - 1], path_ab[length // 2]))


def _ahu(g: Graph, root: int, blocked: int | None) -> str:
    """Canonical parenthesis string of the subtree at ``root``, not crossing
    the edge to ``blocked``."""
    labels: dict[int, str] = {}
    stack: list[tuple[int, int | None, bool]] = [(root, blocked, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if not expanded:
            stack.append((v, parent, True))
            for w in g.adj[v]:
                if w != parent:
                    stack.append((w, v, False))
        else:
            children = sorted(labels.pop(w) for w in g.adj[v] if w != parent)
            labels[v] = "(" + "".join(children) + ")"
    return labels[root]


def tree_canonical_form(g: Graph) -> str:
    """Canonical string for a free tree; equal iff the trees are isomorphic."""
    centers = tree_centers(g)
    if len(centers) == 1:
        return "U" + _ahu(g, centers[0], None)
    c1, c2 = centers
    lo, hi = sorted((_ahu(g, c1, c2), _ahu(g, c2, c1)))
    return "B" + lo + hi


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighbor-color refinement, canonically renumbered."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in g.adj[v])))
            for v in range(g.n)
        ]
        order = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for small graphs.

    Color refinement narrows the candidate classes, then a backtracking
    search matches vertices class by class.  Intended for desk-scale inputs.
    """
    if g.n != h.n or g.m != h.m:
        return False
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    class_size: dict[int, int] = {}
    for c in cg:
        class_size[c] = class_size.get(c, 0) + 1
    # small color classes first keeps the branching factor down
    g_order = sorted(range(g.n), key=lambda v: (class_size[cg[v]], cg[v], v))
    h_by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        h_by_color.setdefault(ch[v], []).append(v)

    mapping: dict[int, int] = {}
    used = [False] * h.n

    def extend(idx: int) -> bool:
        if idx == g.n:
            return True
        u = g_order[idx]
        for v in h_by_color.get(cg[u], ()):
            if used[v]:
                continue
            ok = True
            for w, wv in mapping.items():
                if g.has_edge(u, w) != h.has_edge(v, wv):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(idx + 1):
                    return True
                del mapping[u]
                used[v] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Exhaustive free-tree enumeration
#
# Rooted trees are generated through their canonical level sequences with the
# classic decreasing-successor rule; free trees are then deduplicated by
# canonical form.  The resulting order is deterministic and surveys treat it
# as the canonical tree order.


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    levels = list(range(n))  # the path, lexicographically largest sequence
    while True:
        yield levels[:]
        p = next((i for i in range(n - 1, -1, -1) if levels[i] >= 2), None)
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if levels[i] == levels[p] - 1)
        span = p - q
        for i in range(p, n):
            levels[i] = levels[i - span]


def _tree_from_levels(levels: list[int]) -> Graph:
    edges = []
    last_at_level: dict[int, int] = {}
    for i, lvl in enumerate(levels):
        if i:
            edges.append((last_at_level[lvl - 1], i))
        last_at_level[lvl] = i
    return from_edge_list(len(levels), edges)


def all_trees(n: int) -> Iterator[Graph]:
    """Yield every free tree on n vertices exactly once up to isomorphism."""
    if not (1 <= n <= TREE_ENUM_MAX):
        raise ValueError(f"all_trees supports 1 <= n <= {TREE_ENUM_MAX}")
    seen: set[str] = set()
    for levels in _rooted_level_sequences(n):
        t = _tree_from_levels(levels)
        key = tree_canonical_form(t)
        if key not in seen:
            seen.add(key)
            yield t


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree with fixed-seed determinism."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_prufer(n, seq)


def tree_from_prufer(n: int, seq: list[int]) -> Graph:
    """Decode a Prüfer sequence of length n-2 into a labeled tree."""
    if n < 2 or len(seq) != n - 2:
        raise ValueError("need n >= 2 and a sequence of length n-2")
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    edges = []
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        u = heapq.heappop(leaves)
        edges.append((u, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# 2-corona recognition


def is_2corona(g: Graph) -> Graph | None:
    """Recover H if ``g`` is the 2-corona of some graph H, else None.

    Structural test: n divisible by 3; the leaves are exactly the far path
    ends, each behind a degree-2 middle vertex whose other neighbor is a
    distinct non-leaf anchor; deleting all path vertices leaves exactly the
    anchors.  The recovered H is relabeled 0..n/3-1 in sorted anchor order.
    """
    n = g.n
    if n % 3 != 0:
        return None
    h_size = n // 3
    leaves = [v for v in range(n) if g.degree(v) == 1]
    if len(leaves) != h_size:
        return None
    mids = []
    anchors = []
    for u in leaves:
        mid = g.neighbors(u)[0]
        if g.degree(mid) != 2:
            return None
        v = next(w for w in g.neighbors(mid) if w != u)
        if g.degree(v) == 1:
            return None
        mids.append(mid)
        anchors.append(v)
    if len(set(anchors)) != h_size:
        return None
    core = set(range(n)) - set(leaves) - set(mids)
    if core != set(anchors):
        return None
    return g.induced(core)
