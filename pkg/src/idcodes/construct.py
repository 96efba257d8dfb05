"""Polynomial-time identifying-code constructions with size guarantees.

Each construction checks its own preconditions strictly and raises a typed
:class:`PreconditionError` instead of attempting to build a code on inputs
where the guarantee does not hold (odd cycles, twin pairs of degree >= 2,
the 4-vertex path, ...).  All tie-breaking choices resolve to the lowest
vertex id so that outputs and traces are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import families
from .graph import Graph, GraphProfile, bfs_layers, is_path_graph, profile

# Precondition failure reasons
DISCONNECTED = "disconnected"
TOO_SMALL = "too_small"
NOT_BIPARTITE = "not_bipartite"
TWINS_DEG2 = "twins_deg_ge2"
HAS_TWINS = "has_twins"
IS_P4 = "is_p4"
CORE_NOT_IDENTIFIABLE = "core_not_identifiable"

EVEN = "even"
ODD = "odd"


class PreconditionError(ValueError):
    """A construction was invoked on a graph outside its guarantee."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class ShiftTrace:
    """Record of one parity code: base layer code and the leaf shifts applied.

    ``final_code`` always equals ``base_code`` minus the removed leaves plus
    the added vertices, and is never larger than ``base_code``.
    """

    root: int
    parity: str  # EVEN or ODD
    base_code: frozenset[int]
    shifts: tuple[tuple[int, int], ...]  # (removed leaf, added vertex)
    final_code: frozenset[int]


def _parity_trace(
    g: Graph, prof: GraphProfile, root: int, layers: list[int], parity: str
) -> ShiftTrace:
    """Build one layer-parity code and apply the leaf-shift rule.

    Base code: all vertices whose distance to the root has the requested
    parity, plus every leaf.  Shift rule: a leaf u of the non-code parity
    whose support v has u as its only leaf neighbor leaves the code, and the
    neighbor of v one layer closer to the root enters instead (when v is the
    root itself, the lowest non-leaf neighbor of the root enters).
    """
    leaves = prof.leaf_set
    want = 0 if parity == EVEN else 1
    base = frozenset(
        v for v in range(g.n) if layers[v] % 2 == want or v in leaves
    )
    shifts = []
    code = set(base)
    for u in sorted(leaves):
        if layers[u] % 2 == want:
            continue  # leaf sits in the code parity; it stays
        v = g.neighbors(u)[0]
        leaf_nbrs = [w for w in g.adj[v] if w in leaves]
        if leaf_nbrs != [u]:
            continue
        if v == root:
            candidates = [w for w in g.adj[v] if w not in leaves]
            assert candidates, "non-leaf root with a single leaf neighbor must have a non-leaf neighbor"
            added = candidates[0]
        else:
            added = next(
                w for w in g.adj[v] if layers[w] == layers[v] - 1
            )
        code.discard(u)
        code.add(added)
        shifts.append((u, added))
    return ShiftTrace(root, parity, base, tuple(shifts), frozenset(code))


def parity_shift_code(g: Graph) -> tuple[frozenset[int], tuple[ShiftTrace, ShiftTrace]]:
    """Identifying code of size <= floor((n + l)/2) for connected bipartite
    graphs on >= 3 vertices with no twins of degree 2 or greater.

    Two candidate codes are built, one per layer parity from the lowest-id
    non-leaf root; the smaller one is returned (ties go to the even code).
    Both traces are returned so the tie and the shifts stay inspectable.
    """
    prof = profile(g)
    if not prof.connected:
        raise PreconditionError(DISCONNECTED, "parity_shift_code needs a connected graph")
    if g.n < 3:
        raise PreconditionError(TOO_SMALL, "parity_shift_code needs n >= 3")
    if prof.bipartition is None:
        raise PreconditionError(NOT_BIPARTITE, "parity_shift_code needs a bipartite graph")
    if prof.has_twin_deg_ge2:
        raise PreconditionError(
            TWINS_DEG2, "parity_shift_code needs no twins of degree >= 2"
        )
    root = min(v for v in range(g.n) if v not in prof.leaf_set)
    layers = bfs_layers(g, root)
    trace_e = _parity_trace(g, prof, root, layers, EVEN)
    trace_o = _parity_trace(g, prof, root, layers, ODD)
    code = (
        trace_e.final_code
        if len(trace_e.final_code) <= len(trace_o.final_code)
        else trace_o.final_code
    )
    return code, (trace_e, trace_o)


def support_complement_code(g: Graph) -> frozenset[int]:
    """Total-dominating identifying code of size exactly n - s(G).

    Works for connected graphs on >= 4 vertices, other than the 4-vertex
    path, whose leaf-deleted core is identifiable or which are triangle-free.
    The code is the whole vertex set minus one leaf (the lowest id) per
    support vertex.
    """
    prof = profile(g)
    if not prof.connected:
        raise PreconditionError(DISCONNECTED, "support_complement_code needs a connected graph")
    if g.n < 4:
        raise PreconditionError(TOO_SMALL, "support_complement_code needs n >= 4")
    if is_path_graph(g) and g.n == 4:
        raise PreconditionError(IS_P4, "support_complement_code excludes the 4-vertex path")
    if not prof.triangle_free:
        kept = [v for v in range(g.n) if v not in prof.leaf_set]
        if not kept or not profile(g.induced(kept)).identifiable:
            raise PreconditionError(
                CORE_NOT_IDENTIFIABLE,
                "support_complement_code needs a triangle-free graph or an identifiable leaf-deleted core",
            )
    dropped = set()
    for v in sorted(prof.support_set):
        dropped.add(min(w for w in g.adj[v] if w in prof.leaf_set))
    return frozenset(range(g.n)) - dropped


def twin_free_bipartite_code(g: Graph) -> frozenset[int]:
    """Identifying code of size <= floor(2n/3) for connected twin-free
    bipartite graphs on >= 3 vertices other than the 4-vertex path.

    For n >= 5 both constructions above apply and the smaller result wins
    (ties go to the parity code); below that the exact solver is used.
    """
    prof = profile(g)
    if not prof.connected:
        raise PreconditionError(DISCONNECTED, "twin_free_bipartite_code needs a connected graph")
    if g.n < 3:
        raise PreconditionError(TOO_SMALL, "twin_free_bipartite_code needs n >= 3")
    if prof.bipartition is None:
        raise PreconditionError(NOT_BIPARTITE, "twin_free_bipartite_code needs a bipartite graph")
    if not prof.twin_free:
        raise PreconditionError(HAS_TWINS, "twin_free_bipartite_code needs a twin-free graph")
    if is_path_graph(g) and g.n == 4:
        raise PreconditionError(IS_P4, "twin_free_bipartite_code excludes the 4-vertex path")
    if g.n < 5:
        from .solver import gamma_id

        return gamma_id(g).witness
    parity, _ = parity_shift_code(g)
    support = support_complement_code(g)
    return support if len(support) < len(parity) else parity


def corona2_optimal_code(h: Graph) -> tuple[Graph, frozenset[int]]:
    """The 2-corona of ``h`` together with an optimal identifying code.

    For connected ``h`` on >= 2 vertices the 2-corona is twin-free and the
    returned code has size 2n/3, which is optimal.  The code takes every
    inner vertex plus one vertex of each attached path: the far end when
    ``h`` has no closed twins (inner vertices are then told apart by their
    inner closed neighborhoods alone), and otherwise the near path vertex,
    whose private membership in its anchor's I-set separates even closed
    twins of ``h``.
    """
    if h.n < 2:
        raise PreconditionError(TOO_SMALL, "corona2_optimal_code needs |V(h)| >= 2")
    hprof = profile(h)
    if not hprof.connected:
        raise PreconditionError(DISCONNECTED, "corona2_optimal_code needs a connected graph")
    g2 = families.corona(h, 2)
    offset = 1 if hprof.identifiable else 0
    code = frozenset(range(h.n)) | frozenset(
        h.n + 2 * v + offset for v in range(h.n)
    )
    return g2, code


def seven_cycle_star_code(k: int) -> tuple[Graph, frozenset[int]]:
    """Star-of-7-cycles graph on 8k+1 vertices with an optimal code of size 5k.

    Per cycle the code takes the star leaf, the cycle vertex joined to it,
    one cycle neighbor of that vertex, and the two cycle vertices whose
    I-sets are the singletons of themselves (offsets 3 and 5 around the
    cycle).
    """
    if k < 1:
        raise PreconditionError(TOO_SMALL, "seven_cycle_star_code needs k >= 1")
    g = families.seven_cycle_star(k)
    code: set[int] = set()
    for i in range(1, k + 1):
        base = k + 1 + 7 * (i - 1)
        code.update((i, base, base + 1, base + 3, base + 5))
    return g, frozenset(code)
