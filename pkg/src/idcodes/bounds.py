"""Bound evaluation with applicability checks, rationals, and tightness flags.

Bounds are named by their defining formulas (``l`` is the number of leaves,
``s`` the number of support vertices).  Upper bounds are reported as floors
and lower bounds as ceilings, since the code number is integral; the raw
rational value is kept alongside for transparency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphProfile, INFINITE_GIRTH, is_path_graph, profile
from .solver import DEFAULT_BUDGET, SolveResult, gamma_id

# Upper bounds
TREE_2L = "(n+2l-2)/2"
TREE_3N2L = "(3n+2l-1)/5"
SUPPORT = "n-s"
SUPPORT_PLUS_1 = "n-s+1"
HALF_LEAF = "(n+l)/2"
BIPARTITE_MIN = "min[(n+l)/2;n-s]"
TWO_THIRDS = "2n/3"
GIRTH5 = "(5n+2l)/7"
# Lower bounds (trees)
LOWER_3N7 = "3(n-1)/7"
LOWER_2NS = "(2n-s+3)/4"
LOWER_3NLS = "(3n+l-s+1)/7"

UPPER_NAMES = (
    TREE_2L,
    TREE_3N2L,
    SUPPORT,
    SUPPORT_PLUS_1,
    HALF_LEAF,
    BIPARTITE_MIN,
    TWO_THIRDS,
    GIRTH5,
)
LOWER_NAMES = (LOWER_3N7, LOWER_2NS, LOWER_3NLS)

# exact-value status codes
EXACT_OK = "ok"
EXACT_SKIPPED = "skipped"
EXACT_NOT_IDENTIFIABLE = "not_identifiable"
EXACT_BUDGET_EXCEEDED = "budget_exceeded"

SOLVER_MAX_N = 24


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "upper" or "lower"
    applicable: bool
    reason: str  # empty when applicable, otherwise why not
    raw: Fraction | None
    value: int | None  # floor for upper bounds, ceiling for lower bounds
    tight: bool | None  # value == exact, when both are known
    td: bool = False  # bound also holds for total-dominating codes

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "applicable": self.applicable,
            "reason": self.reason,
            "raw": str(self.raw) if self.raw is not None else None,
            "value": self.value,
            "tight": self.tight,
            "td": self.td,
        }


@dataclass(frozen=True)
class BoundReport:
    n: int
    profile: GraphProfile
    bounds: tuple[BoundEntry, ...]
    exact: int | None
    witness: frozenset[int] | None
    exact_status: str

    def entry(self, name: str) -> BoundEntry:
        for e in self.bounds:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        prof = self.profile
        return {
            "n": self.n,
            "profile": {
                "leaves": sorted(prof.leaf_set),
                "supports": sorted(prof.support_set),
                "leaf_count": prof.leaf_count,
                "support_count": prof.support_count,
                "girth": "infinite" if prof.girth == INFINITE_GIRTH else int(prof.girth),
                "bipartite": prof.bipartite,
                "connected": prof.connected,
                "identifiable": prof.identifiable,
                "twin_free": prof.twin_free,
                "has_twin_deg_ge2": prof.has_twin_deg_ge2,
            },
            "bounds": [e.to_json_dict() for e in self.bounds],
            "exact": self.exact,
            "exact_status": self.exact_status,
            "witness": sorted(self.witness) if self.witness is not None else None,
        }


def _entry(
    name: str,
    kind: str,
    ok: bool,
    reason: str,
    raw: Fraction | None,
    exact: int | None,
    td: bool = False,
) -> BoundEntry:
    if not ok:
        return BoundEntry(name, kind, False, reason, None, None, None, td)
    assert raw is not None
    value = math.floor(raw) if kind == "upper" else math.ceil(raw)
    tight = None if exact is None else (value == exact)
    return BoundEntry(name, kind, True, "", raw, value, tight, td)


def evaluate_bounds(
    g: Graph, with_exact: bool = False, budget: int = DEFAULT_BUDGET
) -> BoundReport:
    """Evaluate every bound whose preconditions hold for ``g``.

    With ``with_exact`` the exact code number is computed when the graph is
    identifiable and within solver range, and tightness flags are filled in.
    """
    prof = profile(g)
    n = g.n
    leaf_count = Fraction(prof.leaf_count)
    s = Fraction(prof.support_count)

    exact: int | None = None
    witness: frozenset[int] | None = None
    status = EXACT_SKIPPED
    if with_exact:
        if not prof.identifiable:
            status = EXACT_NOT_IDENTIFIABLE
        elif n > SOLVER_MAX_N:
            status = EXACT_SKIPPED
        else:
            result: SolveResult = gamma_id(g, budget=budget)
            if result.proven_optimal:
                exact, witness, status = result.value, result.witness, EXACT_OK
            else:
                status = EXACT_BUDGET_EXCEEDED

    tree_ok = prof.is_tree and n >= 3
    tree_reason = "" if tree_ok else "needs a tree on >= 3 vertices"
    p4 = is_path_graph(g) and n == 4

    support_ok, support_reason = True, ""
    if not prof.connected:
        support_ok, support_reason = False, "needs a connected graph"
    elif n < 4:
        support_ok, support_reason = False, "needs n >= 4"
    elif p4:
        support_ok, support_reason = False, "the 4-vertex path is excluded"
    elif not prof.triangle_free:
        kept = [v for v in range(n) if v not in prof.leaf_set]
        if not kept or not profile(g.induced(kept)).identifiable:
            support_ok, support_reason = (
                False,
                "needs a triangle-free graph or an identifiable leaf-deleted core",
            )

    t5_ok, t5_reason = True, ""
    if not prof.connected:
        t5_ok, t5_reason = False, "needs a connected graph"
    elif not prof.identifiable:
        t5_ok, t5_reason = False, "needs an identifiable graph"
    elif n < 3:
        t5_ok, t5_reason = False, "needs n >= 3"

    half_ok, half_reason = True, ""
    if not prof.connected:
        half_ok, half_reason = False, "needs a connected graph"
    elif n < 3:
        half_ok, half_reason = False, "needs n >= 3"
    elif not prof.bipartite:
        half_ok, half_reason = False, "needs a bipartite graph"
    elif prof.has_twin_deg_ge2:
        half_ok, half_reason = False, "needs no twins of degree >= 2"

    min_ok = half_ok and support_ok and n >= 5
    min_reason = (
        ""
        if min_ok
        else "needs a connected bipartite graph on >= 5 vertices with no twins of degree >= 2"
    )

    twothirds_ok, twothirds_reason = True, ""
    if not prof.connected:
        twothirds_ok, twothirds_reason = False, "needs a connected graph"
    elif n < 3:
        twothirds_ok, twothirds_reason = False, "needs n >= 3"
    elif not prof.bipartite:
        twothirds_ok, twothirds_reason = False, "needs a bipartite graph"
    elif not prof.twin_free:
        twothirds_ok, twothirds_reason = False, "needs a twin-free graph"
    elif p4:
        twothirds_ok, twothirds_reason = False, "the 4-vertex path is excluded"

    girth5_ok, girth5_reason = True, ""
    if not prof.identifiable:
        girth5_ok, girth5_reason = False, "needs an identifiable graph"
    elif prof.girth < 5:
        girth5_ok, girth5_reason = False, "needs girth >= 5"
    elif any(g.degree(v) == 0 for v in range(n)):
        girth5_ok, girth5_reason = False, "needs no isolated vertices"

    lower2_ok = prof.is_tree and n >= 4
    lower2_reason = "" if lower2_ok else "needs a tree on >= 4 vertices"

    half_raw = Fraction(n + leaf_count, 2)
    support_raw = Fraction(n) - s
    entries = (
        _entry(TREE_2L, "upper", tree_ok, tree_reason, Fraction(n + 2 * leaf_count - 2, 2), exact),
        _entry(TREE_3N2L, "upper", tree_ok, tree_reason, Fraction(3 * n + 2 * leaf_count - 1, 5), exact),
        _entry(SUPPORT, "upper", support_ok, support_reason, support_raw, exact, td=True),
        _entry(SUPPORT_PLUS_1, "upper", t5_ok, t5_reason, Fraction(n) - s + 1, exact),
        _entry(HALF_LEAF, "upper", half_ok, half_reason, half_raw, exact),
        _entry(BIPARTITE_MIN, "upper", min_ok, min_reason, min(half_raw, support_raw), exact),
        _entry(TWO_THIRDS, "upper", twothirds_ok, twothirds_reason, Fraction(2 * n, 3), exact),
        _entry(GIRTH5, "upper", girth5_ok, girth5_reason, Fraction(5 * n + 2 * leaf_count, 7), exact),
        _entry(LOWER_3N7, "lower", tree_ok, tree_reason, Fraction(3 * (n - 1), 7), exact),
        _entry(LOWER_2NS, "lower", lower2_ok, lower2_reason, Fraction(2 * n - s + 3, 4), exact),
        _entry(LOWER_3NLS, "lower", tree_ok, tree_reason, Fraction(3 * n + leaf_count - s + 1, 7), exact),
    )
    return BoundReport(
        n=n,
        profile=prof,
        bounds=entries,
        exact=exact,
        witness=witness,
        exact_status=status,
    )
