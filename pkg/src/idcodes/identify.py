"""I-set computation and certified verification of identifying codes.

An identifying code is a vertex set ``C`` such that every vertex has a
nonempty I-set ``I(C; v) = N[v] & C`` and all I-sets are pairwise distinct.
A total-dominating identifying code additionally gives every vertex a
codeword in its *open* neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

VALID = "valid"
UNDOMINATED = "undominated"
UNSEPARATED = "unseparated"
NOT_TOTAL_DOMINATING = "not_total_dominating"


@dataclass(frozen=True)
class CodeCertificate:
    """Verdict for a candidate code, with a concrete witness on failure.

    The I-set table is always populated, even for failing codes, so that a
    witness can be re-checked against it directly:

    - ``undominated``: witness ``(v,)`` with ``iset_table[v]`` empty,
    - ``unseparated``: witness ``(u, v)`` with equal I-sets,
    - ``not_total_dominating``: witness ``(v,)`` whose I-set contains no
      vertex other than ``v`` itself.
    """

    code: frozenset[int]
    verdict: str
    witness: tuple[int, ...] | None
    iset_table: tuple[frozenset[int], ...]

    @property
    def is_valid(self) -> bool:
        return self.verdict == VALID


def _validated_code(g: Graph, code: Iterable[int]) -> frozenset[int]:
    cs = frozenset(code)
    bad = [v for v in cs if not (0 <= v < g.n)]
    if bad:
        raise ValueError(f"code vertices out of range 0..{g.n - 1}: {sorted(bad)}")
    return cs


def i_set(g: Graph, code: Iterable[int], v: int) -> frozenset[int]:
    """The I-set ``N[v] & code`` of vertex ``v``."""
    cs = _validated_code(g, code)
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    return g.closed_nbhd(v) & cs


def _iset_table(g: Graph, code: frozenset[int]) -> tuple[frozenset[int], ...]:
    return tuple(g.closed_nbhd(v) & code for v in range(g.n))


def verify_identifying(g: Graph, code: Iterable[int]) -> CodeCertificate:
    """Check whether ``code`` is an identifying code of ``g``.

    Failures are reported in a fixed order for stable output: the lowest
    undominated vertex first, then the lexicographically smallest pair of
    vertices with equal I-sets.
    """
    cs = _validated_code(g, code)
    table = _iset_table(g, cs)
    for v in range(g.n):
        if not table[v]:
            return CodeCertificate(cs, UNDOMINATED, (v,), table)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if table[u] == table[v]:
                return CodeCertificate(cs, UNSEPARATED, (u, v), table)
    return CodeCertificate(cs, VALID, None, table)


def verify_td_identifying(g: Graph, code: Iterable[int]) -> CodeCertificate:
    """Check whether ``code`` is a total-dominating identifying code.

    Total domination is checked first (lowest failing vertex wins); note that
    it implies plain domination, so an ``undominated`` verdict cannot occur
    once this pass succeeds.
    """
    cs = _validated_code(g, code)
    table = _iset_table(g, cs)
    for v in range(g.n):
        if not (g.open_nbhd(v) & cs):
            return CodeCertificate(cs, NOT_TOTAL_DOMINATING, (v,), table)
    return verify_identifying(g, cs)
