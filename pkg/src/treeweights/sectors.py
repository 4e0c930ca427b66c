"""Edge-ordering census: greedy leading trees and the symmetric weights.

A sector is a total order on all edges of a graph. The greedy sweep
walks the sector, keeping each edge that does not close a cycle
(self-loops never qualify), which yields the unique spanning tree of
minimum total rank. Counting leading trees over all |E|! sectors gives the symmetric
weight of each tree as an exact fraction count/|E|!.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DisconnectedError,
    EnumerationGuardExceededError,
    MalformedSectorError,
    NotASpanningTreeError,
)
from .graph import DisjointSet, Multigraph

DEFAULT_GUARD = 10


def _check_sector(g: Multigraph, sector: Sequence[str]) -> None:
    if len(sector) != len(g.edges) or set(sector) != {e.id for e in g.edges}:
        raise MalformedSectorError(
            "sector must list every edge id exactly once"
        )


def induced_ordering(g: Multigraph, sector: Sequence[str]) -> tuple[str, ...]:
    """Edges of the leading tree in the order the greedy sweep accepts them."""
    _check_sector(g, sector)
    n = len(g.vertices)
    vi = g._vertex_index
    ds = DisjointSet(n)
    accepted: list[str] = []
    for eid in sector:
        a, b = g.ends(eid)
        if ds.union(vi[a], vi[b]):
            accepted.append(eid)
            if len(accepted) == n - 1:
                break
    if len(accepted) != n - 1:
        raise DisconnectedError("greedy sweep did not span the graph")
    return tuple(accepted)


def leading_tree(g: Multigraph, sector: Sequence[str]) -> frozenset[str]:
    """The spanning tree selected by the greedy sweep under the sector."""
    return frozenset(induced_ordering(g, sector))


@dataclass(frozen=True)
class SectorCensus:
    """Leading-tree counts over all |E|! sectors of one graph."""

    counts: Mapping[frozenset[str], int]
    total: int

    def weight(self, tree: Iterable[str]) -> Fraction:
        return Fraction(self.counts.get(frozenset(tree), 0), self.total)

    def weights(self) -> dict[frozenset[str], Fraction]:
        return {t: Fraction(c, self.total) for t, c in self.counts.items()}

    @staticmethod
    def merge(parts: Iterable[SectorCensus], total: int) -> SectorCensus:
        """Combine partial censuses by exact integer addition."""
        counts: dict[frozenset[str], int] = {}
        for part in parts:
            for tree, c in part.counts.items():
                counts[tree] = counts.get(tree, 0) + c
        return SectorCensus(counts, total)


def sector_census(g: Multigraph, guard: int = DEFAULT_GUARD) -> SectorCensus:
    """Count leading trees over every sector, streamed lexicographically.

    Refuses graphs with more than ``guard`` edges: the census touches
    |E|! permutations and is never silently sampled.
    """
    if not g.is_connected():
        raise DisconnectedError("census requires a connected graph")
    m = len(g.edges)
    if m > guard:
        raise EnumerationGuardExceededError(
            f"{m} edges means {m}! sectors; guard is {guard}"
        )
    n = len(g.vertices)
    total = math.factorial(m)
    ids = sorted(e.id for e in g.edges)
    vi = g._vertex_index
    pairs = [(vi[a], vi[b]) for a, b in (g.ends(i) for i in ids)]
    target = n - 1
    raw: dict[tuple[int, ...], int] = {}
    if target == 0:
        raw[()] = total
    else:
        for perm in itertools.permutations(range(m)):
            parent = list(range(n))
            picked: list[int] = []
            for ei in perm:
                a, b = pairs[ei]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    picked.append(ei)
                    if len(picked) == target:
                        break
            key = tuple(sorted(picked))
            raw[key] = raw.get(key, 0) + 1
    counts = {
        frozenset(ids[i] for i in key): c for key, c in raw.items()
    }
    return SectorCensus(counts, total)


def symmetric_weight(
    g: Multigraph, tree: Iterable[str], guard: int = DEFAULT_GUARD
) -> Fraction:
    """Fraction of sectors whose leading tree is the given tree."""
    t = frozenset(tree)
    if not g.is_spanning_tree(t):
        raise NotASpanningTreeError(f"{sorted(t)} is not a spanning tree")
    return sector_census(g, guard=guard).weight(t)
