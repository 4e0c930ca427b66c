"""Shared oracles and generators for the test suite.

The oracles are deliberately naive and independent of the library's
algorithms: spanning trees by subset enumeration, admissible orderings
by filtering all permutations, the census by per-sector greedy calls.
"""

from __future__ import annotations

import itertools
import random

from treeweights.errors import NotAdmissibleError
from treeweights.graph import DisjointSet, Multigraph
from treeweights.partitions import Partition, build_trace
from treeweights.sectors import leading_tree


def is_tree_subset(g: Multigraph, ids: tuple[str, ...]) -> bool:
    """Acyclic and spanning, checked with a fresh union-find."""
    ds = DisjointSet(len(g.vertices))
    vi = g._vertex_index
    for eid in ids:
        a, b = g.ends(eid)
        if not ds.union(vi[a], vi[b]):
            return False
    return ds.groups == 1


def brute_force_spanning_trees(g: Multigraph) -> set[frozenset[str]]:
    """Try every edge subset of size |V| - 1."""
    ids = [e.id for e in g.edges]
    size = len(g.vertices) - 1
    return {
        frozenset(combo)
        for combo in itertools.combinations(ids, size)
        if is_tree_subset(g, combo)
    }


def brute_force_orderings(
    g: Multigraph, part: Partition, tree: frozenset[str]
) -> set[tuple[str, ...]]:
    """Filter all (|V|-1)! orderings of the tree through build_trace."""
    out = set()
    for perm in itertools.permutations(sorted(tree)):
        try:
            build_trace(g, part, perm)
        except NotAdmissibleError:
            continue
        out.add(perm)
    return out


def census_by_leading_tree(g: Multigraph) -> dict[frozenset[str], int]:
    """Count leading trees one sector at a time via the public greedy."""
    ids = sorted(e.id for e in g.edges)
    counts: dict[frozenset[str], int] = {}
    for perm in itertools.permutations(ids):
        t = leading_tree(g, perm)
        counts[t] = counts.get(t, 0) + 1
    return counts


def random_connected_multigraph(
    rng: random.Random,
    min_vertices: int = 2,
    max_vertices: int = 5,
    max_edges: int = 8,
) -> Multigraph:
    """A connected multigraph with self-loops and parallel edges allowed.

    A random spanning tree guarantees connectivity; the remaining edge
    budget is filled with uniformly random endpoint pairs, equal pairs
    included.
    """
    nv = rng.randint(min_vertices, max_vertices)
    vertices = [f"v{i}" for i in range(1, nv + 1)]
    edges: list[tuple[str, str, str]] = []
    for i in range(1, nv):
        other = rng.randrange(i)
        edges.append((f"l{len(edges) + 1}", vertices[i], vertices[other]))
    ne = rng.randint(nv - 1, max_edges)
    while len(edges) < ne:
        a = rng.choice(vertices)
        b = rng.choice(vertices)
        edges.append((f"l{len(edges) + 1}", a, b))
    return Multigraph.build(vertices, edges)


def all_set_partitions(items: list[str]) -> list[list[set[str]]]:
    """Every partition of the items, by placing each into old or new blocks."""
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out: list[list[set[str]]] = []
    for sub in all_set_partitions(rest):
        for i in range(len(sub)):
            grown = [set(b) for b in sub]
            grown[i].add(first)
            out.append(grown)
        out.append([{first}] + [set(b) for b in sub])
    return out


def nontrivial_partitions(
    g: Multigraph, rng: random.Random | None = None, cap: int = 50
) -> list[Partition]:
    """All non-trivial partitions of the vertex set, sampled down to cap."""
    parts = [
        Partition.of(blocks)
        for blocks in all_set_partitions(sorted(g.vertices))
        if len(blocks) >= 2
    ]
    if len(parts) > cap:
        assert rng is not None
        parts = rng.sample(parts, cap)
    return parts


def relabel(g: Multigraph, mapping: dict[str, str]) -> Multigraph:
    """Apply a vertex relabeling, keeping edge ids."""
    return Multigraph.build(
        [mapping[v] for v in g.vertices],
        [(e.id, mapping[e.ends[0]], mapping[e.ends[1]]) for e in g.edges],
    )
