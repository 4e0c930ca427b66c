"""Vertex partitions and trans-block contraction sequences.

A partition divides a graph's vertices into disjoint non-empty blocks.
An edge is trans-block when its endpoints sit in two distinct blocks;
contracting a trans-block edge removes both endpoints from their blocks
(dropping any block left empty) and appends the merged vertex as a new
singleton block. Walking an edge ordering this way yields a trace of
(graph, partition) pairs from which all weights and contact data derive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateVertexError,
    EmptyBlockError,
    MissingVertexError,
    NotASpanningTreeError,
    NotAdmissibleError,
    NotTransBlockError,
    TrivialPartitionError,
    UnknownVertexError,
)
from .graph import Multigraph


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty blocks covering a vertex set, in canonical order."""

    blocks: tuple[frozenset[str], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[str]]) -> Partition:
        """Canonicalize and validate disjointness and non-emptiness."""
        frozen: list[frozenset[str]] = []
        seen: set[str] = set()
        for block in blocks:
            fs = frozenset(block)
            if not fs:
                raise EmptyBlockError("partition blocks must be non-empty")
            dup = fs & seen
            if dup:
                raise DuplicateVertexError(
                    f"vertex {sorted(dup)[0]!r} appears in more than one block"
                )
            seen |= fs
            frozen.append(fs)
        frozen.sort(key=lambda b: tuple(sorted(b)))
        return cls(tuple(frozen))

    @classmethod
    def singletons(cls, vertices: Iterable[str]) -> Partition:
        return cls.of([v] for v in vertices)

    @classmethod
    def parse(cls, spec: str, vertices: Iterable[str]) -> Partition:
        """Parse the "a,b|c|d,e" block syntax against a known vertex set.

        Blocks are separated by '|', members by ','; whitespace is
        ignored. Every vertex must appear exactly once.
        """
        universe = set(vertices)
        blocks: list[list[str]] = []
        for chunk in spec.split("|"):
            members = [m.strip() for m in chunk.split(",")]
            members = [m for m in members if m]
            if not members:
                raise EmptyBlockError(f"empty block in partition spec {spec!r}")
            for m in members:
                if m not in universe:
                    raise UnknownVertexError(f"unknown vertex {m!r} in partition spec")
            blocks.append(members)
        part = cls.of(blocks)
        missing = universe - part.support
        if missing:
            raise MissingVertexError(
                f"partition spec omits vertices {sorted(missing)}"
            )
        return part

    @cached_property
    def support(self) -> frozenset[str]:
        out: set[str] = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    @cached_property
    def _block_of(self) -> dict[str, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def block_index(self, vertex: str) -> int:
        try:
            return self._block_of[vertex]
        except KeyError:
            raise UnknownVertexError(f"vertex {vertex!r} not in partition") from None

    @property
    def is_trivial(self) -> bool:
        return len(self.blocks) == 1

    def covers(self, g: Multigraph) -> bool:
        return self.support == frozenset(g.vertices)

    def require_cover(self, g: Multigraph) -> None:
        if not self.covers(g):
            raise MissingVertexError(
                "partition blocks do not cover the graph's vertex set"
            )

    def contract_pair(self, a: str, b: str, merged: str) -> Partition:
        """Remove both endpoints, drop emptied blocks, append {merged}."""
        if self.block_index(a) == self.block_index(b):
            raise NotTransBlockError(
                f"vertices {a!r} and {b!r} share a block; contraction needs"
                " endpoints in distinct blocks"
            )
        kept = [b2 - {a, b} for b2 in self.blocks]
        return Partition.of([blk for blk in kept if blk] + [{merged}])

    def format(self) -> str:
        return "|".join(",".join(sorted(b)) for b in self.blocks)


def is_trans_block(g: Multigraph, part: Partition, edge_id: str) -> bool:
    """True iff the edge's endpoints lie in distinct blocks.

    A self-loop is never trans-block, whatever the partition.
    """
    part.require_cover(g)
    a, b = g.ends(edge_id)
    if a == b:
        return False
    return part.block_index(a) != part.block_index(b)


def trans_block_count(g: Multigraph, part: Partition) -> int:
    """Number of trans-block edge ids; parallel edges count separately."""
    part.require_cover(g)
    bi = part.block_index
    return sum(
        1 for e in g.edges
        if e.ends[0] != e.ends[1] and bi(e.ends[0]) != bi(e.ends[1])
    )


def contract_partition(g: Multigraph, part: Partition, edge_id: str) -> Partition:
    """The partition after contracting a trans-block edge of g."""
    if not is_trans_block(g, part, edge_id):
        raise NotTransBlockError(f"edge {edge_id!r} is not trans-block")
    a, b = g.ends(edge_id)
    _, vmap = g.contract(edge_id)
    return part.contract_pair(a, b, vmap[a])


@dataclass(frozen=True)
class ContractionTrace:
    """The step-by-step record of contracting an ordered edge sequence.

    Step p holds the graph and partition after the first p contractions,
    together with the map sending each original vertex to its image.
    k_values[p] is the trans-block edge count of step p (recorded just
    before the step-(p+1) contraction).
    """

    graphs: tuple[Multigraph, ...]
    partitions: tuple[Partition, ...]
    vertex_maps: tuple[Mapping[str, str], ...]
    order: tuple[str, ...]
    k_values: tuple[int, ...]

    @property
    def graph(self) -> Multigraph:
        return self.graphs[0]

    @property
    def tree(self) -> frozenset[str]:
        return frozenset(self.order)

    @property
    def is_complete(self) -> bool:
        return len(self.order) == len(self.graphs[0].vertices) - 1


def forest_trace(
    g: Multigraph, part: Partition, edges: Sequence[str]
) -> ContractionTrace:
    """Contract the edges in order, requiring each to be trans-block.

    Works for any edge sequence, spanning or not; raises
    NotAdmissibleError naming the first step whose edge is not
    trans-block for the partition reached at that point.
    """
    part.require_cover(g)
    ids = list(edges)
    if len(set(ids)) != len(ids):
        raise NotASpanningTreeError("ordered edges must be distinct")
    for eid in ids:
        g.edge(eid)
    graphs = [g]
    partitions = [part]
    maps: list[dict[str, str]] = [{v: v for v in g.vertices}]
    ks: list[int] = []
    cur_g, cur_p, cur_map = g, part, maps[0]
    for step, eid in enumerate(ids):
        if not is_trans_block(cur_g, cur_p, eid):
            raise NotAdmissibleError(
                f"edge {eid!r} is not trans-block at step {step}", step=step
            )
        ks.append(trans_block_count(cur_g, cur_p))
        a, b = cur_g.ends(eid)
        cur_g, vmap = cur_g.contract(eid)
        cur_p = cur_p.contract_pair(a, b, vmap[a])
        cur_map = {orig: vmap[img] for orig, img in cur_map.items()}
        graphs.append(cur_g)
        partitions.append(cur_p)
        maps.append(cur_map)
    return ContractionTrace(
        tuple(graphs), tuple(partitions), tuple(maps), tuple(ids), tuple(ks)
    )


def build_trace(
    g: Multigraph, part: Partition, order: Sequence[str]
) -> ContractionTrace:
    """Full trace of an ordered spanning tree; the final partition is trivial."""
    if part.is_trivial:
        raise TrivialPartitionError("weights need a partition with at least two blocks")
    if not g.is_spanning_tree(order):
        raise NotASpanningTreeError(
            f"{list(order)} is not an ordering of a spanning tree"
        )
    trace = forest_trace(g, part, order)
    assert trace.partitions[-1].is_trivial
    return trace


def admissible_orderings(
    g: Multigraph, part: Partition, tree: Iterable[str]
) -> list[tuple[str, ...]]:
    """All orderings of a spanning tree whose trace succeeds.

    Admissibility is decided on the tree-only subgraph: whether a tree
    edge is trans-block at its step never depends on the other edges of
    g. The result is non-empty for every non-trivial partition and is
    sorted lexicographically.
    """
    if part.is_trivial:
        raise TrivialPartitionError("no admissible orderings for one block")
    tree_ids = sorted(set(tree))
    if not g.is_spanning_tree(tree_ids):
        raise NotASpanningTreeError(f"{tree_ids} is not a spanning tree")
    skeleton = Multigraph(
        g.vertices, tuple(g.edge(eid) for eid in tree_ids)
    )
    out: list[tuple[str, ...]] = []

    def extend(cur_g: Multigraph, cur_p: Partition, prefix: tuple[str, ...], rest: list[str]):
        if not rest:
            out.append(prefix)
            return
        for eid in rest:
            if is_trans_block(cur_g, cur_p, eid):
                a, b = cur_g.ends(eid)
                nxt_g, vmap = cur_g.contract(eid)
                nxt_p = cur_p.contract_pair(a, b, vmap[a])
                extend(nxt_g, nxt_p, prefix + (eid,), [x for x in rest if x != eid])

    extend(skeleton, part, (), tree_ids)
    out.sort()
    # a spanning tree always admits at least one ordering when the
    # partition is non-trivial
    assert out
    return out


def contact_indices(trace: ContractionTrace, v: str, w: str) -> tuple[int, int]:
    """The separation and merge steps of a vertex pair along a trace.

    Returns (i, j): i is the first step whose partition puts the two
    images in distinct blocks, j the first step at which the images
    coincide. By convention the pair (v, v) gets (-1, 0). Along every
    complete trace i < j.
    """
    g0 = trace.graphs[0]
    for x in (v, w):
        if x not in g0:
            raise UnknownVertexError(f"vertex {x!r} not in the traced graph")
    if v == w:
        return (-1, 0)
    if not trace.is_complete:
        raise NotASpanningTreeError("contact indices need a complete trace")
    first_split: int | None = None
    for p, (part, vmap) in enumerate(zip(trace.partitions, trace.vertex_maps)):
        iv, iw = vmap[v], vmap[w]
        if iv == iw:
            assert first_split is not None
            return (first_split, p)
        if first_split is None and part.block_index(iv) != part.block_index(iw):
            first_split = p
    raise AssertionError("complete trace must merge every vertex pair")
