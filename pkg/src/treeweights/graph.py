"""Immutable multigraphs with contraction and spanning-tree enumeration.

Vertices and edges carry opaque string labels. Self-loops and parallel
edges are first-class: they survive contraction (parallels of a
contracted edge become self-loops) and are preserved by serialization.
All operations are pure; contraction returns a new graph plus the
vertex map, so values can be shared freely across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DanglingEndpointError,
    DisconnectedError,
    DuplicateIdError,
    ParseError,
    SelfLoopContractionError,
    UnknownEdgeError,
)


class DisjointSet:
    """Union-find over dense integer vertices, with path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.groups = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; return False if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.groups -= 1
        return True


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]

    @property
    def is_self_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class GraphAudit:
    """Outcome of validate(): the self-loop and parallel-class inventory."""

    self_loops: tuple[str, ...]
    parallel_classes: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class Multigraph:
    """A labeled multigraph; endpoint order within an edge is irrelevant."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> Multigraph:
        """Construct from an iterable of (edge_id, end, end) triples and validate."""
        g = cls(tuple(vertices), tuple(Edge(i, (a, b)) for i, a, b in edges))
        g.validate()
        return g

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def __contains__(self, vertex: str) -> bool:
        return vertex in self._vertex_index

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge_by_id

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge_by_id[edge_id]
        except KeyError:
            raise UnknownEdgeError(f"no edge {edge_id!r} in graph") from None

    def ends(self, edge_id: str) -> tuple[str, str]:
        return self.edge(edge_id).ends

    def validate(self) -> GraphAudit:
        """Check the structural invariants and inventory loops and parallels.

        Raises DuplicateIdError for repeated vertex or edge labels and
        DanglingEndpointError for an endpoint outside the vertex set.
        """
        seen_v: set[str] = set()
        for v in self.vertices:
            if v in seen_v:
                raise DuplicateIdError(f"duplicate vertex id {v!r}")
            seen_v.add(v)
        seen_e: set[str] = set()
        by_pair: dict[frozenset[str], list[str]] = {}
        loops: list[str] = []
        for e in self.edges:
            if e.id in seen_e:
                raise DuplicateIdError(f"duplicate edge id {e.id!r}")
            seen_e.add(e.id)
            for end in e.ends:
                if end not in seen_v:
                    raise DanglingEndpointError(
                        f"edge {e.id!r} endpoint {end!r} is not a vertex"
                    )
            if e.is_self_loop:
                loops.append(e.id)
            by_pair.setdefault(frozenset(e.ends), []).append(e.id)
        parallels = tuple(
            tuple(ids) for ids in by_pair.values() if len(ids) > 1
        )
        return GraphAudit(tuple(loops), parallels)

    def is_connected(self) -> bool:
        """True iff every vertex pair is joined by a path; single vertex counts."""
        n = len(self.vertices)
        if n == 0:
            return False
        ds = DisjointSet(n)
        vi = self._vertex_index
        for e in self.edges:
            ds.union(vi[e.ends[0]], vi[e.ends[1]])
        return ds.groups == 1

    def self_loops(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges if e.is_self_loop)

    def nullity(self) -> int:
        """Number of independent cycles of a connected graph: |E| - |V| + 1."""
        return len(self.edges) - len(self.vertices) + 1

    def contract(self, edge_id: str) -> tuple[Multigraph, dict[str, str]]:
        """Merge the endpoints of a non-self-loop edge into one fresh vertex.

        The contracted edge disappears; every other edge keeps its id with
        endpoints remapped, so parallels of the contracted edge become
        self-loops. Returns the new graph and the old-to-new vertex map.
        The merged vertex is named by joining the endpoint labels with '+'
        in sorted order, which keeps contraction sequences reproducible.
        """
        e = self.edge(edge_id)
        if e.is_self_loop:
            raise SelfLoopContractionError(f"edge {edge_id!r} is a self-loop")
        a, b = e.ends
        merged = "+".join(sorted((a, b)))
        taken = set(self.vertices)
        while merged in taken:
            merged += "'"
        vmap = {v: v for v in self.vertices}
        vmap[a] = merged
        vmap[b] = merged
        new_vertices = tuple(
            merged if v == a else v for v in self.vertices if v != b
        )
        new_edges = tuple(
            Edge(f.id, (vmap[f.ends[0]], vmap[f.ends[1]]))
            for f in self.edges
            if f.id != edge_id
        )
        return Multigraph(new_vertices, new_edges), vmap

    def spanning_trees(self) -> list[frozenset[str]]:
        """All spanning trees as edge-id sets, via contraction-deletion.

        Branching on one non-loop edge e splits the trees into those that
        contain e (trees of G/e, each extended by e) and those that do not
        (trees of G-e, explored only while G-e stays connected), so every
        tree is produced exactly once. Output is sorted for determinism.
        """
        if not self.is_connected():
            raise DisconnectedError("spanning trees require a connected graph")
        n = len(self.vertices)
        vi = self._vertex_index
        edges = [(e.id, vi[e.ends[0]], vi[e.ends[1]]) for e in self.edges]
        out: list[frozenset[str]] = []

        def still_connected(nverts: int, rem: list[tuple[str, int, int]]) -> bool:
            ds = DisjointSet(n)
            groups = nverts
            for _, a, b in rem:
                if ds.union(a, b):
                    groups -= 1
            return groups == 1

        def rec(nverts: int, rem: list[tuple[str, int, int]], chosen: tuple[str, ...]):
            if nverts == 1:
                out.append(frozenset(chosen))
                return
            pick = next((t for t in rem if t[1] != t[2]), None)
            if pick is None:
                return
            eid, a, b = pick
            contracted = [
                (i, a if x == b else x, a if y == b else y)
                for i, x, y in rem
                if i != eid
            ]
            rec(nverts - 1, contracted, chosen + (eid,))
            deleted = [t for t in rem if t[0] != eid]
            if still_connected(nverts, deleted):
                rec(nverts, deleted, chosen)

        # vertices keep their dense indices; contraction reuses index a for
        # the merged vertex, so DisjointSet(n) stays valid throughout
        rec(n, edges, ())
        out.sort(key=lambda t: tuple(sorted(t)))
        return out

    def complexity(self) -> int:
        """Number of spanning trees."""
        return len(self.spanning_trees())

    def is_spanning_tree(self, edge_ids: Iterable[str]) -> bool:
        """True iff the ids form an acyclic edge set touching every vertex."""
        ids = list(edge_ids)
        if len(set(ids)) != len(ids) or len(ids) != len(self.vertices) - 1:
            return False
        ds = DisjointSet(len(self.vertices))
        vi = self._vertex_index
        for eid in ids:
            if not self.has_edge(eid):
                return False
            a, b = self.ends(eid)
            if not ds.union(vi[a], vi[b]):
                return False
        return ds.groups == 1

    # JSON wire format:
    #   {"vertices": ["v1", ...], "edges": [{"id": "l1", "ends": ["v1", "v2"]}, ...]}

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "ends": list(e.ends)} for e in self.edges],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, data: object) -> Multigraph:
        if not isinstance(data, Mapping):
            raise ParseError("graph document must be a JSON object")
        vertices = data.get("vertices")
        edges = data.get("edges")
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise ParseError('field "vertices" must be a list of strings')
        if not isinstance(edges, list):
            raise ParseError('field "edges" must be a list')
        triples = []
        for pos, item in enumerate(edges):
            if not isinstance(item, Mapping) or "id" not in item or "ends" not in item:
                raise ParseError(f'edge #{pos} must be an object with "id" and "ends"')
            eid, ends = item["id"], item["ends"]
            if not isinstance(eid, str):
                raise ParseError(f'edge #{pos}: "id" must be a string')
            if (
                not isinstance(ends, list)
                or len(ends) != 2
                or not all(isinstance(x, str) for x in ends)
            ):
                raise ParseError(f'edge {eid!r}: "ends" must be a pair of vertex ids')
            triples.append((eid, ends[0], ends[1]))
        return cls.build(vertices, triples)

    @classmethod
    def from_json(cls, text: str) -> Multigraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)
