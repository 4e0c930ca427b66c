"""Canonical example graphs used throughout the tests and docs.

fig1: three vertices, a triangle with one doubled side (4 edges, 5
spanning trees). fig2: four vertices, six edges including a parallel
pair (12 spanning trees). Matching JSON files live in fixtures/ at the
repository root for CLI use.
"""

from __future__ import annotations

from .graph import Multigraph
from .partitions import Partition


def fig1() -> Multigraph:
    return Multigraph.build(
        ["v1", "v2", "v3"],
        [
            ("l1", "v1", "v2"),
            ("l2", "v1", "v3"),
            ("l3", "v2", "v3"),
            ("l4", "v2", "v3"),
        ],
    )


def fig1_root_first() -> Partition:
    """Root at v1: the singleton {v1} against the rest."""
    return Partition.of([{"v1"}, {"v2", "v3"}])


def fig1_root_second() -> Partition:
    """Root at v2."""
    return Partition.of([{"v2"}, {"v1", "v3"}])


def fig2() -> Multigraph:
    return Multigraph.build(
        ["v1", "v2", "v3", "v4"],
        [
            ("l1", "v1", "v2"),
            ("l2", "v2", "v3"),
            ("l3", "v1", "v3"),
            ("l4", "v1", "v3"),
            ("l5", "v1", "v4"),
            ("l6", "v3", "v4"),
        ],
    )


def fig2_double_rooted() -> Partition:
    """Roots at v1 and v2; v3 and v4 share the remaining block."""
    return Partition.of([{"v1"}, {"v2"}, {"v3", "v4"}])
