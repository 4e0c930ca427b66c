"""Contact matrices and constructive-positivity verification.

The contact matrix of an ordered tree at a point u in the unit cube has
entry (v, w) equal to the product of u_k over the contact-index range of
the pair. It is built here two ways: directly from the contact indices,
and by the interpolation recursion that rewrites it as a chain of
barycentric combinations (which is what makes it positive
semidefinite). Verification samples seeded random points per ordered
tree, compares the two constructions, checks eigenvalues, and confirms
the exact normalization of the tree measure. This is the only module
that touches floating point; every weight elsewhere is an exact
fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    BadDimensionError,
    NotSymmetricError,
    OutOfRangeError,
    TrivialPartitionError,
)
from .graph import Multigraph
from .partitions import (
    ContractionTrace,
    Partition,
    admissible_orderings,
    build_trace,
    contact_indices,
)
from .weights import ordered_weight_from_trace

DEFAULT_TOLERANCE = 1e-10
DEFAULT_SAMPLES = 20
# the two matrix constructions are algebraically identical; their
# floating-point realizations must match this tightly
AGREEMENT_TOLERANCE = 1e-12


def _check_point(trace: ContractionTrace, u: Sequence[float]) -> np.ndarray:
    point = np.asarray(u, dtype=float)
    steps = len(trace.graphs[0].vertices) - 1
    if point.shape != (steps,):
        raise BadDimensionError(
            f"point has shape {point.shape}, trace needs ({steps},)"
        )
    if np.any(point < 0.0) or np.any(point > 1.0):
        raise OutOfRangeError("evaluation point must lie in [0, 1]^steps")
    return point


def contact_matrix_direct(trace: ContractionTrace, u: Sequence[float]) -> np.ndarray:
    """Entrywise product of u_k over each pair's contact-index range."""
    point = _check_point(trace, u)
    verts = trace.graphs[0].vertices
    n = len(verts)
    m = np.ones((n, n))
    for a in range(n):
        for b in range(a + 1, n):
            i, j = contact_indices(trace, verts[a], verts[b])
            value = 1.0
            for k in range(max(i + 1, 1), j + 1):
                value *= point[k - 1]
            m[a, b] = m[b, a] = value
    return m


def contact_matrix_recursion(trace: ContractionTrace, u: Sequence[float]) -> np.ndarray:
    """Barycentric interpolation chain from the all-ones matrix.

    Each step mixes the previous matrix with its projection, where the
    projection keeps an entry iff the two vertices' images at that step
    coincide or share a partition block.
    """
    point = _check_point(trace, u)
    verts = trace.graphs[0].vertices
    n = len(verts)
    x = np.ones((n, n))
    for p in range(1, n):
        part = trace.partitions[p - 1]
        vmap = trace.vertex_maps[p - 1]
        images = [vmap[v] for v in verts]
        classes = [
            (img, part.block_index(img)) for img in images
        ]
        mask = np.fromiter(
            (
                classes[a][0] == classes[b][0] or classes[a][1] == classes[b][1]
                for a in range(n)
                for b in range(n)
            ),
            dtype=bool,
            count=n * n,
        ).reshape(n, n)
        x = point[p - 1] * x + (1.0 - point[p - 1]) * np.where(mask, x, 0.0)
    return x


def min_eigenvalue(m: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(m)[0])


def check_psd(m: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> bool:
    """True iff the symmetric matrix has smallest eigenvalue >= -tol."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetricError("matrix must be square")
    if not np.array_equal(m, m.T):
        raise NotSymmetricError("matrix must be symmetric")
    return min_eigenvalue(m) >= -tol


@dataclass(frozen=True)
class TraceCheck:
    """Verification summary for one ordered tree."""

    tree: tuple[str, ...]
    order: tuple[str, ...]
    min_eigenvalue: float
    max_discrepancy: float
    endpoints_exact: bool
    unit_diagonal: bool
    passed: bool


@dataclass(frozen=True)
class PsdReport:
    """Aggregate result of verify_constructive, reproducible from the seed."""

    seed: int
    samples: int
    tolerance: float
    checks: tuple[TraceCheck, ...]
    measure_normalized: bool
    passed: bool

    @property
    def max_discrepancy(self) -> float:
        return max((c.max_discrepancy for c in self.checks), default=0.0)

    @property
    def min_eigenvalue(self) -> float:
        return min((c.min_eigenvalue for c in self.checks), default=0.0)


def verify_constructive(
    g: Multigraph,
    part: Partition,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    seed: int = 0,
) -> PsdReport:
    """Check positivity and construction agreement over all ordered trees.

    For every spanning tree and admissible ordering: at `samples` seeded
    random points both matrix constructions must agree within tol, the
    diagonal must be exactly one, and the smallest eigenvalue must stay
    above -tol; the endpoint points (all-ones, all-zeros) must give the
    all-ones matrix and the identity exactly. Separately the tree
    measure is normalized exactly: over the tree alone, the ordered
    weights of its admissible orderings sum to 1.
    """
    if part.is_trivial:
        raise TrivialPartitionError("verification needs a non-trivial partition")
    n = len(g.vertices)
    checks: list[TraceCheck] = []
    normalized = True
    index = 0
    for tree in g.spanning_trees():
        skeleton = Multigraph(g.vertices, tuple(g.edge(e) for e in sorted(tree)))
        norm = sum(
            (
                ordered_weight_from_trace(build_trace(skeleton, part, order))
                for order in admissible_orderings(skeleton, part, tree)
            ),
            Fraction(0),
        )
        if norm != 1:
            normalized = False
        for order in admissible_orderings(g, part, tree):
            trace = build_trace(g, part, order)
            rng = np.random.default_rng([seed, index])
            index += 1
            worst_gap = 0.0
            worst_eig = np.inf
            diag_ok = True
            for _ in range(samples):
                u = rng.uniform(0.0, 1.0, size=n - 1)
                direct = contact_matrix_direct(trace, u)
                recursed = contact_matrix_recursion(trace, u)
                worst_gap = max(worst_gap, float(np.abs(direct - recursed).max()))
                worst_eig = min(worst_eig, min_eigenvalue(direct))
                if not (
                    np.array_equal(np.diag(direct), np.ones(n))
                    and np.array_equal(np.diag(recursed), np.ones(n))
                ):
                    diag_ok = False
            ones = np.ones(n - 1)
            zeros = np.zeros(n - 1)
            endpoints = (
                np.array_equal(contact_matrix_direct(trace, ones), np.ones((n, n)))
                and np.array_equal(contact_matrix_recursion(trace, ones), np.ones((n, n)))
                and np.array_equal(contact_matrix_direct(trace, zeros), np.eye(n))
                and np.array_equal(contact_matrix_recursion(trace, zeros), np.eye(n))
            )
            ok = (
                worst_gap <= AGREEMENT_TOLERANCE
                and worst_eig >= -tol
                and diag_ok
                and endpoints
            )
            checks.append(
                TraceCheck(
                    tree=tuple(sorted(tree)),
                    order=order,
                    min_eigenvalue=float(worst_eig),
                    max_discrepancy=worst_gap,
                    endpoints_exact=endpoints,
                    unit_diagonal=diag_ok,
                    passed=ok,
                )
            )
    passed = normalized and all(c.passed for c in checks)
    return PsdReport(
        seed=seed,
        samples=samples,
        tolerance=tol,
        checks=tuple(checks),
        measure_normalized=normalized,
        passed=passed,
    )
