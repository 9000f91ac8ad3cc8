"""Catalog of ADE singularity types with a fixed curve labeling.

A Du Val singularity resolves into a tree of (-2)-curves arranged as an
ADE Dynkin diagram.  All formulas downstream index those curves by a fixed
labeling convention, frozen here:

* ``A_n``: the chain ``E_1 - E_2 - ... - E_n``.
* ``D_n``: ``E_1`` and ``E_2`` both attached to ``E_3``, then the chain
  ``E_3 - E_4 - ... - E_n``.
* ``E_6/E_7/E_8``: main chain ``E_1 - E_2 - E_3 - E_5 - ... - E_n`` with
  ``E_4`` attached to ``E_3``.

Relabeling would silently break every regression against the printed
coefficient formulas, so the convention is part of the public contract.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exactlin import QMatrix, QVector


class InvalidRank(ValueError):
    """The (kind, rank) combination is not a valid ADE type."""


@dataclass(frozen=True)
class SingularityType:
    """An ADE type such as A4, D5, E8."""

    kind: str  # "A", "D", or "E"
    rank: int

    def __post_init__(self):
        if self.kind not in ("A", "D", "E"):
            raise InvalidRank(f"unknown kind {self.kind!r}")
        if self.kind == "A" and self.rank < 1:
            raise InvalidRank("A_n needs n >= 1")
        if self.kind == "D" and self.rank < 4:
            raise InvalidRank("D_n needs n >= 4")
        if self.kind == "E" and self.rank not in (6, 7, 8):
            raise InvalidRank("E_n needs n in {6, 7, 8}")

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SingularityType":
        m = re.fullmatch(r"([ADE])(\d+)", text.strip())
        if not m:
            raise InvalidRank(f"cannot parse singularity type {text!r}")
        return cls(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class DynkinGraph:
    """A labeled ADE diagram: ordered node labels and its edge set."""

    node_labels: tuple[str, ...]
    edges: frozenset[frozenset[str]]


def edge_index_pairs(t: SingularityType) -> list[tuple[int, int]]:
    """0-based index pairs of the diagram edges, in the frozen labeling."""
    n = t.rank
    if t.kind == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.kind == "D":
        return [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    # E types: chain 1-2-3-5-...-n plus the branch 3-4 (0-based: 2-3).
    chain = [0, 1, 2] + list(range(4, n))
    pairs = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    pairs.append((2, 3))
    return sorted(tuple(sorted(p)) for p in pairs)


def dynkin_graph(t: SingularityType, prefix: str = "E") -> DynkinGraph:
    """The labeled diagram, with node names ``<prefix>1 .. <prefix>n``."""
    labels = tuple(f"{prefix}{i + 1}" for i in range(t.rank))
    edges = frozenset(frozenset({labels[i], labels[j]})
                      for i, j in edge_index_pairs(t))
    return DynkinGraph(labels, edges)


def intersection_matrix(t: SingularityType) -> QMatrix:
    """The exceptional intersection matrix: -2 on the diagonal, 1 on edges."""
    n = t.rank
    rows = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edge_index_pairs(t):
        rows[i][j] = 1
        rows[j][i] = 1
    return QMatrix(rows)


def fundamental_cycle(t: SingularityType) -> QVector:
    """The minimal positive integer cycle z with (M z)_i <= 0 for all i.

    Computed by the standard increment algorithm: start with all-ones and,
    while some component of M z is positive, add 1 to the first offending
    coordinate.  For ADE intersection matrices this terminates at the
    highest-root coefficient vector.
    """
    m = intersection_matrix(t)
    z = [1] * t.rank
    while True:
        prod = m.mul_vector(QVector(z))
        offender = next((i for i, v in enumerate(prod) if v > 0), None)
        if offender is None:
            return QVector(z)
        z[offender] += 1


def fundamental_cycle_bruteforce(t: SingularityType,
                                 max_entry: int = 6) -> QVector:
    """Independent oracle: exhaustive search for the minimal valid cycle.

    Enumerates, by depth-first search with early pruning, all integer
    vectors with entries in [1, max_entry] satisfying (M z)_i <= 0 for
    every i, and returns their componentwise minimum (asserting that the
    minimum is itself a valid cycle, i.e. the minimal cycle exists and is
    unique).  Pure-integer arithmetic; intended for ranks <= 8 in tests.
    """
    n = t.rank
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for i, j in edge_index_pairs(t):
        neighbors[i].append(j)
        neighbors[j].append(i)
    # Row i can be checked once every neighbor of i (and i) is assigned.
    check_after = [max([i] + neighbors[i]) for i in range(n)]
    valid: list[tuple[int, ...]] = []
    z = [0] * n

    def descend(pos: int) -> None:
        if pos == n:
            valid.append(tuple(z))
            return
        for value in range(1, max_entry + 1):
            z[pos] = value
            ok = True
            for i in range(n):
                if check_after[i] == pos:
                    if -2 * z[i] + sum(z[j] for j in neighbors[i]) > 0:
                        ok = False
                        break
            if ok:
                descend(pos + 1)
        z[pos] = 0

    descend(0)
    if not valid:
        raise InvalidRank("no valid cycle found within the search bound")
    minimum = tuple(min(v[i] for v in valid) for i in range(n))
    assert minimum in valid, "componentwise minimum is not a valid cycle?"
    return QVector(minimum)
