"""Alignment relation, subset partition, and symmetric-rate feasibility.

Two messages are related at destination k when both interfere there (neither
desired nor held); related messages must share signal space in any scheme
where every destination recovers its L demands at rate 1/(L+1).  The
connected components of this relation are the alignment subsets.  Rate
1/(L+1) per message is achievable iff no two same-subset messages collide,
i.e. one of them is desired somewhere the other is not an antidote.

Subset consolidation beyond connected components is deliberately not
attempted (minimizing the subset count is NP-hard, and a larger field or
block length always fits the component count).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import Infeasible, NotNormalized, UnsupportedL
from .galois import (
    Matrix,
    PrimeField,
    mds_vector_family,
    smallest_prime_at_least,
    spread_family,
)
from .model import Instance, normalize
from .scheme import LinearScheme


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class AlignmentPartition:
    """Edges (i, j, k) with i < j, plus the induced subsets P_1..P_Z."""

    L: int
    edges: frozenset
    subsets: tuple  # tuple of frozensets, ordered by smallest member

    @property
    def Z(self) -> int:
        return len(self.subsets)

    def subset_index(self, m: int) -> int:
        """1-based index of the subset containing message m."""
        for t, sub in enumerate(self.subsets, start=1):
            if m in sub:
                return t
        raise KeyError(f"message {m} not in any subset")

    def to_json(self) -> dict:
        return {
            "L": self.L,
            "Z": self.Z,
            "edges": sorted([i, j, k] for (i, j, k) in self.edges),
            "subsets": [sorted(s) for s in self.subsets],
        }


def partition(inst: Instance) -> AlignmentPartition:
    """Alignment subsets of an instance with uniform demand size."""
    sizes = inst.demand_sizes()
    if len(sizes) != 1:
        raise NotNormalized(f"demand sizes differ: {sorted(sizes)}")
    L = sizes.pop()
    edges = set()
    uf = _UnionFind(range(1, inst.num_messages + 1))
    for d in inst.destinations:
        outside = sorted(inst.interferers(d))
        for a in range(len(outside)):
            for b in range(a + 1, len(outside)):
                edges.add((outside[a], outside[b], d.id))
                uf.union(outside[a], outside[b])
    groups = {}
    for m in range(1, inst.num_messages + 1):
        groups.setdefault(uf.find(m), set()).add(m)
    subsets = tuple(frozenset(g) for g in sorted(groups.values(), key=min))
    return AlignmentPartition(L, frozenset(edges), subsets)


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    witness: Optional[tuple]  # (i, j, k): same subset, j desired at k, i not held
    partition: AlignmentPartition

    def to_json(self) -> dict:
        out = {"feasible": self.feasible, "partition": self.partition.to_json()}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def check_feasibility(inst: Instance, L: int) -> FeasibilityVerdict:
    """Decide achievability of rate 1/(L+1) for every message.

    The instance is first normalized to demand size L; the witness, when
    present, is the first conflict in (subset index, i, j, k) order, with
    destination ids referring to the normalized instance.
    """
    norm = normalize(inst, L)
    part = partition(norm)
    for sub in part.subsets:
        if len(sub) < 2:
            continue
        members = sorted(sub)
        for i in members:
            for j in members:
                if i == j:
                    continue
                for d in norm.destinations:
                    if j in d.wants and i not in d.has:
                        return FeasibilityVerdict(False, (i, j, d.id), part)
    return FeasibilityVerdict(True, None, part)


def build_scalar_scheme(inst: Instance, L: int) -> LinearScheme:
    """Scalar scheme at rate 1/(L+1): one beam per alignment subset.

    Block length L+1 over the smallest prime field with at least Z elements;
    subset t rides on column t of an MDS family, so the at most L+1 distinct
    beams seen after antidote cancellation at any destination are independent.
    Verifies against normalize(inst, L).
    """
    verdict = check_feasibility(inst, L)
    if not verdict.feasible:
        raise Infeasible(verdict.witness)
    part = verdict.partition
    field = PrimeField(smallest_prime_at_least(part.Z))
    beams = mds_vector_family(part.Z, L + 1, field)
    V = {
        m: beams.take_cols([part.subset_index(m) - 1])
        for m in range(1, inst.num_messages + 1)
    }
    return LinearScheme(field, L + 1, V)


def build_rate_half_vector_scheme(inst: Instance, L: int = 1) -> LinearScheme:
    """Rate-1/2 vector scheme over GF(2) for single-demand instances.

    Each alignment subset gets one member of a pairwise-trivially-intersecting
    family of (n/2)-dim subspaces of GF(2)^n, with n the smallest even block
    length whose family has at least Z members.
    """
    if L != 1:
        raise UnsupportedL("the spread construction is stated for single demands (L=1)")
    verdict = check_feasibility(inst, L)
    if not verdict.feasible:
        raise Infeasible(verdict.witness)
    part = verdict.partition
    n = 2
    while 2 ** (n // 2) + 1 < part.Z:
        n += 2
    subspaces = spread_family(n)
    V = {
        m: subspaces[part.subset_index(m) - 1].basis
        for m in range(1, inst.num_messages + 1)
    }
    return LinearScheme(PrimeField(2), n, V)
