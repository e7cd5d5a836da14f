"""Motif families, parameter validation, and incremental membership state.

Three families are supported: clique, s-defective clique (dclique: at most s
missing edges in total) and s-plex (every member misses at most s others).
Search engines keep membership checks O(1) through two bookkeeping schemes:

* dclique: integer array A where A[v] counts v's non-neighbors inside the
  growing set R, plus the running total of missing edges of R;
* plex: list array As where As[v] holds exactly the members of R that are
  non-adjacent to v.

Both are maintained over a fixed local universe (bitmask adjacency) with
exact push/pop inverses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

FAMILIES = ("clique", "dclique", "plex")


class SpecError(ValueError):
    """Motif parameters violate the diameter-2 admissibility conditions."""


@dataclass(frozen=True)
class MotifSpec:
    family: str
    s: int
    q_low: int
    q_high: int

    @classmethod
    def single(cls, family: str, s: int, q: int) -> "MotifSpec":
        return cls(family, s, q, q)

    @property
    def is_range(self) -> bool:
        return self.q_low != self.q_high

    @property
    def sizes(self) -> range:
        return range(self.q_low, self.q_high + 1)

    def validate(self) -> "MotifSpec":
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.s < 0:
            raise SpecError("s must be non-negative")
        if not (1 <= self.q_low <= self.q_high):
            raise SpecError(f"need 1 <= q_low <= q_high, got [{self.q_low}, {self.q_high}]")
        if self.family == "clique":
            if self.s != 0:
                raise SpecError("clique family requires s = 0")
        elif self.family == "dclique":
            if self.q_low - 2 < self.s:
                raise SpecError(
                    f"dclique requires q - 2 >= s for a diameter-2 guarantee; "
                    f"got q={self.q_low}, s={self.s}")
        elif self.family == "plex":
            if self.q_low < 2 * self.s + 1:
                raise SpecError(
                    f"plex requires q >= 2s + 1 for a diameter-2 guarantee; "
                    f"got q={self.q_low}, s={self.s}")
        return self

    def describe(self) -> str:
        qs = f"q={self.q_low}" if not self.is_range else f"q in [{self.q_low},{self.q_high}]"
        return f"{self.family}(s={self.s}, {qs})"


def missing_edges(g: Graph, Q) -> int:
    """Total missing edge count of the subgraph induced by Q."""
    Q = list(Q)
    miss = 0
    for i, u in enumerate(Q):
        for v in Q[i + 1:]:
            if not g.has_edge(u, v):
                miss += 1
    return miss


def vertex_deficiency(g: Graph, u: int, Q) -> int:
    """Missing edges between u and Q \\ {u}; for u outside Q this counts all of Q."""
    cnt = 0
    for v in Q:
        if v != u and not g.has_edge(u, v):
            cnt += 1
    return cnt


def is_hcs(spec: MotifSpec, g: Graph, Q) -> bool:
    """Definitional membership test; used by the oracle and by tests only."""
    Q = list(Q)
    if len(set(Q)) != len(Q):
        raise ValueError("Q has repeated vertices")
    if spec.family == "dclique":
        return missing_edges(g, Q) <= spec.s
    if spec.family == "plex":
        return all(vertex_deficiency(g, u, Q) <= spec.s for u in Q)
    return missing_edges(g, Q) == 0


class DcliqueState:
    """R, m̄(R), and A[v] = m̄(v, R) over a bitmask universe."""

    __slots__ = ("adj", "nonadj", "s", "R", "total_missing", "A")

    def __init__(self, adj: list[int], s: int):
        self.adj = adj
        full = (1 << len(adj)) - 1
        self.nonadj = [full & ~a & ~(1 << i) for i, a in enumerate(adj)]
        self.s = s
        self.R: list[int] = []
        self.total_missing = 0
        self.A = [0] * len(adj)

    def push(self, u: int) -> None:
        A = self.A
        assert self.total_missing + A[u] <= self.s, "push would exceed the missing-edge budget"
        self.total_missing += A[u]
        w = self.nonadj[u]
        while w:
            b = w & -w
            A[b.bit_length() - 1] += 1
            w ^= b
        self.R.append(u)

    def pop(self) -> int:
        u = self.R.pop()
        A = self.A
        w = self.nonadj[u]
        while w:
            b = w & -w
            A[b.bit_length() - 1] -= 1
            w ^= b
        self.total_missing -= A[u]
        return u

    def filter_candidates(self, C: int) -> int:
        """Candidates v that keep R + {v} within budget (call after a push)."""
        budget = self.s - self.total_missing
        A = self.A
        out = 0
        w = C
        while w:
            b = w & -w
            if A[b.bit_length() - 1] <= budget:
                out |= b
            w ^= b
        return out

    def recompute(self) -> tuple[int, list[int]]:
        """From-scratch (total_missing, A) for consistency checks."""
        adj = self.adj
        r_bits = 0
        for u in self.R:
            r_bits |= 1 << u
        total = 0
        A = [0] * len(adj)
        for v in range(len(adj)):
            inside = r_bits & ~(1 << v)
            A[v] = (inside & ~adj[v]).bit_count()
            if (r_bits >> v) & 1:
                total += A[v]
        return total // 2, A


class PlexState:
    """R and As[v] = members of R non-adjacent to v, over a bitmask universe."""

    __slots__ = ("adj", "nonadj", "s", "R", "As")

    def __init__(self, adj: list[int], s: int):
        self.adj = adj
        full = (1 << len(adj)) - 1
        self.nonadj = [full & ~a & ~(1 << i) for i, a in enumerate(adj)]
        self.s = s
        self.R: list[int] = []
        self.As: list[list[int]] = [[] for _ in adj]

    def push(self, u: int) -> None:
        As = self.As
        assert len(As[u]) <= self.s, "push would exceed the per-vertex budget"
        assert all(len(As[v]) < self.s for v in As[u]), \
            "push would saturate a member past its budget"
        w = self.nonadj[u]
        while w:
            b = w & -w
            As[b.bit_length() - 1].append(u)
            w ^= b
        self.R.append(u)

    def pop(self) -> int:
        u = self.R.pop()
        As = self.As
        w = self.nonadj[u]
        while w:
            b = w & -w
            As[b.bit_length() - 1].pop()
            w ^= b
        return u

    def filter_candidates(self, C: int, u: int) -> int:
        """Candidates still extendable after u's push.

        Keeps v with at most s non-neighbors in R + {u}; then every member
        saturated by the push (deficiency exactly s) evicts its non-neighbors.
        Only u itself and u's non-neighbors inside R can be newly saturated.
        """
        s = self.s
        As = self.As
        adj = self.adj
        out = 0
        w = C
        while w:
            b = w & -w
            if len(As[b.bit_length() - 1]) <= s:
                out |= b
            w ^= b
        for v in As[u]:
            if len(As[v]) == s:
                out &= adj[v]
        if len(As[u]) == s:
            out &= adj[u]
        return out

    def deficiency(self, v: int) -> int:
        """m̄(v, R) for any universe vertex (members of R excluded from their own count)."""
        return len(self.As[v])

    def recompute(self) -> list[list[int]]:
        """From-scratch As for consistency checks."""
        adj = self.adj
        out: list[list[int]] = [[] for _ in adj]
        for v in range(len(adj)):
            for r in self.R:
                if r != v and not (adj[v] >> r) & 1:
                    out[v].append(r)
        return out
