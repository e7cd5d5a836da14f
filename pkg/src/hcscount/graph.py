"""Graph loading, core decomposition, degeneracy ordering, and per-root search universes.

Graphs are simple and undirected, stored in CSR form with dense vertex ids
0..n-1. Original labels from the input file are kept in ``orig_ids`` so that
reports and exports can speak the caller's id space.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

import numpy as np


class ParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


@dataclass
class LoadStats:
    n: int = 0
    m: int = 0
    data_lines: int = 0
    comment_lines: int = 0
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0

    @property
    def arcs(self) -> int:
        """Directed arc count (2m); what SNAP-style tables report as |E|."""
        return 2 * self.m

    def summary(self) -> str:
        return (
            f"n={self.n} m={self.m} arcs={self.arcs} "
            f"self_loops_dropped={self.self_loops_dropped} "
            f"duplicates_dropped={self.duplicates_dropped}"
        )


@dataclass
class Graph:
    """Immutable simple undirected graph in CSR form.

    Neighbor lists are sorted ascending, and (u,v) is present iff (v,u) is.
    """

    n: int
    m: int
    indptr: np.ndarray
    indices: np.ndarray
    orig_ids: np.ndarray
    stats: LoadStats = field(default_factory=LoadStats)

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return i < len(row) and row[i] == v

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighborhoods as bitmasks over 0..n-1 (small graphs only)."""
        masks = [0] * self.n
        for u in range(self.n):
            bits = np.zeros(self.n, dtype=bool)
            bits[self.neighbors(u)] = True
            masks[u] = int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")
        return masks

    def edge_list(self) -> list[tuple[int, int]]:
        """All undirected edges (u, v) with u < v, in dense ids."""
        out = []
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    out.append((u, int(v)))
        return out


def from_edges(pairs: Iterable[tuple[int, int]], stats: LoadStats | None = None,
               vertex_universe: np.ndarray | None = None) -> Graph:
    """Build a Graph from (possibly directed, duplicated, self-looped) pairs.

    Ids are densified; the original labels are preserved in orig_ids. Pass
    ``vertex_universe`` to force isolated vertices into the id space.
    """
    stats = stats or LoadStats()
    arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
    if arr.size == 0 and vertex_universe is None:
        stats.n = 0
        stats.m = 0
        return Graph(0, 0, np.zeros(1, dtype=np.int64), np.zeros(0, dtype=np.int32),
                     np.zeros(0, dtype=np.int64), stats)

    universe = arr.ravel()
    if vertex_universe is not None:
        universe = np.concatenate([universe, np.asarray(vertex_universe, dtype=np.int64)])
    orig_ids = np.unique(universe)
    dense = np.searchsorted(orig_ids, arr.ravel()).reshape(-1, 2)
    n = len(orig_ids)
    if n and arr.size == 0:
        return Graph(n, 0, np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int32),
                     orig_ids, stats)

    self_loops = dense[:, 0] == dense[:, 1]
    stats.self_loops_dropped = int(self_loops.sum())
    dense = dense[~self_loops]

    # symmetrize: canonical (min, max) rows, then dedup
    lo = dense.min(axis=1)
    hi = dense.max(axis=1)
    und = np.unique(np.stack([lo, hi], axis=1), axis=0) if len(dense) else dense
    m = len(und)
    stats.duplicates_dropped = len(dense) - m
    stats.n = n
    stats.m = m

    both = np.concatenate([und, und[:, ::-1]], axis=0)
    order = np.lexsort((both[:, 1], both[:, 0]))
    both = both[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, both[:, 0] + 1, 1)
    indptr = np.cumsum(indptr)
    indices = both[:, 1].astype(np.int32)
    return Graph(n, m, indptr, indices, orig_ids, stats)


def load_edge_list(source: str | Path | IO) -> Graph:
    """Parse SNAP-style edge-list text: '#' comments, two integer tokens per line."""
    close = False
    if isinstance(source, (str, Path)):
        fh = open(source, "rb")
        close = True
    else:
        fh = source
    stats = LoadStats()
    pairs: list[tuple[int, int]] = []
    try:
        for line_no, raw in enumerate(fh, start=1):
            if isinstance(raw, bytes):
                raw = raw.decode("utf-8", errors="replace")
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                stats.comment_lines += 1
                continue
            tok = line.split()
            if len(tok) != 2:
                raise ParseError(f"expected two integer tokens, got {len(tok)}", line_no)
            try:
                u, v = int(tok[0]), int(tok[1])
            except ValueError:
                raise ParseError(f"non-integer token in {tok!r}", line_no) from None
            stats.data_lines += 1
            pairs.append((u, v))
    finally:
        if close:
            fh.close()
    return from_edges(pairs, stats)


@dataclass
class DegeneracyOrder:
    """Peeling order: position i holds the vertex of minimum degree in the rest."""

    order: np.ndarray
    rank: np.ndarray
    degeneracy: int
    core_numbers: np.ndarray


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Min-degree peeling with smallest-id tie-break; also yields core numbers."""
    n = g.n
    deg = g.degrees().astype(np.int64).tolist()
    removed = [False] * n
    order = np.empty(n, dtype=np.int64)
    rank = np.empty(n, dtype=np.int64)
    core = np.zeros(n, dtype=np.int64)
    heap = [(deg[u], u) for u in range(n)]
    heapq.heapify(heap)
    delta = 0
    for pos in range(n):
        while True:
            d, u = heapq.heappop(heap)
            if not removed[u] and d == deg[u]:
                break
        removed[u] = True
        delta = max(delta, d)
        core[u] = delta
        order[pos] = u
        rank[u] = pos
        for v in g.neighbors(u):
            if not removed[v]:
                deg[v] -= 1
                heapq.heappush(heap, (deg[v], v))
    return DegeneracyOrder(order, rank, delta, core)


@dataclass
class RootNeighborhood:
    """Search universe of one root: its surviving 1/2-hop out-neighbors.

    Local ids 0..len(verts)-1 index the candidates (ascending global id);
    the root takes local id len(verts). adj[i] is a bitmask over all local
    ids, including the root bit.
    """

    root: int
    verts: np.ndarray
    hop: np.ndarray
    adj: list[int]
    cand_pre: int

    @property
    def root_local(self) -> int:
        return len(self.verts)

    @property
    def root_bit(self) -> int:
        return 1 << len(self.verts)

    @property
    def cand_mask(self) -> int:
        return (1 << len(self.verts)) - 1

    @property
    def cand_now(self) -> int:
        return len(self.verts)


def collect_candidates(g: Graph, order: DegeneracyOrder, root: int,
                       two_hop: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Raw higher-rank 1-hop and 2-hop candidate sets of a root.

    A 2-hop candidate is any higher-rank non-neighbor sharing at least one
    common neighbor with the root (the middle vertex may have any rank).
    """
    rank = order.rank
    nbrs = g.neighbors(root)
    one = nbrs[rank[nbrs] > rank[root]].astype(np.int64)
    if not two_hop:
        return one, np.zeros(0, dtype=np.int64)
    if len(nbrs) == 0:
        return one, np.zeros(0, dtype=np.int64)
    pooled = np.concatenate([g.neighbors(v) for v in nbrs])
    cand = np.unique(pooled)
    cand = cand[(rank[cand] > rank[root]) & (cand != root)]
    # drop direct neighbors: 2-hop means non-adjacent to the root
    pos = np.searchsorted(nbrs, cand)
    pos_c = np.clip(pos, 0, len(nbrs) - 1)
    is_nbr = nbrs[pos_c] == cand
    two = cand[~is_nbr].astype(np.int64)
    return one, two


def _mask_from_members(members: np.ndarray, size: int) -> int:
    bits = np.zeros(size, dtype=bool)
    bits[members] = True
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def build_root_neighborhood(g: Graph, root: int, one: np.ndarray, two: np.ndarray,
                            cand_pre: int | None = None) -> RootNeighborhood:
    """Assemble local bitmask adjacency over {root} + surviving candidates."""
    verts = np.concatenate([one, two])
    verts.sort()
    L = len(verts)
    hop = np.ones(L, dtype=np.uint8)
    if len(two):
        hop[np.searchsorted(verts, np.sort(two))] = 2
    adj: list[int] = [0] * (L + 1)
    root_bit = 1 << L
    for i in range(L):
        u = int(verts[i])
        nb = g.neighbors(u)
        pos = np.searchsorted(verts, nb)
        pos_c = np.clip(pos, 0, max(L - 1, 0))
        hit = (pos < L) & (verts[pos_c] == nb) if L else np.zeros(0, dtype=bool)
        mask = _mask_from_members(pos[hit], L) if L else 0
        if hop[i] == 1:
            mask |= root_bit
        adj[i] = mask
    adj[L] = _mask_from_members(np.flatnonzero(hop == 1), L) if L else 0
    return RootNeighborhood(root, verts, hop, adj,
                            cand_pre if cand_pre is not None else L)


def complete_graph(n: int) -> Graph:
    return from_edges([(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return from_edges([(i, (i + 1) % n) for i in range(n)])


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), seeded; used by the verification corpus."""
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, k=1)
    keep = rng.random(len(iu[0])) < p
    pairs = list(zip(iu[0][keep].tolist(), iu[1][keep].tolist()))
    return from_edges(pairs, vertex_universe=np.arange(n))
