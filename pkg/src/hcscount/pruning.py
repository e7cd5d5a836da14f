"""Candidate-set reduction before search and branch-level upper bounds.

Reduction shrinks a root's raw 1-hop/2-hop candidate sets using core and
degree thresholds that no target-size result can evade. The bounds cap the
size any branch can reach; a branch whose bound falls below the target is
skipped. Both are lossless: counts with and without them must agree.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .motifs import DcliqueState, PlexState

# Fault-injection knob for the verification harness: a positive value makes
# the bounds too tight by that amount, which must break count agreement.
BOUND_FAULT = 0


def _induced_core(g: Graph, one: np.ndarray, k: int) -> np.ndarray:
    """k-core of the subgraph induced by `one` (peeling to a fixed point)."""
    L = len(one)
    local_nbrs: list[np.ndarray] = []
    for u in one:
        nb = g.neighbors(int(u))
        pos = np.searchsorted(one, nb)
        pos_c = np.clip(pos, 0, L - 1)
        hit = (pos < L) & (one[pos_c] == nb)
        local_nbrs.append(pos[hit])
    deg = np.array([len(x) for x in local_nbrs])
    alive = np.ones(L, dtype=bool)
    stack = [i for i in range(L) if deg[i] < k]
    while stack:
        i = stack.pop()
        if not alive[i]:
            continue
        alive[i] = False
        for j in local_nbrs[i]:
            if alive[j]:
                deg[j] -= 1
                if deg[j] == k - 1:
                    stack.append(int(j))
    return one[alive]


def reduce_candidates(g: Graph, one: np.ndarray, two: np.ndarray,
                      family: str, q: int, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Shrink a root's candidate sets for a target size q (q_low on ranges).

    1-hop candidates are peeled to a core of their induced subgraph: every
    1-hop member of a size-q result shares q-s-2 (dclique) or q-2s-2 (plex)
    common neighbors with the root. The plex threshold is weaker because up
    to s fellow members may sit outside the root's neighborhood entirely.
    2-hop candidates then need q-s-1 (dclique) or q-2s (plex) neighbors in
    the surviving core.
    """
    core_k = (q - s - 2) if family != "plex" else (q - 2 * s - 2)
    if core_k > 0 and len(one):
        one = _induced_core(g, one, core_k)
    if not len(two):
        return one, two
    if family == "clique":
        return one, np.zeros(0, dtype=np.int64)
    need = (q - s - 1) if family == "dclique" else (q - 2 * s)
    if need <= 0:
        return one, two
    kept = []
    for w in two:
        nb = g.neighbors(int(w))
        pos = np.searchsorted(one, nb)
        pos_c = np.clip(pos, 0, max(len(one) - 1, 0))
        hits = int(((pos < len(one)) & (one[pos_c] == nb)).sum()) if len(one) else 0
        if hits >= need:
            kept.append(int(w))
    return one, np.array(kept, dtype=np.int64)


def _greedy_fill(buckets: list[int], budget: int) -> int:
    """Most vertices whose bucket-indexed costs sum within budget (cheapest first)."""
    taken = buckets[0]
    for cost in range(1, len(buckets)):
        if budget < cost:
            break
        t = min(buckets[cost], budget // cost)
        taken += t
        budget -= t * cost
    return taken


def upper_bound_dclique(state: DcliqueState, u: int, C: int) -> int:
    """Largest dclique size reachable by branching on u (u already out of C).

    |R|+1 listed, plus non-neighbors of u limited by the remaining edge
    budget, plus a greedy count of neighbors ordered by deficiency.
    """
    s = state.s
    A = state.A
    r1 = len(state.R) + 1
    slack = s - (state.total_missing + A[u])
    nbr = state.adj[u] & C
    non_nbr = (C & ~state.adj[u]).bit_count()
    buckets = [0] * (s + 1)
    w = nbr
    while w:
        b = w & -w
        buckets[A[b.bit_length() - 1]] += 1
        w ^= b
    omega = _greedy_fill(buckets, slack)
    return r1 + min(slack, non_nbr) + omega - BOUND_FAULT


def upper_bound_plex(state: PlexState, u: int, C: int, shared_budget: int | None = None) -> int:
    """Largest plex size reachable by branching on u (u already out of C).

    Middle term: neighbors of u admitted greedily against the total slack of
    the members sum(s - m̄(v,R)); last term: non-neighbors u can still afford.
    """
    s = state.s
    As = state.As
    if shared_budget is None:
        shared_budget = sum(s - len(As[v]) for v in state.R)
    r1 = len(state.R) + 1
    nbr = state.adj[u] & C
    non_nbr = (C & ~state.adj[u]).bit_count()
    buckets = [0] * (s + 1)
    w = nbr
    while w:
        b = w & -w
        buckets[len(As[b.bit_length() - 1])] += 1
        w ^= b
    mid = _greedy_fill(buckets, shared_budget)
    return r1 + mid + min(s - len(As[u]), non_nbr) - BOUND_FAULT
