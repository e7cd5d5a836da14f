"""Shared fixtures: the seven-vertex reference graph and dataset plumbing."""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from hcscount import Graph, from_edges, load_edge_list

# Hand-transcribed 7-vertex reference graph. It is the unique labeled graph
# (up to the constraints below) whose complement has maximum degree 2 and
# whose counts match the independently verified values in REF7_COUNTS;
# {2,3,4,5,6} is its only (5,1)-dclique and {0,2,4,5,6} is a (5,1)-plex.
REF7_NONEDGES = {(0, 3), (0, 4), (1, 2), (1, 4), (5, 6)}
REF7_EDGES = [(u, v) for u in range(7) for v in range(u + 1, 7)
              if (u, v) not in REF7_NONEDGES]

# (family, s, q) -> exact count, all verified by exhaustive enumeration
REF7_COUNTS = {
    ("clique", 0, 4): 2,
    ("dclique", 1, 4): 20,
    ("plex", 1, 4): 25,
    ("dclique", 1, 5): 1,
    ("plex", 1, 5): 9,
}


def reference_graph() -> Graph:
    return from_edges(REF7_EDGES)


@pytest.fixture
def ref7() -> Graph:
    return reference_graph()


DATA_DIR = Path(os.environ.get("HCS_DATA_DIR",
                               Path(__file__).resolve().parent / "data"))

DATASETS = {
    "wiki-vote": ("wiki-Vote.txt", 7115, 100762),
    "epinions": ("soc-Epinions1.txt", 75879, 405740),
    "dblp": ("com-dblp.ungraph.txt", 317080, 1049866),
}


def load_dataset(key: str) -> Graph:
    """Load a SNAP corpus file or skip the test with a clear diagnostic."""
    fname, exp_n, exp_m = DATASETS[key]
    path = DATA_DIR / fname
    if not path.exists():
        pytest.skip(
            f"dataset {fname} not present under {DATA_DIR} "
            f"(set HCS_DATA_DIR or run scripts/fetch_snap.py; "
            f"this sandbox has no access to the SNAP mirrors)")
    g = load_edge_list(path)
    return g
