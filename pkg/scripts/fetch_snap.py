#!/usr/bin/env python3
"""Download the SNAP corpora used by the large-graph acceptance tests.

Usage: python scripts/fetch_snap.py [DEST_DIR]

Writes decompressed edge lists into DEST_DIR (default: tests/data). Point
HCS_DATA_DIR at the same directory when running pytest. Needs outbound
network access to snap.stanford.edu.
"""

import gzip
import shutil
import sys
import urllib.request
from pathlib import Path

FILES = {
    "wiki-Vote.txt": "https://snap.stanford.edu/data/wiki-Vote.txt.gz",
    "soc-Epinions1.txt": "https://snap.stanford.edu/data/soc-Epinions1.txt.gz",
    "com-dblp.ungraph.txt": "https://snap.stanford.edu/data/bigdata/communities/com-dblp.ungraph.txt.gz",
}


def main() -> int:
    dest = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "tests" / "data"
    dest.mkdir(parents=True, exist_ok=True)
    for name, url in FILES.items():
        out = dest / name
        if out.exists():
            print(f"{name}: already present")
            continue
        gz = out.with_suffix(out.suffix + ".gz")
        print(f"fetching {url}")
        urllib.request.urlretrieve(url, gz)
        with gzip.open(gz, "rb") as src, open(out, "wb") as dst:
            shutil.copyfileobj(src, dst)
        gz.unlink()
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
