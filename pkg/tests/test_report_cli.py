"""Reports, profiles, and the command-line interface."""

import json
import math
import subprocess
import sys

import pytest

from hcscount import MotifSpec, complete_graph, count_by_pivot, from_edges
from hcscount.cli import main
from hcscount.report import exact_ratio_str, hgp_profile
from conftest import REF7_EDGES


@pytest.fixture
def ref7_file(tmp_path):
    p = tmp_path / "ref7.txt"
    p.write_text("# reference graph\n" +
                 "".join(f"{u} {v}\n" for u, v in REF7_EDGES))
    return str(p)


class TestExitCodes:
    def test_ok(self, ref7_file):
        assert main(["count", "--input", ref7_file, "--motif", "plex",
                     "--s", "1", "--q", "4"]) == 0

    def test_invalid_spec_is_2(self, ref7_file, capsys):
        rc = main(["count", "--input", ref7_file, "--motif", "dclique",
                   "--s", "1", "--q", "2"])
        assert rc == 2
        assert "q - 2 >= s" in capsys.readouterr().err

    def test_plex_gate_accepts_boundary(self, ref7_file):
        assert main(["count", "--input", ref7_file, "--motif", "plex",
                     "--s", "1", "--q", "3"]) == 0

    def test_missing_file_is_1(self, tmp_path):
        rc = main(["count", "--input", str(tmp_path / "absent.txt"),
                   "--motif", "plex", "--s", "1", "--q", "3"])
        assert rc == 1

    def test_parse_error_is_1(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("0 1\noops here\n")
        rc = main(["count", "--input", str(p), "--motif", "clique",
                   "--s", "0", "--q", "3"])
        assert rc == 1
        assert "line 2" in capsys.readouterr().err

    def test_verify_pass_is_0(self):
        assert main(["verify", "--seeds", "1", "--q-max", "4"]) == 0

    def test_verify_fault_is_3(self, capsys):
        rc = main(["verify", "--seeds", "1", "--q-max", "5",
                   "--inject-fault", "prune-bound"])
        assert rc == 3
        out = capsys.readouterr().out
        assert "minimized" in out

    def test_overflow_fault_is_4(self):
        rc = main(["verify", "--seeds", "1", "--q-max", "5",
                   "--inject-fault", "overflow"])
        assert rc == 4


class TestCountCommand:
    def test_json_report_counts_are_decimal_strings(self, ref7_file, tmp_path):
        out = tmp_path / "r.json"
        rc = main(["count", "--input", ref7_file, "--motif", "dclique",
                   "--s", "1", "--q-range", "4:5", "--json", str(out)])
        assert rc == 0
        rep = json.loads(out.read_text())
        assert rep["counts"] == {"4": "20", "5": "1"}
        assert rep["load_stats"]["n"] == 7
        assert rep["load_stats"]["arcs"] == 32
        assert rep["spec"] == {"family": "dclique", "s": 1, "q_low": 4, "q_high": 5}

    def test_list_method(self, ref7_file, capsys):
        rc = main(["count", "--input", ref7_file, "--motif", "plex",
                   "--s", "1", "--q", "5", "--method", "list"])
        assert rc == 0
        assert "q=5: 9" in capsys.readouterr().out

    def test_list_method_rejects_range(self, ref7_file):
        rc = main(["count", "--input", ref7_file, "--motif", "plex",
                   "--s", "1", "--q-range", "3:5", "--method", "list"])
        assert rc == 2

    def test_no_prune_matches(self, ref7_file, capsys):
        rc = main(["count", "--input", ref7_file, "--motif", "plex",
                   "--s", "1", "--q", "4", "--no-prune"])
        assert rc == 0
        assert "q=4: 25" in capsys.readouterr().out

    def test_deterministic_across_thread_counts(self, ref7_file, tmp_path):
        outs = []
        for t in ("1", "2"):
            out = tmp_path / f"r{t}.json"
            main(["count", "--input", ref7_file, "--motif", "plex", "--s", "1",
                  "--q-range", "3:6", "--threads", t, "--json", str(out)])
            outs.append(json.loads(out.read_text())["counts"])
        assert outs[0] == outs[1]

    def test_console_entry_point(self, ref7_file):
        r = subprocess.run([sys.executable, "-m", "hcscount.cli", "count",
                            "--input", ref7_file, "--motif", "clique",
                            "--s", "0", "--q", "4"],
                           capture_output=True, text=True)
        assert r.returncode == 0
        assert "q=4: 2" in r.stdout


class TestLocalCommand:
    def test_k4_edge_mode(self, tmp_path):
        p = tmp_path / "k4.txt"
        p.write_text("".join(f"{u} {v}\n" for u in range(4) for v in range(u + 1, 4)))
        out = tmp_path / "edges.tsv"
        rc = main(["local", "--input", str(p), "--motif", "clique", "--s", "0",
                   "--q", "3", "--local", "edge", "--output", str(out)])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 6
        assert all(line.split("\t")[2] == "2" for line in lines)
        # u < v in original ids
        for line in lines:
            u, v, _ = line.split("\t")
            assert int(u) < int(v)

    def test_vertex_mode_column_sum(self, ref7_file, tmp_path):
        out = tmp_path / "verts.tsv"
        rc = main(["local", "--input", ref7_file, "--motif", "plex", "--s", "1",
                   "--q", "4", "--local", "vertex", "--output", str(out)])
        assert rc == 0
        total = sum(int(line.split("\t")[1]) for line in out.read_text().splitlines())
        assert total == 4 * 25

    def test_edge_export_round_trips_through_oracle(self, ref7_file, tmp_path):
        from hcscount import brute_force_count, load_edge_list
        out = tmp_path / "edges.tsv"
        main(["local", "--input", ref7_file, "--motif", "dclique", "--s", "1",
              "--q", "4", "--local", "edge", "--output", str(out)])
        g = load_edge_list(ref7_file)
        oracle = brute_force_count(g, MotifSpec.single("dclique", 1, 4))
        got = {}
        for line in out.read_text().splitlines():
            u, v, c = line.split("\t")
            got[(int(u), int(v))] = int(c)
        want = {(int(g.orig_ids[u]), int(g.orig_ids[v])): c
                for (u, v), c in oracle.per_edge.items() if c}
        assert got == want


class TestProfileCommand:
    def test_complete_graph_all_ratios_one(self, tmp_path):
        p = tmp_path / "k7.txt"
        p.write_text("".join(f"{u} {v}\n" for u in range(7) for v in range(u + 1, 7)))
        out = tmp_path / "prof.json"
        rc = main(["profile", "--input", str(p), "--motif", "plex", "--s", "1",
                   "--q-range", "3:6", "--json", str(out)])
        assert rc == 0
        prof = json.loads(out.read_text())
        assert all(r == "1" for r in prof["ratios"].values())

    def test_zero_hcs_count_gives_null(self, ref7_file, tmp_path):
        out = tmp_path / "prof.json"
        rc = main(["profile", "--input", ref7_file, "--motif", "plex", "--s", "1",
                   "--q-range", "5:7", "--json", str(out)])
        assert rc == 0
        prof = json.loads(out.read_text())
        assert prof["ratios"]["7"] is None
        assert prof["hcs_counts"]["7"] == "0"

    def test_ratios_in_unit_interval(self):
        g = from_edges(REF7_EDGES)
        prof = hgp_profile(g, "dclique", 1, 3, 6)
        for q in range(3, 7):
            r = prof.ratio(q)
            if r is not None:
                assert 0.0 <= float(r) <= 1.0
            assert prof.clique_counts.get(q, 0) <= prof.hcs_counts.get(q, 0)

    def test_exact_ratio_rendering(self):
        assert exact_ratio_str(1, 3).startswith("0.3333333333")
        assert exact_ratio_str(2, 2) == "1"


class TestDecimalSerialization:
    def test_huge_counts_round_trip(self, tmp_path):
        # K_80, all clique sizes: counts are C(80, q), far beyond 2^64 for mid q
        p = tmp_path / "k80.txt"
        p.write_text("".join(f"{u} {v}\n" for u in range(80) for v in range(u + 1, 80)))
        out = tmp_path / "r.json"
        rc = main(["count", "--input", str(p), "--motif", "clique", "--s", "0",
                   "--q-range", "1:80", "--json", str(out), "--threads", "1"])
        assert rc == 0
        rep = json.loads(out.read_text())
        for q in range(1, 81):
            assert int(rep["counts"][str(q)]) == math.comb(80, q)
        assert int(rep["counts"]["40"]) > 2**64
