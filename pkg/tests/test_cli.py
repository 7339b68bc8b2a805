import json
import subprocess
import sys

import pytest

from flowcont import cli
from flowcont.decide import ff_gcd, parse_edge_map
from flowcont.graphs import digon, k4, parse_digraph


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, "--json", *argv)
    lines = [line for line in out.splitlines() if line]
    assert len(lines) == 1, f"expected one JSON line, got {out!r}"
    return code, json.loads(lines[0]), err


COLORING = "0,1,2,2,1,0"


def test_check_yes(capsys):
    code, out, err = run_cli(
        capsys, "check", "--g", "k4", "--h", "digon:3", "--map", COLORING, "--group", "Z2"
    )
    assert code == 0
    assert out.startswith("yes:") and "gcd 2" in out
    assert err == ""


def test_check_no_with_certificate(capsys):
    code, record, _ = run_json(
        capsys, "check", "--g", "k4", "--h", "digon:3", "--map", COLORING, "--group", "Z3"
    )
    assert code == 1
    assert record["status"] == "no"
    assert record["gcd"] == 2 and record["ff"] is False
    cert = record["certificate"]
    assert cert["modulus"] == 3
    assert cert["value"] % 3 != 0


def test_check_over_integers(capsys):
    code, record, _ = run_json(
        capsys, "check", "--g", "digon:2", "--h", "digon:2", "--map", "identity", "--group", "Z"
    )
    assert code == 0 and record["gcd"] == 0 and record["ff"] is True


def test_check_constant_map_form(capsys):
    code, record, _ = run_json(
        capsys, "check", "--g", "digon:9", "--h", "digon:7", "--map", "constant:0", "--group", "Z9"
    )
    assert code == 0 and record["gcd"] == 9


def test_map_file_form(capsys, tmp_path):
    path = tmp_path / "f.map"
    path.write_text("# coloring\n0\n1\n2\n2\n1\n0\n")
    code, record, _ = run_json(
        capsys, "check", "--g", "k4", "--h", "digon:3", "--map", str(path), "--group", "Z2"
    )
    assert code == 0 and record["gcd"] == 2


def test_graph_file_and_union_arguments(capsys, tmp_path):
    path = tmp_path / "g.dg"
    path.write_text("2 3\n0 1\n0 1\n0 1\n")
    code, record, _ = run_json(
        capsys, "ffset", "--g", str(path), "--h", "digon:5", "--digons"
    )
    assert code == 0 and record["maximal_elements"] == [3]
    # 9 = 7 + 2 and 4 = 2 + 2, so every modulus works here
    code, record, _ = run_json(
        capsys, "ffset", "--g", "digon:9,digon:4", "--h", "digon:7,digon:2", "--digons"
    )
    assert code == 0 and record["kind"] == "all_of_N"
    code, record, _ = run_json(
        capsys, "ffset", "--g", "digon:9,digon:4", "--h", "digon:7,digon:6", "--digons"
    )
    assert code == 0
    assert record["kind"] == "finite"
    assert record["maximal_elements"] == [2]


def test_ffset_of_single_map(capsys):
    code, record, _ = run_json(
        capsys, "ffset", "--g", "digon:6", "--h", "loop", "--map", "constant:0"
    )
    assert code == 0
    assert record["gcd"] == 6 and record["maximal_elements"] == [6]


def test_ffset_scan_and_text_output(capsys):
    code, out, _ = run_cli(capsys, "ffset", "--g", "digon:4", "--h", "digon:3")
    assert code == 0 and out.strip() == "1 2 4"
    code, out, _ = run_cli(capsys, "ffset", "--g", "k4", "--h", "k4")
    assert code == 0 and out.strip() == "all n >= 1"


def test_ffset_reports_budget_state(capsys):
    code, record, _ = run_json(capsys, "ffset", "--g", "digon:4", "--h", "digon:3")
    assert code == 0
    assert record["budget_state"]["maps_covered"] == 81
    code, record, _ = run_json(
        capsys, "ffset", "--g", "digon:4", "--h", "digon:3", "--digons"
    )
    assert record["budget_state"]["maps_covered"] == 0
    code, record, _ = run_json(
        capsys, "ffset", "--g", "digon:6", "--h", "loop", "--map", "constant:0"
    )
    assert record["budget_state"]["maps_covered"] == 1


def test_ffset_budget_exhaustion_is_unknown(capsys):
    code, out, err = run_cli(
        capsys, "ffset", "--g", "digon:4", "--h", "digon:3", "--budget", "10"
    )
    assert code == 2
    assert out.startswith("unknown:")
    assert err == ""


def test_ffset_digons_rejects_other_graphs(capsys):
    code, out, err = run_cli(capsys, "ffset", "--g", "k4", "--h", "digon:3", "--digons")
    assert code == 3
    assert out == ""
    assert "digon" in err


def test_env_budget_override(capsys, monkeypatch):
    monkeypatch.setenv("FF_BUDGET", "10")
    code, _, _ = run_cli(capsys, "ffset", "--g", "digon:4", "--h", "digon:3")
    assert code == 2
    # the --budget flag wins over the environment
    code, out, _ = run_cli(
        capsys, "ffset", "--g", "digon:4", "--h", "digon:3", "--budget", "100"
    )
    assert code == 0 and out.strip() == "1 2 4"
    monkeypatch.setenv("FF_BUDGET", "zero")
    code, _, err = run_cli(capsys, "ffset", "--g", "digon:4", "--h", "digon:3")
    assert code == 3 and "FF_BUDGET" in err


def test_count_and_cross_check(capsys):
    code, record, _ = run_json(
        capsys, "count", "--g", "digon:2", "--h", "digon:2", "--group", "Z2"
    )
    assert code == 0 and record["count"] == 4
    code, record, _ = run_json(
        capsys, "count", "--g", "digon:2", "--h", "digon:3", "--group", "Z6",
        "--cross-check", "Z2xZ3",
    )
    assert code == 0
    assert record["cross_check"]["equal"] is True
    assert record["cross_check"]["count"] == record["count"]


def test_count_cross_check_needs_matching_exponent(capsys):
    code, out, err = run_cli(
        capsys, "count", "--g", "digon:2", "--h", "digon:2", "--group", "Z4",
        "--cross-check", "Z3",
    )
    assert code == 3 and out == "" and "exponent" in err


def test_count_oracle_method(capsys):
    code, record, _ = run_json(
        capsys, "count", "--g", "digon:2", "--h", "digon:2", "--group", "Z3",
        "--method", "oracle",
    )
    assert code == 0 and record["count"] == 2


def test_search_found_output_is_a_map_file(capsys):
    code, out, _ = run_cli(capsys, "search", "--g", "digon:9", "--h", "digon:7", "--n", "2")
    assert code == 0
    witness = parse_edge_map(out, digon(9), digon(7))
    assert ff_gcd(witness) % 2 == 0


def test_search_none_and_unknown(capsys):
    code, out, _ = run_cli(capsys, "search", "--g", "digon:9", "--h", "digon:7", "--n", "6")
    assert code == 1 and out.strip() == "none"
    code, record, _ = run_json(
        capsys, "search", "--g", "k4", "--h", "digon:3", "--n", "3", "--budget", "5"
    )
    assert code == 2 and record["status"] == "unknown" and record["nodes"] == 6


def test_search_modulus_z(capsys):
    code, record, _ = run_json(
        capsys, "search", "--g", "dicycle:3", "--h", "digon:2", "--n", "Z"
    )
    assert code == 0 and record["modulus"] == "Z" and record["gcd"] == 0


def test_search_rejects_negative_modulus(capsys):
    code, out, err = run_cli(capsys, "search", "--g", "digon:2", "--h", "digon:2", "--n", "-4")
    assert code == 3 and out == "" and "modulus" in err


def test_construct_writes_verified_pair(capsys, tmp_path):
    out_dir = tmp_path / "w"
    code, record, _ = run_json(capsys, "construct", "--t", "2,3", "--out", str(out_dir))
    assert code == 0
    assert record["verified"] is True
    assert record["prime"] == 13 and record["companion"] == 17
    assert record["ff_set"] == {"kind": "finite", "maximal_elements": [2, 3]}
    g = parse_digraph((out_dir / "G.dg").read_text())
    h = parse_digraph((out_dir / "H.dg").read_text())
    assert g.num_edges == 13 + 17
    assert h.num_edges == 10 + 11 + 14 + 15
    plan = json.loads((out_dir / "plan.json").read_text())
    assert plan["verified"] is True
    assert plan["target_digons"] == [10, 11, 14, 15]


def test_construct_empty_target_set(capsys, tmp_path):
    out_dir = tmp_path / "empty"
    code, record, _ = run_json(capsys, "construct", "--t", "", "--out", str(out_dir))
    assert code == 0
    assert record["targets"] == [] and record["verified"] is True
    h = parse_digraph((out_dir / "H.dg").read_text())
    assert h.num_edges == 0


def test_selftest_smoke(capsys):
    code, record, _ = run_json(capsys, "selftest", "--seed", "5")
    assert code == 0
    assert record["status"] == "yes"
    assert len(record["suites"]) == 7
    assert all(suite["passed"] for suite in record["suites"])


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["check", "--g", "digon:2"])
    assert info.value.code == 3
    captured = capsys.readouterr()
    assert captured.out == ""
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 3


def test_unknown_builtin_is_input_error(capsys):
    code, out, err = run_cli(
        capsys, "check", "--g", "heptagon", "--h", "digon:2", "--map", "identity",
        "--group", "Z2",
    )
    assert code == 3 and out == ""
    assert "heptagon" in err and "digon" in err


def test_bad_group_is_input_error(capsys):
    code, _, err = run_cli(
        capsys, "check", "--g", "digon:2", "--h", "digon:2", "--map", "identity",
        "--group", "Q8",
    )
    assert code == 3 and "Q8" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "flowcont.cli"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 3


def test_json_errors_go_to_stdout(capsys):
    code, record, err = run_json(
        capsys, "check", "--g", "nope", "--h", "digon:2", "--map", "identity", "--group", "Z2"
    )
    assert code == 3
    assert record["status"] == "error" and "nope" in record["message"]
