import json

import pytest

from src.cli.consts import EXIT_DISAGREEMENT, EXIT_INPUT_ERROR, EXIT_OK
from src.cli.main import main
from src.core.polarity import closed_form, parse_family_spec
from src.core.resources.named_graphs import cycle_graph, path_graph, star_graph

ROUND_TRIP_SPECS = [
    ("chain1", 3, 2, None),
    ("chain1", 4, 5, None),
    ("chain1", 6, 3, None),
    ("chain1", 9, 4, None),
    ("chain1", 10, 8, None),
    ("chain2", 4, 2, None),
    ("chain2", 5, 6, 2),
    ("chain2", 6, 3, 3),
    ("chain2", 8, 4, 5),
    ("chain2", 10, 2, None),
    ("ortho", 3, 7, None),
    ("ortho", 4, 3, None),
    ("ortho", 5, 2, None),
    ("ortho", 7, 5, None),
    ("ortho", 10, 3, None),
    ("meta", 4, 3, None),
    ("meta", 5, 4, 3),
    ("meta", 6, 2, 2),
    ("meta", 7, 6, None),
    ("meta", 9, 3, 6),
]


def run_cli(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def line_with(text: str, key: str) -> str:
    return next(line for line in text.splitlines() if key in line)


def test_compute_both_on_hexagon(capsys, graph_file):
    code, out, _ = run_cli(
        capsys, "compute", graph_file(cycle_graph(6)), "--method", "both", "--json"
    )
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["wp_formula"] == 3
    assert report["wp_oracle"] == 3
    assert report["method_agreement"] is True
    assert report["is_cactus"] is True
    assert report["census"]["c6"] == 1


def test_compute_formula_on_k4_fails(capsys, graph_file, k4):
    code, out, err = run_cli(capsys, "compute", graph_file(k4), "--method", "formula")
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "not a cactus" in err


def test_compute_both_on_non_cactus_reports_oracle(capsys, graph_file, diamond):
    code, out, _ = run_cli(capsys, "compute", graph_file(diamond), "--json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["is_cactus"] is False
    assert report["wp_oracle"] == 0
    assert "wp_formula" not in report
    assert "method_agreement" not in report


def test_compute_bfs_with_wiener(capsys, graph_file):
    code, out, _ = run_cli(
        capsys, "compute", graph_file(path_graph(4)), "--method", "bfs", "--wiener", "--json"
    )
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["wp_oracle"] == 1
    assert report["wiener_index"] == 10
    assert "wp_formula" not in report
    assert "census" not in report


def test_compute_boiling_point(capsys, graph_file):
    code, out, _ = run_cli(
        capsys, "compute", graph_file(path_graph(4)), "--boiling-point", 1, 1, 0, "--json"
    )
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["boiling_point"] == pytest.approx(11.0)
    assert "wiener_index" not in report


def test_compute_human_output(capsys, graph_file):
    code, out, _ = run_cli(capsys, "compute", graph_file(cycle_graph(7)))
    assert code == EXIT_OK
    assert "7" in line_with(out, "wp_oracle")
    assert "True" in line_with(out, "method_agreement")


def test_compute_saves_report(capsys, graph_file, tmp_path):
    report_dir = tmp_path / "reports"
    code, _, err = run_cli(
        capsys, "compute", graph_file(cycle_graph(6)), "--report-dir", report_dir
    )
    saved = list(report_dir.glob("compute_report_*.json"))
    assert code == EXIT_OK
    assert len(saved) == 1
    assert "Report saved to" in err
    data = json.loads(saved[0].read_text(encoding="utf-8"))
    assert data["command"] == "compute"
    assert data["report"]["wp_oracle"] == 3


@pytest.mark.parametrize(
    "content",
    ["3\n0 0\n", "2\n0 1\n0 1\n", "3\n0 7\n", "not a number\n"],
    ids=["self-loop", "duplicate", "out-of-range", "header"],
)
def test_compute_bad_file(capsys, tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content, encoding="utf-8")
    code, _, err = run_cli(capsys, "compute", path)
    assert code == EXIT_INPUT_ERROR
    assert "error" in err


def test_compute_non_utf8_file(capsys, tmp_path):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"\xff\xfe\n0 1\n")
    code, out, err = run_cli(capsys, "compute", path)
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "UTF-8" in err
    assert "Traceback" not in err


def test_unknown_log_level_falls_back_to_warning(capsys, graph_file, monkeypatch):
    monkeypatch.setenv("WPOLARITY_LOG_LEVEL", "loud")
    code, out, err = run_cli(capsys, "compute", graph_file(path_graph(3)))
    assert code == EXIT_OK
    assert "0" in line_with(out, "wp_oracle")
    assert "loud" in err


def test_compute_missing_file(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "compute", tmp_path / "missing.txt")
    assert code == EXIT_INPUT_ERROR


def test_compute_disconnected_file(capsys, tmp_path):
    path = tmp_path / "split.txt"
    path.write_text("4\n0 1\n2 3\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "compute", path)
    assert code == EXIT_INPUT_ERROR
    assert "not connected" in err


def test_usage_errors_exit_with_one(capsys, graph_file):
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", str(graph_file(path_graph(3))), "--method", "guess"])
    assert exc_info.value.code == EXIT_INPUT_ERROR
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == EXIT_INPUT_ERROR


def test_generate_hexagonal_chain(capsys, tmp_path):
    out_path = tmp_path / "chain.txt"
    code, out, _ = run_cli(
        capsys, "generate", "--family", "chain1", "--k", 6, "--h", 2, "-o", out_path
    )
    assert code == EXIT_OK
    assert out_path.read_text(encoding="utf-8").splitlines()[0] == "11"
    assert len(out_path.read_text(encoding="utf-8").splitlines()) == 13
    assert "14" in line_with(out, "closed_form")
    assert "11" in line_with(out, " n ")


def test_generate_meta_chain(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "generate", "--family", "meta", "--k", 4, "--h", 3, "-o", tmp_path / "m.txt"
    )
    assert code == EXIT_OK
    assert "12" in line_with(out, "closed_form")


def test_generate_single_gon_has_no_closed_form(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "generate", "--family", "ortho", "--k", 5, "--h", 1, "-o", tmp_path / "c5.txt"
    )
    assert code == EXIT_OK
    assert "closed_form" not in out


def test_generate_invalid_spec(capsys, tmp_path):
    out_path = tmp_path / "bad.txt"
    code, _, err = run_cli(
        capsys, "generate", "--family", "chain2", "--k", 3, "--h", 2, "-o", out_path
    )
    assert code == EXIT_INPUT_ERROR
    assert "k >= 4" in err
    assert not out_path.exists()


def test_generate_random(capsys, tmp_path):
    out_path = tmp_path / "random.txt"
    args = ["generate-random", "--blocks", 25, "--p-cycle", 0.7, "--max-cycle", 8, "--seed", 99]
    code, _, _ = run_cli(capsys, *args, "-o", out_path)
    first = out_path.read_text(encoding="utf-8")
    code_again, _, _ = run_cli(capsys, *args, "-o", out_path)
    assert code == code_again == EXIT_OK
    assert out_path.read_text(encoding="utf-8") == first

    code, out, _ = run_cli(capsys, "compute", out_path, "--json")
    assert code == EXIT_OK
    assert json.loads(out)["method_agreement"] is True


def test_generate_random_invalid(capsys, tmp_path):
    code, _, _ = run_cli(
        capsys, "generate-random", "--blocks", 0, "-o", tmp_path / "never.txt"
    )
    assert code == EXIT_INPUT_ERROR


def test_census_of_bowtie(capsys, graph_file, bowtie):
    code, out, _ = run_cli(capsys, "census", graph_file(bowtie), "--json")
    result = json.loads(out)
    assert code == EXIT_OK
    assert (result["c3"], result["b1"], result["degree_term"]) == (2, 4, 14)


def test_census_of_pentagon_and_tree(capsys, graph_file):
    _, out, _ = run_cli(capsys, "census", graph_file(cycle_graph(5)), "--json")
    result = json.loads(out)
    assert (result["c5"], result["b1"], result["b2"], result["degree_term"]) == (1, 0, 0, 5)

    _, out, _ = run_cli(capsys, "census", graph_file(star_graph(4)), "--json")
    result = json.loads(out)
    assert [result[key] for key in ("c3", "c4", "c5", "c6")] == [0, 0, 0, 0]


def test_census_of_non_cactus(capsys, graph_file, k4):
    code, _, _ = run_cli(capsys, "census", graph_file(k4))
    assert code == EXIT_INPUT_ERROR


def test_verify_small_run(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--trials", 30, "--max-blocks", 15, "--max-cycle", 6, "--seed", 3
    )
    assert code == EXIT_OK
    assert "30/30 agree" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--trials", 10, "--max-blocks", 10, "--max-cycle", 5, "--json"
    )
    summary = json.loads(out)
    assert code == EXIT_OK
    assert summary["agreed"] == summary["trials"] == 10
    assert summary["seed"] == 42
    assert "first_failure" not in summary


def test_verify_with_workers(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--trials", 8, "--max-blocks", 10, "--workers", 2, "--json"
    )
    assert code == EXIT_OK
    assert json.loads(out)["agreed"] == 8


@pytest.mark.parametrize(
    "args",
    [["--trials", 0], ["--max-cycle", 2], ["--max-blocks", 0], ["--workers", 0]],
    ids=["no-trials", "short-cycles", "no-blocks", "no-workers"],
)
def test_verify_parameter_errors(capsys, args):
    code, out, _ = run_cli(capsys, "verify", *args)
    assert code == EXIT_INPUT_ERROR
    assert out == ""


@pytest.mark.parametrize("family, k, h, offset", ROUND_TRIP_SPECS)
def test_generate_compute_round_trip(capsys, tmp_path, family, k, h, offset):
    out_path = tmp_path / "g.txt"
    args = ["generate", "--family", family, "--k", k, "--h", h, "-o", out_path]
    if offset is not None:
        args += ["--offset", offset]
    assert run_cli(capsys, *args)[0] == EXIT_OK

    code, out, _ = run_cli(capsys, "compute", out_path, "--method", "both", "--json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["method_agreement"] is True
    assert report["wp_formula"] == closed_form(parse_family_spec(family, k, h, offset))
    assert "wiener_index" not in report
    assert "boiling_point" not in report


def test_corrupted_formula_exits_with_two(capsys, graph_file, monkeypatch):
    monkeypatch.setattr("src.cli.commands.wp_cactus", lambda g, bd=None: 0)
    code, out, _ = run_cli(capsys, "compute", graph_file(cycle_graph(9)), "--json")
    report = json.loads(out)
    assert code == EXIT_DISAGREEMENT
    assert report["method_agreement"] is False


def test_corrupted_formula_fails_verification(capsys, monkeypatch):
    monkeypatch.setattr("src.cli.commands.wp_cactus", lambda g, bd=None: -1)
    code, out, _ = run_cli(capsys, "verify", "--trials", 5, "--max-blocks", 5, "--json")
    summary = json.loads(out)
    assert code == EXIT_DISAGREEMENT
    assert summary["agreed"] == 0
    assert summary["first_failure"]["trial"] == 0
    assert summary["first_failure"]["edge_list"]
