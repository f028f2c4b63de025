import json

from app.cli import EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE, main


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_verify_algebra_exits_cleanly(capsys):
    assert main(["verify", "algebra", "--samples", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "algebra.composition_random" in out
    assert "0 unexpected discrepancies" in out


def test_verify_json_is_deterministic(capsys):
    assert main(["verify", "forms", "--json", "--seed", "4", "--samples", "3"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["verify", "forms", "--json", "--seed", "4", "--samples", "3"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second

    body = json.loads(first)
    assert body["report"]["seed"] == 4
    assert body["summary"]["unexpected_discrepancies"] == 0
    assert body["summary"]["known_discrepancies"] >= 1


def test_unknown_suite_is_a_usage_error(capsys):
    assert main(["verify", "everything"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    assert main(["verify", "algebra", "--samples", "0"]) == EXIT_USAGE


def test_fixed_points_json(capsys):
    assert main(["fixed-points", "--json"]) == EXIT_OK
    points = _json_out(capsys)
    assert len(points) == 15
    assert {"index": "357", "character": [2, 2]} in points


def test_smoothness_reports_rank_four_everywhere(capsys):
    assert main(["smoothness", "--json"]) == EXIT_OK
    rows = _json_out(capsys)
    assert {row["jacobian_rank"] for row in rows} == {4}
    assert {row["tangent_dimension"] for row in rows} == {8}


def test_poincare_for_the_default_subgroup(capsys):
    assert main(["poincare", "--json"]) == EXIT_OK
    body = _json_out(capsys)
    assert body["ops"] == [10, 1]
    assert body["coefficients"] == [1, 1, 2, 2, 3, 2, 2, 1, 1]
    assert body["euler"] == 15


def test_bb_cells(capsys):
    assert main(["bb", "--ops", "7,3", "--json"]) == EXIT_OK
    body = _json_out(capsys)
    assert len(body["cells"]) == 15
    assert all(cell["plus_dim"] + cell["minus_dim"] == 8 for cell in body["cells"])


def test_irregular_subgroup_names_the_vanishing_character(capsys):
    assert main(["bb", "--ops", "1,1"]) == EXIT_USAGE
    assert "(1, -1)" in capsys.readouterr().err


def test_malformed_ops_is_a_usage_error(capsys):
    assert main(["poincare", "--ops", "ten"]) == EXIT_USAGE


def test_orbits(capsys):
    assert main(["orbits", "--json"]) == EXIT_OK
    body = _json_out(capsys)
    assert body["orbit_count"] == 3
    assert body["difference"] == [0, 1, 2, 2, 2, 2, 2, 1, 0]


def test_report_is_written_to_the_requested_path(tmp_path, capsys):
    out = tmp_path / "reports" / "xmin.json"
    code = main(["report", "--out", str(out), "--samples", "2"])
    assert code in (EXIT_OK, EXIT_DISCREPANCY)
    body = json.loads(out.read_text(encoding="utf-8"))
    assert body["report"]["suite"] == "all"
    assert code == (EXIT_OK if body["summary"]["unexpected_discrepancies"] == 0 else EXIT_DISCREPANCY)
    suites = {check["name"].split(".")[0] for check in body["report"]["checks"]}
    assert suites == {"algebra", "forms", "grassmann", "xmin", "torus", "actions"}
