import json
from importlib import resources

import jsonschema
import pytest

from quiverpic.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def load_schema(name):
    with resources.files("quiverpic.schemas").joinpath(f"{name}.json").open() as fh:
        return json.load(fh)


def check_json(capsys, name, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema(name))
    return payload


JSON_INVOCATIONS = {
    "roots": ["roots", "--n", "4", "--output", "json"],
    "cells": ["cells", "--n", "4", "--output", "json"],
    "homology": ["homology", "--n", "4", "--output", "json"],
    "weights": ["weights", "--n", "4", "--output", "json"],
    "decompose": ["decompose", "--n", "4", "--weight", "1,2,1,1",
                  "--output", "json"],
    "presentation": ["presentation", "--n", "3", "--output", "json"],
    "ring": ["ring", "--n", "4", "--output", "json"],
    "complex": ["complex", "--n", "3", "--output", "json"],
    "picture": ["picture", "--n", "3", "--output", "json"],
    "verify": ["verify", "--n", "3", "--output", "json"],
    "sweep": ["sweep", "--n", "3", "--command", "homology",
              "--output", "json"],
}


@pytest.mark.parametrize("name", sorted(JSON_INVOCATIONS))
def test_json_output_validates_against_schema(capsys, name):
    check_json(capsys, name, *JSON_INVOCATIONS[name])


@pytest.mark.parametrize("name", sorted(JSON_INVOCATIONS))
def test_json_output_is_deterministic(capsys, name):
    argv = JSON_INVOCATIONS[name]
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    assert first == second


def test_homology_values(capsys):
    payload = check_json(capsys, "homology",
                         "homology", "--n", "5", "--eps", "+-+-")
    assert payload["betti"] == [1, 5, 9, 5, 0, 0]
    assert payload["cells"] == [1, 15, 50, 50, 15, 1]
    assert all(t == [] for t in payload["torsion"])


def test_homology_fast_method(capsys):
    payload = check_json(capsys, "homology",
                         "homology", "--n", "9", "--method", "fast")
    assert payload["betti"][:6] == [1, 9, 35, 75, 90, 42]
    assert "torsion" not in payload


def test_roots_table(capsys):
    code, out = run_cli(capsys, "roots", "--n", "2", "--output", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "root\tcoords\tprojective"
    assert lines[1].startswith("b_0_1\t1,0")
    assert len(lines) == 4


def test_cells_counts(capsys):
    payload = check_json(capsys, "cells",
                         "cells", "--n", "4", "--output", "json")
    assert payload["total"] == 42
    assert payload["counts"] == [1, 10, 20, 10, 1]
    assert payload["euler"] == 2


def test_decompose_worked_example(capsys):
    code, out = run_cli(
        capsys, "decompose", "--eps", "+--+++",
        "--weight", "1,2,3,3,2,1,2", "--output", "table",
    )
    assert code == 0
    assert out.strip() == "b_0_5 + b_1_4 + b_2_7 + b_6_7"


def test_decompose_with_cuts(capsys):
    payload = check_json(
        capsys, "decompose",
        "decompose", "--eps", "+--+++", "--weight", "1,2,3,3,2,1,1",
        "--cuts", "3,6", "--output", "json",
    )
    ends = [s["root"] for s in payload["summands"]]
    assert ends == [[0, 5], [1, 4], [2, 3], [3, 6], [6, 7]]
    assert all(s["multiplicity"] == 1 for s in payload["summands"])


def test_ring_table_degree_two(capsys):
    code, out = run_cli(capsys, "ring", "--n", "3", "--degree", "2",
                        "--output", "table")
    assert code == 0
    row = out.splitlines()[1].split("\t")
    assert row[0] == "2" and row[1] == "2"
    assert "d(0,3;121)" in row[2]


def test_presentation_gap_round_trip(capsys):
    from quiverpic.presentation import g0_presentation, parse_presentation
    from quiverpic.quiver import SignVector

    code, out = run_cli(capsys, "presentation", "--eps", "+-")
    assert code == 0
    assert parse_presentation(out) == g0_presentation(SignVector.parse("+-"))


def test_picture_svg_deterministic(capsys):
    _, first = run_cli(capsys, "picture", "--n", "3")
    _, second = run_cli(capsys, "picture", "--n", "3")
    assert first == second
    assert first.count('class="vertex"') == 9


def test_picture_rank_bounds(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "picture", "--n", "4")
    assert exc.value.code == 2


def test_verify_exit_code(capsys):
    code, out = run_cli(capsys, "verify", "--n", "3", "--output", "table")
    assert code == 0
    assert out.splitlines()[-1].startswith("overall\tok")


def test_sweep_reports_invariance(capsys):
    code, out = run_cli(capsys, "sweep", "--n", "4", "--command", "cells",
                        "--output", "table")
    assert code == 0
    assert "# invariant across 8 orientations" in out


def test_sweep_verify_matrix(capsys):
    payload = check_json(capsys, "sweep",
                         "sweep", "--n", "3", "--command", "verify",
                         "--output", "json")
    assert payload["invariant"] is True
    assert len(payload["orientations"]) == 4
    assert all(o["passed"] for o in payload["orientations"])


def test_sweep_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("QUIVERPIC_THREADS", "1")
    code, out = run_cli(capsys, "sweep", "--n", "3", "--command", "homology",
                        "--output", "table")
    assert code == 0
    assert "# invariant across 4 orientations" in out


def test_homology_plot_written(tmp_path, capsys):
    target = tmp_path / "betti.svg"
    code, _ = run_cli(capsys, "homology", "--n", "4",
                      "--plot", str(target))
    assert code == 0
    first = target.read_bytes()
    assert b"<svg" in first
    code, _ = run_cli(capsys, "homology", "--n", "4",
                      "--plot", str(target))
    assert target.read_bytes() == first


def test_eps_argument_validation(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "homology", "--eps", "+x")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc2:
        run_cli(capsys, "homology", "--n", "3", "--eps", "+")
    assert exc2.value.code == 2
    with pytest.raises(SystemExit) as exc3:
        run_cli(capsys, "roots", "--n", "13")
    assert exc3.value.code == 2


def test_eps_aliases_agree(capsys):
    _, from_signs = run_cli(capsys, "homology", "--eps", "+-")
    _, from_letters = run_cli(capsys, "homology", "--eps", "LR")
    assert from_signs == from_letters
