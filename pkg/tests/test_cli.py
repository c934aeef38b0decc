"""Tests for the command-line client (in-process service)."""

import json

from poncelet.cli import main

CONIC_SYSTEM = json.dumps(
    {
        "n": 2,
        "k": 1,
        "sections": [
            {"degree": 3, "coeffs": ["0", "1", "-1", "0"]},
            {"degree": 3, "coeffs": ["1", "0", "0", "1"]},
        ],
    }
)
QUARTIC_SYSTEM = json.dumps(
    {
        "n": 2,
        "k": 3,
        "sections": [
            {"degree": 5, "coeffs": ["2", "-5", "0", "5", "-2", "0"]},
            {"degree": 5, "coeffs": ["3", "-7", "-1", "7", "-2", "0"]},
        ],
    }
)
GENERIC_A = json.dumps(
    [
        ["1", "0", "0", "0", "0", "1"],
        ["0", "1", "0", "1", "0", "0"],
        ["0", "0", "1", "0", "1", "0"],
    ]
)


def test_canonical_matrix(capsys):
    assert main(["canonical-matrix", "--n", "3", "--k", "1"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["rows"] == 5
    assert body["cols"] == 2


def test_canonical_matrix_invalid(capsys):
    assert main(["canonical-matrix", "--n", "0", "--k", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_hypersurface(capsys):
    assert main(["hypersurface", "--sections", CONIC_SYSTEM]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["degree"] == 2
    assert body["equation"][0] == {"exponents": [2, 0, 0], "coeff": "-1"}


def test_hypersurface_degenerate(capsys):
    system = json.loads(CONIC_SYSTEM)
    system["sections"][1] = system["sections"][0]
    assert main(["hypersurface", "--sections", json.dumps(system)]) == 3
    assert "error:" in capsys.readouterr().err


def test_hypersurface_from_file(tmp_path, capsys):
    path = tmp_path / "system.json"
    path.write_text(CONIC_SYSTEM)
    assert main(["hypersurface", "--sections", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["degree"] == 2


def test_subvariety(capsys):
    system = json.dumps(
        {"n": 2, "k": 1, "sections": [{"degree": 3, "coeffs": ["0", "1", "-1", "0"]}]}
    )
    assert main(["subvariety", "--sections", system]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["count"] == 4


def test_verify_darboux_pass(capsys):
    code = main(
        ["verify-darboux", "--sections", CONIC_SYSTEM, "--member-roots", "0:1,1:1,1:0"]
    )
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert body["pass"] is True
    assert body["values"] == ["0", "0", "0"]


def test_verify_darboux_fail(capsys):
    code = main(
        ["verify-darboux", "--sections", CONIC_SYSTEM, "--member-roots", "0:1,1:2,1:3"]
    )
    assert code == 1
    body = json.loads(capsys.readouterr().out)
    assert body["pass"] is False


def test_verify_darboux_repeated_roots(capsys):
    code = main(
        ["verify-darboux", "--sections", CONIC_SYSTEM, "--member-roots", "0:1,0:2,1:0"]
    )
    assert code == 3
    capsys.readouterr()


def test_verify_darboux_bad_root_syntax(capsys):
    code = main(
        ["verify-darboux", "--sections", CONIC_SYSTEM, "--member-roots", "0-1,1-1"]
    )
    assert code == 2
    assert "expected a:b" in capsys.readouterr().err


def test_quadric_demo(capsys):
    assert main(["quadric-demo"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert [e["rank"] for e in body["entries"]] == [4, 3, 2, 1]


def test_quadric_rank(capsys):
    quadric = json.dumps(
        [
            {"exponents": [0, 1, 1, 0], "coeff": "1"},
            {"exponents": [1, 0, 0, 1], "coeff": "-1"},
        ]
    )
    assert main(["quadric-rank", "--quadric", quadric]) == 0
    assert json.loads(capsys.readouterr().out)["rank"] == 4


def test_cubic_from_a_dict_wrapper(capsys):
    wrapped = json.dumps(
        {
            "A": [
                ["1", "0", "0", "0", "0", "0"],
                ["0", "0", "1", "0", "0", "0"],
                ["0", "0", "0", "0", "1", "0"],
            ]
        }
    )
    assert main(["cubic-from-A", "--A", wrapped]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["degenerate"] is True
    assert body["cubic"][0] == {"exponents": [1, 0, 0, 2], "coeff": "-1"}


def test_six_point(capsys):
    assert main(["six-point", "--A", GENERIC_A]) == 0
    assert json.loads(capsys.readouterr().out)["minor_rank"] == 4


def test_hilbert_subset(capsys):
    assert main(["hilbert", "--A", GENERIC_A, "--degrees", "3,4"]) == 0
    assert json.loads(capsys.readouterr().out)["values"] == {"3": 4, "4": 9}


def test_hilbert_bad_degrees(capsys):
    assert main(["hilbert", "--A", GENERIC_A, "--degrees", "x"]) == 2
    assert "bad degree list" in capsys.readouterr().err


def test_dim_probe(capsys):
    code = main(["dim-probe", "--case", "quadric", "--samples", "1", "--seed", "5"])
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert body["rank"] == 10
    assert body["dominant"] is True


def test_dim_probe_bad_k(capsys):
    code = main(["dim-probe", "--case", "plane-curve", "--k", "0", "--samples", "1"])
    assert code == 2
    capsys.readouterr()


def test_plot_conic(capsys):
    code = main(
        ["plot", "--sections", CONIC_SYSTEM, "--member-roots", "0:1,1:1,1:0", "--chart", "1"]
    )
    assert code == 0
    svg = capsys.readouterr().out
    assert svg.startswith("<svg")
    assert svg.count("<line") == 3
    assert svg.count("<circle") == 3


def test_plot_quartic_scene(capsys):
    code = main(
        [
            "plot",
            "--sections",
            QUARTIC_SYSTEM,
            "--member-roots",
            "0:1,1:1,-1:1,2:1,1:2",
            "--chart",
            "0",
        ]
    )
    assert code == 0
    svg = capsys.readouterr().out
    assert svg.count("<line") == 5
    assert svg.count("<circle") == 10


def test_plot_out_deterministic(tmp_path):
    first = tmp_path / "one.svg"
    second = tmp_path / "two.svg"
    for path in (first, second):
        code = main(
            ["plot", "--sections", CONIC_SYSTEM, "--member-roots", "0:1,1:1,1:0",
             "--out", str(path)]
        )
        assert code == 0
    assert first.read_bytes() == second.read_bytes()
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".poncelet-")]


def test_json_out_deterministic(tmp_path):
    first = tmp_path / "one.json"
    second = tmp_path / "two.json"
    for path in (first, second):
        assert main(["hypersurface", "--sections", CONIC_SYSTEM, "--out", str(path)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert json.loads(first.read_text())["degree"] == 2


def test_unreachable_server(capsys):
    code = main(
        ["--server", "http://127.0.0.1:1", "canonical-matrix", "--n", "3", "--k", "1"]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["hypersurface", "--sections", "/nonexistent/system.json"]) == 2
    capsys.readouterr()


def test_malformed_inline_json(capsys):
    assert main(["hypersurface", "--sections", "{not json"]) == 2
    capsys.readouterr()
