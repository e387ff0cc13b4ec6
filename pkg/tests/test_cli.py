"""End-to-end command line behaviour: verbs, exit codes, JSON output."""

import json

import pytest

from liedouble.cli import main
from liedouble.modelfile import parse_model

MODEL = """
algebroid A { base; rank 2; bracket [1,2] = e2; }
algebroid B { base; rank 2; }
rep rho A on B { e1 = [[1,0],[0,0]]; e2 = [[0,1],[0,0]]; }
rep sigma B on A { }
matchedpair MP { A = A; B = B; rho = rho; sigma = sigma; }
algebroid bad { base; rank 3; bracket [1,2] = e3; bracket [1,3] = e1; }
algebroid g { base; rank 2; bracket [1,2] = e2; }
algebroid gs { base; rank 2; }
manin MD { g; gs; }
poisson P { vars x y; pi [x,y] = 1; }
dvb D { dims 2 2 2; sign plus; }
"""


@pytest.fixture
def model_file(tmp_path):
    p = tmp_path / "m.ld"
    p.write_text(MODEL)
    return str(p)


def test_check_matched_pair_passes(model_file, capsys):
    assert main(["check", "matched-pair", "MP", "-f", model_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS")


def test_check_algebroid_failure_reports_witness(model_file, capsys):
    code = main(["check", "algebroid", "bad", "-f", model_file, "--json"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is False
    assert any(w["identity"].startswith("J(1,2,3)") for w in payload["witnesses"])


def test_json_output_is_deterministic(model_file, capsys):
    main(["check", "manin", "MD", "-f", model_file, "--json"])
    first = capsys.readouterr().out
    main(["check", "manin", "MD", "-f", model_file, "--json"])
    assert capsys.readouterr().out == first


def test_build_double_output_parses_and_checks(model_file, tmp_path, capsys):
    out = str(tmp_path / "out.ld")
    assert main(["build", "double", "MP", "-f", model_file, "-o", out]) == 0
    built = parse_model(open(out).read())
    name = "MP_double"
    assert built.kind_of(name) == "algebroid"
    assert built.objects[name].rank == 4


def test_build_semidirect_then_check_bialgebroid(model_file, tmp_path, capsys):
    out = str(tmp_path / "bi.ld")
    assert main(["build", "semidirect", "MP", "-f", model_file, "-o", out]) == 0
    assert main(["check", "bialgebroid", "MP_bi", "-f", out]) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1].startswith("PASS")


def test_build_vacant_to_stdout(model_file, capsys):
    assert main(["build", "vacant", "MP", "-f", model_file, "-o", "-"]) == 0
    out = capsys.readouterr().out
    built = parse_model(out)
    assert built.kind_of("MP_vertical") == "algebroid"
    assert built.kind_of("MP_horizontal") == "algebroid"


def test_dvb_verbs(model_file, capsys):
    for what in ("pair", "zmaps", "vue"):
        assert main(["dvb", what, "D", "-f", model_file]) == 0
    assert "PASS" in capsys.readouterr().out


def test_unknown_target_and_wrong_kind(model_file, capsys):
    assert main(["check", "poisson", "nosuch", "-f", model_file]) == 2
    assert main(["check", "poisson", "MD", "-f", model_file]) == 2


def test_parse_error_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.ld"
    p.write_text("poisson P { vars x; pi [x,x] = 1/0; }")
    assert main(["check", "poisson", "P", "-f", str(p)]) == 2
    err = capsys.readouterr().err
    assert "zero denominator" in err


def test_missing_file_exits_2(capsys):
    assert main(["check", "poisson", "P", "-f", "/nonexistent.ld"]) == 2


def test_usage_error_exits_2(capsys):
    assert main(["check", "frobnicate", "X", "-f", "whatever"]) == 2
