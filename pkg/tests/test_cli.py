import json

import pytest

from lattice_spectra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classgroup_text(capsys):
    code, out, _ = run(capsys, "qform", "classgroup", "--disc=-23")
    assert code == 0
    assert out.splitlines() == ["h(-23) = 3", "1,1,6", "2,-1,3", "2,1,3"]


def test_json_flag_before_or_after_the_command(capsys):
    for argv in (
        ("--json", "torus", "classify", "--rcos", "1/2", "--rsq", "1"),
        ("torus", "classify", "--rcos", "1/2", "--rsq", "1", "--json"),
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        payload = json.loads(out)
        assert payload["set"] == "6N"
        assert payload["delta"] == "-3"


def test_reduce_json_certificate(capsys):
    code, out, _ = run(capsys, "qform", "reduce", "--form", "10,14,5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["reduced"] == {"a": "1", "b": "0", "c": "1", "delta": "-4"}
    assert payload["certificate"]["det"] == "1"


def test_reps_text(capsys):
    code, out, _ = run(capsys, "count", "reps", "--form", "1,0,1", "--n", "25")
    assert code == 0
    assert out.splitlines()[0] == "R=12 r_plus=3 r_full=2"


def test_integers_are_decimal_strings_in_json(capsys):
    code, out, _ = run(capsys, "count", "quadrant", "--m", "1", "--n", "1", "--N", "10**10", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == "10000000000"
    assert payload["count"] == str(len(payload["solutions"]))
    assert all(isinstance(v, str) for row in payload["solutions"] for v in row)


def test_irrational_count(capsys):
    code, out, _ = run(capsys, "count", "irrational", "--b", "sqrt(2)", "--c", "1", "--z", "5+2*sqrt(2)")
    assert code == 0
    assert out.startswith("R=4")


def test_rect_witness(capsys):
    code, out, _ = run(capsys, "rect", "witness", "--ratio-sq", "1", "--k", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "50"
    assert payload["kind"] == "rect_scan"
    assert payload["eigenvalue"] == "50*pi^2/(1*b^2)"


def test_torus_mult(capsys):
    code, out, _ = run(capsys, "torus", "mult", "--rcos", "sqrt(2)", "--rsq", "2+sqrt(2)", "--gen", "3,0")
    assert (code, out.strip()) == (0, "4")


def test_inconsistent_reading_is_noted(capsys):
    code, out, _ = run(capsys, "torus", "classify", "--rcos", "sqrt(2)", "--rsq", "2+sqrt(2)")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "{2,4}"
    assert lines[-1].startswith("note:")


@pytest.mark.parametrize("argv", [
    ("qform", "classgroup", "--disc=5"),
    ("torus", "classify", "--rcos", "1", "--rsq", "1"),
    ("count", "reps", "--form", "1,0"),
    ("count", "reps", "--form", "1,0,1"),
    ("count", "reps", "--form", "1,0,1", "--n", "ten"),
    ("count", "reps", "--form", "1,0,1", "--n", "5e-1"),
    ("--bound", "2**-3", "qform", "classgroup", "--disc=-23"),
    ("count", "irrational", "--b", "sqrt(2)", "--c", "1", "--z", "3", "--bo", "9"),
    ("torus", "mult", "--rcos", "0", "--rsq", "1", "--gen", "1"),
    ("qform",),
    (),
])
def test_bad_input_exits_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_exhausted_search_exits_two_with_json_error(capsys):
    code, out, err = run(capsys, "witness", "prime", "--form", "1,0,1", "--avoid", "2", "--bound", "4", "--json")
    assert code == 2
    payload = json.loads(out)
    assert payload["kind"] == "exhausted"
    assert payload["bound"] == "4"
    assert "Hint:" in err


def test_domain_error_json(capsys):
    code, out, _ = run(capsys, "--json", "rect", "mult", "--ratio-sq", "sqrt(2)", "--m0", "1", "--n0", "1")
    assert code == 1
    assert json.loads(out)["kind"] == "domain"


def test_bound_accepts_scientific_notation(capsys):
    code, out, _ = run(capsys, "witness", "surjectivity", "--form", "1,0,1", "--k", "3", "--bound", "1e3")
    assert code == 0
    assert out.startswith("k=3 value=25 prime=5")


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "torus" in out


def test_coefficient_flags_live_beside_bound_and_box(capsys):
    code, out, _ = run(
        capsys, "--bound", "10", "count", "irrational",
        "--b", "sqrt(2)", "--c", "1", "--z", "5+2*sqrt(2)", "--box", "15", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["R"] == "4"
    assert payload["target"] == "5+2*sqrt(2)"


def test_irrational_scans_default_to_the_settings_box(capsys, monkeypatch):
    from lattice_spectra.config import settings

    monkeypatch.setattr(settings, "BOX", 2)
    code, _out, err = run(capsys, "torus", "mult", "--rcos", "sqrt(2)", "--rsq", "2+sqrt(2)", "--gen", "3,0")
    assert code == 2
    assert "above the box 2" in err
