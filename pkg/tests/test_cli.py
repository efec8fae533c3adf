"""End-to-end command-line checks: goldens, exit codes, determinism."""

import json

import pytest

from steklov_trees import SpiderProfile, canonical_code, format_tree_text, make_spider, parse_tree_text
from steklov_trees.cli import run
from steklov_trees.verify import VerificationReport
import steklov_trees.cli as cli_module


def _capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------- goldens -------------------------------


def test_lambda2_path_golden(capsys):
    code, out, _ = _capture(capsys, ["lambda2", "path:5"])
    assert code == 0
    assert out == "0.4\n"


@pytest.mark.parametrize("method", ["matrix", "distance", "root"])
def test_lambda2_methods_agree_on_spider(capsys, method):
    code, out, _ = _capture(capsys, ["lambda2", "spider:3,2,1", "--method", method])
    assert code == 0
    assert out == "0.38799538113\n"


def test_lambda2_root_on_double_spider(capsys):
    code, out, _ = _capture(capsys, ["lambda2", "ds:2,1/2", "--method", "root"])
    assert code == 0
    assert out == "0.38799538113\n"


def test_classify_text_golden(capsys):
    code, out, _ = _capture(capsys, ["classify", "7", "5"])
    assert code == 0
    assert out == (
        "n=7 D=5 case=divisible tie=false\n"
        "winner q=1 tree=spider:3,2,1 lambda2=0.38799538113\n"
    )


def test_classify_csv_golden(capsys):
    code, out, _ = _capture(capsys, ["classify", "15", "9", "--format", "csv"])
    assert code == 0
    assert out == (
        "case,q,candidate,lambda2,winner\n"
        'threshold_compare,2,"spider:5,4,3,2",0.216542364659,true\n'
        'threshold_compare,3,"spider:5,4,2,2,1",0.216351469037,false\n'
    )


def test_candidates_text_golden(capsys):
    code, out, _ = _capture(capsys, ["candidates", "15", "9"])
    assert code == 0
    assert out == (
        "n=15 D=9 M=5 s=2 q_minus=2 q_plus=3\n"
        "minus q=2 c=2 t=1 tree=spider:5,4,3,2\n"
        "plus q=3 c=1 t=2 tree=spider:5,4,2,2,1\n"
    )


def test_candidates_path_case(capsys):
    code, out, _ = _capture(capsys, ["candidates", "6", "5"])
    assert code == 0
    assert out == "n=6 D=5 M=0 path tree=path:5\n"


def test_spectrum_csv_golden(capsys):
    code, out, _ = _capture(capsys, ["spectrum", "path:3", "--format", "csv"])
    assert code == 0
    assert out == "index,lambda\n1,0\n2,0.666666666667\n"


def test_sweep_text_golden(capsys):
    code, out, _ = _capture(capsys, ["sweep", "--r", "2", "--M-max", "3"])
    assert code == 0
    assert out == (
        "r=2 M=1 peak_q=1 pass\n"
        "r=2 M=2 peak_q=2 pass\n"
        "r=2 M=3 peak_q=3 pass\n"
    )


def test_reduce_csv_golden(capsys):
    code, out, _ = _capture(capsys, ["reduce", "spider:4,1,1", "--format", "csv"])
    assert code == 0
    assert out == (
        "step,move,tree,lambda2\n"
        '0,input,"spider:4,1,1",0.333333333333\n'
        '1,dominate,"spider:3,2,1",0.38799538113\n'
        '2,result,"spider:3,2,1",0.38799538113\n'
    )


def test_verify_text_golden(capsys):
    code, out, _ = _capture(capsys, ["verify", "6", "5"])
    assert code == 0
    assert out == "n=6 D=5 trees=1 winners=path:5 lambda2=0.4 verdict=match\n"


def test_verify_all_orders(capsys):
    code, out, _ = _capture(capsys, ["verify", "8", "5", "--all-orders", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,D,trees,winners,lambda2,verdict"
    assert len(lines) == 4
    assert all(line.endswith("match") for line in lines[1:])


# ----------------------------- json output -----------------------------


def test_spectrum_json_round_trips_tree_text(capsys):
    code, out, _ = _capture(capsys, ["spectrum", "spider:3,2,1", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["tree"] == "spider:3,2,1"
    assert all(isinstance(lam, str) for lam in obj["eigenvalues"])
    recovered = parse_tree_text(obj["tree_text"])
    assert canonical_code(recovered) == canonical_code(make_spider(SpiderProfile((3, 2, 1))))


def test_classify_json_floats_are_strings(capsys):
    code, out, _ = _capture(capsys, ["classify", "7", "5", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["case"] == "divisible"
    entry = obj["candidates"][0]
    assert isinstance(entry["lambda2"], str)
    assert entry["winner"] is True


# ------------------------------ file input ------------------------------


def test_file_input(tmp_path, capsys):
    path = tmp_path / "tree.txt"
    path.write_text(format_tree_text(make_spider(SpiderProfile((3, 2, 1)))), encoding="utf-8")
    code, out, _ = _capture(capsys, ["lambda2", "--file", str(path)])
    assert code == 0
    assert out == "0.38799538113\n"


def test_missing_file_is_domain_error(tmp_path, capsys):
    code, out, err = _capture(capsys, ["lambda2", "--file", str(tmp_path / "absent.txt")])
    assert code == 2
    assert out == ""
    assert "error" in err


# ------------------------------ exit codes ------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["lambda2"],
        ["lambda2", "--method", "bogus", "path:3"],
        ["classify", "seven", "5"],
        ["nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = _capture(capsys, argv)
    assert code == 1
    assert err.startswith("usage error:")


def test_both_tree_and_file_is_usage_error(tmp_path, capsys):
    path = tmp_path / "tree.txt"
    path.write_text(format_tree_text(make_spider(SpiderProfile((2, 1, 1)))), encoding="utf-8")
    code, _, err = _capture(capsys, ["lambda2", "path:3", "--file", str(path)])
    assert code == 1
    assert "not both" in err


def test_even_diameter_is_domain_error(capsys):
    code, _, err = _capture(capsys, ["classify", "8", "4"])
    assert code == 2
    assert "Lin and Zhao" in err


def test_bad_shorthand_is_domain_error(capsys):
    code, _, err = _capture(capsys, ["lambda2", "tri:3"])
    assert code == 2
    assert err.startswith("error:")


def test_root_method_shape_mismatch_is_domain_error(capsys):
    code, _, err = _capture(capsys, ["lambda2", "spider:3,3,1", "--method", "root"])
    assert code == 2
    assert "root method" in err


def test_verify_mismatch_exits_three(capsys, monkeypatch):
    fake = VerificationReport(
        n=7,
        D=5,
        trees_enumerated=3,
        argmax_codes=(b"00",),
        argmax_lambda2=0.5,
        classifier_codes=(b"01",),
        verdict="mismatch",
        wall_time=0.0,
    )
    monkeypatch.setattr(cli_module, "verify_classification", lambda n, d, jobs=None: fake)
    code, out, _ = _capture(capsys, ["verify", "7", "5"])
    assert code == 3
    assert "verdict=mismatch" in out


# ----------------------------- determinism -----------------------------


def test_output_is_byte_stable(capsys):
    _, first, _ = _capture(capsys, ["classify", "15", "9", "--format", "json"])
    _, second, _ = _capture(capsys, ["classify", "15", "9", "--format", "json"])
    assert first == second


def test_verify_jobs_do_not_change_bytes(capsys, monkeypatch):
    _, serial, _ = _capture(capsys, ["verify", "12", "5", "--jobs", "1"])
    _, sharded, _ = _capture(capsys, ["verify", "12", "5", "--jobs", "2"])
    assert serial == sharded
    monkeypatch.setenv("STEKLOV_JOBS", "3")
    _, via_env, _ = _capture(capsys, ["verify", "12", "5"])
    assert via_env == serial
