"""Tests for the command-line front end."""

from __future__ import annotations

import json

import pytest

from rocmetrics import cli

PERFECT_CSV = "score,default\n2,0\n3,0\n1,1\n"
TIE_CSV = "score,default\n1,false\n2,FALSE\n1,true\n"
GRADES_CSV = "grade,count,pd\nB,100,0.5\nA,100,0.1\n"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# binary
# ---------------------------------------------------------------------------

def test_binary_perfect_fixture(tmp_path, capsys):
    path = write(tmp_path, "b.csv", PERFECT_CSV)
    code, out, _ = run(capsys, "binary", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["source"] == "binary"
    assert doc["metrics"]["ar"] == 1.0
    assert doc["counts"] == {"n": 2, "d": 1}
    assert "curves" not in doc


def test_binary_tie_fixture_and_flags(tmp_path, capsys):
    path = write(tmp_path, "b.csv", TIE_CSV)
    code, out, _ = run(capsys, "binary", path, "--emit-curves")
    assert code == 0
    doc = json.loads(out)
    assert doc["metrics"]["ar"] == 0.5
    assert doc["curves"]["roc"] == [[0, 0], [0.5, 0.5], [1, 1]]
    assert len(doc["curves"]["cap"]) == 4

    code, out, _ = run(capsys, "binary", path, "--flip-scores")
    assert code == 0
    assert json.loads(out)["metrics"]["ar"] == -0.5


def test_binary_custom_columns(tmp_path, capsys):
    path = write(tmp_path, "b.csv", "s,flag\n2,0\n3,0\n1,1\n")
    code, out, _ = run(capsys, "binary", path, "--score-col", "s", "--default-col", "flag")
    assert code == 0
    assert json.loads(out)["metrics"]["ar"] == 1.0


def test_binary_thinning_is_deterministic(tmp_path, capsys):
    rows = ["score,default"]
    for i in range(300):
        rows.append(f"{i * 0.01},{1 if i % 10 == 0 else 0}")
    path = write(tmp_path, "b.csv", "\n".join(rows) + "\n")
    code, out1, _ = run(capsys, "binary", path, "--thin-n", "50", "--thin-d", "10", "--seed", "4")
    code2, out2, _ = run(capsys, "binary", path, "--thin-n", "50", "--thin-d", "10", "--seed", "4")
    assert code == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["counts"] == {"n": 50, "d": 10}


def test_binary_error_reports_line_number(tmp_path, capsys):
    path = write(tmp_path, "b.csv", "score,default\n2,0\nxx,1\n")
    code, _, err = run(capsys, "binary", path)
    assert code == 2
    assert ":3:" in err and "xx" in err


def test_binary_rejects_bad_flag_value(tmp_path, capsys):
    path = write(tmp_path, "b.csv", "score,default\n2,0\n1,maybe\n")
    code, _, err = run(capsys, "binary", path)
    assert code == 2
    assert "maybe" in err


def test_binary_degenerate_sample(tmp_path, capsys):
    path = write(tmp_path, "b.csv", "score,default\n2,0\n3,0\n")
    code, _, err = run(capsys, "binary", path)
    assert code == 2
    assert "degenerate sample" in err


def test_binary_missing_column(tmp_path, capsys):
    path = write(tmp_path, "b.csv", "points,default\n2,0\n1,1\n")
    code, _, err = run(capsys, "binary", path)
    assert code == 2
    assert "score" in err


# ---------------------------------------------------------------------------
# imputed
# ---------------------------------------------------------------------------

def test_imputed_two_grade_fixture(tmp_path, capsys):
    path = write(tmp_path, "g.csv", GRADES_CSV)
    code, out, _ = run(capsys, "imputed", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["source"] == "imputed"
    assert doc["metrics"]["ar"] == pytest.approx(0.47619, abs=1e-5)
    assert doc["sigma_ar"] is None
    assert doc["curves"]["imputed_roc"][1] == [pytest.approx(50 / 140), pytest.approx(5 / 6)]


def test_imputed_single_grade(tmp_path, capsys):
    path = write(tmp_path, "g.csv", "grade,count,pd\nA,100,0.2\n")
    code, out, _ = run(capsys, "imputed", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["metrics"] == {"ar": 0, "lar": 0, "rar": 0}


def test_imputed_equal_pd(tmp_path, capsys):
    path = write(tmp_path, "g.csv", "grade,count,pd\nA,10,0.2\nB,30,0.2\n")
    code, out, _ = run(capsys, "imputed", path)
    assert code == 0
    assert json.loads(out)["metrics"] == {"ar": 0, "lar": 0, "rar": 0}


def test_imputed_rejects_unsorted_naming_row(tmp_path, capsys):
    path = write(tmp_path, "g.csv", "grade,count,pd\nA,100,0.1\nB,100,0.5\n")
    code, _, err = run(capsys, "imputed", path)
    assert code == 2
    assert ":3:" in err and "'B'" in err


def test_imputed_rejects_boundary_pd(tmp_path, capsys):
    path = write(tmp_path, "g.csv", "grade,count,pd\nA,100,1.0\nB,100,0.5\n")
    code, _, err = run(capsys, "imputed", path)
    assert code == 2
    assert "pd" in err


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def test_analyze_reference_fixture(capsys):
    code, out, _ = run(capsys, "analyze", "--ar", "0.667", "--lar", "0.53", "--rar", "0.486")
    assert code == 0
    doc = json.loads(out)
    dec = doc["decomposition"]
    assert dec["a_lar"] == pytest.approx(0.116, abs=2e-3)
    assert dec["a_rar"] == pytest.approx(0.185, abs=2e-3)
    assert dec["indifference"] == pytest.approx(0.263, abs=2e-3)
    assert dec["a"] + dec["b"] + dec["indifference"] == pytest.approx(1.0, abs=1e-9)
    assert [z["zone"] for z in dec["zones"]] == ["red", "yellow", "green"]


def test_analyze_infeasible_exits_3(capsys):
    code, _, err = run(capsys, "analyze", "--ar", "0.5", "--lar", "0.9", "--rar", "0.1")
    assert code == 3
    assert "0.693147" in err  # the attainable range is quoted


def test_analyze_degenerate_triangle_exits_3(capsys):
    from rocmetrics import triangle_lar, triangle_rar

    lar = triangle_lar(0.2, 0.5)
    rar = triangle_rar(0.2, 0.5)
    code, _, err = run(capsys, "analyze", "--ar", "0.5", "--lar", str(lar), "--rar", str(rar))
    assert code == 3
    assert "triangular" in err


# ---------------------------------------------------------------------------
# burgt
# ---------------------------------------------------------------------------

def test_burgt_point_by_k(capsys):
    code, out, _ = run(capsys, "burgt", "--k", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,ar,lar,rar"
    k, ar, lar, rar = (float(v) for v in lines[1].split(","))
    assert ar == pytest.approx(0.6136, abs=1e-4)
    assert rar > lar


def test_burgt_point_by_ar_round_trip(capsys):
    code, out, _ = run(capsys, "burgt", "--ar", "0.6136")
    assert code == 0
    k = float(out.strip().splitlines()[1].split(",")[0])
    assert k == pytest.approx(5.0, abs=1e-3)


def test_burgt_sweep_rows(capsys):
    code, out, _ = run(capsys, "burgt", "--sweep", "0.05:0.95:0.05")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "ar,k,lar,rar,min_bound,max_bound"
    assert len(lines) == 20  # header + 19 grid points
    for line in lines[1:]:
        ar, k, lar, rar, lo, hi = (float(v) for v in line.split(","))
        assert rar > lar
        assert lo <= lar <= hi and lo <= rar <= hi


def test_burgt_rejects_bad_sweep(capsys):
    code, _, err = run(capsys, "burgt", "--sweep", "0.5:0.2:0.1")
    assert code == 2
    code, _, err = run(capsys, "burgt", "--sweep", "0.1-0.9-0.1")
    assert code == 2


def test_burgt_rejects_out_of_range_k(capsys):
    code, _, err = run(capsys, "burgt", "--k", "-3")
    assert code == 2


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def make_reports(tmp_path, capsys, grades=GRADES_CSV, binary_rows=None):
    if binary_rows is None:
        scores = [(1.5, 1), (2.0, 0), (2.5, 1), (3.0, 0), (3.5, 0), (4.0, 0)]
        binary_rows = "score,default\n" + "".join(f"{s},{f}\n" for s, f in scores)
    bpath = write(tmp_path, "b.csv", binary_rows)
    gpath = write(tmp_path, "g.csv", grades)
    code, out, _ = run(capsys, "binary", bpath, "--out", str(tmp_path / "b.json"))
    assert code == 0
    code, out, _ = run(capsys, "imputed", gpath, "--out", str(tmp_path / "g.json"))
    assert code == 0
    return str(tmp_path / "b.json"), str(tmp_path / "g.json")


def test_validate_round_trip(tmp_path, capsys):
    bjson, gjson = make_reports(tmp_path, capsys)
    code, out, _ = run(capsys, "validate", "--binary", bjson, "--imputed", gjson)
    assert code == 0
    doc = json.loads(out)
    verdict = doc["verdict"]
    # values reproduce the serialized report values exactly
    stored = json.loads(open(bjson).read())
    assert verdict["binary_metrics"]["ar"] == stored["metrics"]["ar"]
    assert verdict["binary_metrics"]["sigma_ar"] == stored["sigma_ar"]["exact"]
    assert isinstance(verdict["gini_consistent"], bool)


def test_validate_source_mismatch(tmp_path, capsys):
    bjson, gjson = make_reports(tmp_path, capsys)
    code, _, err = run(capsys, "validate", "--binary", gjson, "--imputed", bjson)
    assert code == 2
    assert "source tag mismatch" in err


def test_validate_schema_version_mismatch(tmp_path, capsys):
    bjson, gjson = make_reports(tmp_path, capsys)
    doc = json.loads(open(bjson).read())
    doc["schema_version"] = 99
    (tmp_path / "b2.json").write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "--binary", str(tmp_path / "b2.json"), "--imputed", gjson)
    assert code == 2
    assert "schema_version mismatch" in err


def test_validate_consistent_and_inconsistent_pairs(tmp_path, capsys):
    import rocmetrics as rm

    curve = rm.BurgtCurve(5.0)
    sample = rm.sample_from_curve(curve, 20000, 2000, seed=5)
    rows = ["score,default"]
    rows += [f"{s},0" for s in sample.nondefault_scores]
    rows += [f"{s},1" for s in sample.default_scores]
    bpath = write(tmp_path, "b.csv", "\n".join(rows) + "\n")
    table = rm.grade_table_from_curve(curve, 40, 50000, 0.09)
    gl = ["grade,count,pd"] + [
        f"{g.label},{g.count},{g.pd!r}" for g in table.grades
    ]
    gpath = write(tmp_path, "g.csv", "\n".join(gl) + "\n")
    run(capsys, "binary", bpath, "--out", str(tmp_path / "b.json"))
    run(capsys, "imputed", gpath, "--out", str(tmp_path / "g.json"))
    code, out, _ = run(
        capsys, "validate", "--binary", str(tmp_path / "b.json"),
        "--imputed", str(tmp_path / "g.json"),
    )
    assert code == 0
    verdict = json.loads(out)["verdict"]
    assert verdict["gini_consistent"] is True
    assert verdict["preference_consistent"] is True
    assert verdict["preference_binary"] == "right"

    # an unrelated weak-model table is flagged as inconsistent
    gpath2 = write(tmp_path, "g2.csv", "grade,count,pd\nB,100,0.11\nA,100,0.09\n")
    run(capsys, "imputed", gpath2, "--out", str(tmp_path / "g2.json"))
    code, out, _ = run(
        capsys, "validate", "--binary", str(tmp_path / "b.json"),
        "--imputed", str(tmp_path / "g2.json"),
    )
    assert code == 0
    assert json.loads(out)["verdict"]["gini_consistent"] is False


# ---------------------------------------------------------------------------
# Determinism and formatting
# ---------------------------------------------------------------------------

def test_byte_identical_output(tmp_path, capsys):
    path = write(tmp_path, "b.csv", TIE_CSV)
    _, out1, _ = run(capsys, "binary", path, "--emit-curves")
    _, out2, _ = run(capsys, "binary", path, "--emit-curves")
    assert out1 == out2


def test_out_file_matches_stdout(tmp_path, capsys):
    path = write(tmp_path, "g.csv", GRADES_CSV)
    _, out, _ = run(capsys, "imputed", path)
    code, _, _ = run(capsys, "imputed", path, "--out", str(tmp_path / "r.json"))
    assert code == 0
    assert (tmp_path / "r.json").read_text(encoding="utf-8") == out


def test_json_serialization_is_idempotent(tmp_path, capsys):
    # parse the emitted floats and re-serialize: bytes must not change
    path = write(tmp_path, "g.csv", "grade,count,pd\nC,137,0.317\nB,211,0.113\nA,97,0.019\n")
    _, out, _ = run(capsys, "imputed", path)
    doc = json.loads(out)
    assert cli._json_text(doc) + "\n" == out


def test_twelve_digit_float_rendering():
    assert cli._fmt(1 / 3) == "0.333333333333"
    assert cli._fmt(1.0) == "1"
    assert cli._fmt(0.5) == "0.5"
    with pytest.raises(ValueError):
        cli._fmt(float("nan"))
