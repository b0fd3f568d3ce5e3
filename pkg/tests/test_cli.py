"""Command-line interface tests: parsing, formats, exit codes, schemas."""

import csv
import io
import json
import xml.etree.ElementTree as ET
from fractions import Fraction as F
from importlib import resources

import jsonschema
import pytest

from gouldhopper.cli import (
    ExprError,
    canonical_var,
    main,
    parse_poly_expr,
    parse_pq_list,
    parse_rational,
    parse_subst,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema(name):
    path = resources.files("gouldhopper") / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text())


def validate(name, document):
    jsonschema.validate(document, load_schema(name))


# ---------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------

def test_parse_poly_expr_basic():
    assert parse_poly_expr("z^2*w + 2").text() == "z^2 w + 2"
    assert parse_poly_expr("3/2*z - 3/2*z").is_zero()
    assert parse_poly_expr("(z + w)^2").text() == "z^2 + 2 * z w + w^2"
    assert parse_poly_expr("-z^2").text() == "-z^2"
    assert parse_poly_expr("z - - w").text() == "z + w"


def test_parse_poly_expr_implicit_multiplication():
    assert parse_poly_expr("2z").text() == "2 * z"
    assert parse_poly_expr("2z w").text() == "2 * z w"
    assert parse_poly_expr("2(z + w)") == parse_poly_expr("2*z + 2*w")


def test_parse_poly_expr_rational_coefficients():
    assert parse_poly_expr("1/2 z^2 + 3/4").text() == "1/2 * z^2 + 3/4"
    # a slash-written exponent is rejected, not silently normalized
    with pytest.raises(ExprError, match="nonnegative integer exponent"):
        parse_poly_expr("z^2/2")


def test_parse_poly_expr_gamma_alias():
    p = parse_poly_expr("2 gamma z", allowed_vars=("z", "g"))
    assert p.text() == "2 * z g"
    assert parse_poly_expr("γ", allowed_vars=("g",)).text() == "g"


def test_parse_poly_expr_errors_carry_positions():
    with pytest.raises(ExprError, match=r"negative exponent \(at position 2\)"):
        parse_poly_expr("z^-1")
    with pytest.raises(ExprError, match=r"nonnegative integer exponent \(at position 2\)"):
        parse_poly_expr("z^(1/2)")
    with pytest.raises(ExprError, match=r"unexpected end of expression \(at position 3\)"):
        parse_poly_expr("z +")
    with pytest.raises(ExprError, match=r"variable 'x' is not allowed here \(at position 0\)"):
        parse_poly_expr("x + 1")
    with pytest.raises(ExprError, match=r"unexpected '\*' \(at position 3\)"):
        parse_poly_expr("2 ** 3")
    with pytest.raises(ExprError, match=r"expected '\)' \(at position 2\)"):
        parse_poly_expr("(z")


def test_parse_poly_expr_round_trips_canonical_text():
    from gouldhopper.ghcore import explicit_poly

    p = explicit_poly(2, 1, 4, 2)
    assert parse_poly_expr(p.text(), allowed_vars=("z", "w", "g")) == p


def test_parse_rational():
    assert parse_rational("-7/3") == F(-7, 3)
    assert parse_rational("4") == F(4)
    with pytest.raises(ValueError, match="not a rational number"):
        parse_rational("abc")
    with pytest.raises(ValueError, match="not a rational number"):
        parse_rational("1/0")


def test_parse_pq_list():
    assert parse_pq_list("1,1;2,1") == ((1, 1), (2, 1))
    assert parse_pq_list(" 2,2 ") == ((2, 2),)
    with pytest.raises(ValueError, match="expected 'p,q'"):
        parse_pq_list("1")
    with pytest.raises(ValueError, match="expected integers"):
        parse_pq_list("a,b")
    with pytest.raises(ValueError, match="no \\(p,q\\) pairs"):
        parse_pq_list(";")


def test_parse_subst():
    assert parse_subst("z=1/2,gamma=-3") == {"z": F(1, 2), "g": F(-3)}
    assert parse_subst("w=2") == {"w": F(2)}
    with pytest.raises(ValueError, match="use z, w, or gamma"):
        parse_subst("t=1")
    with pytest.raises(ValueError, match="expected 'var=value'"):
        parse_subst("z")
    with pytest.raises(ValueError, match="empty substitution"):
        parse_subst(" , ")


def test_canonical_var_aliases():
    assert canonical_var("gamma") == "g"
    assert canonical_var("γ") == "g"
    assert canonical_var("z'") == "zp"
    assert canonical_var("w'") == "wp"
    assert canonical_var("gamma'") == "gp"
    assert canonical_var("z") == "z"


# ---------------------------------------------------------------------
# compute subcommand
# ---------------------------------------------------------------------

def test_compute_text(capsys):
    code, out, err = run_cli(capsys, "compute", "--p", "1", "--q", "1",
                             "--n", "2", "--m", "1")
    assert code == 0
    assert out == "z^2 w + 2 * z g\n"


def test_compute_latex(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "1", "--q", "1",
                           "--n", "2", "--m", "1", "--format", "latex")
    assert code == 0
    assert out == "z^{2}w + 2\\gamma z\n"


def test_compute_csv(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "1", "--q", "1",
                           "--n", "2", "--m", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["strategy", "z", "w", "g", "num", "den"]
    assert rows[1] == ["explicit", "2", "1", "0", "1", "1"]
    assert rows[2] == ["explicit", "1", "0", "1", "2", "1"]


def test_compute_json_matches_schema(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "2", "--q", "1",
                           "--n", "4", "--m", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate("compute", doc)
    assert doc["params"] == {"p": 2, "q": 1, "n": 4, "m": 2}
    assert doc["results"][0]["strategy"] == "explicit"
    assert doc["results"][0]["text"] == "z^4 w^2 + 24 * z^2 w g + 24 * g^2"
    assert doc["results"][0]["terms"][0] == {
        "exps": {"z": 4, "w": 2}, "num": "1", "den": "1"
    }


def test_compute_gamma_binding(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "1", "--q", "1",
                           "--n", "2", "--m", "1", "--gamma", "1/2")
    assert code == 0
    assert out == "z^2 w + z\n"


def test_compute_subst(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "1", "--q", "1",
                           "--n", "2", "--m", "1", "--subst", "z=2,w=1/2,gamma=1")
    assert code == 0
    assert out == "6\n"


def test_compute_all_strategies_agree(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "2", "--q", "1", "--n", "4",
                           "--m", "2", "--strategy", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate("compute", doc)
    texts = {r["text"] for r in doc["results"]}
    assert len(texts) == 1
    names = [r["strategy"] for r in doc["results"]]
    assert names == ["explicit", "operational", "creation", "recurrence",
                     "genfun", "hypergeom"]


def test_compute_all_skips_unsupported_representations(capsys):
    code, out, _ = run_cli(capsys, "compute", "--p", "1", "--q", "0", "--n", "3",
                           "--m", "1", "--strategy", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    names = [r["strategy"] for r in doc["results"]]
    assert "hypergeom" not in names
    assert "explicit" in names


def test_compute_rejects_invalid_params(capsys):
    code, out, err = run_cli(capsys, "compute", "--p", "0", "--q", "0",
                             "--n", "1", "--m", "1")
    assert code == 2
    assert "p and q cannot both be zero" in err


def test_compute_rejects_unsupported_strategy(capsys):
    code, _, err = run_cli(capsys, "compute", "--p", "1", "--q", "0",
                           "--n", "2", "--m", "1", "--strategy", "hypergeom")
    assert code == 2
    assert "hypergeometric form needs p >= 1 and q >= 1" in err


def test_compute_rejects_bad_genfun_order(capsys):
    code, _, err = run_cli(capsys, "compute", "--p", "1", "--q", "1", "--n", "3",
                           "--m", "2", "--strategy", "genfun", "--order", "2")
    assert code == 2
    assert "cannot reach the coefficient" in err


# ---------------------------------------------------------------------
# verify subcommand
# ---------------------------------------------------------------------

def test_verify_text_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tag", "SYMMETRY", "--nmax", "2",
                           "--mmax", "2", "--pq", "1,1", "--format", "text")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "ExactPass  SYMMETRY           p=1 q=1 n=0 m=0  [printed]"
    assert lines[-1] == ("summary: total=9 exact_pass=9 series_pass=0 fail=0 "
                         "known_misprints=0 effective_fail=0")


def test_verify_printed_failures_drive_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tag", "PARAM_REC", "--nmax", "2",
                           "--mmax", "2", "--pq", "1,1", "--variant", "printed",
                           "--format", "text")
    assert code == 1
    assert "Fail" in out
    assert "difference:" in out


def test_verify_auto_excuses_documented_misprints(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tag", "PARAM_REC", "--nmax", "2",
                           "--mmax", "2", "--pq", "1,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate("verify", doc)
    statuses = {(r["status"], r["known_misprint"]) for r in doc}
    assert ("Fail", True) in statuses
    assert not any(s == "Fail" and not k for s, k in statuses)


def test_verify_json_matches_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tag", "GEN_FULL", "--pq", "1,1;2,1",
                           "--order", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate("verify", doc)
    assert all(r["status"] == "SeriesPass" for r in doc)
    assert all(r["series_order"] == 6 for r in doc)


def test_verify_junit_output(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tag", "PARAM_REC", "--nmax", "1",
                           "--mmax", "1", "--pq", "1,1", "--format", "junit")
    assert code == 0
    root = ET.fromstring(out)
    assert root.tag == "testsuite"
    assert root.get("name") == "identity-verify"
    assert root.get("failures") == "0"
    assert root.get("skipped") == "1"
    skipped = [case for case in root if case.find("skipped") is not None]
    assert len(skipped) == 1
    assert "known misprint" in skipped[0].find("skipped").get("message")


def test_verify_junit_reports_real_failures(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tag", "PARAM_REC", "--nmax", "1",
                           "--mmax", "1", "--pq", "1,1", "--variant", "printed",
                           "--format", "junit")
    assert code == 1
    root = ET.fromstring(out)
    assert root.get("failures") == "1"
    failures = [case for case in root if case.find("failure") is not None]
    assert len(failures) == 1


def test_verify_rejects_unknown_tag(capsys):
    code, _, err = run_cli(capsys, "verify", "--tag", "NOPE")
    assert code == 2
    assert "unknown identity tag" in err


def test_verify_rejects_bad_pq(capsys):
    code, _, err = run_cli(capsys, "verify", "--tag", "SYMMETRY", "--pq", "0,0")
    assert code == 2
    assert "invalid derivative orders" in err


# ---------------------------------------------------------------------
# audit subcommand
# ---------------------------------------------------------------------

AUDIT_SMALL = ("audit", "--nmax", "1", "--mmax", "1", "--pq", "1,1",
               "--aux-max", "1", "--jk-max", "1", "--order", "4",
               "--trials", "1")


def test_audit_json_matches_schema(capsys):
    code, out, _ = run_cli(capsys, *AUDIT_SMALL)
    assert code == 0
    doc = json.loads(out)
    validate("audit", doc)
    assert doc["policy"] == "auto"
    assert doc["summary"]["effective_fail"] == 0
    assert doc["heat"]["failures"] == []
    assert set(doc["summary"]["by_tag"]) == {t["tag"] for t in doc["reports"]}


def test_audit_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, *AUDIT_SMALL)
    code2, out2, _ = run_cli(capsys, *AUDIT_SMALL)
    assert code1 == code2 == 0
    assert out1 == out2


def test_audit_text_format(capsys):
    code, out, _ = run_cli(capsys, *AUDIT_SMALL, "--format", "text")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-2].startswith("summary: total=")
    assert "effective_fail=0" in lines[-2]
    assert lines[-1] == "heat: seed=0 trials=1 cases=15 failures=0"


def test_audit_printed_policy_fails(capsys):
    code, out, _ = run_cli(capsys, *AUDIT_SMALL, "--variant", "printed")
    assert code == 1
    doc = json.loads(out)
    validate("audit", doc)
    assert doc["summary"]["effective_fail"] > 0


# ---------------------------------------------------------------------
# heat subcommand
# ---------------------------------------------------------------------

def test_heat_text(capsys):
    code, out, _ = run_cli(capsys, "heat", "--p", "1", "--q", "1",
                           "--initial", "z^2*w")
    assert code == 0
    assert out == "solution: z^2 w + 2 * z t\nresidual: 0\n"


def test_heat_second_order(capsys):
    code, out, _ = run_cli(capsys, "heat", "--p", "2", "--q", "0",
                           "--initial", "z^3")
    assert code == 0
    assert out == "solution: z^3 + 6 * z t\nresidual: 0\n"


def test_heat_latex(capsys):
    code, out, _ = run_cli(capsys, "heat", "--p", "1", "--q", "1",
                           "--initial", "z^2*w", "--format", "latex")
    assert code == 0
    assert out == "solution: z^{2}w + 2tz\nresidual: 0\n"


def test_heat_csv(capsys):
    code, out, _ = run_cli(capsys, "heat", "--p", "1", "--q", "1",
                           "--initial", "z^2*w", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["part", "z", "w", "t", "num", "den"]
    assert rows[1] == ["solution", "2", "1", "0", "1", "1"]
    assert rows[2] == ["solution", "1", "0", "1", "2", "1"]


def test_heat_json_matches_schema(capsys):
    code, out, _ = run_cli(capsys, "heat", "--p", "2", "--q", "1", "--c=-3/7",
                           "--initial", "z^4*w^2 + 1/2*z", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validate("heat", doc)
    assert doc["p"] == 2 and doc["q"] == 1
    assert doc["c"] == "-3/7"
    assert doc["residual"]["terms"] == []


def test_heat_rejects_unknown_variable(capsys):
    code, _, err = run_cli(capsys, "heat", "--p", "1", "--q", "1",
                           "--initial", "x+1")
    assert code == 2
    assert "variable 'x' is not allowed here (at position 0)" in err


def test_heat_rejects_zero_orders(capsys):
    code, _, err = run_cli(capsys, "heat", "--p", "0", "--q", "0", "--initial", "z")
    assert code == 2
    assert "p + q >= 1" in err


# ---------------------------------------------------------------------
# top-level behavior
# ---------------------------------------------------------------------

def test_no_subcommand_is_usage_error(capsys):
    code, _, err = run_cli(capsys)
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 2
    assert "invalid choice" in err


def test_entry_point_is_installed():
    import shutil

    assert shutil.which("gouldhopper") is not None
