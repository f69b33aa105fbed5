import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from totients import bound_table, preimage_report
from totients.cli import run
from totients.render import dumps, render


def call(*argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue().decode(), err.getvalue()


def test_inverse_text_golden():
    assert call("inverse", "4", "--format", "text") == (
        0, "phi^-1(4) = {5, 8, 10, 12}; O=1 E=3; bound=15\n", "")


def test_inverse_odd_text_has_no_bound():
    assert call("inverse", "9")[1] == "phi^-1(9) = {}; O=0 E=0; bound=-\n"


@pytest.mark.parametrize("algorithm", ["scan", "construct", "verify"])
def test_inverse_algorithms_agree_on_output(algorithm):
    code, out, _ = call("inverse", "12", "--algorithm", algorithm, "--format", "json")
    assert code == 0
    assert json.loads(out)["result"]["elements"] == [13, 21, 26, 28, 36, 42]


def test_verify_all_even_up_to_1e4():
    for m in range(2, 10**4 + 1, 2):
        code, _, err = call("inverse", str(m), "--algorithm", "verify", "--format", "csv")
        assert code == 0, (m, err)


def test_verify_mismatch_exit_code(monkeypatch):
    from totients import gupta
    monkeypatch.setattr(gupta, "scan_preimage", lambda m, workers=1: [])
    code, out, err = call("inverse", "4", "--algorithm", "verify")
    assert code == 3 and out == "" and "mismatch" in err


def test_table_text():
    code, out, _ = call("table")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "m\tA(m)\tphi(A(m))"
    rows = [tuple(line.split("\t")) for line in lines[1:]]
    assert rows[:7] == [("1", "2", "1"), ("2", "6", "2"), ("4", "15", "8"), ("6", "21", "12"),
                        ("8", "30", "8"), ("10", "33", "20"), ("12", "455/8", "-")]
    assert rows[7][:2] == ("14", "42")
    assert rows[7][2] == str(bound_table([14])[0].phi_of_bound)


def test_table_json_null_for_fractional():
    code, out, _ = call("table", "--rows", "12,28", "--format", "json")
    rows = json.loads(out)["result"]["rows"]
    assert rows[0] == {"m": 12, "bound": {"num": 455, "den": 8, "display": "455/8"},
                       "phi_of_bound": None}
    assert rows[1]["bound"]["display"] == "435/4"


@pytest.mark.parametrize("argv", [
    ("phi", "81"), ("inverse", "4"), ("inverse", "14"), ("bound", "12"), ("table",),
    ("classify", "two-p", "5"), ("classify", "two-p-k", "5", "2"), ("classify", "pow2", "5"),
    ("classify", "factorial", "6"), ("scan", "sophie", "--limit", "50"),
    ("scan", "s-set", "3", "--limit", "50"), ("scan", "lehmer", "--limit", "1000"),
    ("scan", "odd-doubles", "--limit", "12"),
])
def test_json_round_trip(argv):
    code, out, _ = call(*argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["command", "parameters", "result"]
    assert dumps(doc) == out


def test_json_report_key_order():
    out = render(preimage_report(14), "json").decode()
    assert out.startswith('{"m":14,"in_image":false,"elements":[],')
    assert json.loads(render(preimage_report(1), "json"))["elements"] == [1, 2]


def test_csv_one_row_per_element():
    code, out, _ = call("inverse", "6", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "parity", "residue"]
    assert [r[0] for r in rows[1:]] == ["7", "9", "14", "18"]
    code, out, _ = call("scan", "s-set", "5", "--limit", "40", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1:] == [["7", "14", "true"], ["17", "34", "true"], ["37", "74", "true"]]


def test_scan_outputs():
    assert call("scan", "lehmer", "--limit", "1000000") == (0, "lehmer(1000000) = {}\n", "")
    assert call("scan", "odd-doubles", "--limit", "12")[1] == "odd-doubles(12) = {1, 3, 5}\n"
    out = call("scan", "sophie", "--limit", "50")[1].splitlines()
    assert out[0] == "sophie germain: {2, 3, 5, 11, 23, 29, 41}"
    assert out[3] == "2p not in image: {14, 26, 34, 38, 62, 74, 86, 94}"


def test_classify_outputs():
    assert call("classify", "two-p", "7")[1] == "two_p 14: not in image (2p+1 = 15 composite)\n"
    assert call("classify", "two-p", "2")[1] == "two_p 4: in image, witness 5 (2p+1 = 5 prime)\n"
    doc = json.loads(call("classify", "pow2", "5", "--format", "json")[1])
    assert doc["result"]["bound"] == {"num": 255, "den": 2, "display": "255/2"}
    doc = json.loads(call("classify", "factorial", "5", "--format", "json")[1])
    assert doc["result"]["witness"] == 450


@pytest.mark.parametrize("argv", [(), ("bogus",), ("phi",), ("phi", "x"), ("inverse", "4", "--format", "xml"),
                                  ("classify", "nope", "1"), ("table", "--rows", "1,a")])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err


@pytest.mark.parametrize("argv", [
    ("phi", "0"), ("bound", "7"), ("classify", "two-p-k", "3", "1"),
    ("classify", "factorial", "21"), ("inverse", str(2**63)), ("classify", "pow2", str(2**13)),
])
def test_domain_and_overflow_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_output_file_matches_stdout(tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = call("inverse", "28", "--format", "json", "--output", str(path))
    assert code == 0
    assert path.read_bytes() == out.encode()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "totients", "phi", "81"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "phi(81) = 54\n"


def test_render_rational_display():
    from totients.render import rational
    assert rational(Fraction(455, 8)) == {"num": 455, "den": 8, "display": "455/8"}
    assert rational(Fraction(42))["display"] == "42"
