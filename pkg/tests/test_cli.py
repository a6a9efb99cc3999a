import io
import json
import re
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kthpart.cli import REPORT_HEADER, main

MALFORMED = [
    line for line in (Path(__file__).parent / "golden" / "qexpr" / "malformed.txt")
    .read_text(encoding="utf-8").splitlines() if line
]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_suite_tsv():
    code, out, err = call("verify", "--suite", "lemmas", "--order", "30")
    lines = out.splitlines()
    assert code == 0 and not err
    assert lines[0] == REPORT_HEADER
    assert all(len(line.split("\t")) == len(REPORT_HEADER.split("\t")) for line in lines)
    assert [line.split("\t")[0] for line in lines[1:]] == ["lemma21", "lemma22", "lemma23"]


def test_verify_printed_form_json():
    code, out, _ = call("verify", "--id", "thm44_printed", "--order", "40", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    (r,) = doc["results"]
    assert r["status"] == "fail" and r["expected"] == "fail_as_printed"
    assert r["first_mismatch"]["n"] == 2


def test_verify_default_runs_everything(monkeypatch):
    seen = []
    import kthpart.cli as cli

    monkeypatch.setattr(cli, "run_suite", lambda suite, order: seen.append((suite, order)) or [])
    assert call("verify")[0] == 0
    assert seen == [("all", 40)]


def test_verify_exit_one_on_unmet_expectation(monkeypatch):
    import kthpart.cli as cli
    from kthpart.verify import run

    real = run("jtp_printed", 20)
    fake = type(real)(real.id, real.order, real.status, real.expected.__class__.PASS,
                      real.first_mismatch, real.elapsed, real.paper_ref)
    monkeypatch.setattr(cli, "run", lambda ident, order: fake)
    code, out, _ = call("verify", "--id", "jtp_printed", "--order", "20")
    assert code == 1
    assert out.splitlines()[1].split("\t")[3] == "no"


def test_tsv_output_is_byte_identical():
    argv = ("verify", "--suite", "core", "--order", "25")
    assert call(*argv)[1] == call(*argv)[1]


def test_json_identical_up_to_timing():
    argv = ("verify", "--suite", "lemmas", "--order", "25", "--format", "json")
    mask = lambda s: re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', s)
    assert mask(call(*argv)[1]) == mask(call(*argv)[1])


def test_audit_prints_both_coefficients():
    code, out, _ = call("audit", "--id", "gup_c_printed", "--order", "40")
    assert code == 0
    assert "first_mismatch\tq^1" in out
    assert "\t[0, -1]" in out and "\t[0, 1]" in out
    code, out, _ = call("audit", "--id", "agl", "--order", "20")
    assert code == 0 and "first_mismatch\tnone" in out


def test_compute_polynomial_and_values():
    code, out, _ = call("compute", "ffw", "--k", "2", "--n-max", "6")
    assert code == 0
    assert out.splitlines() == ["n\tpolynomial", "1\t[-1]", "2\t[-1]", "3\t[-1, 0, 1]",
                                "4\t[-1, 0, 0, 1]", "5\t[-1, 0, 0, 1, 1]", "6\t[-1, 0, -1, 0, 1, 1]"]
    code, out, _ = call("compute", "ffw", "--k", "2", "--n-max", "6", "--z", "1")
    assert out.splitlines()[1:] == ["1\t-1", "2\t-1", "3\t0", "4\t0", "5\t1", "6\t0"]


def test_compute_weighted_sum_beyond_enumeration():
    code, out, _ = call("compute", "ffwk", "--k", "1", "--n-max", "500")
    assert code == 0
    assert out.splitlines()[-1] == "500\t-12"
    code, _, err = call("compute", "ffw", "--k", "1", "--n-max", "500")
    assert code == 2 and "capped" in err


def test_expand_matches_spec_example():
    code, out, _ = call("expand", "qbin(4,2)", "--order", "10")
    assert code == 0
    assert out == "0: [1]\n1: [1]\n2: [2]\n3: [1]\n4: [1]\n" + "".join(f"{n}: []\n" for n in range(5, 10))


def test_asym_table_output():
    code, out, _ = call("asym", "--k", "2", "--n-max", "1000")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n\tvalue\tmain_term\tratio"
    assert [line.split("\t")[0] for line in lines[1:]] == ["100", "250", "500", "1000"]


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_expressions_exit_two_with_position(text):
    code, out, err = call("expand", text, "--order", "5")
    assert code == 2 and out == ""
    assert re.search(r"byte \d+", err)


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["verify", "--bogus"], ["verify", "--order", "1"],
    ["verify", "--order", "x"], ["verify", "--suite", "misc"], ["verify", "--id", "nope"],
    ["verify", "--suite", "core", "--id", "agl"], ["compute", "ffw", "--k", "0", "--n-max", "5"],
    ["compute", "ffw", "--k", "2"], ["compute", "ffw", "--k", "2", "--n-max", "0"],
    ["expand", "1/(1-z)"], ["expand", "frob"], ["expand", "poch(z;q;inf)"],
    ["audit"], ["audit", "--id", "nope"], ["asym", "--k", "1", "--n-max", "1000"],
    ["asym", "--k", "2", "--n-max", "50"],
])
def test_usage_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == "" and err.startswith("kthpart:")


@settings(max_examples=200)
@given(st.text(alphabet="qz0123456789+-*/^();, poch_inf", max_size=25))
def test_expand_never_crashes(text):
    code, _, err = call("expand", text, "--order", "6")
    assert code in (0, 2)
    assert (code == 2) == bool(err)


@settings(max_examples=100)
@given(st.lists(st.text(alphabet="-abcdefghijklmnopqrstuvwxyz0123456789", max_size=8), max_size=4))
def test_random_argv_never_crashes(argv):
    code, _, _ = call(*argv)
    assert code in (0, 1, 2)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kthpart", "expand", "q", "--order", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "0: []\n1: [1]\n2: []\n"
    proc = subprocess.run([sys.executable, "-m", "kthpart", "expand", "q +"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "byte 3" in proc.stderr
