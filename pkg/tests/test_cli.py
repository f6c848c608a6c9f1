import io
import json

import pytest

from stabinv.cli import EXIT_GUARD, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, run

DUAL = "field char=2\nvertex 1\narrow x 1 1\nrel x*x\n"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def dual_file(tmp_path):
    p = tmp_path / "dual.txt"
    p.write_text(DUAL)
    return str(p)


def test_build(dual_file):
    code, out, _ = call("build", dual_file)
    assert code == EXIT_OK and "dimension 2 over GF(2)" in out
    code, out, _ = call("build", dual_file, "--json")
    assert json.loads(out)["dimension"] == 2


def test_invariants_from_file(dual_file):
    code, out, _ = call("invariants", dual_file, "--json", "--n-max", "1")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["kulshammer"]["dims"] == [1]
    assert doc["orthogonal_quotient"]["dims"] == [1]
    assert doc["identity"].startswith("sha256:")


def test_invariants_family_json_is_byte_identical():
    argv = ["invariants", "--family", "A_lambda", "--param", "lam=2", "--json"]
    c1, o1, _ = call(*argv)
    c2, o2, _ = call(*argv)
    assert c1 == c2 == EXIT_OK and o1 == o2
    doc = json.loads(o1)
    assert doc["cartan"]["det"] == 4 and doc["dim_center"] == 2


def test_invariants_table():
    code, out, _ = call("invariants", "--family", "L2p", "--char", "3", "--n-max", "1")
    assert code == EXIT_OK
    assert "orthogonal_quotient.dims" in out and "[3]" in out


def test_guard_exit_code():
    code, out, _ = call("invariants", "--family", "L9", "--char", "2", "--guard", "10", "--json")
    assert code == EXIT_GUARD
    assert json.loads(out)["hh"]["status"].startswith("skipped")


def test_infinite_dimensional_input(tmp_path):
    p = tmp_path / "free.txt"
    p.write_text("field char=2\nvertex 1\narrow a 1 1\narrow b 1 1\nrel a*a\n")
    code, _, err = call("build", str(p), "--degree-bound", "6")
    assert code == EXIT_GUARD and "not bounded" in err


@pytest.mark.parametrize("argv,fragment", [
    (["catalog", "emit", "A_pq", "--param", "p=1", "--param", "q=1"], "$p+q\\geq 3$"),
    (["invariants", "--family", "nope"], "unknown family"),
    (["invariants"], "need a presentation file"),
    (["invariants", "--family", "L2", "--char", "4"], "neither 0 nor prime"),
    (["build", "/nonexistent/file"], "cannot read"),
    (["compare", "L2", "zzz"], "neither a file nor a catalog family"),
    (["frobnicate"], "invalid choice"),
])
def test_input_errors(argv, fragment):
    code, _, err = call(*argv)
    assert code == EXIT_INPUT
    assert fragment in err


def test_parse_error_reports_line(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("field char=2\nvertex 1\narrow a 1 2\n")
    code, _, err = call("build", str(p))
    assert code == EXIT_INPUT and "line 3" in err


def test_catalog_list_and_emit():
    code, out, _ = call("catalog", "list", "--json")
    assert code == EXIT_OK and len(json.loads(out)) == 15
    code, out, _ = call("catalog", "emit", "Omega_n", "--param", "n=2", "--char", "3")
    assert code == EXIT_OK and out.startswith("# Ω(n)") and "arrow beta2 b1 0" in out


def test_compare_families():
    code, out, _ = call("compare", "L9", "L9p", "--char", "2", "--json", "--n-max", "1")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["overall"] == "distinguished"
    assert "kulshammer.dims" in doc["distinguishing"]


def test_compare_not_distinguished_wording():
    code, out, _ = call("compare", "A_lambda:lam=2", "A_lambda:lam=2", "--char", "5", "--n-max", "1")
    assert code == EXIT_OK and "overall: not_distinguished" in out
    assert "not an equivalence" in out


def test_verify_paper_char3():
    code, out, _ = call("verify-paper", "--char", "3")
    assert code == EXIT_OK
    assert "Λ₂′ Z/T₁^⊥ expected 3 got 3 PASS" in out


def test_verify_paper_json_flags_failures():
    code, out, _ = call("verify-paper", "--char", "0", "--json")
    doc = json.loads(out)
    assert doc["failed"] == (code == EXIT_VERIFY)
    assert any(r["invariant"] == "interpretation" for r in doc["rows"])
