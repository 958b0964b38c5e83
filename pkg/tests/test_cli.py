import json
import subprocess
import sys

from quadop.cli import main


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_dims_qd_aos(capsys):
    code, out, _ = run_cli(
        ["dims", "--qd", "AOS", "--n", "3", "--wmax", "4", "--format", "tsv"], capsys
    )
    assert code == 0
    assert out.splitlines()[0] == "S\t1\t3\t2\t0\t0"


def test_dims_family_relations(capsys):
    code, out, _ = run_cli(
        ["dims", "--family", "DK", "--relations", "--nmax", "4", "--format", "tsv"],
        capsys,
    )
    assert code == 0
    assert out.strip() == "0\t0\t2\t11"


def test_dims_bkw2_relations(capsys):
    code, out, _ = run_cli(
        ["dims", "--qd", "BKW", "--n", "2", "--relations", "--format", "tsv"], capsys
    )
    assert code == 0
    assert out.strip() == "0"


def test_build_shriek_dk4(capsys):
    code, out, _ = run_cli(["build", "--functor", "shriek", "--qd", "DK", "--n", "4"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["flavor"] == "symmetric"
    assert len(doc["generators"]) == 6
    assert len(doc["relations"]) == 4  # C(4,3) relation rows


def test_build_family_descriptor(capsys):
    code, out, _ = run_cli(["build", "--family", "LHG", "--k", "3", "--nmax", "8"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["symmetric"] is False
    assert doc["generator_dims"][8] == 6


def test_build_product_from_files(tmp_path, capsys):
    a_path = tmp_path / "a.json"
    code, out, _ = run_cli(
        ["build", "--functor", "lambda", "--qd", "DK", "--n", "3",
         "--out", str(a_path)], capsys
    )
    assert code == 0
    code, out, _ = run_cli(
        ["build", "--product", "black", "--qd", str(a_path), "--qd", str(a_path)],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["generators"]) == 9


def test_usage_errors(capsys):
    code, _, err = run_cli(["verify", "nosuch"], capsys)
    assert code == 2
    code, _, err = run_cli(["dims"], capsys)
    assert code == 2


def test_verify_exit_codes_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    args = ["verify", "diagram-faces", "--seed", "7", "--trials", "16"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    assert doc["runtime_ms"] == 0  # timing excluded by default
    assert doc["cases"] == sorted(doc["cases"], key=lambda c: c["name"])


def test_verify_minimality_subprocess():
    # end to end through the entry point, exercising exit code 0
    proc = subprocess.run(
        [sys.executable, "-m", "quadop.cli", "verify", "minimality",
         "--shell", "BKW", "--nmax", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert all(c["status"] != "FAIL" for c in doc["cases"])
