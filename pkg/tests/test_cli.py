import io
import json

from invlab.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_inv_c3():
    code, text = run_cli("inv", "3:101")
    assert code == 0
    assert "inv = 1" in text
    assert "family:" in text and "order:" in text


def test_tmr_transitive():
    code, text = run_cli("tmr", "3:111")
    assert code == 0
    assert "tmr = 0" in text


def test_inv_json_certificate_checks_back(tmp_path):
    code, text = run_cli("inv", "3:101", "--json")
    assert code == 0
    cert = json.loads(text)
    assert cert["schema"] == "invlab.certificate/1"
    assert cert["kind"] == "family" and cert["value"] == 1
    path = tmp_path / "cert.json"
    path.write_text(text)
    code, text = run_cli("check", "3:101", "--cert", str(path))
    assert code == 0 and "certificate ok" in text


def test_check_rejects_wrong_certificate(tmp_path):
    code, text = run_cli("tmr", "3:101", "--json")
    cert = json.loads(text)
    cert["value"] = 0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(cert))
    code, text = run_cli("check", "3:101", "--cert", str(path))
    assert code == 1 and "FAILED" in text


def test_dijoin_njoin_commands():
    code, text = run_cli("dijoin", "3:101", "3:101")
    assert code == 0 and text.strip() == "6:101111111111101"
    code, text = run_cli("njoin", "1:", "1:", "1:")
    assert code == 0 and text.strip() == "3:111"


def test_extend_command():
    code, text = run_cli("extend", "3;0>1,1>2", "--family", "[]")
    assert code == 0 and text.strip() == "3:111"
    code, text = run_cli("extend", "3:101", "--family", "[]")
    assert code == 1 and "error" in text


def test_enumerate_command():
    code, text = run_cli("enumerate", "3", "--iso")
    assert code == 0 and len(text.strip().splitlines()) == 2
    code, text = run_cli("enumerate", "3")
    assert len(text.strip().splitlines()) == 8


def test_canonical_command():
    code, a = run_cli("canonical", "3:101")
    _, b = run_cli("canonical", "3:110")
    assert code == 0
    assert a != b  # C3 and a transitive relabeling differ


def test_verify_theorems_small():
    code, text = run_cli("verify-theorems", "--max-n", "3")
    assert code == 0
    assert "violations         0" in text


def test_scan_command_json():
    code, text = run_cli("scan", "tmr-additivity", "--n1", "3", "--n2", "3", "--json")
    assert code == 0
    report = json.loads(text)
    assert report["schema"] == "invlab.scan-report/1"
    assert report["violations"] == []
    assert report["scope"]["scan"] == "tmr-additivity"


def test_scan_schur_sampled():
    code, text = run_cli("scan", "schur-3x3", "--n2", "2", "--budget", "50", "--seed", "7")
    assert code == 0


def test_usage_errors_name_the_input():
    code, text = run_cli("inv", "3:10z")
    assert code == 2 and "'z'" in text
    code, _ = run_cli("nonsense")
    assert code == 2
    code, text = run_cli("tmr", "3;0>1")
    assert code == 2 and "not a tournament" in text
    code, text = run_cli("enumerate", "9", "--iso")
    assert code == 2 and "n <= 7" in text
    code, text = run_cli("canonical", "3;0>1")
    assert code == 2


def test_tmr_certificate_checks_back(tmp_path):
    code, text = run_cli("tmr", "5:1010110100", "--json")
    assert code == 0
    path = tmp_path / "cert.json"
    path.write_text(text)
    code, text = run_cli("check", "5:1010110100", "--cert", str(path))
    assert code == 0 and "certificate ok" in text


def test_inconclusive_exit_code():
    code, text = run_cli("inv", "6:101111111111101", "--node-limit", "2")
    assert code == 3 and "inconclusive" in text


def test_stdin_batch(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3:101\n3:111\n"))
    code, text = run_cli("inv", "-")
    assert code == 0
    assert text.count("inv = ") == 2


def test_byte_identical_reruns():
    first = run_cli("inv", "5:1011010110")
    second = run_cli("inv", "5:1011010110")
    assert first == second
    a = run_cli("scan", "inv-lower-bound", "--n1", "3", "--n2", "3", "--json")
    b = run_cli("scan", "inv-lower-bound", "--n1", "3", "--n2", "3", "--json")
    # elapsed differs between runs; everything else is byte-identical
    ja, jb = json.loads(a[1]), json.loads(b[1])
    ja.pop("elapsed"), jb.pop("elapsed")
    assert a[0] == b[0] and ja == jb
