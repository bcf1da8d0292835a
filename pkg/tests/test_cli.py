import pytest

from gsp4sieve.cli import main
from gsp4sieve.report import VerdictClass, parse_machine_lines


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--fixture", "A", "-p", "769")
    assert code == 0 and "a=-6 b=402" in out
    code, out, _ = run(capsys, "count", "--fixture", "A2", "-p", "281")
    assert code == 0 and "a=1 b=148" in out


def test_count_errors(capsys, tmp_path):
    code, _, err = run(capsys, "count", "--fixture", "A3", "-p", "2")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "count", "-p", "3")
    assert code == 1
    bad = tmp_path / "bad.curve"
    bad.write_text("f = 1,2\n")
    assert run(capsys, "count", str(bad), "-p", "3")[0] == 1
    assert run(capsys, "count", str(tmp_path / "missing.curve"), "-p", "3")[0] == 1


def test_count_curve_file(capsys, tmp_path):
    path = tmp_path / "c.curve"
    path.write_text("label = C2\nf = 0,1,0,0,0,-1,1\n")
    code, out, _ = run(capsys, "count", str(path), "-p", "11")
    assert code == 0 and "x^4 + 7*x^3 + 31*x^2 + 77*x + 121" in out


def test_analyze_input_errors(capsys):
    assert run(capsys, "analyze", "--fixture", "A", "--phi", "7=1")[0] == 1
    assert run(capsys, "analyze", "--fixture", "A", "--conductor", "2^x")[0] == 1
    assert run(capsys, "analyze", "--fixture", "A2", "--semiabelian", "19", "--conductor", "2^8*19*151")[0] == 1
    assert run(capsys, "analyze", "--fixture", "A", "--samples", "bogus=3")[0] == 1
    assert run(capsys, "analyze", "--fixture", "A", "--primes", "3,4")[0] == 1


def test_analyze_writes_report_and_is_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "r1.txt", tmp_path / "r2.txt"
    assert run(capsys, "analyze", "--fixture", "A3", "-o", str(out1))[0] == 0
    assert run(capsys, "analyze", "--fixture", "A3", "-o", str(out2), "--workers", "1")[0] == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_machine_lines_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "--fixture", "A2")
    assert code == 0
    parsed = parse_machine_lines(out)
    # every per-prime verdict in the table section appears exactly once
    table = [line for line in out.splitlines() if line.startswith("ℓ = ")]
    assert len(table) == len(parsed.partition)
    for line in table:
        ell = int(line.split()[2].rstrip(":"))
        label = line.split(": ", 1)[1].split(" [")[0]
        assert parsed.partition[ell] == VerdictClass(label)
    assert set(parsed.candidates) == {e for e, c in parsed.partition.items() if c is VerdictClass.CANDIDATE}
    assert ('(5/ell)=-1', ()) in parsed.families


def test_analyze_incomplete_exit_code(capsys):
    code, out, err = run(capsys, "analyze", "--fixture", "A", "--no-hecke")
    assert code == 2 and "HeckePair case skipped" in out


def test_grouplab(capsys):
    code, out, _ = run(capsys, "grouplab", "--ell", "3", "--trials", "100")
    assert code == 0 and "Sp(4,3) closure = 51840, Dickson 100/100" in out
    code, out, _ = run(capsys, "grouplab", "--ell", "5", "--trials", "50")
    assert code == 0 and "Dickson 50/50" in out
    assert run(capsys, "grouplab", "--ell", "11")[0] == 1


def test_grouplab_regen_is_idempotent(capsys):
    code, out, _ = run(capsys, "grouplab", "--regen-orders")
    assert code == 0 and "unchanged" in out


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
