import pytest

from cuboidparam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs(capsys):
    code, out, _ = run(capsys, "coeffs", "1/1", "1/1")
    assert code == 0
    assert out.splitlines() == [
        "E10 = 1/2", "E20 = -3/8", "E30 = 0",
        "E01 = -1/2", "E02 = -7/8", "E03 = 3/8",
        "E21 = 3/8", "E11 = 1/2", "E12 = -1",
    ]


def test_coeffs_printed_variant(capsys):
    code, out, _ = run(capsys, "--e21-variant", "printed", "coeffs", "1", "1")
    assert code == 0
    assert "E21 = -7/24" in out


def test_coeffs_singular_exit_code(capsys):
    code, _, err = run(capsys, "coeffs", "1", "2")
    assert code == 3
    assert "L1" in err


def test_singular(capsys):
    code, out, _ = run(capsys, "singular", "0", "0")
    assert code == 0
    assert out.strip() == "singular: L2 Q R R21"
    code, out, _ = run(capsys, "singular", "1", "1")
    assert out.strip() == "nonsingular"


def test_dparam(capsys):
    code, out, _ = run(capsys, "dparam", "first", "0/1", "1/1")
    assert (code, out.strip()) == (0, "-4/27")
    _, out, _ = run(capsys, "dparam", "second", "1", "1", "--explicit")
    assert out.strip() == "-18050/328509"
    _, out, _ = run(capsys, "dparam", "second", "1", "1", "--pipeline")
    assert out.strip() == "-18050/328509"


def test_dparam_degenerate_exit_code(capsys):
    # the x-cubic at (0,1) is fine but the d-cubic is degenerate (B0 = 0)
    code, _, err = run(capsys, "dparam", "second", "0", "1")
    assert code == 4
    assert err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "1", "-7", "14", "-8")
    assert code == 0
    assert "has_three_rational_roots = true" in out
    assert "roots = 1 2 4" in out
    assert "D = -400/9261" in out


def test_sextic(capsys):
    code, out, _ = run(capsys, "sextic", "first", "0", "1")
    assert code == 0
    # D = -4/27: 27D+4 = 0 constant term, so the sextic is divisible by w^2
    assert out.strip().endswith("w^2")


def test_param_and_complete(capsys):
    code, out, _ = run(capsys, "param", "first", "0", "1", "0")
    assert (code, out.split()) == (0, ["0", "0", "1"])
    code, out, _ = run(capsys, "complete", "second", "0", "1", "0", "1", "-1")
    assert (code, out.split()) == (0, ["1", "0", "0"])


def test_complete_singular_exit_code(capsys):
    code, _, err = run(capsys, "complete", "first", "0", "1", "0", "0", "1")
    assert code == 3 and err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "0", "1",
                       "1", "0", "0", "0", "1", "-1")
    assert code == 0
    assert "all_pass=true positivity=false" in out
    code, out, _ = run(capsys, "verify", "0", "1",
                       "1", "0", "1/2", "0", "1", "-1")
    assert code == 1
    assert "all_pass=false" in out


def test_ring_verify(capsys):
    code, out, _ = run(capsys, "ring-verify", "first", "1", "1")
    assert (code, out.strip()) == (0, "ok=true")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "1/0", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "nonsense", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["dparam", "third", "1", "1"])
    assert exc.value.code == 2


def test_search_stdout(capsys):
    code, out, _ = run(capsys, "search", "--height-b", "1", "--height-c", "1",
                       "--instance", "first")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 9
    assert any("\tHit\t" in l for l in lines)


def test_search_to_file_and_resume_exit_code(capsys, tmp_path):
    out_file = tmp_path / "scan.tsv"
    ck = tmp_path / "ck.json"
    code, _, err = run(capsys, "search", "--height-b", "1", "--height-c", "1",
                       "--output", str(out_file), "--checkpoint", str(ck))
    assert code == 0
    assert out_file.read_text().count("\n") == 18
    assert "Hit" in err
    # altering the grid invalidates the checkpoint
    code, _, err = run(capsys, "search", "--height-b", "2", "--height-c", "1",
                       "--output", str(out_file), "--checkpoint", str(ck),
                       "--resume")
    assert code == 5 and err


def test_degree_probe_cli(capsys):
    code, out, _ = run(capsys, "degree-probe", "first")
    assert (code, out.strip()) == (0, "42")


def test_report_cli(capsys, tmp_path):
    out_file = tmp_path / "scan.tsv"
    run(capsys, "search", "--height-b", "1", "--height-c", "1",
        "--output", str(out_file))
    code, out, _ = run(capsys, "report", str(out_file),
                       "--out-dir", str(tmp_path / "figs"))
    assert code == 0
    paths = out.split()
    assert len(paths) == 3
    for p in paths:
        assert p.endswith(".png")
        with open(p, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"
