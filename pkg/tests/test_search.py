import json
import math
from fractions import Fraction

import pytest

from cuboidparam import (ALL_STATUSES, CheckpointCorrupt, CheckpointMismatch,
                         ConfigInvalid, HitRecord, Instance, ParamPoint,
                         SearchConfig, Solution, degree_probe,
                         enumerate_rationals, evaluate_cell, scan,
                         scan_to_file, verify_solution)
from cuboidparam.search import (RECORD_FIELDS, read_checkpoint,
                                write_checkpoint)
from cuboidparam.rationals import parse_rational


def test_enumerate_fixtures():
    assert enumerate_rationals(1) == [0, -1, 1]
    assert enumerate_rationals(2) == [0, -1, 1, -2, Fraction(-1, 2),
                                      Fraction(1, 2), 2]


def test_enumerate_h3_brute_force():
    got = enumerate_rationals(3)
    brute = {Fraction(p, q)
             for p in range(-3, 4) for q in range(1, 4)
             if math.gcd(p, q) == 1 and max(abs(p), q) <= 3}
    assert set(got) == brute
    assert len(got) == len(brute) == 15
    # heights never decrease along the sequence
    heights = [max(abs(r.numerator), r.denominator) for r in got]
    assert heights == sorted(heights)


def test_enumerate_rejects_bad_bound():
    with pytest.raises(ConfigInvalid):
        enumerate_rationals(0)


def test_config_validation():
    with pytest.raises(ConfigInvalid):
        SearchConfig(height_b=0).validate()
    with pytest.raises(ConfigInvalid):
        SearchConfig(parallelism=0).validate()
    with pytest.raises(ConfigInvalid):
        SearchConfig(instance="third").validate()
    SearchConfig().validate()


def test_config_digest_depends_on_output_shape_only():
    a = SearchConfig(height_b=2)
    assert a.digest() == SearchConfig(height_b=2, parallelism=4).digest()
    assert a.digest() != SearchConfig(height_b=3).digest()
    assert a.digest() != SearchConfig(height_b=2, require_positive=True).digest()


def test_cells_cartesian_product():
    cfg = SearchConfig(height_b=2, height_c=1, instance="both")
    cells = cfg.cells()
    assert len(cells) == 7 * 3 * 2
    keys = {(b, c, inst) for b, c, inst in cells}
    assert len(keys) == len(cells)


def test_evaluate_cell_singular():
    rec = evaluate_cell(Fraction(1), Fraction(2), Instance.FIRST)
    assert rec.status == "Singular"


def test_evaluate_cell_hit_0_1():
    rec = evaluate_cell(Fraction(0), Fraction(1), Instance.FIRST)
    assert rec.status == "Hit"
    assert rec.d == Fraction(-4, 27)
    assert set(rec.witnesses) == {-3, 0, 3}
    assert sorted(rec.solution.x) == [0, 0, 1]
    assert rec.verification.all_pass
    assert rec.verification.positivity is False


def test_evaluate_cell_no_rational_root_1_1():
    rec = evaluate_cell(Fraction(1), Fraction(1), Instance.FIRST)
    assert rec.status == "NoRationalRootAtBound"
    assert rec.d == Fraction(-1922, 35937)


def test_scan_invariants_h2():
    cfg = SearchConfig(height_b=2, height_c=2, instance="both")
    records = [rec for _, rec in scan(cfg)]
    assert len(records) == 7 * 7 * 2
    for rec in records:
        assert rec.status in ALL_STATUSES
        if rec.status == "Hit":
            # soundness: re-verify from scratch
            again = verify_solution(ParamPoint(rec.b, rec.c),
                                    Solution(rec.solution.x, rec.solution.d))
            assert again.all_pass
        if rec.status == "NoRealRoot":
            assert rec.d > 0
        if rec.d is not None and rec.d <= 0:
            assert rec.status != "NoRealRoot"


def test_scan_parallel_output_identical():
    cfg1 = SearchConfig(height_b=1, height_c=2, instance="both")
    cfg2 = SearchConfig(height_b=1, height_c=2, instance="both",
                        parallelism=3)
    lines1 = [rec.to_line() for _, rec in scan(cfg1)]
    lines2 = [rec.to_line() for _, rec in scan(cfg2)]
    assert lines1 == lines2


def test_record_line_round_trip():
    rec = evaluate_cell(Fraction(0), Fraction(1), Instance.FIRST)
    parsed = HitRecord.parse_line(rec.to_line())
    assert list(parsed) == list(RECORD_FIELDS)
    assert parsed["b"] == "0" and parsed["c"] == "1"
    assert parsed["instance"] == "first"
    assert parsed["status"] == "Hit"
    assert parsed["D"] == "-4/27"
    assert [parse_rational(t) for t in parsed["witnesses"].split(",")] \
        == [-3, 0, 3]
    assert parsed["all_pass"] == "true"
    assert parsed["positivity"] == "false"


def test_record_line_empty_fields():
    rec = evaluate_cell(Fraction(1), Fraction(2), Instance.SECOND)
    parsed = HitRecord.parse_line(rec.to_line())
    assert parsed["D"] == "" and parsed["witnesses"] == ""
    assert parsed["x1"] == "" and parsed["positivity"] == ""
    with pytest.raises(ValueError):
        HitRecord.parse_line("too\tfew\tfields")


def test_scan_to_file_and_resume(tmp_path):
    out = tmp_path / "scan.tsv"
    ck = tmp_path / "ck.json"
    cfg = SearchConfig(height_b=1, height_c=2, instance="both",
                       checkpoint_path=str(ck))
    counts = scan_to_file(cfg, str(out))
    full = out.read_text()
    assert sum(counts.values()) == 3 * 7 * 2
    assert counts["Hit"] >= 1

    # simulate an interrupt after cell index 10
    lines = full.splitlines(keepends=True)
    part = tmp_path / "part.tsv"
    part.write_text("".join(lines[:11]))
    cut_counts = {s: 0 for s in ALL_STATUSES}
    for line in lines[:11]:
        cut_counts[line.split("\t")[3]] += 1
    write_checkpoint(str(ck), cfg, 10, cut_counts)
    resumed = scan_to_file(cfg, str(part), resume=True)
    assert part.read_text() == full          # byte-identical
    assert resumed == counts


def test_resume_mismatch_and_corrupt(tmp_path):
    ck = tmp_path / "ck.json"
    cfg = SearchConfig(height_b=1, height_c=1, checkpoint_path=str(ck))
    write_checkpoint(str(ck), cfg, 3, {s: 0 for s in ALL_STATUSES})
    other = SearchConfig(height_b=2, height_c=1, checkpoint_path=str(ck))
    with pytest.raises(CheckpointMismatch):
        read_checkpoint(str(ck), other)
    with pytest.raises(CheckpointMismatch):
        scan_to_file(other, str(tmp_path / "x.tsv"), resume=True)

    ck.write_text("")
    with pytest.raises(CheckpointCorrupt):
        read_checkpoint(str(ck), cfg)
    ck.write_text(json.dumps({"digest": cfg.digest()}))
    with pytest.raises(CheckpointCorrupt):
        read_checkpoint(str(ck), cfg)


def test_resume_requires_checkpoint_path(tmp_path):
    cfg = SearchConfig(height_b=1, height_c=1)
    with pytest.raises(ConfigInvalid):
        scan_to_file(cfg, str(tmp_path / "x.tsv"), resume=True)


def test_require_positive_filters_degenerate_hits():
    plain = evaluate_cell(Fraction(0), Fraction(1), Instance.FIRST)
    assert plain.status == "Hit" and plain.verification.positivity is False
    filtered = evaluate_cell(Fraction(0), Fraction(1), Instance.FIRST,
                             require_positive=True)
    assert filtered.status != "Hit"


def test_degree_probe():
    assert degree_probe(Instance.FIRST) == 42
    assert degree_probe(Instance.SECOND) == 40
