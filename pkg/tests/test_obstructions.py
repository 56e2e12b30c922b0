from twobridge import (
    ObstructionVerdict,
    alexander_polynomial,
    classify,
    Kind,
    obstruct,
    scan,
    torus_targets,
    validate,
)
from twobridge.obstructions import not_ruled_out, same_class


def test_obstruct_examples():
    report = obstruct(validate(5, 3), validate(3, 1))
    assert report.verdict is ObstructionVerdict.RULED_OUT
    assert not report.alexander_divides

    same = obstruct(validate(5, 3), validate(5, 3))
    assert same.verdict is ObstructionVerdict.NOT_RULED_OUT
    assert same.alexander_divides and same.riley_divides

    assert obstruct(validate(7, 3), validate(5, 3)).verdict is ObstructionVerdict.RULED_OUT


def test_reasons_are_tagged():
    report = obstruct(validate(5, 3), validate(3, 1))
    assert any(r.startswith("alexander:") for r in report.reasons)
    assert any("heuristic" in r for r in report.reasons)


def test_scan_small():
    reports = scan(5)
    assert len(reports) == 6  # 3 forms, ordered pairs
    assert all(r.verdict is ObstructionVerdict.RULED_OUT for r in reports)
    assert all(r.source != r.target for r in reports)
    keys = [(r.source, r.target) for r in reports]
    assert keys == sorted(keys)
    assert scan(3) == []


def test_scan_jobs_deterministic():
    assert scan(9, jobs=1) == scan(9, jobs=3)


def test_degree_monotonicity():
    for r in scan(11):
        ds = alexander_polynomial(r.source).degree
        dt = alexander_polynomial(r.target).degree
        if dt > ds:
            assert r.verdict is ObstructionVerdict.RULED_OUT


def test_both_directions_survive_only_for_associates():
    for r in scan(13):
        back = obstruct(r.target, r.source)
        if not r.ruled_out and not back.ruled_out:
            a = alexander_polynomial(r.source)
            b = alexander_polynomial(r.target)
            assert a.degree == b.degree
            assert a == b  # normalized representatives coincide


def test_torus_source_consistency_with_torus_targets():
    # survivorship against (p', 1) targets must match the Alexander torus-target list
    for p in (9, 15, 21, 25):
        source = validate(p, 1)
        targets = set(torus_targets(alexander_polynomial(source)))
        for p2 in range(3, p + 1, 2):
            target = validate(p2, 1)
            if same_class(source, target):
                continue
            report = obstruct(source, target)
            assert report.alexander_divides == ((2, p2) in targets)


def test_known_torus_quotient_survives():
    # T(2,9) -> T(2,3) passes the Alexander test; the reverse cannot
    down = obstruct(validate(9, 1), validate(3, 1))
    assert down.verdict is ObstructionVerdict.NOT_RULED_OUT
    up = obstruct(validate(3, 1), validate(9, 1))
    assert up.verdict is ObstructionVerdict.RULED_OUT


def test_not_ruled_out_helper():
    reports = scan(9)
    alive = not_ruled_out(reports)
    assert [(r.source.p, r.source.q, r.target.p, r.target.q) for r in alive] == [(9, 1, 3, 1)]
