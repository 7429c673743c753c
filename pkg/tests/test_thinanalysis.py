import warnings

import pytest

from thinlie.bracketlang import parse
from thinlie.ffield import GF
from thinlie.nqengine import Presentation, build, central_quotient, change_generators
from thinlie.presets import free_presentation
from thinlie.thinanalysis import (INF, AnalysisError, classify_degree, covering_diagnostic, diamond_report,
                                  earliest_finite_after_q, expected_record, find_standard_generators,
                                  match_expected_pattern, type_text)

from conftest import instance

F7 = GF(7)


def test_main_instance_diamonds(main_instance):
    rep = main_instance.report
    assert rep.horizon == 118
    assert rep.record(1).kind == "first"
    assert rep.record(7).kind == "genuine" and rep.record(7).type == F7(6)
    for t in range(2, 8):
        assert rep.type_at(t) == INF
    assert rep.type_at(8) == F7(3)
    assert rep.type_at(15) == F7(0)
    assert rep.record(91).kind == "fake0" and rep.record(90).alternate == 91
    assert rep.type_at(1) == F7(6)
    assert rep.type_at(30) is None
    assert rep.record(8).kind == "none" and rep.type_at(0) is None


def test_main_instance_verdicts(main_instance):
    v = main_instance.report.verdicts
    assert v == {"covering": True, "thin": True, "no_consecutive": True, "spacing": True,
                 "y_centralizer": True, "pattern": True}
    assert main_instance.pattern == (True, [])
    assert earliest_finite_after_q(main_instance.report) == 8


def test_fake1_kept_on_residue_one(fake1_instance):
    rep = fake1_instance.report
    r49, r50 = rep.record(49), rep.record(50)
    assert r49.kind == "fake1" and r49.type == F7.one
    assert r50.kind == "none" and r50.alternate == 49
    assert r49.witness["[w y]"] == "0"
    assert fake1_instance.pattern[0]


def test_lambda_zero_fake0(lambda0_instance):
    rep = lambda0_instance.report
    assert rep.record(49).kind == "fake0" and rep.record(49).type == F7.zero
    assert rep.record(48).kind == "none" and rep.record(48).alternate == 49
    assert rep.record(91).kind == "fake1"
    assert lambda0_instance.pattern[0]


def test_minus_one_everywhere():
    inst = instance(7, 7, 1, 6, 64)
    finite = [r for r in inst.report.diamonds if r.type not in (None, INF)]
    assert [r.t for r in finite] == [1, 8]
    assert all(r.type == F7(6) for r in finite)
    assert inst.pattern[0]


def test_expected_record_progression():
    lam = F7(3)
    assert expected_record(1, 7, 1, lam) == ("genuine", F7(6))
    assert all(expected_record(t, 7, 1, lam) == ("genuine", INF) for t in range(2, 8))
    assert expected_record(8, 7, 1, lam) == ("genuine", lam)
    assert expected_record(15, 7, 1, lam) == ("fake0", F7(0))
    assert expected_record(22, 7, 1, lam) == ("genuine", F7(3 * 4 - 1))
    assert expected_record(8, 7, 1, F7(1)) == ("fake1", F7(1))
    F25 = GF(5, 2)
    assert expected_record(6, 5, 1, F25(2)) == ("genuine", F25(2))


def test_mutated_report_breaks_pattern(main_instance):
    import copy
    rep = copy.deepcopy(main_instance.report)
    rep.record(49).type = F7(4)
    ok, diffs = match_expected_pattern(rep, 7, 7, 1, F7(3))
    assert not ok and diffs == ["degree 49: expected genuine 3, got genuine 4"]
    assert rep.verdicts["pattern"] is False


def test_scrambled_generators_are_recovered(main_instance):
    L = main_instance.L
    S = change_generators(L, [1, 2], [3, 1])
    sg = find_standard_generators(S)
    assert not sg.is_identity
    T = change_generators(S, sg.x, sg.y)
    rep = diamond_report(T, params=main_instance.P.params)
    assert match_expected_pattern(rep, 7, 7, 1, F7(3))[0]
    assert find_standard_generators(L).is_identity


def test_standard_generators_witness(main_instance):
    sg = find_standard_generators(main_instance.L)
    assert sg.witness["y_line"] == ["0", "1"]
    assert sg.witness["valid_c"][0] == "0"


def test_abelian_quotient_is_not_thin():
    P = Presentation(F7, 7, [parse("[x y]", None, F7)])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        L = central_quotient(build(P, 12))
    with pytest.raises(AnalysisError):
        find_standard_generators(L)
    rep = diamond_report(L)
    assert rep.verdicts["thin"] is False
    assert "no second diamond within the horizon" in rep.discrepancies


def test_free_algebra_fails_covering():
    A = build(free_presentation(7), 6)
    assert covering_diagnostic(A, 3) == "dim L_4 = 3 > 2"
    assert covering_diagnostic(A, 1) is None
    rep = diamond_report(A)
    assert rep.verdicts["covering"] is False and rep.verdicts["thin"] is False


def test_classification_needs_next_degree(main_instance):
    with pytest.raises(AnalysisError):
        classify_degree(main_instance.L, 119)
    with pytest.raises(AnalysisError):
        diamond_report(main_instance.L, horizon=119)
    A = build(free_presentation(7), 4)
    A.q = None
    with pytest.raises(AnalysisError):
        diamond_report(A)


def test_type_text():
    assert type_text(None) is None
    assert type_text(INF) == "inf"
    assert type_text(GF(5, 2).parse("1+t")) == "1+1*t"


def test_json_records(main_instance):
    assert main_instance.report.record(49).to_json() == {"degree": 49, "t": 8, "kind": "genuine", "type": "3"}
