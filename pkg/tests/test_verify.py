"""Certification runs: brute force vs classifier, sweeps, cross-checks."""

import math

import pytest

from steklov_trees import (
    DoubleSpiderProfile,
    SpiderProfile,
    Tree,
    brute_force_extremizers,
    canonical_code,
    enumerate_trees,
    make_double_spider,
    make_path,
    make_spider,
    recognize_spider,
    verify_classification,
    verify_cross_methods,
    verify_domination,
    verify_unimodality,
)


def _spider_code(*lengths):
    return canonical_code(make_spider(SpiderProfile(lengths)))


# ----------------------------- brute force -----------------------------


def test_brute_force_path_only_order():
    codes, best = brute_force_extremizers(6, 5)
    assert codes == (canonical_code(make_path(5)),)
    assert abs(best - 0.4) <= 1e-12


def test_brute_force_small_orders():
    codes, best = brute_force_extremizers(7, 5)
    assert codes == (_spider_code(3, 2, 1),)
    assert abs(best - (6 - math.sqrt(3)) / 11) <= 1e-11

    codes, _ = brute_force_extremizers(9, 5)
    assert codes == (_spider_code(3, 2, 1, 1, 1),)


def test_brute_force_deterministic_across_jobs():
    assert brute_force_extremizers(12, 5, jobs=3) == brute_force_extremizers(12, 5, jobs=1)


def test_brute_force_rejects_bad_jobs():
    with pytest.raises(ValueError):
        brute_force_extremizers(6, 5, jobs=0)


# ------------------------- classification runs -------------------------


def test_verify_classification_trivial_order():
    report = verify_classification(6, 5)
    assert report.verdict == "match"
    assert report.trees_enumerated == 1
    assert report.argmax_codes == report.classifier_codes
    assert abs(report.argmax_lambda2 - 0.4) <= 1e-12


def test_verify_classification_divisible_case():
    report = verify_classification(12, 7)
    assert report.verdict == "match"
    assert report.classifier_codes == (_spider_code(4, 3, 2, 2),)


def test_verify_classification_threshold_case():
    report = verify_classification(15, 9)
    assert report.verdict == "match"
    assert report.classifier_codes == (_spider_code(5, 4, 3, 2),)


def test_verify_classification_reports_match_small_grid():
    for d in (3, 5):
        for n in range(d + 1, 11):
            report = verify_classification(n, d)
            assert report.verdict == "match", (n, d, report)
            assert report.n == n and report.D == d
            assert report.trees_enumerated >= 1
            assert report.wall_time >= 0.0


def test_verify_classification_deterministic_across_jobs():
    a = verify_classification(12, 5, jobs=1)
    b = verify_classification(12, 5, jobs=3)
    assert a.trees_enumerated == b.trees_enumerated
    assert a.argmax_codes == b.argmax_codes
    assert a.argmax_lambda2 == b.argmax_lambda2
    assert a.classifier_codes == b.classifier_codes
    assert a.verdict == b.verdict


def test_brute_force_winners_are_spiders():
    for d in (3, 5):
        for n in range(d + 1, 11):
            by_code = {canonical_code(t): t for t in enumerate_trees(n, d)}
            codes, _ = brute_force_extremizers(n, d)
            for code in codes:
                assert recognize_spider(by_code[code]) is not None


# ----------------------------- unimodality -----------------------------


def test_unimodality_two_candidate_example():
    report = verify_unimodality(2, 2)
    assert report.passed
    assert report.peak_q == (2,)
    assert dict(report.rows)[1] == pytest.approx(3.0 / 8.0, abs=1e-12)
    assert dict(report.rows)[2] == pytest.approx((17 - math.sqrt(17)) / 34, abs=1e-12)


def test_unimodality_single_feasible_q():
    report = verify_unimodality(1, 5)
    assert report.passed
    assert report.rows == ((5, pytest.approx(7.0 / 13.0, abs=1e-12)),)
    assert report.peak_q == (5,)


def test_unimodality_interior_peak():
    report = verify_unimodality(5, 12)
    assert report.passed
    assert report.peak_q == (4,)


def test_unimodality_small_grid():
    for r in range(1, 7):
        for m in range(1, 21):
            report = verify_unimodality(r, m)
            assert report.passed, (r, m, report.detail)
            assert report.detail == ""


# ------------------------------ domination ------------------------------


def test_domination_trivial_order():
    report = verify_domination(6, 5)
    assert report.passed
    assert report.trees_checked == 1
    assert report.equality_count == 1
    assert abs(report.worst_margin) <= 1e-9


def test_domination_full_enumeration():
    for n in (7, 11):
        report = verify_domination(n, 5)
        assert report.passed, report.detail
        assert report.trees_checked == sum(1 for _ in enumerate_trees(n, 5))
        assert report.worst_margin >= -1e-9


# ----------------------------- cross methods -----------------------------


def test_cross_methods_on_path():
    report = verify_cross_methods(make_path(7))
    assert report.passed
    names = [name for name, _ in report.values]
    assert names == ["matrix", "distance", "spider_root", "double_spider_root"]
    for _, lam in report.values:
        assert abs(lam - 2.0 / 7.0) <= 1e-10


def test_cross_methods_on_spider():
    report = verify_cross_methods(make_spider(SpiderProfile((5, 4, 3, 2))))
    assert report.passed
    assert dict(report.values).keys() == {"matrix", "distance", "spider_root", "double_spider_root"}


def test_cross_methods_on_double_spider():
    report = verify_cross_methods(make_double_spider(DoubleSpiderProfile((3, 2, 1), (3, 3))))
    assert report.passed
    names = [name for name, _ in report.values]
    assert "double_spider_root" in names
    assert "spider_root" not in names


def test_cross_methods_on_generic_tree():
    t = Tree(7, ((0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)))
    report = verify_cross_methods(t)
    assert report.passed
    assert [name for name, _ in report.values] == ["matrix", "distance"]


def test_cross_methods_pass_on_catalog():
    for n in range(2, 10):
        for d in range(1, n):
            for t in enumerate_trees(n, d):
                report = verify_cross_methods(t)
                assert report.passed, (n, report.detail)
