"""Candidate generation and the odd-diameter maximizer classification."""

import math

import pytest

from steklov_trees import (
    ASParams,
    candidate_profiles,
    canonical_code,
    classify,
    compare_candidates,
    diameter,
    make_path,
    recognize_spider,
    render_shorthand,
    spider_lambda2,
    threshold_data,
)

from oracles import spider_lambda2_exact, bracket_contains


def _winner_names(result):
    return sorted(render_shorthand(t) for t, _ in result.winners)


# --------------------------- candidate profiles ---------------------------


def test_candidate_profiles_path_marker():
    assert candidate_profiles(6, 5) is None


def test_candidate_profiles_coinciding():
    pair = candidate_profiles(9, 5)
    assert (pair.M, pair.s, pair.q_minus, pair.q_plus) == (3, 1, 3, 3)
    assert pair.as_minus == pair.as_plus == ASParams(2, 3, 1, 0)


def test_candidate_profiles_split():
    pair = candidate_profiles(15, 9)
    assert (pair.M, pair.s, pair.q_minus, pair.q_plus) == (5, 2, 2, 3)
    assert pair.as_minus == ASParams(4, 2, 2, 1)
    assert pair.as_plus == ASParams(4, 3, 1, 2)


def test_candidate_profiles_rejects_out_of_scope():
    with pytest.raises(ValueError, match="Lin and Zhao"):
        candidate_profiles(8, 4)
    with pytest.raises(ValueError):
        candidate_profiles(3, 1)
    with pytest.raises(ValueError):
        candidate_profiles(5, 5)


# ------------------------------- classify ---------------------------------


def test_classify_path_case():
    result = classify(6, 5)
    assert result.case_tag == "path"
    assert _winner_names(result) == ["path:5"]
    assert abs(result.winners[0][1] - 0.4) <= 1e-11


def test_classify_divisible_cases():
    result = classify(7, 5)
    assert result.case_tag == "divisible"
    assert _winner_names(result) == ["spider:3,2,1"]
    assert abs(result.winners[0][1] - (6 - math.sqrt(3)) / 11) <= 1e-11

    result = classify(9, 5)
    assert result.case_tag == "divisible"
    assert _winner_names(result) == ["spider:3,2,1,1,1"]

    result = classify(10, 7)
    assert result.case_tag == "divisible"
    assert _winner_names(result) == ["spider:4,3,2"]


def test_classify_single_small_case():
    result = classify(9, 7)
    assert result.case_tag == "single_small"
    assert _winner_names(result) == ["spider:4,3,1"]


def test_classify_threshold_compare_case():
    result = classify(15, 9)
    assert result.case_tag == "threshold_compare"
    assert not result.tie_flag
    assert _winner_names(result) == ["spider:5,4,3,2"]
    res = spider_lambda2((5, 4, 3, 2))
    assert bracket_contains(spider_lambda2_exact((5, 4, 3, 2)), result.winners[0][1], 1e-10)
    assert abs(result.winners[0][1] - res.value) <= 1e-11


def test_classify_constant_regime_cases():
    # r=6, t=1 sits in the always-A regime once k reaches s.
    n = 2 * 6 + 2 + (3 * 3 + 1)
    result = classify(n, 13)
    assert result.case_tag == "threshold_A"
    assert _winner_names(result) == ["spider:7,6,4,3,3"]

    # r=5, t=1 is always-B; the winner is the q_plus candidate.
    n = 2 * 5 + 2 + (3 * 3 + 1)
    result = classify(n, 11)
    assert result.case_tag == "threshold_B"
    assert _winner_names(result) == ["spider:6,5,3,3,2,2"]


def test_classify_initial_orders_cases():
    result = classify(11, 7)
    assert result.case_tag == "initial_orders"
    assert _winner_names(result) == ["spider:4,3,2,1"]
    result = classify(13, 9)
    assert result.case_tag == "initial_orders"
    assert _winner_names(result) == ["spider:5,4,3"]


def test_classify_rejects_out_of_scope():
    with pytest.raises(ValueError, match="Lin and Zhao"):
        classify(10, 6)
    with pytest.raises(ValueError):
        classify(4, 3.0 if False else 1)
    with pytest.raises(ValueError):
        classify(7, 9)


def test_classify_winners_attain_max():
    for n, d in [(7, 5), (12, 5), (14, 7), (15, 9), (16, 9), (13, 7)]:
        result = classify(n, d)
        best = max(lam for _, lam in result.candidates)
        for tree, lam in result.winners:
            assert abs(lam - best) <= 1e-9 * max(1.0, best)
            assert tree.n == n
            assert diameter(tree) == d
        winner_codes = {canonical_code(t) for t, _ in result.winners}
        for tree, lam in result.candidates:
            if canonical_code(tree) in winner_codes:
                continue
            assert lam < best


def test_classify_winner_realizable_grid():
    for d in (3, 5, 7, 9):
        for n in range(d + 1, d + 9):
            result = classify(n, d)
            for tree, _ in result.winners:
                assert tree.n == n
                assert diameter(tree) == d
                assert recognize_spider(tree) is not None


# --------------------------- candidate comparison --------------------------


def test_compare_candidates_small():
    rep = compare_candidates(2, 2)
    assert [q for q, _ in rep.rows] == [1, 2]
    assert abs(rep.rows[0][1] - 3 / 8) <= 1e-11
    assert abs(rep.rows[1][1] - (17 - math.sqrt(17)) / 34) <= 1e-11
    assert rep.argmax_q == (2,)
    assert not rep.tie_flag


def test_compare_candidates_single_feasible():
    rep = compare_candidates(1, 3)
    assert [q for q, _ in rep.rows] == [3]
    assert rep.argmax_q == (3,)


def test_compare_candidates_predicted_peak():
    rep = compare_candidates(4, 5)
    assert set(rep.argmax_q) <= {2, 3}
    assert (rep.q_minus, rep.q_plus) == (2, 3)


def test_constant_regimes_agree_with_direct_comparison():
    """Where the quadratic has constant sign the ordering is unconditional."""
    for r in range(3, 10):
        s = (r + 1) // 2
        for t in range(1, s):
            td = threshold_data(r, t)
            if td.regime == "threshold":
                continue
            for k in range(s, s + 9):
                a = spider_lambda2((r + 1, r) + (s + 1,) * t + (s,) * (k - t)).value
                b = spider_lambda2(
                    (r + 1, r) + (s,) * (k + t - s + 1) + (s - 1,) * (s - t)
                ).value
                if td.regime == "A_always":
                    assert a > b
                else:
                    assert b > a
