"""Classification of the lambda_2-maximizing trees of odd diameter.

Fix the order n and an odd diameter D = 2r+1, and let M = n - D - 1 be
the vertex mass left over after the longest path.  The maximizers are
the path when M = 0 and otherwise generalized almost seesaw trees:
spiders with principal branches (r+1, r) and the lateral mass M spread
as evenly as possible over q branches.  Only the two branch counts
nearest M/s, s = ceil(r/2), can win, and which of the two does is
decided by the threshold data of the comparison quadratic, cross-checked
here against direct root comparison in every case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .roots import q_range_integer, sigma_rM, spider_lambda2, threshold_data
from .trees import ASParams, Tree, make_as_tree, make_path

# Two lambda_2 values this close (relatively) are reported as tied
# rather than ordered; genuine ties exist only at integer kappa.
_TIE_RTOL = 1e-9

# Strictness band for the unimodality assertions on the sigma table.
_STRICT_RTOL = 1e-12


@dataclass(frozen=True)
class CandidatePair:
    """The two nearly-balanced candidates for given (n, D) with M >= 1.

    q_minus and q_plus are the branch counts bracketing M/s; the
    parameter sets come from the Euclidean divisions M = q*c + t.  The
    pair collapses (as_minus == as_plus) when s divides M or M < s.
    """

    M: int
    s: int
    q_minus: int
    q_plus: int
    as_minus: ASParams
    as_plus: ASParams


@dataclass(frozen=True)
class ClassificationResult:
    """Winner set for (n, D), with the case of the decision recorded.

    candidates holds every candidate tree with its lambda_2; winners is
    the sublist attaining the maximum, with ties (gap below 1e-9
    relative) kept whole and flagged.
    """

    case_tag: str
    candidates: tuple[tuple[Tree, float], ...]
    winners: tuple[tuple[Tree, float], ...]
    tie_flag: bool


@dataclass(frozen=True)
class CandidateComparison:
    """Value table of the balanced family over every feasible q."""

    r: int
    M: int
    s: int
    q_minus: int
    q_plus: int
    rows: tuple[tuple[int, float], ...]
    argmax_q: tuple[int, ...]
    tie_flag: bool


def _check_odd_case(n: int, D: int) -> None:
    if D % 2 == 0:
        raise ValueError(
            f"diameter {D} is even; even-diameter maximizers are classified by "
            "Lin and Zhao (Bull. London Math. Soc., 2025), this package covers odd diameters"
        )
    if D < 3:
        raise ValueError(f"need diameter >= 3, got {D}")
    if n < D + 1:
        raise ValueError(f"order {n} cannot carry diameter {D}; need n >= {D + 1}")


def _division_params(r: int, M: int, q: int) -> ASParams:
    return ASParams(r=r, q=q, c=M // q, t=M % q)


def candidate_profiles(n: int, D: int) -> CandidatePair | None:
    """The candidate parameter sets for (n, D), or None when the path wins.

    None is the path marker: M = 0 leaves nothing to hang off the
    principal branches and P_{D+1} is the unique maximizer.
    """
    _check_odd_case(n, D)
    r = (D - 1) // 2
    M = n - D - 1
    if M == 0:
        return None
    s = (r + 1) // 2
    q_minus = max(1, M // s)
    q_plus = math.ceil(M / s)
    return CandidatePair(
        M=M,
        s=s,
        q_minus=q_minus,
        q_plus=q_plus,
        as_minus=_division_params(r, M, q_minus),
        as_plus=_division_params(r, M, q_plus),
    )


def _relative_gap(x: float, y: float) -> float:
    return abs(x - y) / max(abs(x), abs(y))


def classify(n: int, D: int) -> ClassificationResult:
    """Maximizer set for order n and odd diameter D.

    The case tag records which branch decided: path (M = 0),
    single_small (M < s), divisible (s | M), the three threshold
    regimes for k >= s, or initial_orders (k < s, settled by direct
    comparison of the two candidate roots).  Threshold decisions are
    additionally verified against the direct comparison; disagreement
    is an internal error, never silently resolved.
    """
    pair = candidate_profiles(n, D)
    if pair is None:
        r = (D - 1) // 2
        lam = spider_lambda2((r + 1, r)).value
        entry = (make_path(D), lam)
        return ClassificationResult(case_tag="path", candidates=(entry,), winners=(entry,), tie_flag=False)

    r = (D - 1) // 2
    M, s = pair.M, pair.s
    k, t = divmod(M, s)

    if pair.as_minus == pair.as_plus:
        tag = "single_small" if M < s else "divisible"
        lam = spider_lambda2(pair.as_minus.spider_profile()).value
        entry = (make_as_tree(pair.as_minus), lam)
        return ClassificationResult(case_tag=tag, candidates=(entry,), winners=(entry,), tie_flag=False)

    lam_minus = spider_lambda2(pair.as_minus.spider_profile()).value
    lam_plus = spider_lambda2(pair.as_plus.spider_profile()).value
    candidates = (
        (make_as_tree(pair.as_minus), lam_minus),
        (make_as_tree(pair.as_plus), lam_plus),
    )
    tied = _relative_gap(lam_minus, lam_plus) <= _TIE_RTOL

    if k >= s:
        data = threshold_data(r, t)
        if data.regime == "A_always":
            tag, expect = "threshold_A", "minus"
        elif data.regime == "B_always":
            tag, expect = "threshold_B", "plus"
        else:
            tag = "threshold_compare"
            if abs(k - data.kappa) <= _TIE_RTOL:
                expect = "tie"
            else:
                expect = "minus" if k > data.kappa else "plus"
        if not tied:
            direct = "minus" if lam_minus > lam_plus else "plus"
            if expect != "tie" and direct != expect:
                raise RuntimeError(
                    f"threshold prediction {expect} contradicts direct comparison at n={n}, D={D}"
                )
    else:
        tag = "initial_orders"

    if tied:
        winners = candidates
    elif lam_minus > lam_plus:
        winners = (candidates[0],)
    else:
        winners = (candidates[1],)
    return ClassificationResult(case_tag=tag, candidates=candidates, winners=winners, tie_flag=tied)


def compare_candidates(r: int, M: int) -> CandidateComparison:
    """Value of the balanced family at every feasible integer q.

    The maximum must land at one of the two branch counts nearest M/s;
    anything else means the unimodal picture is broken and is raised as
    an internal error.  Near-ties within 1e-9 relative are flagged.
    """
    lo, hi = q_range_integer(r, M)
    rows = tuple((q, sigma_rM(r, M, q).value) for q in range(lo, hi + 1))
    best = max(val for _, val in rows)
    strict_peaks = tuple(q for q, val in rows if _relative_gap(val, best) <= _STRICT_RTOL)
    tie_peaks = tuple(q for q, val in rows if _relative_gap(val, best) <= _TIE_RTOL)

    s = (r + 1) // 2
    q_minus = max(1, M // s)
    q_plus = math.ceil(M / s)
    if q_minus not in strict_peaks and q_plus not in strict_peaks:
        raise RuntimeError(
            f"maximum of the balanced family at r={r}, M={M} sits at {strict_peaks}, "
            f"not at the predicted q in {{{q_minus}, {q_plus}}}"
        )
    return CandidateComparison(
        r=r,
        M=M,
        s=s,
        q_minus=q_minus,
        q_plus=q_plus,
        rows=rows,
        argmax_q=tie_peaks,
        tie_flag=len(tie_peaks) > 1,
    )
