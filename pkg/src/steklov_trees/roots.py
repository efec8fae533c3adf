"""Scalar root equations behind the spider and double-spider spectra.

Every lambda_2 that this package certifies against matrix computations
also satisfies a one-variable equation: the spider equation F(lambda),
its balanced-family form Phi_{r,M}, the two-sided resolvent equation for
double spiders, and the threshold quadratic that orders the two
balanced candidates.  Each function here is strictly monotone on an
explicit bracket whose endpoints are poles, so plain bisection that
never touches the endpoints is the safe solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .trees import DoubleSpiderProfile, SpiderProfile

# Bisection stops once the bracket is this narrow and the residual small.
_WIDTH_TOL = 1e-14
_RESIDUAL_TOL = 1e-11

# Interior sample count for the debug-build monotonicity check.
_MONOTONE_SAMPLES = 100


@dataclass(frozen=True)
class RootResult:
    """A certified root: the value, its theoretical bracket, the residual."""

    value: float
    bracket: tuple[float, float]
    residual: float


@dataclass(frozen=True)
class ThresholdData:
    """Which of the two balanced candidates wins, for given (r, t).

    regime A_always / B_always means one candidate dominates for every
    branch count k; regime threshold carries the crossover data: zeta is
    the root of the comparison quadratic in (1/(r+1), 1/r) and kappa the
    critical branch count, with ties possible only at integer kappa.
    """

    r: int
    s: int
    t: int
    regime: str
    zeta: float | None
    kappa: float | None


# ----------------------------- bisection ------------------------------


def _assert_sampled_monotone(f: Callable[[float], float], lo: float, hi: float) -> None:
    step = (hi - lo) / (_MONOTONE_SAMPLES + 1)
    prev = f(lo + step)
    for i in range(2, _MONOTONE_SAMPLES + 1):
        cur = f(lo + i * step)
        assert cur > prev, f"function not strictly increasing near {lo + i * step}"
        prev = cur


def _bisect(f: Callable[[float], float], lo: float, hi: float, increasing: bool = True) -> RootResult:
    """Unique zero of a strictly monotone f on (lo, hi).

    The endpoints are typically poles of f and are never evaluated.
    Iterates until the bracket width is below _WIDTH_TOL and the
    residual below _RESIDUAL_TOL, or the floats are exhausted; a final
    residual above tolerance is an error, not a warning.
    """
    sign = 1.0 if increasing else -1.0
    g = lambda x: sign * f(x)
    if __debug__:
        _assert_sampled_monotone(g, lo, hi)
    a, b = lo, hi
    value = 0.5 * (a + b)
    resid = g(value)
    while (b - a) > _WIDTH_TOL or abs(resid) > _RESIDUAL_TOL:
        if resid > 0.0:
            b = value
        else:
            a = value
        nxt = 0.5 * (a + b)
        if nxt <= a or nxt >= b:
            break
        value = nxt
        resid = g(value)
    if abs(resid) > _RESIDUAL_TOL:
        raise RuntimeError(f"bisection stalled at {value} with residual {resid}")
    return RootResult(value=value, bracket=(lo, hi), residual=sign * resid)


# --------------------------- spider equation --------------------------


def spider_lambda2(lengths: SpiderProfile | Sequence[int]) -> RootResult:
    """lambda_2 of a spider with a strict longest branch.

    Solves sum_i 1/(1 - l_i lambda) = 0 on (1/l_1, 1/l_2), where the
    function climbs from -inf to +inf.  A repeated longest branch makes
    lambda_2 the pole 1/l_1 itself and is rejected.
    """
    profile = lengths if isinstance(lengths, SpiderProfile) else SpiderProfile(tuple(lengths))
    ls = profile.lengths
    if ls[0] == ls[1]:
        raise ValueError(f"longest branch must be strict, got lengths {ls}")

    def f(lam: float) -> float:
        return sum(1.0 / (1.0 - l * lam) for l in ls)

    return _bisect(f, 1.0 / ls[0], 1.0 / ls[1])


# ------------------------- balanced family ----------------------------


def q_range_integer(r: int, M: int) -> tuple[int, int]:
    """Feasible branch counts q for lateral mass M at radius r."""
    if r < 1 or M < 1:
        raise ValueError(f"need r >= 1 and M >= 1, got r={r}, M={M}")
    return (max(1, math.ceil(M / r)), M)


def q_range_continuous(r: int, M: int) -> tuple[float, float]:
    """Domain [M/r, M] of the interpolated branch-count variable."""
    if r < 1 or M < 1:
        raise ValueError(f"need r >= 1 and M >= 1, got r={r}, M={M}")
    return (M / r, float(M))


def sigma_rM(r: int, M: int, q: float) -> RootResult:
    """Root of the balanced-family equation Phi_{r,M}(., q) in (1/(r+1), 1/r).

    For integer q this is the root equation of the spider with principal
    branches (r+1, r) and q lateral branches of total length M spread as
    evenly as possible.  Real q interpolates between those spiders: with
    c = floor(M/q), mass M - c q sits on the pole 1/(c+1) and the rest
    on 1/c.  At the left endpoint q = M/r the first weight vanishes and
    the formula degenerates to 1/(1-(r+1)x) + (1+M/r)/(1-rx).
    """
    if r < 1 or M < 1:
        raise ValueError(f"need r >= 1 and M >= 1, got r={r}, M={M}")
    lo_q, hi_q = q_range_continuous(r, M)
    if not lo_q - 1e-12 <= q <= hi_q + 1e-12:
        raise ValueError(f"q={q} outside [{lo_q}, {hi_q}] for r={r}, M={M}")
    q = min(max(q, lo_q), hi_q)

    c = M // int(q) if float(q).is_integer() else int(math.floor(M / q))
    c = min(max(c, 1), r)
    w_hi = max(M - c * q, 0.0)
    w_lo = max((c + 1) * q - M, 0.0)

    def f(lam: float) -> float:
        val = 1.0 / (1.0 - (r + 1) * lam) + 1.0 / (1.0 - r * lam)
        if w_hi > 0.0:
            val += w_hi / (1.0 - (c + 1) * lam)
        if w_lo > 0.0:
            val += w_lo / (1.0 - c * lam)
        return val

    return _bisect(f, 1.0 / (r + 1), 1.0 / r)


# ------------------------ double-spider equation -----------------------


def _principal_radius(p: DoubleSpiderProfile) -> int:
    r = p.a_lengths[0]
    if p.b_lengths[0] != r:
        raise ValueError(f"both sides must share the longest length, got {p.a_lengths[0]} and {p.b_lengths[0]}")
    return r


def double_spider_rho(p: DoubleSpiderProfile) -> RootResult:
    """Reciprocal 1/lambda_2 for a double spider with equal longest sides.

    rho is the unique solution of 1/A(rho) + 1/B(rho) = 1 above r, where
    A(rho) = sum_i 1/(rho - a_i) and B likewise; the left side climbs
    from 0 at rho -> r+ to infinity, so it crosses 1 exactly once.
    """
    r = _principal_radius(p)
    total = sum(p.a_lengths) + sum(p.b_lengths)

    def f(rho: float) -> float:
        a_sum = sum(1.0 / (rho - a) for a in p.a_lengths)
        b_sum = sum(1.0 / (rho - b) for b in p.b_lengths)
        return 1.0 / a_sum + 1.0 / b_sum - 1.0

    return _bisect(f, r + 1e-9, float(r + total + 1))


def double_spider_maximizer(p: DoubleSpiderProfile):
    """Optimal boundary flux realizing rho as an inverse Rayleigh quotient.

    Positive weights on the a-side leaves summing to 1, negative on the
    b-side summing to -1, each proportional to 1/(rho - length).  The
    quotient Q(z)/|z|^2 is recomputed on the actual tree and must land
    within 1e-9 of rho.
    """
    from .flux import BoundaryFlux, q_form
    from .trees import make_double_spider

    rho = double_spider_rho(p).value
    a_sum = sum(1.0 / (rho - a) for a in p.a_lengths)
    b_sum = sum(1.0 / (rho - b) for b in p.b_lengths)
    xs = [(1.0 / a_sum) / (rho - a) for a in p.a_lengths]
    ys = [-(1.0 / b_sum) / (rho - b) for b in p.b_lengths]

    # Branch leaves are numbered in construction order, a-side then
    # b-side, so leaf_set order matches this concatenation.
    z = BoundaryFlux(tuple(xs + ys))
    tree = make_double_spider(p)
    quotient = q_form(tree, z) / sum(w * w for w in z.z)
    if abs(quotient - rho) > 1e-9 * max(1.0, abs(rho)):
        raise RuntimeError(f"maximizer quotient {quotient} does not match rho {rho}")
    return z


# ------------------------- threshold quadratic -------------------------


def threshold_data(r: int, t: int) -> ThresholdData:
    """Compare the two balanced candidates with t extra-length branches.

    With s = ceil(r/2), the sign of P(lambda) = 1 - 3s lambda +
    (2s^2 + s - 2t - 1) lambda^2 on (1/(r+1), 1/r) decides which
    candidate has the larger lambda_2.  Depending on the parity of r and
    the size of t the sign is constant (A_always / B_always) or flips
    once at zeta, in which case the winner switches as the branch count
    k crosses kappa.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    s = (r + 1) // 2
    if not 1 <= t <= s - 1:
        raise ValueError(f"need 1 <= t <= {s - 1} for r={r}, got t={t}")

    if r == 2 * s and 2 * t <= s - 1:
        return ThresholdData(r=r, s=s, t=t, regime="A_always", zeta=None, kappa=None)
    if r == 2 * s - 1 and 2 * t >= s - 1:
        return ThresholdData(r=r, s=s, t=t, regime="B_always", zeta=None, kappa=None)

    lead = 2 * s * s + s - 2 * t - 1
    disc = 9 * s * s - 4 * lead
    lo, hi = 1.0 / (r + 1), 1.0 / r
    zeta = (3 * s - math.sqrt(disc)) / (2 * lead) if disc >= 0 else math.nan
    if not lo < zeta < hi:
        # Cancellation fallback; P is strictly decreasing across I_r.
        poly = lambda lam: 1.0 - 3 * s * lam + lead * lam * lam
        zeta = _bisect(poly, lo, hi, increasing=False).value

    kappa = -(1.0 - s * zeta) * (
        1.0 / (1.0 - (r + 1) * zeta)
        + 1.0 / (1.0 - r * zeta)
        + (t - s + 1) / (1.0 - s * zeta)
        + (s - t) / (1.0 - (s - 1) * zeta)
    )
    return ThresholdData(r=r, s=s, t=t, regime="threshold", zeta=zeta, kappa=kappa)
