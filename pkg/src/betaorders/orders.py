"""Transform-order deciders and numerical order checkers.

Three orders are covered.  Stochastic dominance compares CDFs pointwise.
The star-shaped order asks for G^-1(F(x))/x to be nondecreasing, and the
convex transform order asks for G^-1(F(x)) to be convex.  For the Beta
family all three have the same closed-form criterion on the parameters,
with the dominance direction reversed, and ``decide_beta_order`` applies
it directly.

The numerical checkers work on sign patterns of x -> F(x) - G(l(x)) over
families of test lines l.  Rather than evaluating G at l(x) for every
line, they compute H(x) = G^-1(F(x)) once per pair and use that
sign(F(x) - G(l(x))) = sign(H(x) - l(x)), so each extra line costs a
vector subtraction instead of a CDF pass.  Values are banded to zero
where they are smaller than the quantile error budget, which keeps every
retained sign genuine.  A sampled pattern can therefore only lose sign
changes relative to the truth.  Consequently "consistent" means no grid
evidence against the order, while a reported witness is a genuine
disproof.

The staged reduction behind the closed-form criterion is exposed as
well: the cubic p4 with its coefficients and prefactor signs, the staged
functions p1 through p4, exact cubic sign patterns by root isolation,
and a checker that the whole chain of pattern inequalities holds on a
given instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .distributions import (
    BetaParams,
    GammaParams,
    beta_cdf,
    beta_pdf,
    beta_quantile,
    gamma_cdf,
    gamma_pdf,
    gamma_quantile,
)
from .signpattern import (
    DEFAULT_GRID,
    DEFAULT_ZERO_TOL,
    EMPTY,
    GridPolicy,
    Sign,
    SignPattern,
    _word_from_sign_array,
    pattern_of_samples,
)
from .specialfns import DEFAULT_ACCURACY, Accuracy, DomainError, log_beta

__all__ = [
    "OrderKind",
    "OrderResult",
    "OrderVerdict",
    "AffineMap",
    "LemmaCubic",
    "CheckWitness",
    "NumericCheckReport",
    "AMBIGUOUS",
    "DEFAULT_SEED",
    "decide_beta_order",
    "verify_st_numeric",
    "verify_star_numeric",
    "verify_convex_numeric",
    "lemma_cubic",
    "lemma_stage_eval",
    "verify_lemma_chain",
    "cubic_sign_pattern",
    "mirror_check",
    "beta_vs_gamma_check",
    "sample_slopes",
    "sample_affine_maps",
]

DEFAULT_SEED = 0x5EED

# sigma2 value for the parameter combinations where no single sign applies
AMBIGUOUS = "ambiguous"

_ST_BOUND = SignPattern.parse("+")
_STAR_BOUND = SignPattern.parse("-+")
_CONVEX_BOUND = SignPattern.parse("+-+")

# quantile noise floor in units of the transported value: a computed
# H(x) is trusted only down to this relative level, because the inverse
# solvers cannot place a point more finely than the float64 lattice of
# the CDF allows near saturated tails
_ULP_FLOOR = 1e-13


class OrderKind(str, Enum):
    STOCHASTIC_DOMINANCE = "stochastic-dominance"
    STAR_SHAPED = "star-shaped"
    CONVEX_TRANSFORM = "convex-transform"


class OrderResult(str, Enum):
    LESS_THAN = "LessThan"
    GREATER_THAN = "GreaterThan"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True, slots=True)
class OrderVerdict:
    relation: OrderKind
    result: OrderResult


@dataclass(frozen=True, slots=True)
class AffineMap:
    """The test line l(x) = c*x + d."""

    c: float
    d: float

    def __call__(self, x):
        return self.c * x + self.d


@dataclass(frozen=True, slots=True)
class LemmaCubic:
    """Reduction data for one (P, Q, line) instance.

    c3..c0 are the coefficients of the cubic p4, sigma1 and sigma2 the
    sign prefactors of the pattern chain, C the additive constant of the
    log stage p2, and interval the x-range on which the line keeps
    G's argument strictly inside the unit interval.  sigma2 is either a
    Sign or the string "ambiguous" when no single sign applies.
    """

    c3: float
    c2: float
    c1: float
    c0: float
    sigma1: Sign
    sigma2: Sign | str
    C: float
    interval: tuple[float, float]

    def __post_init__(self):
        if not isinstance(self.sigma1, Sign):
            raise ValueError("sigma1 must be a Sign")
        if not (isinstance(self.sigma2, Sign) or self.sigma2 == AMBIGUOUS):
            raise ValueError(f"sigma2 must be a Sign or {AMBIGUOUS!r}")


class CheckWitness(NamedTuple):
    """A concrete violation: which line, where, and the pattern seen."""

    line: AffineMap
    x: float
    observed: SignPattern


@dataclass(frozen=True, slots=True)
class NumericCheckReport:
    consistent: bool
    witness: CheckWitness | None
    pattern_bound: SignPattern
    grid_size: int

    def __post_init__(self):
        if self.consistent and self.witness is not None:
            raise ValueError("a consistent report cannot carry a witness")
        if not self.consistent and self.witness is None:
            raise ValueError("an inconsistent report must carry a witness")
        if self.grid_size < 1:
            raise ValueError("grid_size must be positive")


def _is_below(P: BetaParams, Q: BetaParams) -> bool:
    # the one criterion all three orders share: a >= a' and b <= b'
    return P.a >= Q.a and P.b <= Q.b


def decide_beta_order(kind: OrderKind, P: BetaParams, Q: BetaParams) -> OrderVerdict:
    """Closed-form order verdict for Beta(a,b) versus Beta(a',b').

    Under the star-shaped and convex orders, P is below Q exactly when
    a >= a' and b <= b' with at least one strict.  The same parameter
    region makes P stochastically larger, so the dominance verdict comes
    out reversed.  Verdicts are always stated for P relative to Q.
    """
    kind = OrderKind(kind)
    if (P.a, P.b) == (Q.a, Q.b):
        return OrderVerdict(kind, OrderResult.EQUIVALENT)
    reverse = kind == OrderKind.STOCHASTIC_DOMINANCE
    if _is_below(P, Q):
        result = OrderResult.GREATER_THAN if reverse else OrderResult.LESS_THAN
    elif _is_below(Q, P):
        result = OrderResult.LESS_THAN if reverse else OrderResult.GREATER_THAN
    else:
        result = OrderResult.INCOMPARABLE
    return OrderVerdict(kind, result)


def _eval_on(f: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate a callable on a grid, vectorized when it supports it."""
    try:
        vals = np.asarray(f(x), dtype=float)
        if vals.shape != x.shape:
            raise TypeError("not vectorized")
        return vals
    except Exception:
        return np.array([float(f(float(t))) for t in x])


def _first_escape(signs: np.ndarray, bound: SignPattern) -> int:
    """Index at which the running reduced word first leaves the bound."""
    word: list[int] = []
    for j in range(signs.size):
        s = int(signs[j])
        if s == 0 or (word and word[-1] == s):
            continue
        word.append(s)
        if not SignPattern(word).leq(bound):
            return j
    return -1


def _banded_signs(values: np.ndarray, band) -> np.ndarray:
    signs = np.zeros(values.shape, dtype=np.int8)
    with np.errstate(invalid="ignore"):
        signs[values > band] = 1
        signs[values < -band] = -1
    return signs


def verify_st_numeric(
    F: Callable,
    G: Callable,
    grid: GridPolicy = DEFAULT_GRID,
    *,
    tol: float = DEFAULT_ZERO_TOL,
) -> NumericCheckReport:
    """Grid check of stochastic dominance: F(x) >= G(x) - tol everywhere.

    Equivalently the banded sign pattern of F - G must stay within (+).
    The witness line is the identity, since dominance is the l(x) = x
    member of the line family.
    """
    x = grid.nodes(0.0, 1.0)
    diff = _eval_on(F, x) - _eval_on(G, x)
    signs = _banded_signs(diff, tol)
    word = SignPattern(_word_from_sign_array(signs))
    if word.leq(_ST_BOUND):
        return NumericCheckReport(True, None, _ST_BOUND, x.size)
    j = _first_escape(signs, _ST_BOUND)
    witness = CheckWitness(AffineMap(1.0, 0.0), float(x[j]), word)
    return NumericCheckReport(False, witness, _ST_BOUND, x.size)


def _bisect_quantile(
    G: Callable, u: np.ndarray, support: tuple[float, float]
) -> np.ndarray:
    lo_s, hi_s = support
    if not (math.isfinite(lo_s) and math.isfinite(hi_s)):
        raise DomainError(
            "quantile bisection needs a finite support; pass g_quantile instead"
        )
    lo = np.full_like(u, lo_s)
    hi = np.full_like(u, hi_s)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        above = _eval_on(G, mid) >= u
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    return 0.5 * (lo + hi)


def _transport_setup(
    F: Callable,
    G: Callable,
    grid: GridPolicy,
    tol: float,
    g_quantile: Callable | None,
    g_pdf: Callable | None,
    g_support: tuple[float, float],
    acc: Accuracy,
):
    """Shared per-pair work: grid, H = G^-1(F(x)), and error budgets.

    Returns (x, H, tau, err) where tau is the zero band for signs of
    H - l(x) and err bounds the absolute error of each H value.  tau has
    two parts.  tol/g(H) converts the CDF-unit tolerance into x units
    through the local density, so flat stretches of F - G(l(x)) band to
    zero exactly as a direct evaluation would.  err adds the quantile
    solver residual plus an ulp floor; signs below that level could be
    artifacts of H itself and must not enter any word.
    """
    x = grid.nodes(0.0, 1.0)
    u = np.clip(_eval_on(F, x), 0.0, 1.0)
    if g_quantile is not None:
        H = _eval_on(g_quantile, u)
    else:
        H = _bisect_quantile(G, u, g_support)

    lo_s, hi_s = g_support
    pad = 1e-15 * ((hi_s - lo_s) if math.isfinite(hi_s) else max(1.0, abs(lo_s)))
    h_eval = np.maximum(H, lo_s + pad)
    if math.isfinite(hi_s):
        h_eval = np.minimum(h_eval, hi_s - pad)
    if g_pdf is not None:
        dens = _eval_on(g_pdf, h_eval)
    else:
        step = 1e-6 * np.maximum(1.0, np.abs(h_eval))
        a_pt = np.maximum(h_eval - step, lo_s + pad)
        b_pt = np.minimum(h_eval + step, hi_s - pad) if math.isfinite(hi_s) else h_eval + step
        with np.errstate(divide="ignore", invalid="ignore"):
            dens = (_eval_on(G, b_pt) - _eval_on(G, a_pt)) / (b_pt - a_pt)
    dens = np.maximum(dens, 1e-300)

    with np.errstate(over="ignore"):
        err = (acc.abs_tol * np.minimum(u, 1.0 - u) + 5e-16) / dens
        err = err + _ULP_FLOOR * np.maximum(1.0, np.abs(H))
        tau = tol / dens + err
    return x, H, tau, err


def _line_patterns(
    x: np.ndarray,
    H: np.ndarray,
    tau: np.ndarray,
    lines: Sequence[AffineMap],
    bound: SignPattern,
) -> CheckWitness | None:
    """Transport words for each line; the first escape becomes a witness."""
    c = np.array([ln.c for ln in lines], dtype=float)
    d = np.array([ln.d for ln in lines], dtype=float)
    diff = H[None, :] - (c[:, None] * x[None, :] + d[:, None])
    signs = _banded_signs(diff, tau[None, :])
    for i, ln in enumerate(lines):
        word = SignPattern(_word_from_sign_array(signs[i]))
        if not word.leq(bound):
            j = _first_escape(signs[i], bound)
            return CheckWitness(ln, float(x[j]), word)
    return None


def verify_star_numeric(
    F: Callable,
    G: Callable,
    slopes: Sequence[float],
    grid: GridPolicy = DEFAULT_GRID,
    *,
    tol: float = DEFAULT_ZERO_TOL,
    g_quantile: Callable | None = None,
    g_pdf: Callable | None = None,
    g_support: tuple[float, float] = (0.0, 1.0),
    acc: Accuracy = DEFAULT_ACCURACY,
) -> NumericCheckReport:
    """Grid check of the star-shaped order for F against G.

    Two channels must both pass.  Every slope c in the sample keeps the
    pattern of F(x) - G(c*x) within (-+), and the transported ratio
    H(x)/x is nondecreasing along the grid up to the quantile error
    budget.  A ratio drop is converted into a concrete violating slope,
    the midpoint of the two ratios, so every witness names a line.

    The checker assumes the supports share left endpoint 0, which is
    where the reference ratio is anchored.  g_quantile and g_pdf, when
    given, replace bisection and finite differences of G; the error
    model then matches the library quantile accuracy.
    """
    lines = [AffineMap(float(c), 0.0) for c in slopes]
    if not lines:
        raise DomainError("slopes must be nonempty")
    x, H, tau, err = _transport_setup(
        F, G, grid, tol, g_quantile, g_pdf, g_support, acc
    )
    witness = _line_patterns(x, H, tau, lines, _STAR_BOUND)
    if witness is not None:
        return NumericCheckReport(False, witness, _STAR_BOUND, x.size)

    r = H / x
    allow = err / x
    scale = np.maximum(1.0, np.maximum(r[:-1], r[1:]))
    drops = (r[1:] - r[:-1]) < -(allow[:-1] + allow[1:] + tol * scale)
    if drops.any():
        i = int(np.argmax(drops))
        c_star = 0.5 * (r[i] + r[i + 1])
        line = AffineMap(float(c_star), 0.0)
        row = _banded_signs(H - c_star * x, tau)
        word = SignPattern(_word_from_sign_array(row))
        witness = CheckWitness(line, float(x[i + 1]), word)
        return NumericCheckReport(False, witness, _STAR_BOUND, x.size)
    return NumericCheckReport(True, None, _STAR_BOUND, x.size)


def verify_convex_numeric(
    F: Callable,
    G: Callable,
    lines: Sequence[AffineMap],
    grid: GridPolicy = DEFAULT_GRID,
    *,
    tol: float = DEFAULT_ZERO_TOL,
    g_quantile: Callable | None = None,
    g_pdf: Callable | None = None,
    g_support: tuple[float, float] = (0.0, 1.0),
    acc: Accuracy = DEFAULT_ACCURACY,
) -> NumericCheckReport:
    """Grid check of the convex transform order for F against G.

    Every sampled line must keep the pattern of F(x) - G(l(x)) within
    (+-+), and the chord slopes of H(x) = G^-1(F(x)) must be
    nondecreasing: a slope drop beyond the quantile error allowance is a
    concavity certificate.  Such a drop is reported through the secant
    line over the offending node pair, whose crossing pattern is the
    direct violation of the line criterion.
    """
    lines = list(lines)
    if not lines:
        raise DomainError("lines must be nonempty")
    x, H, tau, err = _transport_setup(
        F, G, grid, tol, g_quantile, g_pdf, g_support, acc
    )
    witness = _line_patterns(x, H, tau, lines, _CONVEX_BOUND)
    if witness is not None:
        return NumericCheckReport(False, witness, _CONVEX_BOUND, x.size)

    dx = np.diff(x)
    slope = np.diff(H) / dx
    allow = (err[:-1] + err[1:]) / dx
    scale = np.maximum(1.0, np.maximum(np.abs(slope[:-1]), np.abs(slope[1:])))
    drops = (slope[:-1] - slope[1:]) > (allow[:-1] + allow[1:] + tol * scale)
    if drops.any():
        k = int(np.argmax(drops))
        c = (H[k + 2] - H[k]) / (x[k + 2] - x[k])
        line = AffineMap(float(c), float(H[k] - c * x[k]))
        row = _banded_signs(H - (line.c * x + line.d), tau)
        word = SignPattern(_word_from_sign_array(row))
        witness = CheckWitness(line, float(x[k + 1]), word)
        return NumericCheckReport(False, witness, _CONVEX_BOUND, x.size)
    return NumericCheckReport(True, None, _CONVEX_BOUND, x.size)


def lemma_cubic(P: BetaParams, Q: BetaParams, line: AffineMap) -> LemmaCubic:
    """Reduction data for the staged sign-pattern bound.

    Valid for any line with positive slope and intercept below 1.  The
    sigma2 prefactor follows the case table on (d, a, a'); combinations
    outside the three resolvable rows come back as "ambiguous" and the
    chain checker then quantifies over all three signs.
    """
    a, b = P.a, P.b
    ap, bp = Q.a, Q.b
    c, d = line.c, line.d
    if not c > 0:
        raise DomainError(f"line slope must be positive, got {c}")
    if not d < 1:
        raise DomainError(f"line intercept must be below 1, got {d}")

    c3 = (a - ap + b - bp) * c * c
    c2 = (
        -(a - ap + 1 - bp) * c * c
        - (a - ap + b - 1) * c * (1 - d)
        - (bp - b + 1 - a) * c * d
    )
    c1 = (a - ap) * c * (1 - d) - (a - bp) * c * d - (a + b - 2) * (1 - d) * d
    c0 = -(a - 1) * (d - 1) * d

    sigma1 = Sign.of(-d)
    if d == 0 and ap != a:
        sigma2: Sign | str = Sign.of(ap - a)
    elif d > 0 and a != 1:
        sigma2 = Sign.of(1 - a)
    elif d < 0 and ap != 1:
        sigma2 = Sign.of(ap - 1)
    else:
        sigma2 = AMBIGUOUS

    C = log_beta(ap, bp) - log_beta(a, b) - math.log(c)
    interval = (max(0.0, -d / c), min(1.0, (1 - d) / c))
    return LemmaCubic(c3, c2, c1, c0, sigma1, sigma2, C, interval)


def lemma_stage_eval(
    stage: str, P: BetaParams, Q: BetaParams, line: AffineMap, x: float
) -> float:
    """One staged function at one point inside the lemma interval.

    p1 is the density difference f(x) - c*g(l(x)), the derivative of
    F - G(l(x)).  p2 is its logarithmic form, p3 the derivative of p2,
    and p4 the polynomial obtained from p3 by clearing denominators.
    """
    cub = lemma_cubic(P, Q, line)
    lo, hi = cub.interval
    if not lo < x < hi:
        raise DomainError(f"x={x} lies outside the lemma interval ({lo}, {hi})")
    lx = line(x)
    if not 0.0 < lx < 1.0:
        raise DomainError(f"l(x)={lx} leaves (0, 1); x is too close to the boundary")
    a, b = P.a, P.b
    ap, bp = Q.a, Q.b
    c = line.c
    if stage == "p1":
        return beta_pdf(P, x) - c * beta_pdf(Q, lx)
    if stage == "p2":
        return (
            (a - 1) * math.log(x)
            + (b - 1) * math.log1p(-x)
            - (ap - 1) * math.log(lx)
            - (bp - 1) * math.log1p(-lx)
            + cub.C
        )
    if stage == "p3":
        return (
            (a - 1) / x
            - (b - 1) / (1 - x)
            - c * (ap - 1) / lx
            + c * (bp - 1) / (1 - lx)
        )
    if stage == "p4":
        return ((cub.c3 * x + cub.c2) * x + cub.c1) * x + cub.c0
    raise DomainError(f"unknown stage {stage!r}; expected p1, p2, p3 or p4")


def cubic_sign_pattern(coeffs: LemmaCubic) -> SignPattern:
    """Exact sign pattern of the cubic on the open interval.

    Real roots are isolated in closed form through the companion matrix,
    polished by a few Newton steps, and used as segment boundaries; the
    sign on each segment is read off at its midpoint.  Spurious or
    duplicated root candidates only split segments, and equal signs on
    both sides collapse back out in word reduction, so root filtering
    does not need to be sharp.  Leading coefficients that are exactly
    zero drop the degree.
    """
    lo, hi = coeffs.interval
    if not lo < hi:
        return EMPTY
    poly = [coeffs.c3, coeffs.c2, coeffs.c1, coeffs.c0]
    while poly and poly[0] == 0.0:
        poly.pop(0)
    if not poly:
        return EMPTY
    if len(poly) == 1:
        return SignPattern.of_sign(Sign.of(poly[0]))

    roots = np.roots(poly)
    deriv = np.polyder(np.asarray(poly))
    cuts = []
    for z in roots:
        if abs(z.imag) > 1e-9 * (1.0 + abs(z.real)):
            continue
        r = float(z.real)
        for _ in range(3):
            dp = float(np.polyval(deriv, r))
            if dp == 0.0:
                break
            r -= float(np.polyval(poly, r)) / dp
        if lo < r < hi:
            cuts.append(r)
    cuts.sort()

    edges = [lo, *cuts, hi]
    letters = []
    for left, right in zip(edges, edges[1:]):
        m = 0.5 * (left + right)
        v = float(np.polyval(poly, m))
        # guard against cancellation noise in slivers between duplicated
        # root candidates; a zero letter simply drops out of the word
        noise = 4e-16 * sum(abs(cf) * abs(m) ** k for k, cf in enumerate(reversed(poly)))
        letters.append(int(Sign.of(v, noise)))
    return SignPattern(letters)


def _prefixed(s1: Sign, s2: Sign, word: SignPattern) -> SignPattern:
    return SignPattern.of_sign(s1) * SignPattern.of_sign(s2) * word


def verify_lemma_chain(
    P: BetaParams,
    Q: BetaParams,
    line: AffineMap,
    grid: GridPolicy = DEFAULT_GRID,
    *,
    tol: float = DEFAULT_ZERO_TOL,
    acc: Accuracy = DEFAULT_ACCURACY,
) -> bool:
    """Check the staged pattern chain on one (P, Q, line) instance.

    The pattern of F - G(l(x)) on [0,1] must embed into sigma1 times the
    pattern of p1 on the interval, which must embed into the p2, p3 and
    p4 bounds in turn.  p1 and p2 share their pattern exactly, because
    p2 is the logarithm of the two p1 terms and taking logs preserves
    which one is larger, so the p2 link is not re-sampled.  The p4
    pattern is exact from root isolation.  When sigma2 is ambiguous the
    chain passes if any of the three signs makes the tail of the chain
    work, with the same sign used on both of its links.
    """
    cub = lemma_cubic(P, Q, line)
    c, d = line.c, line.d

    x0 = grid.nodes(0.0, 1.0)
    l0 = np.clip(c * x0 + d, 0.0, 1.0)
    diff = beta_cdf(P, x0, acc) - beta_cdf(Q, l0, acc)
    word0 = pattern_of_samples(diff, tol)

    lo, hi = cub.interval
    if lo < hi:
        xi = grid.nodes(lo, hi)
        li = c * xi + d
        keep = (xi > 0.0) & (xi < 1.0) & (li > 0.0) & (li < 1.0)
        xi, li = xi[keep], li[keep]
    else:
        xi = li = np.empty(0)

    if xi.size:
        f = beta_pdf(P, xi)
        gl = c * beta_pdf(Q, li)
        band1 = tol * np.maximum(f, gl) + 1e-300
        w1 = SignPattern(_word_from_sign_array(_banded_signs(f - gl, band1)))

        a, b = P.a, P.b
        ap, bp = Q.a, Q.b
        t1 = (a - 1) / xi
        t2 = (b - 1) / (1 - xi)
        t3 = c * (ap - 1) / li
        t4 = c * (bp - 1) / (1 - li)
        band3 = tol * (np.abs(t1) + np.abs(t2) + np.abs(t3) + np.abs(t4)) + 1e-300
        w3 = SignPattern(_word_from_sign_array(_banded_signs(t1 - t2 - t3 + t4, band3)))
    else:
        w1 = w3 = EMPTY
    w4 = cubic_sign_pattern(cub)

    L1 = SignPattern.of_sign(cub.sigma1) * w1
    if not word0.leq(L1):
        return False
    # L2 equals L1 by the shared pattern, so the next link starts there
    sigma2s = [cub.sigma2] if isinstance(cub.sigma2, Sign) else list(Sign)
    for s2 in sigma2s:
        L3 = _prefixed(cub.sigma1, s2, w3)
        L4 = _prefixed(cub.sigma1, s2, w4)
        if L1.leq(L3) and L3.leq(L4):
            return True
    return False


def mirror_check(P: BetaParams, Q: BetaParams) -> bool:
    """Convex-order verdicts must survive reflecting both laws about 1/2.

    Reflection swaps each (a, b) into (b, a) and reverses the roles of
    the two distributions; the LessThan verdicts of the original pair
    and the reflected pair must coincide.
    """
    direct = decide_beta_order(OrderKind.CONVEX_TRANSFORM, P, Q)
    mirrored = decide_beta_order(
        OrderKind.CONVEX_TRANSFORM,
        BetaParams(Q.b, Q.a),
        BetaParams(P.b, P.a),
    )
    return (direct.result == OrderResult.LESS_THAN) == (
        mirrored.result == OrderResult.LESS_THAN
    )


def sample_slopes(
    n: int,
    seed: int = DEFAULT_SEED,
    f_quantile: Callable | None = None,
    g_quantile: Callable | None = None,
    scale: float = 1.0,
) -> list[float]:
    """Deterministic slope sample: half uniform, half ratio-structured.

    The structured half takes c = G^-1(u)/F^-1(u) at spread-out levels
    u, which are the slopes tangent to the transported ratio and hence
    where a star-shape failure would surface first.  Without quantile
    callables the whole sample is uniform on (0, 4) times scale.
    """
    if n < 1:
        raise DomainError("need at least one slope")
    rng = np.random.default_rng(seed)
    structured = n // 2 if (f_quantile is not None and g_quantile is not None) else 0
    out = [float(c) for c in rng.uniform(0.0, 4.0, size=n - structured) * scale]
    for u in np.linspace(0.03, 0.97, structured):
        out.append(float(g_quantile(u)) / float(f_quantile(u)))
    return out


def sample_affine_maps(
    n: int,
    seed: int = DEFAULT_SEED,
    f_quantile: Callable | None = None,
    g_quantile: Callable | None = None,
    scale: float = 1.0,
) -> list[AffineMap]:
    """Deterministic line sample: half uniform boxes, half secants.

    Uniform lines draw c from (0, 4) and d from (-2, 1), both times
    scale.  Secants run through two points of the transported graph
    (F^-1(u), G^-1(u)), because a convexity failure always shows up as a
    crossing with some secant.  Quantile callables are required for the
    secant half; otherwise all lines are uniform.
    """
    if n < 1:
        raise DomainError("need at least one line")
    rng = np.random.default_rng(seed)
    structured = n // 2 if (f_quantile is not None and g_quantile is not None) else 0
    out = [
        AffineMap(float(c), float(d))
        for c, d in zip(
            rng.uniform(0.0, 4.0, size=n - structured) * scale,
            rng.uniform(-2.0, 1.0, size=n - structured) * scale,
        )
    ]
    for _ in range(structured):
        for _attempt in range(100):
            u1, u2 = np.sort(rng.uniform(0.02, 0.98, size=2))
            if u2 - u1 >= 0.05:
                break
        x1, x2 = float(f_quantile(u1)), float(f_quantile(u2))
        y1, y2 = float(g_quantile(u1)), float(g_quantile(u2))
        c = (y2 - y1) / (x2 - x1)
        out.append(AffineMap(c, y1 - c * x1))
    return out


def beta_vs_gamma_check(
    a: float,
    b: float,
    theta: float,
    grid: GridPolicy = DEFAULT_GRID,
    *,
    n_lines: int = 200,
    tol: float = DEFAULT_ZERO_TOL,
    seed: int = DEFAULT_SEED,
    acc: Accuracy = DEFAULT_ACCURACY,
) -> NumericCheckReport:
    """Numerical check that Beta(a,b) is below Gamma(a,theta) in both
    transform orders.

    Slopes and lines are scaled by the ratio of the two 0.99 quantiles,
    which is linear in theta; together with error allowances that scale
    the same way, verdicts do not depend on the gamma scale.  The report
    is the star report if that channel fails, otherwise the convex one.
    """
    P = BetaParams(a, b)
    Gp = GammaParams(a, theta)
    one_minus = float(np.nextafter(1.0, 0.0))

    def F(x):
        return beta_cdf(P, x, acc)

    def G(t):
        return gamma_cdf(Gp, t, acc)

    def fq(u):
        return beta_quantile(P, u, acc)

    def gq(u):
        return gamma_quantile(Gp, np.minimum(u, one_minus), acc)

    def gp(t):
        return gamma_pdf(Gp, t)

    gscale = gq(0.99) / fq(0.99)
    slopes = sample_slopes(n_lines, seed, fq, gq, gscale)
    star = verify_star_numeric(
        F, G, slopes, grid, tol=tol, g_quantile=gq, g_pdf=gp,
        g_support=(0.0, math.inf), acc=acc,
    )
    if not star.consistent:
        return star
    lines = sample_affine_maps(n_lines, seed, fq, gq, gscale)
    return verify_convex_numeric(
        F, G, lines, grid, tol=tol, g_quantile=gq, g_pdf=gp,
        g_support=(0.0, math.inf), acc=acc,
    )
