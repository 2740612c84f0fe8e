"""Exceedance probabilities and the inequalities the transform orders buy.

The Beta family is ordered by its shape parameters, and that ordering
pushes through to statements a practitioner can check directly: how much
mass sits above the mean, the mode, or the anti-mode; how those masses
move when a shape parameter grows; universal bounds on the above-mean
probability; a bridge to binomial tail monotonicity; and the classical
mode-median-mean chain.  Everything here evaluates those statements
numerically and reports violations instead of assuming them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import (
    BetaParams,
    BinomialParams,
    ShapeClass,
    beta_cdf,
    beta_mean,
    beta_median,
    binomial_cdf,
    classify_shape,
    skew_class,
)
from .orders import OrderKind, OrderResult, decide_beta_order
from .specialfns import DomainError

__all__ = [
    "ExceedanceRow",
    "MonotonicityReport",
    "MmmReport",
    "OrderingError",
    "beta_binomial_identity_check",
    "binomial_monotonicity",
    "bounds_check",
    "exceedance_row",
    "jensen_exceedance_compare",
    "mmm_check",
    "scan_monotone",
]

MONOTONE_TOL = 1e-10
BOUNDS_TOL = 1e-12
BINOMIAL_TOL = 1e-12

_AXES = ("a", "b", "binomial-p")
_DIRECTIONS = ("increasing", "decreasing")
_TARGETS = ("mean-exceedance", "mode-exceedance", "antimode-exceedance")

# claimed direction of each exceedance probability along each shape axis
_CLAIMED = {
    ("mean-exceedance", "a"): "increasing",
    ("mean-exceedance", "b"): "decreasing",
    ("mode-exceedance", "a"): "decreasing",
    ("mode-exceedance", "b"): "increasing",
    ("antimode-exceedance", "a"): "increasing",
    ("antimode-exceedance", "b"): "decreasing",
}


class OrderingError(ValueError):
    """The pair of laws is not ordered the way the comparison requires."""


@dataclass(frozen=True, slots=True)
class ExceedanceRow:
    """Exceedance probabilities of one Beta law over its own landmarks."""

    a: float
    b: float
    mean: float
    shape: ShapeClass
    p_over_mean: float
    p_over_mode: float | None = None
    p_over_antimode: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.p_over_mean <= 1.0:
            raise ValueError(f"p_over_mean outside [0, 1]: {self.p_over_mean}")
        if (self.p_over_mode is not None) != (self.shape.kind == "unimodal"):
            raise ValueError("p_over_mode present iff the density is unimodal")
        if (self.p_over_antimode is not None) != (self.shape.kind == "uniantimodal"):
            raise ValueError("p_over_antimode present iff the density is uniantimodal")


@dataclass(frozen=True, slots=True)
class MonotonicityReport:
    """Sampled probability sequence with the indices that break the claim.

    ``violations`` holds the left index of every adjacent pair that moves
    against ``direction`` by more than the tolerance the scan ran with.
    """

    axis: str
    direction: str
    samples: tuple[tuple[float, float], ...]
    violations: tuple[int, ...]

    def __post_init__(self):
        if self.axis not in _AXES:
            raise ValueError(f"axis must be one of {_AXES}, got {self.axis!r}")
        if self.direction not in _DIRECTIONS:
            raise ValueError(
                f"direction must be one of {_DIRECTIONS}, got {self.direction!r}"
            )
        for i in self.violations:
            if not 0 <= i < max(len(self.samples) - 1, 0):
                raise ValueError(f"violation index {i} outside adjacent-pair range")

    @property
    def holds(self) -> bool:
        return not self.violations


@dataclass(frozen=True, slots=True)
class MmmReport:
    mode_or_antimode: float | None
    median: float
    mean: float
    inequalities_hold: bool


def _violations(probs, direction, tol):
    bad = []
    for i in range(len(probs) - 1):
        step = probs[i + 1] - probs[i]
        if direction == "increasing" and step < -tol:
            bad.append(i)
        elif direction == "decreasing" and step > tol:
            bad.append(i)
    return tuple(bad)


def exceedance_row(params: BetaParams) -> ExceedanceRow:
    """Mass above the mean, plus above the mode or anti-mode when one exists."""
    mean = beta_mean(params)
    shape = classify_shape(params)
    p_mean = 1.0 - beta_cdf(params, mean)
    p_mode = p_anti = None
    if shape.kind == "unimodal":
        p_mode = 1.0 - beta_cdf(params, shape.location)
    elif shape.kind == "uniantimodal":
        p_anti = 1.0 - beta_cdf(params, shape.location)
    return ExceedanceRow(params.a, params.b, mean, shape, p_mean, p_mode, p_anti)


def bounds_check(params: BetaParams, tol: float = BOUNDS_TOL) -> bool:
    """Sandwich test for the above-mean probability when both shapes are >= 1.

    The inner comparisons are non-strict (equality is reached at a = 1 or
    b = 1) and allowed the given slack; the outer bounds never bind at
    finite parameters, so they are compared strictly.
    """
    a, b = params.a, params.b
    if a < 1.0 or b < 1.0:
        raise DomainError(f"bounds_check needs a, b >= 1, got ({a}, {b})")
    lower = (b / (1.0 + b)) ** b
    upper = 1.0 - (a / (1.0 + a)) ** a
    p = exceedance_row(params).p_over_mean
    return (
        math.exp(-1.0) < lower
        and lower <= p + tol
        and p <= upper + tol
        and upper < 1.0 - math.exp(-1.0)
    )


def _target_probability(params: BetaParams, target: str) -> float:
    if target == "mean-exceedance":
        return 1.0 - beta_cdf(params, beta_mean(params))
    shape = classify_shape(params)
    if target == "mode-exceedance":
        if shape.kind != "unimodal":
            raise DomainError(
                f"mode-exceedance needs a, b > 1, got ({params.a}, {params.b})"
            )
    elif shape.kind != "uniantimodal":
        raise DomainError(
            f"antimode-exceedance needs a, b < 1, got ({params.a}, {params.b})"
        )
    return 1.0 - beta_cdf(params, shape.location)


def scan_monotone(
    axis: str,
    fixed: float,
    values,
    target: str,
    tol: float = MONOTONE_TOL,
) -> MonotonicityReport:
    """Sweep one shape parameter and test the claimed trend of ``target``.

    ``axis`` names the parameter that moves through ``values`` (strictly
    increasing); the other parameter stays at ``fixed``.
    """
    if axis not in ("a", "b"):
        raise DomainError(f"scan axis must be 'a' or 'b', got {axis!r}")
    if target not in _TARGETS:
        raise DomainError(f"target must be one of {_TARGETS}, got {target!r}")
    values = [float(v) for v in values]
    if any(v2 <= v1 for v1, v2 in zip(values, values[1:])):
        raise DomainError("scan values must be strictly increasing")
    samples = []
    for v in values:
        params = BetaParams(v, fixed) if axis == "a" else BetaParams(fixed, v)
        samples.append((v, _target_probability(params, target)))
    direction = _CLAIMED[(target, axis)]
    probs = [p for _, p in samples]
    return MonotonicityReport(axis, direction, tuple(samples), _violations(probs, direction, tol))


def beta_binomial_identity_check(n: int, k: int, p_grid) -> float:
    """Largest gap between the Beta tail and the matching binomial CDF.

    P(X_{k+1, n-k} >= p) and P(B_{n, p} <= k) are the same number; the two
    sides here come from unrelated evaluation routes, so the gap measures
    implementation error only.
    """
    if not 0 <= k <= n - 1:
        raise DomainError(f"k must lie in [0, n-1] = [0, {n - 1}], got {k}")
    beta = BetaParams(float(k + 1), float(n - k))
    worst = 0.0
    for p in p_grid:
        p = float(p)
        lhs = 1.0 - beta_cdf(beta, p)
        rhs = binomial_cdf(BinomialParams(n, p), k)
        worst = max(worst, abs(lhs - rhs))
    return worst


def binomial_monotonicity(
    n: int, tol: float = BINOMIAL_TOL
) -> tuple[MonotonicityReport, MonotonicityReport]:
    """Tail trends of B(n, p) around its mean as p sweeps a rational grid.

    At p = k/(n-1) the threshold np - p equals k exactly, so the strict
    tail P(B > np - p) is P(B >= k+1) with no rounding ambiguity; the
    second grid p = k/(n+1) makes np - (1-p) equal k - 1 the same way.
    The first sequence is claimed increasing, the second decreasing.
    """
    if n < 2:
        raise DomainError(f"binomial monotonicity needs n >= 2, got {n}")
    ks = list(range(1, n - 1)) or [1]  # n = 2 keeps the single point p = 1
    up = []
    for k in ks:
        p = k / (n - 1)
        up.append((p, 1.0 - binomial_cdf(BinomialParams(n, p), k)))
    down = []
    for k in range(1, n + 1):
        p = k / (n + 1)
        down.append((p, 1.0 - binomial_cdf(BinomialParams(n, p), k - 1)))
    up_probs = [q for _, q in up]
    down_probs = [q for _, q in down]
    return (
        MonotonicityReport(
            "binomial-p", "increasing", tuple(up), _violations(up_probs, "increasing", tol)
        ),
        MonotonicityReport(
            "binomial-p", "decreasing", tuple(down), _violations(down_probs, "decreasing", tol)
        ),
    )


def _mmm_positive(params: BetaParams, tol: float) -> MmmReport:
    # canonical wedge a <= b; callers mirror the negatively skewed case
    a, b = params.a, params.b
    median = beta_median(params)
    mean = beta_mean(params)
    if b <= 1.0 and a < 1.0:
        # decreasing-or-antimodal side: the density minimum sits at
        # (a-1)/(a+b-2) when interior, at the right edge when b = 1
        anti = 1.0 if b == 1.0 else (a - 1.0) / (a + b - 2.0)
        holds = median <= mean + tol and median <= anti + tol
        return MmmReport(anti, median, mean, holds)
    # mode side: interior maximum when a > 1, else the mass piles at 0
    mode = (a - 1.0) / (a + b - 2.0) if a > 1.0 else 0.0
    holds = mode <= median + tol and median <= mean + tol
    return MmmReport(mode, median, mean, holds)


def mmm_check(params: BetaParams, tol: float = MONOTONE_TOL) -> MmmReport:
    """Mode-median-mean chain, or its anti-mode variant, for one Beta law.

    Positively skewed and symmetric laws are checked directly; negatively
    skewed ones are checked through the reflection (b, a) and reported in
    their own coordinates.
    """
    if skew_class(params) == "negative":
        inner = _mmm_positive(BetaParams(params.b, params.a), tol)
        flipped = None if inner.mode_or_antimode is None else 1.0 - inner.mode_or_antimode
        return MmmReport(flipped, 1.0 - inner.median, 1.0 - inner.mean, inner.inequalities_hold)
    return _mmm_positive(params, tol)


def jensen_exceedance_compare(
    P: BetaParams, Q: BetaParams, functional: str, tol: float = MONOTONE_TOL
) -> bool:
    """Compare exceedance over a landmark across a convex-ordered pair.

    With P below Q in the convex transform order, mass above the mean and
    above the anti-mode can only shrink moving from P to Q, while mass
    above the mode can only grow.  Returns whether the corresponding
    inequality holds numerically.
    """
    if functional not in ("mean", "mode", "antimode"):
        raise DomainError(f"functional must be mean, mode, or antimode, got {functional!r}")
    verdict = decide_beta_order(OrderKind.CONVEX_TRANSFORM, P, Q).result
    if verdict not in (OrderResult.LESS_THAN, OrderResult.EQUIVALENT):
        raise OrderingError(
            f"jensen comparison needs P below Q in the convex transform order, got {verdict.value}"
        )

    def landmark_mass(params: BetaParams) -> float:
        if functional == "mean":
            return 1.0 - beta_cdf(params, beta_mean(params))
        shape = classify_shape(params)
        wanted = "unimodal" if functional == "mode" else "uniantimodal"
        if shape.kind != wanted:
            raise DomainError(
                f"{functional} undefined for Beta({params.a}, {params.b})"
            )
        return 1.0 - beta_cdf(params, shape.location)

    p_side, q_side = landmark_mass(P), landmark_mass(Q)
    if functional == "mode":
        return p_side <= q_side + tol
    return p_side >= q_side - tol
