"""Sign-pattern algebra for tracking sign changes of real functions.

Words over the two generators ``+`` and ``-`` with the idempotent
relations ``++ = +`` and ``--  = -`` form a monoid whose elements are
the reduced alternating words plus the empty word (the unit).  The
pattern of a function on an interval is the maximal word obtainable by
sampling signs left to right, so a pattern records how often a function
changes sign.  Patterns carry a partial order: ``p <= q`` when ``q``
factors as ``u * p * v``.  Sampling can only miss sign changes, never
invent them, so any sampled pattern is ``<=`` the true one.  That makes
pattern comparison safe to use as a one-sided numerical check.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "Sign",
    "SignPattern",
    "GridPolicy",
    "EMPTY",
    "concat",
    "reverse",
    "flip",
    "leq",
    "pattern_of_samples",
    "pattern_of_function",
    "check_derivative_bound",
    "DEFAULT_GRID",
    "DEFAULT_ZERO_TOL",
]

logger = logging.getLogger(__name__)

DEFAULT_ZERO_TOL = 1e-9


class Sign(IntEnum):
    """A single sign value; ZERO acts as the monoid unit."""

    NEG = -1
    ZERO = 0
    POS = 1

    @classmethod
    def of(cls, value: float, zero_tol: float = 0.0) -> "Sign":
        """Sign of a real number, mapping |value| <= zero_tol (and NaN) to ZERO."""
        if math.isnan(value) or abs(value) <= zero_tol:
            return cls.ZERO
        return cls.POS if value > 0 else cls.NEG

    def flipped(self) -> "Sign":
        return Sign(-int(self))


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    # drop zeros (the unit) and collapse adjacent repeats (idempotency)
    word: list[int] = []
    for s in letters:
        s = int(s)
        if s == 0:
            continue
        if s not in (-1, 1):
            raise ValueError(f"sign letters must be -1, 0 or +1, got {s}")
        if not word or word[-1] != s:
            word.append(s)
    return tuple(word)


class SignPattern:
    """A reduced alternating word over {+, -}; the empty word is the unit.

    Instances are immutable and hashable.  ``p * q`` concatenates with
    boundary collapse, ``p <= q`` is the factor order.
    """

    __slots__ = ("word",)

    word: tuple[int, ...]

    def __init__(self, letters: Iterable[int | Sign] = ()):
        object.__setattr__(self, "word", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("SignPattern is immutable")

    @classmethod
    def parse(cls, text: str) -> "SignPattern":
        """Build a pattern from a string like '+-+'; '0' or '' is the unit."""
        if text in ("", "0"):
            return EMPTY
        table = {"+": 1, "-": -1}
        try:
            return cls(table[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"invalid pattern character {exc.args[0]!r}") from None

    @classmethod
    def of_sign(cls, sign: Sign) -> "SignPattern":
        return EMPTY if sign == Sign.ZERO else cls((int(sign),))

    def __mul__(self, other: "SignPattern") -> "SignPattern":
        if not isinstance(other, SignPattern):
            return NotImplemented
        if not self.word:
            return other
        if not other.word:
            return self
        return SignPattern(self.word + other.word)

    def reverse(self) -> "SignPattern":
        return SignPattern(self.word[::-1])

    def flip(self) -> "SignPattern":
        return SignPattern(tuple(-s for s in self.word))

    def leq(self, other: "SignPattern") -> bool:
        """Factor order: true iff other = u * self * v for some words u, v.

        For reduced alternating words this reduces to a length test:
        when the leading signs agree the word must be no longer, and
        otherwise strictly shorter, than the right-hand side.  The unit
        is below everything.  The rule is validated against brute-force
        factorization search in the test suite.
        """
        if not self.word:
            return True
        if not other.word:
            return False
        if self.word[0] == other.word[0]:
            return len(self.word) <= len(other.word)
        return len(self.word) <= len(other.word) - 1

    def __le__(self, other: "SignPattern") -> bool:
        return self.leq(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignPattern) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __bool__(self) -> bool:
        return bool(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "0"
        return "".join("+" if s > 0 else "-" for s in self.word)

    def __repr__(self) -> str:
        return f"SignPattern({str(self)!r})"


EMPTY = SignPattern()


def concat(lhs: SignPattern, rhs: SignPattern) -> SignPattern:
    """Monoid product: lhs followed by rhs with boundary collapse."""
    return lhs * rhs


def reverse(p: SignPattern) -> SignPattern:
    """Word order reversed; an anti-homomorphism and an involution."""
    return p.reverse()


def flip(p: SignPattern) -> SignPattern:
    """Every sign negated; a homomorphism and an involution."""
    return p.flip()


def leq(p: SignPattern, q: SignPattern) -> bool:
    """Partial order: true iff q = u * p * v for some words u, v."""
    return p.leq(q)


def _word_from_sign_array(signs: np.ndarray) -> tuple[int, ...]:
    nz = signs[signs != 0]
    if nz.size == 0:
        return ()
    keep = np.empty(nz.size, dtype=bool)
    keep[0] = True
    np.not_equal(nz[1:], nz[:-1], out=keep[1:])
    return tuple(int(s) for s in nz[keep])


def signs_of_values(values: np.ndarray, zero_tol: float) -> np.ndarray:
    """Map an array to int8 signs, with |v| <= zero_tol and NaN going to 0."""
    values = np.asarray(values, dtype=float)
    signs = np.zeros(values.shape, dtype=np.int8)
    with np.errstate(invalid="ignore"):
        signs[values > zero_tol] = 1
        signs[values < -zero_tol] = -1
    return signs


def pattern_of_samples(values: Sequence[float] | np.ndarray, zero_tol: float = 0.0) -> SignPattern:
    """Monoid product of the signs of a sample sequence.

    Values within zero_tol of zero (and NaN) contribute the unit and
    drop out.  If the samples come from a function of finite sign
    variation the result is a lower bound of the true pattern in the
    partial order, because sampling can only miss sign changes.
    """
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        return EMPTY
    return SignPattern(_word_from_sign_array(signs_of_values(arr, zero_tol)))


@dataclass(frozen=True, slots=True)
class GridPolicy:
    """Sampling grid for pattern estimation.

    Chebyshev nodes mapped to the open interval, with the endpoints
    excluded by a small relative margin: Beta densities with a shape
    parameter below 1 blow up at the support endpoints, so the grid
    never touches them.
    """

    n_points: int = 2049
    endpoint_margin: float = 1e-8

    def __post_init__(self):
        if self.n_points < 1:
            raise ValueError("n_points must be at least 1")
        if not 0 <= self.endpoint_margin < 0.5:
            raise ValueError("endpoint_margin must lie in [0, 0.5)")

    def nodes(self, lo: float, hi: float) -> np.ndarray:
        """Ascending Chebyshev-Gauss nodes on (lo, hi) minus the margin."""
        if not lo < hi:
            raise ValueError(f"empty interval ({lo}, {hi})")
        span = hi - lo
        a = lo + self.endpoint_margin * span
        b = hi - self.endpoint_margin * span
        n = self.n_points
        k = np.arange(n - 1, -1, -1, dtype=float)
        theta = (2.0 * k + 1.0) * math.pi / (2.0 * n)
        return 0.5 * (a + b) + 0.5 * (b - a) * np.cos(theta)


DEFAULT_GRID = GridPolicy()


def pattern_of_function(
    f: Callable[[np.ndarray], np.ndarray] | Callable[[float], float],
    interval: tuple[float, float],
    grid: GridPolicy = DEFAULT_GRID,
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> SignPattern:
    """Estimate the sign pattern of f on an open interval by grid sampling.

    The callable may be vectorized over numpy arrays or plain scalar.
    Evaluation failures and non-finite values at isolated nodes count as
    sign zero and are reported through the module logger.  The result is
    a lower bound of the true pattern; finer grids can only move it up.
    """
    lo, hi = interval
    xs = grid.nodes(lo, hi)
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise TypeError("not vectorized")
    except Exception:
        out = np.empty_like(xs)
        for i, x in enumerate(xs):
            try:
                out[i] = f(float(x))
            except Exception:
                out[i] = math.nan
        vals = out
    bad = ~np.isfinite(vals)
    if bad.any():
        logger.debug(
            "pattern_of_function: %d of %d nodes failed or were non-finite; treated as zero",
            int(bad.sum()),
            xs.size,
        )
        vals = np.where(bad, 0.0, vals)
    return pattern_of_samples(vals, zero_tol)


def check_derivative_bound(
    f_samples: Sequence[tuple[float, float]],
    df_samples: Sequence[tuple[float, float]],
    zero_tol: float = 0.0,
) -> bool:
    """Check the derivative domination law on sampled data.

    With sigma the first nonzero sign of f, the law states
    pattern(f) <= sigma * pattern(f').  Both sample sequences must be
    sorted by x over the same interval.
    """
    fx = [x for x, _ in f_samples]
    dx = [x for x, _ in df_samples]
    if any(x1 > x2 for x1, x2 in zip(fx, fx[1:])) or any(
        x1 > x2 for x1, x2 in zip(dx, dx[1:])
    ):
        raise ValueError("sample sequences must be sorted by x")
    fv = np.asarray([v for _, v in f_samples], dtype=float)
    dv = np.asarray([v for _, v in df_samples], dtype=float)
    fpat = pattern_of_samples(fv, zero_tol)
    if not fpat:
        return True
    first = Sign(fpat.word[0])
    bound = SignPattern.of_sign(first) * pattern_of_samples(dv, zero_tol)
    return fpat.leq(bound)
