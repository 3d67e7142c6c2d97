"""Exact classification of bundle slopes via continued-fraction recurrences.

Everything here is rational arithmetic.  Two recursions drive the module:

* ``slope_step(N, x) = 1/(N-1 + 1/(1+x))``, whose iterates starting at 0
  enumerate the *exceptional slopes* on projective N-space in increasing
  order; they converge to an irrational limit.
* ``ratio_step(N, x) = N - 1/x``, the dual recursion on ratios b/a, whose
  orbit of infinity decreases to the larger root of x**2 - N*x + 1.

The irrational limits are never materialized: all threshold comparisons
are signs of integer quadratics, so membership answers are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

INFINITY = float("inf")

#: a Slope is an exact Fraction, or INFINITY (used only as a marker; no
#: float arithmetic is ever performed on it)
Slope = Fraction | float

MAX_ORBIT_STEPS = 64


def is_infinite(x: Slope) -> bool:
    return x == INFINITY


def _as_fraction(x) -> Fraction:
    q = Fraction(x)
    return q


def slope_step(n_dim: int, x: Slope) -> Fraction:
    """One step of the exceptional-slope recursion: 1/(N-1 + 1/(1+x)).

    Requires finite x >= 0.
    """
    if n_dim < 1:
        raise ValueError("ambient dimension must be >= 1")
    if is_infinite(x):
        raise ValueError("slope recursion is only defined for finite slopes")
    q = _as_fraction(x)
    if q < 0:
        raise ValueError("slope must be nonnegative")
    return 1 / (n_dim - 1 + 1 / (1 + q))


def exceptional_slopes(n_dim: int, count: int) -> list[Fraction]:
    """The first ``count`` iterates of slope_step at 0, strictly increasing."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [Fraction(0)]
    for _ in range(count - 1):
        out.append(slope_step(n_dim, out[-1]))
    return out


def compare_slope_limit(n_dim: int, q) -> int:
    """Sign of q minus the limit of the exceptional slopes.

    The limit is the positive root of (N-1)x**2 + (N-1)x - 1, which is
    irrational for N >= 2, so the result is never 0 for rational q >= 0
    (for N = 1 the limit is infinite and the sign is always -1).
    """
    q = _as_fraction(q)
    if q < 0:
        raise ValueError("slope must be nonnegative")
    value = (n_dim - 1) * q * q + (n_dim - 1) * q - 1
    return (value > 0) - (value < 0)


def is_semistable_slope(n_dim: int, q) -> bool:
    """Membership of q in the set of semistable slopes for N-space.

    The set consists of everything above the exceptional limit together
    with the exceptional slopes themselves.  For N = 1 it degenerates to
    the nonnegative integers.
    """
    q = _as_fraction(q)
    if q < 0:
        raise ValueError("slope must be nonnegative")
    if n_dim == 1:
        return q.denominator == 1
    sign = compare_slope_limit(n_dim, q)
    if sign > 0:
        return True
    # q is below the limit; the exceptional ladder increases past it
    e = Fraction(0)
    for _ in range(MAX_ORBIT_STEPS):
        if e == q:
            return True
        if e > q:
            return False
        e = slope_step(n_dim, e)
    raise RuntimeError(f"exceptional ladder did not pass {q} in {MAX_ORBIT_STEPS} steps")


def ratio_step(n_dim: int, x: Slope) -> Fraction:
    """One step of the dual recursion on ratios: N - 1/x, with step(inf) = N."""
    if is_infinite(x):
        return Fraction(n_dim)
    q = _as_fraction(x)
    if q == 0:
        raise ValueError("ratio recursion is undefined at 0")
    return n_dim - 1 / q


def compare_ratio_limit(n_dim: int, q) -> int:
    """Sign of q**2 - N*q + 1; for q > 1 this is the sign of q minus the
    limit of the orbit of infinity under ratio_step."""
    q = _as_fraction(q)
    value = q * q - n_dim * q + 1
    return (value > 0) - (value < 0)


def _check_psi_domain(n_dim: int, q: Slope) -> Fraction | None:
    if n_dim < 2:
        raise ValueError("ratio sets are defined for ambient dimension >= 2")
    if is_infinite(q):
        return None
    q = _as_fraction(q)
    if q <= 1:
        raise ValueError("ratio must be > 1 or infinite")
    return q


def is_balanced_ratio(n_dim: int, q: Slope) -> bool:
    """Whether b/a = q is a ratio at which a general N-dimensional series
    multiplies every subspace up by at least b/a.

    Computed by the reduction q = b/a -> a/(b-a) into the semistable-slope
    set one dimension down.  Infinity (the a = 0 convention) is a member.
    """
    q = _check_psi_domain(n_dim, q)
    if q is None:
        return True
    b, a = q.numerator, q.denominator
    return is_semistable_slope(n_dim - 1, Fraction(a, b - a))


def is_balanced_ratio_orbit(n_dim: int, q: Slope) -> bool:
    """Same membership as is_balanced_ratio, by the dual description: the
    open interval (1, limit) together with the orbit of infinity under
    ratio_step.  Kept as an independent implementation for cross-checks.
    """
    q = _check_psi_domain(n_dim, q)
    if q is None:
        return True
    if n_dim == 2:
        # the orbit of infinity is (m+1)/m and the interval is empty
        return q.numerator - q.denominator == 1
    sign = compare_ratio_limit(n_dim, q)
    if sign < 0:
        return True
    t: Slope = INFINITY
    for _ in range(MAX_ORBIT_STEPS):
        t = ratio_step(n_dim, t)
        if t == q:
            return True
        if t < q:
            return False
    raise RuntimeError(f"ratio orbit did not pass {q} in {MAX_ORBIT_STEPS} steps")


@dataclass(frozen=True)
class FibonacciTable:
    """Values a_{-1}..a_m of the recurrence a_{n+1} = (N+1)a_n - a_{n-1}.

    The quotient a_{n-1}/(a_n - a_{n-1}) reproduces the n-th exceptional
    slope, and (a_n - a_{n-1}, a_{n-1}) are the rank and first Chern class
    of the n-th exceptional bundle in the ladder.
    """

    n_dim: int
    values: tuple[int, ...]  # index i holds a_{i-1}

    def a(self, n: int) -> int:
        """a_n for -1 <= n <= m."""
        return self.values[n + 1]

    @property
    def top_index(self) -> int:
        return len(self.values) - 2

    def rank(self, n: int) -> int:
        return self.a(n) - self.a(n - 1)

    def c1(self, n: int) -> int:
        return self.a(n - 1)

    def slope(self, n: int) -> Fraction:
        return Fraction(self.c1(n), self.rank(n))


def fibonacci_table(n_dim: int, m: int) -> FibonacciTable:
    """Table of the generalized Fibonacci ladder through a_m."""
    if n_dim < 2:
        raise ValueError("ambient dimension must be >= 2")
    if m < 0:
        raise ValueError("table length must be >= 0")
    vals = [0, 1]
    for _ in range(m):
        vals.append((n_dim + 1) * vals[-1] - vals[-2])
    return FibonacciTable(n_dim, tuple(vals))
