"""The general secant-plane class formula and its existence trichotomy.

The class of the locus of degree-d divisors imposing at most d - r
conditions on an s-dimensional series lives in a ring generated by two
ample classes theta and x with theta^(g+1) = 0; it is computed as a sum
over strictly increasing integer sequences of squared Vandermonde
determinants times binomial weight factors.  All coefficients are exact
rationals; integrality of the final class is checked, never assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

MAX_SEQUENCE_SPAN = 40  # guard on k + r per class evaluation

GUARANTEED = "Guaranteed"
NOT_EXPECTED = "NotExpected"
INVALID = "Invalid"


@dataclass(frozen=True)
class SecantParams:
    """Numerical data of the secant problem: a degree-n genus-g curve, an
    s-dimensional series, divisors of degree d failing by r conditions.

    The derived quantities are k = s + 1 - d + r (sequence length) and
    delta = n - g - s (excess degree).
    """

    n: int
    g: int
    s: int
    d: int
    r: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def k(self) -> int:
        return self.s + 1 - self.d + self.r

    @property
    def delta(self) -> int:
        return self.n - self.g - self.s


def existence_check(params: SecantParams) -> str:
    """Trichotomy for the secant locus.

    Guaranteed: nonempty (delta >= 0, rk <= d, (r - delta)k <= g).
    NotExpected: empty or of wrong dimension ((r - delta)k > g).
    Invalid: the first two hypotheses fail.
    """
    k, delta = params.k, params.delta
    if delta < 0 or params.r * k > params.d:
        return INVALID
    if (params.r - delta) * k <= params.g:
        return GUARANTEED
    return NOT_EXPECTED


def general_binomial(n: int, i: int) -> int:
    """Binomial coefficient for arbitrary integer n: falling factorial
    over i! for i > 0, 1 at i = 0, and 0 for negative i."""
    if i < 0:
        return 0
    if i == 0:
        return 1
    num = 1
    for t in range(i):
        num *= n - t
    return num // factorial(i) if num % factorial(i) == 0 else Fraction(num, factorial(i))


def weight_factor(r: int, k: int, delta: int, i: int, beta_i: int) -> Fraction:
    """Weight of position i holding beta_i in the class formula.

    Zero exactly when the binomial part vanishes; in that case the
    factorial quotient is never evaluated, so all factorial arguments
    stay nonnegative.
    """
    if not 1 <= beta_i <= k + r:
        raise ValueError("sequence entry out of range")
    binom = general_binomial(delta + i - 1, r + i - beta_i)
    if binom == 0:
        return Fraction(0)
    return Fraction(binom) * Fraction(
        factorial(r + i - beta_i), factorial(r + k - beta_i) * factorial(beta_i - 1)
    )


@dataclass(frozen=True)
class CohomologyClass:
    """Sum of c_j * theta^j * x^(rk - j) for 0 <= j <= min(g, rk); powers
    of theta beyond the genus are identically dropped."""

    total_degree: int
    genus: int
    coeffs: tuple[tuple[int, Fraction], ...]  # sorted (j, c_j), zeros omitted

    @classmethod
    def from_dict(cls, total_degree: int, genus: int, coeffs: dict[int, Fraction]) -> "CohomologyClass":
        items = tuple(sorted((j, c) for j, c in coeffs.items() if c != 0))
        return cls(total_degree, genus, items)

    def coefficient(self, j: int) -> Fraction:
        for jj, c in self.coeffs:
            if jj == j:
                return c
        return Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for j, c in self.coeffs:
            xs = self.total_degree - j
            mono = "*".join(
                part
                for part in (
                    (f"theta^{j}" if j > 1 else "theta") if j else "",
                    (f"x^{xs}" if xs > 1 else "x") if xs else "",
                )
                if part
            )
            terms.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


def _vandermonde_squared(beta: tuple[int, ...]) -> int:
    prod = 1
    for i, j in itertools.combinations(range(len(beta)), 2):
        prod *= beta[j] - beta[i]
    return prod * prod


def secant_class(params: SecantParams) -> CohomologyClass:
    """The secant locus class, as a polynomial in theta and x.

    Valid in the regime delta >= 0 and rk <= d.  Terms whose weight
    product vanishes are pruned before the Vandermonde is evaluated, and
    theta exponents beyond the genus are dropped.
    """
    k, delta, r, g = params.k, params.delta, params.r, params.g
    if delta < 0 or r * k > params.d:
        raise ValueError("class formula requires delta >= 0 and rk <= d")
    if k < 1:
        raise ValueError("sequence length k must be >= 1")
    if k + r > MAX_SEQUENCE_SPAN:
        raise ValueError(f"k + r exceeds the guard {MAX_SEQUENCE_SPAN}")
    rk = r * k
    coeffs: dict[int, Fraction] = {}
    for beta in itertools.combinations(range(1, k + r + 1), k):
        weight = Fraction(1)
        for i, b in enumerate(beta, start=1):
            weight *= weight_factor(r, k, delta, i, b)
            if weight == 0:
                break
        if weight == 0:
            continue
        j = sum(b - i for i, b in enumerate(beta, start=1))
        if j > g:
            continue
        coeffs[j] = coeffs.get(j, Fraction(0)) + _vandermonde_squared(beta) * weight
    return CohomologyClass.from_dict(rk, g, coeffs)


def secant_class_rank_one(params: SecantParams) -> CohomologyClass:
    """Independent closed form for k = 1: the sum over j of
    C(delta, r - j) / j! * theta^j * x^(r - j), truncated past the genus."""
    if params.k != 1:
        raise ValueError("closed form is for k = 1 only")
    delta, r, g = params.delta, params.r, params.g
    if delta < 0 or r > params.d:
        raise ValueError("class formula requires delta >= 0 and rk <= d")
    coeffs = {
        j: Fraction(general_binomial(delta, r - j), factorial(j))
        for j in range(0, min(r, g) + 1)
    }
    return CohomologyClass.from_dict(r, g, coeffs)


def hilbert_bridge(r_h: int, s_h: int) -> SecantParams:
    """Secant parameters of the node-location search for the nodal moving
    curve on the configuration space: the degree-r forms through a general
    configuration restrict to a series on a line, and a degree r-1 divisor
    failing s conditions is needed.  Requires 0 <= s < r/2; the result
    always has k = 2 and delta = s."""
    if not (0 <= s_h and 2 * s_h < r_h):
        raise ValueError("need 0 <= s < r/2")
    params = SecantParams(n=r_h, g=0, s=r_h - s_h, d=r_h - 1, r=s_h)
    assert params.k == 2 and params.delta == s_h
    return params
