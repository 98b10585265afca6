"""Floating-point truncation checks of the convergent-series facts.

Each check evaluates a symmetric partial sum of a bilateral series in double
precision and compares it against a reference assembled from the exact
closed form (exact rationals converted to float once, unit-modulus phases
evaluated once via exact integer argument reduction).  The ``tolerance``
recorded in each report is an analytically derived upper bound on the
truncation error (integral tail bounds; Abel summation for the
conditionally convergent cases), never a fitted constant.

Two purely algebraic lemmas that need no floating point at all are also
checked here, exactly: a partial-fraction split of 1/((d-x)^m (d-y)^n) and
a hockey-stick style binomial sum.

Conventions: bilateral sums are truncated symmetrically at |d| <= K, with
the d and -d terms paired before accumulation so the conditionally
convergent degree-1 cases telescope; undefined terms (poles) are excluded.
Accumulation is in ascending index order and reduced with exact float
summation, so results are bit-reproducible.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bernoulli import bernoulli_function, bernoulli_number
from .exact import binomial, format_rational, frac, sgn

__all__ = [
    "TruncationReport",
    "fourier_partial",
    "fourier_partial_complex",
    "lemma24_check",
    "lemma27_check",
    "zeta_even_check",
    "lemma22_exact",
    "lemma28_exact",
    "ANALYTIC_TARGETS",
]

ANALYTIC_TARGETS = ("fourier", "lemma24", "lemma27", "zeta_even")

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TruncationReport:
    """One truncation check: approximation, exact-derived reference, verdict.

    ``approx`` and ``reference`` are floats for real targets and
    ``(re, im)`` pairs for the complex target; ``abs_error`` is the absolute
    difference (the max over components in the complex case) and must not
    exceed ``tolerance`` for ``passed`` to hold.
    """

    target: str
    params: tuple[tuple[str, object], ...]
    K: int
    approx: Union[float, tuple[float, float]]
    reference: Union[float, tuple[float, float]]
    abs_error: float
    tolerance: float
    passed: bool

    def to_json_dict(self) -> dict:
        def enc(v):
            if isinstance(v, tuple):
                return [v[0], v[1]]
            return v
        params = {}
        for name, value in self.params:
            params[name] = format_rational(value) if isinstance(value, Fraction) else value
        return {
            "target": self.target,
            "params": params,
            "K": self.K,
            "approx": enc(self.approx),
            "reference": enc(self.reference),
            "abs_error": self.abs_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _cis(num: int, den: int) -> complex:
    """exp(2*pi*i * num/den) with exact integer argument reduction mod 1."""
    if den < 0:
        num, den = -num, -den
    return cmath.exp(complex(0.0, _TWO_PI * ((num % den) / den)))


def _gate_truncation_level(K: int, alpha: Fraction) -> None:
    # The documented tail bounds assume the truncation window clears the
    # pole at -alpha with room to spare.
    if K < 1:
        raise ValueError("truncation level K must be >= 1")
    if K < 2 * (math.ceil(abs(alpha)) + 1):
        raise ValueError(
            f"truncation level K={K} too small for pole at {-alpha} "
            f"(need K >= {2 * (math.ceil(abs(alpha)) + 1)})")


def fourier_partial_complex(n: int, x: Fraction, K: int) -> complex:
    """Symmetric partial sum of the exponential series for the degree-n kernel.

    Pairs the k and -k terms before accumulating, so the imaginary part
    vanishes up to rounding for the (real) target.
    """
    if n < 2:
        raise ValueError("absolute convergence requires degree n >= 2")
    if K < 1:
        raise ValueError("truncation level K must be >= 1")
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    sign = (-1) ** n
    re_terms: list[float] = []
    im_terms: list[float] = []
    for k in range(1, K + 1):
        term = (_cis(k * p, q) + sign * _cis(-k * p, q)) / float(k) ** n
        re_terms.append(term.real)
        im_terms.append(term.imag)
    series = complex(math.fsum(re_terms), math.fsum(im_terms))
    coef = -math.factorial(n) / complex(0.0, _TWO_PI) ** n
    return coef * series


def fourier_partial(n: int, x: Fraction, K: int) -> TruncationReport:
    """Check the exponential-series representation of the degree-n kernel.

    Tolerance: |tail| <= 2*n!/(2*pi)^n * sum_{k>K} k^-n
                       <= 2*n!/((2*pi)^n (n-1)) * K^(1-n).
    """
    x = Fraction(x)
    value = fourier_partial_complex(n, x, K)
    approx = value.real
    reference = float(bernoulli_function(n, x))
    abs_error = abs(approx - reference)
    tolerance = 2.0 * math.factorial(n) / (_TWO_PI ** n * (n - 1)) * K ** (1 - n)
    return TruncationReport(
        target="fourier",
        params=(("n", n), ("x", x)),
        K=K, approx=approx, reference=reference,
        abs_error=abs_error, tolerance=tolerance,
        passed=abs_error <= tolerance,
    )


def _bilateral_power_sum(j: int, alpha: Fraction, x: Optional[Fraction], K: int) -> complex:
    """Symmetric partial sum of e^(2*pi*i*d*x) / (d + alpha)^j over |d| <= K.

    ``x=None`` means unit weights.  Terms at the pole d = -alpha (possible
    only for integer alpha) are excluded; d and -d are paired.
    """
    af = float(alpha)
    pole = -alpha if alpha.denominator == 1 else None
    if x is not None:
        p, q = x.numerator, x.denominator
    re_terms: list[float] = []
    im_terms: list[float] = []

    def add(d: int) -> None:
        if pole is not None and d == pole:
            return
        w = _cis(d * p, q) if x is not None else complex(1.0, 0.0)
        t = w / (d + af) ** j
        re_terms.append(t.real)
        im_terms.append(t.imag)

    add(0)
    for d in range(1, K + 1):
        add(d)
        add(-d)
    return complex(math.fsum(re_terms), math.fsum(im_terms))


def _lemma_reference(j: int, b: int, r: int, x: Optional[Fraction]) -> complex:
    """Exact-derived closed form: phase-weighted kernel values over l = 1..|b|."""
    rat = Fraction(sgn(b) * (-1) ** (j - 1), math.factorial(j)) * Fraction(b) ** (j - 1)
    coef = float(rat) * complex(0.0, _TWO_PI) ** j
    acc = complex(0.0, 0.0)
    if x is None:
        for l in range(1, abs(b) + 1):
            acc += _cis(l * r, b) * float(bernoulli_function(j, Fraction(l, b)))
    else:
        p, q = x.numerator, x.denominator
        for l in range(1, abs(b) + 1):
            acc += _cis((l * q - p) * r, q * b) * \
                float(bernoulli_function(j, (l - x) / b))
    return coef * acc


def _tail_bound_unweighted(j: int, alpha: Fraction, K: int) -> float:
    """Tail bound for sum of 1/(d+alpha)^j beyond |d| = K (K past the pole).

    j = 1: pairing leaves sum_{d>K} 2*alpha/(alpha^2 - d^2); bounded by
    4(|alpha|+1)/K (covers the integer-alpha shifted-harmonic case too).
    j >= 2: two-sided integral bound 2*(K-|alpha|)^(1-j)/(j-1).
    """
    a = abs(float(alpha))
    if j == 1:
        return 4.0 * (a + 1.0) / K
    return 2.0 * (K - a) ** (1 - j) / (j - 1)


def lemma24_check(j: int, b: int, r: int, K: int) -> TruncationReport:
    """Check the unweighted bilateral power sum against its closed form."""
    if j < 1:
        raise ValueError("power j must be >= 1")
    if b == 0:
        raise ValueError("modulus b must be nonzero")
    alpha = Fraction(r, b)
    _gate_truncation_level(K, alpha)
    approx = _bilateral_power_sum(j, alpha, None, K).real
    reference = _lemma_reference(j, b, r, None).real
    abs_error = abs(approx - reference)
    tolerance = _tail_bound_unweighted(j, alpha, K) + 1e-12
    return TruncationReport(
        target="lemma24",
        params=(("j", j), ("b", b), ("r", r)),
        K=K, approx=approx, reference=reference,
        abs_error=abs_error, tolerance=tolerance,
        passed=abs_error <= tolerance,
    )


def lemma27_check(j: int, b: int, r: int, x: Fraction, K: int) -> TruncationReport:
    """Check the phase-weighted bilateral power sum against its closed form.

    For integer x this coincides with the unweighted check.  For the
    conditionally convergent j = 1 case with fractional x the tolerance
    comes from Abel summation: each one-sided tail is at most
    2/(|sin(pi x)| (K+1-|alpha|)), giving 8/(|sin(pi x)| K) after pairing.
    """
    if j < 1:
        raise ValueError("power j must be >= 1")
    if b == 0:
        raise ValueError("modulus b must be nonzero")
    x = Fraction(x)
    alpha = Fraction(r, b)
    _gate_truncation_level(K, alpha)
    value = _bilateral_power_sum(j, alpha, x, K)
    reference = _lemma_reference(j, b, r, x)
    abs_error = max(abs(value.real - reference.real), abs(value.imag - reference.imag))
    t = frac(x)
    if t == 0:
        tolerance = _tail_bound_unweighted(j, alpha, K)
    elif j == 1:
        tolerance = 8.0 / (math.sin(math.pi * float(t)) * K)
    else:
        tolerance = _tail_bound_unweighted(j, alpha, K)
    tolerance += 1e-12
    return TruncationReport(
        target="lemma27",
        params=(("j", j), ("b", b), ("r", r), ("x", x)),
        K=K,
        approx=(value.real, value.imag),
        reference=(reference.real, reference.imag),
        abs_error=abs_error, tolerance=tolerance,
        passed=abs_error <= tolerance,
    )


def zeta_even_check(j: int, K: int) -> TruncationReport:
    """Check the partial sum of n^(-2j) against the closed form for even zeta.

    Tolerance is the integral tail bound K^(1-2j)/(2j-1).
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if K < 1:
        raise ValueError("truncation level K must be >= 1")
    approx = math.fsum(1.0 / float(n) ** (2 * j) for n in range(1, K + 1))
    coeff = Fraction((-1) ** (j + 1) * 2 ** (2 * j - 1), math.factorial(2 * j)) \
        * bernoulli_number(2 * j)
    reference = float(coeff) * math.pi ** (2 * j)
    abs_error = abs(approx - reference)
    tolerance = float(K) ** (1 - 2 * j) / (2 * j - 1)
    return TruncationReport(
        target="zeta_even",
        params=(("j", j),),
        K=K, approx=approx, reference=reference,
        abs_error=abs_error, tolerance=tolerance,
        passed=abs_error <= tolerance,
    )


def lemma22_exact(m: int, n: int, d: Fraction, x: Fraction,
                  y: Fraction) -> tuple[Fraction, Fraction]:
    """Partial-fraction split of 1/((d-x)^m (d-y)^n), both sides exactly.

    Returns ``(lhs, rhs)``; the two are equal for all admissible inputs.
    """
    if m < 1 or n < 1:
        raise ValueError("orders m, n must be >= 1")
    d, x, y = Fraction(d), Fraction(x), Fraction(y)
    if d == x or d == y or x == y:
        raise ValueError("requires d != x, d != y, x != y")
    lhs = 1 / ((d - x) ** m * (d - y) ** n)
    rhs = Fraction(0)
    for j in range(1, m + 1):
        rhs += binomial(m + n - j - 1, n - 1) * (-1) ** (m - j) \
            / ((x - y) ** (m + n - j) * (d - x) ** j)
    for j in range(1, n + 1):
        rhs += binomial(m + n - j - 1, m - 1) * (-1) ** (n - j) \
            / ((y - x) ** (m + n - j) * (d - y) ** j)
    return lhs, rhs


def lemma28_exact(m: int, n: int) -> tuple[int, int]:
    """Diagonal binomial sum versus its closed form, both sides exactly."""
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    lhs = sum(binomial(m + n - j - 1, n - 1) for j in range(1, m + 1))
    rhs = binomial(m + n - 1, n)
    return lhs, rhs
