"""Bernoulli numbers, Bernoulli polynomials, and their periodized kernels.

Two one-periodic kernels are exposed and they differ only at integers:

* :func:`bernoulli_function` -- the periodized Bernoulli function, whose
  degree-1 member is the sawtooth (value 0 at integers);
* :func:`carlitz_kernel` -- the raw polynomial evaluated at the fractional
  part, whose degree-1 member takes the value -1/2 at integers.

Some sum families are defined with one kernel, some with the other, so the
distinction is load-bearing: collapsing the two silently changes values on
integer lattice arguments.

Numbers and coefficient rows are grown on demand by the defining recurrence
``sum_{j=0}^{n} C(n+1, j) B_j = 0`` with ``B_0 = 1`` (convention
``B_j = B_j(0)``, so ``B_1 = -1/2``), memoized in a process-wide cache that
is synchronized for concurrent use.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .exact import binomial, floor_frac

__all__ = [
    "BernoulliCache",
    "bernoulli_number",
    "bernoulli_poly_coeffs",
    "bernoulli_poly",
    "bernoulli_poly_derivative_coeffs",
    "sawtooth",
    "bernoulli_function",
    "carlitz_kernel",
]

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


class BernoulliCache:
    """Grow-on-demand table of Bernoulli numbers and polynomial rows.

    ``numbers[j]`` is B_j; ``poly_rows[n]`` holds the monomial coefficients
    of B_n(x) ordered from degree n down to degree 0 (the coefficient of
    x^(n-k) is C(n, k) * B_k).  Requesting index ``j`` fills every index up
    to ``j``; growth is guarded by a lock, reads after fill are pure.
    """

    def __init__(self) -> None:
        self._numbers: list[Fraction] = [Fraction(1)]
        self._rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self._numbers) <= n:
                k = len(self._numbers)
                # B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j
                acc = _ZERO
                for j, bj in enumerate(self._numbers):
                    acc += binomial(k + 1, j) * bj
                bk = -acc / (k + 1)
                self._numbers.append(bk)
                self._rows.append(
                    tuple(binomial(k, i) * self._numbers[i] for i in range(k + 1))
                )

    def number(self, j: int) -> Fraction:
        if j < 0:
            raise ValueError("Bernoulli number index must be >= 0")
        if j >= len(self._numbers):
            self._grow(j)
        return self._numbers[j]

    def poly_row(self, n: int) -> tuple[Fraction, ...]:
        if n < 0:
            raise ValueError("Bernoulli polynomial degree must be >= 0")
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n]


_CACHE = BernoulliCache()


def bernoulli_number(j: int) -> Fraction:
    """The j-th Bernoulli number B_j (convention B_j = B_j(0), B_1 = -1/2)."""
    return _CACHE.number(j)


def bernoulli_poly_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of B_n(x), degree n first, degree 0 last."""
    return _CACHE.poly_row(n)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    """Exact value of the Bernoulli polynomial B_n(x)."""
    x = Fraction(x)
    acc = _ZERO
    for c in _CACHE.poly_row(n):
        acc = acc * x + c
    return acc


def bernoulli_poly_derivative_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of d/dx B_n(x); equals n times the row of B_{n-1}."""
    if n < 1:
        raise ValueError("derivative row requires degree >= 1")
    row = _CACHE.poly_row(n)
    return tuple((n - i) * row[i] for i in range(n))


@lru_cache(maxsize=None)
def _poly_at_pair(n: int, tn: int, td: int) -> Fraction:
    # tn/td is a reduced fraction in [0, 1); int keys hash much faster than
    # Fraction keys, and cache hits dominate in grid sweeps.
    return bernoulli_poly(n, Fraction(tn, td))


def _bbar_pair(n: int, num: int, den: int) -> Fraction:
    """Periodized kernel at num/den without constructing intermediate Fractions."""
    if den < 0:
        num, den = -num, -den
    t = num % den
    if t == 0:
        return _ZERO if n == 1 else _poly_at_pair(n, 0, 1)
    g = math.gcd(t, den)
    return _poly_at_pair(n, t // g, den // g)


def _carlitz_pair(n: int, num: int, den: int) -> Fraction:
    """Raw polynomial kernel at the fractional part of num/den."""
    if den < 0:
        num, den = -num, -den
    t = num % den
    g = math.gcd(t, den)
    return _poly_at_pair(n, t // g, den // g)


def sawtooth(x: Fraction) -> Fraction:
    """The sawtooth ((x)): 0 at integers, {x} - 1/2 elsewhere."""
    _, t = floor_frac(x)
    if t == 0:
        return _ZERO
    return t - _HALF


def bernoulli_function(n: int, x: Fraction) -> Fraction:
    """The n-th periodized Bernoulli function.

    Degree 0 is the constant 1, degree 1 is the sawtooth (0 at integers),
    and degree n >= 2 is B_n({x}).
    """
    if n < 0:
        raise ValueError("Bernoulli function index must be >= 0")
    x = Fraction(x)
    return _bbar_pair(n, x.numerator, x.denominator)


def carlitz_kernel(n: int, x: Fraction) -> Fraction:
    """B_n({x}) with no integer-point adjustment: B_1({k}) = -1/2 for k in Z."""
    if n < 0:
        raise ValueError("kernel index must be >= 0")
    x = Fraction(x)
    return _carlitz_pair(n, x.numerator, x.denominator)


def clear_eval_cache() -> None:
    """Drop memoized kernel evaluations (used to bound memory in long sweeps)."""
    _poly_at_pair.cache_clear()
