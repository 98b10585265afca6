"""Every Dedekind-type sum family, evaluated exactly by direct summation.

Each evaluator walks the literal defining sum over ``r = 1 .. |modulus|``
with signed division, exactly as the family is defined; no closed-form
shortcuts are taken here (closed forms live in :mod:`dedsums.reciprocity`
where they serve as the opposite side of each identity).  Negative moduli
are supported wherever the defining sum permits them.

The inner loops build each kernel argument as a raw numerator/denominator
pair and reduce once, which avoids most intermediate Fraction churn; the
kernel values themselves are exact Fractions throughout.  Results are
memoized with bounded caches: grid sweeps re-request the same lattice
arguments constantly and the sums are pure functions of their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import _bbar_pair, _carlitz_pair
from .exact import floor_frac, format_rational, parse_rational

__all__ = [
    "classical_s",
    "rademacher_s",
    "berndt_s",
    "apostol_s",
    "carlitz_s",
    "hwz_s",
    "s_mn_two",
    "s_n_two",
    "s_mn_plain",
    "count_ladder",
    "SumRequest",
    "SUM_FAMILIES",
]

_CACHE_SIZE = 1 << 16
_ZERO = Fraction(0)


def _require_nonzero(value: int, name: str) -> None:
    if value == 0:
        raise ValueError(f"modulus {name} must be nonzero")


def _require_order(value: int, name: str, minimum: int = 0) -> None:
    if value < minimum:
        raise ValueError(f"order {name} must be >= {minimum}")


@lru_cache(maxsize=_CACHE_SIZE)
def classical_s(a: int, b: int) -> Fraction:
    """Classical Dedekind sum: sum of ((r/b)) ((ar/b)) over r = 1..|b|."""
    _require_nonzero(b, "b")
    total = _ZERO
    for r in range(1, abs(b) + 1):
        total += _bbar_pair(1, r, b) * _bbar_pair(1, a * r, b)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def rademacher_s(a: int, b: int, x: Fraction, y: Fraction) -> Fraction:
    """Shifted two-term sum: sum of (((r+y)/b)) ((a(r+y)/b + x))."""
    _require_nonzero(b, "b")
    x, y = Fraction(x), Fraction(y)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    ud = yd * b
    shift = xn * ud
    total = _ZERO
    for r in range(1, abs(b) + 1):
        un = r * yd + yn
        total += _bbar_pair(1, un, ud) * _bbar_pair(1, a * un * xd + shift, ud * xd)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def berndt_s(a: int, b: int, c: int, x: Fraction, y: Fraction, z: Fraction) -> Fraction:
    """Three-argument sawtooth sum: sum of ((a(r+z)/c - x)) ((b(r+z)/c - y))."""
    _require_nonzero(c, "c")
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    zn, zd = z.numerator, z.denominator
    ud = zd * c
    total = _ZERO
    for r in range(1, abs(c) + 1):
        un = r * zd + zn
        total += _bbar_pair(1, a * un * xd - xn * ud, ud * xd) \
            * _bbar_pair(1, b * un * yd - yn * ud, ud * yd)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def apostol_s(n: int, a: int, b: int) -> Fraction:
    """Higher-order sum with one sawtooth factor and one degree-n factor."""
    _require_order(n, "n", 1)
    _require_nonzero(b, "b")
    total = _ZERO
    for r in range(1, abs(b) + 1):
        total += _bbar_pair(1, r, b) * _bbar_pair(n, a * r, b)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def carlitz_s(n: int, a: int, b: int, x: Fraction, y: Fraction) -> Fraction:
    """Shifted higher-order sum built on the raw polynomial kernel B_n({.}).

    Unlike the periodized kernel, the degree-1 factor here is -1/2 (not 0)
    whenever its argument is an integer.
    """
    _require_order(n, "n")
    _require_nonzero(b, "b")
    x, y = Fraction(x), Fraction(y)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    ud = yd * b
    shift = xn * ud
    total = _ZERO
    for r in range(1, abs(b) + 1):
        un = r * yd + yn
        total += _carlitz_pair(1, un, ud) * _carlitz_pair(n, a * un * xd + shift, ud * xd)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def hwz_s(m: int, n: int, a: int, b: int, c: int,
          x: Fraction, y: Fraction, z: Fraction) -> Fraction:
    """Generalized two-order, three-modulus, three-shift sum.

    The summand is B'_m(a(r+z)/c - x) B'_n(b(r+z)/c - y) over r = 1..|c|;
    ``a`` and ``b`` may be any integers (zero included -- a zero top entry
    makes its factor constant in r), while ``c`` carries the summation
    range and must be nonzero.
    """
    _require_order(m, "m")
    _require_order(n, "n")
    _require_nonzero(c, "c")
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    zn, zd = z.numerator, z.denominator
    ud = zd * c
    x_shift = xn * ud
    y_shift = yn * ud
    dx, dy = ud * xd, ud * yd
    total = _ZERO
    for r in range(1, abs(c) + 1):
        un = r * zd + zn
        total += _bbar_pair(m, a * un * xd - x_shift, dx) \
            * _bbar_pair(n, b * un * yd - y_shift, dy)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def s_mn_two(m: int, n: int, a: int, b: int, x: Fraction, y: Fraction) -> Fraction:
    """Two-modulus projection: sum of B'_m(a(r+y)/b + x) B'_n((r+y)/b)."""
    _require_order(m, "m")
    _require_order(n, "n")
    _require_nonzero(b, "b")
    x, y = Fraction(x), Fraction(y)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    ud = yd * b
    shift = xn * ud
    total = _ZERO
    for r in range(1, abs(b) + 1):
        un = r * yd + yn
        total += _bbar_pair(m, a * un * xd + shift, ud * xd) * _bbar_pair(n, un, ud)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def s_n_two(n: int, a: int, b: int, x: Fraction, y: Fraction) -> Fraction:
    """Single-order projection: sum of B'_1((r+y)/b) B'_n(a(r+y)/b + x)."""
    _require_order(n, "n")
    _require_nonzero(b, "b")
    x, y = Fraction(x), Fraction(y)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    ud = yd * b
    shift = xn * ud
    total = _ZERO
    for r in range(1, abs(b) + 1):
        un = r * yd + yn
        total += _bbar_pair(1, un, ud) * _bbar_pair(n, a * un * xd + shift, ud * xd)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def s_mn_plain(m: int, n: int, a: int, b: int, c: int) -> Fraction:
    """Unshifted three-modulus sum: sum of B'_m(ar/c) B'_n(br/c)."""
    _require_order(m, "m")
    _require_order(n, "n")
    _require_nonzero(c, "c")
    total = _ZERO
    for r in range(1, abs(c) + 1):
        total += _bbar_pair(m, a * r, c) * _bbar_pair(n, b * r, c)
    return total


@lru_cache(maxsize=_CACHE_SIZE)
def count_ladder(a: int, b: int, c: int, x: Fraction, y: Fraction, z: Fraction) -> int:
    """Count lattice triples on the common ladder through the three moduli.

    Counts triples (r, s, t) of integers with

        0 <= sgn(c)(r+x)/a = sgn(c)(s+y)/b = sgn(c)(t+z)/c < 1.

    Each admissible common value is (k + {z})/c for a unique k in
    0..|c|-1, and the triple is determined by k, so it suffices to count
    the k for which a(k+{z})/c - x and b(k+{z})/c - y are both integers.
    For positive moduli and zero shifts this is gcd(a, b, c).
    """
    for name, v in (("a", a), ("b", b), ("c", c)):
        _require_nonzero(v, name)
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    _, fz = floor_frac(z)
    fn, fd = fz.numerator, fz.denominator
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    ud = fd * c
    count = 0
    for k in range(abs(c)):
        un = k * fd + fn
        if (a * un * xd - xn * ud) % (ud * xd) == 0 and \
                (b * un * yd - yn * ud) % (ud * yd) == 0:
            count += 1
    return count


_FAMILY_SPECS = {
    # family tag -> (order names, modulus names, shift names, evaluator)
    "classical": ((), ("a", "b"), (), classical_s),
    "rademacher": ((), ("a", "b"), ("x", "y"), rademacher_s),
    "berndt3": ((), ("a", "b", "c"), ("x", "y", "z"), berndt_s),
    "apostol": (("n",), ("a", "b"), (), apostol_s),
    "carlitz": (("n",), ("a", "b"), ("x", "y"), carlitz_s),
    "hwz": (("m", "n"), ("a", "b", "c"), ("x", "y", "z"), hwz_s),
    "two_term_mn": (("m", "n"), ("a", "b"), ("x", "y"), s_mn_two),
    "two_term_n": (("n",), ("a", "b"), ("x", "y"), s_n_two),
    "plain_mn": (("m", "n"), ("a", "b", "c"), (), s_mn_plain),
}

SUM_FAMILIES = tuple(_FAMILY_SPECS)


@dataclass(frozen=True)
class SumRequest:
    """A sum family name plus its full parameter tuple.

    ``orders`` and ``shifts`` must match the family's arity (empty tuples
    where the family takes none).  The canonical JSON encoding uses the
    family tag string, plain integers, and rational literal strings.
    """

    family: str
    orders: tuple[int, ...] = ()
    moduli: tuple[int, ...] = ()
    shifts: tuple[Fraction, ...] = ()

    def _spec(self):
        try:
            return _FAMILY_SPECS[self.family]
        except KeyError:
            raise ValueError(f"unknown sum family: {self.family!r}") from None

    def validate(self) -> None:
        order_names, mod_names, shift_names, _ = self._spec()
        if len(self.orders) != len(order_names):
            raise ValueError(
                f"{self.family} takes {len(order_names)} order(s), got {len(self.orders)}")
        if len(self.moduli) != len(mod_names):
            raise ValueError(
                f"{self.family} takes {len(mod_names)} moduli, got {len(self.moduli)}")
        if len(self.shifts) != len(shift_names):
            raise ValueError(
                f"{self.family} takes {len(shift_names)} shift(s), got {len(self.shifts)}")
        if self.moduli[-1] == 0:
            raise ValueError(f"modulus {mod_names[-1]} must be nonzero")

    def evaluate(self) -> Fraction:
        self.validate()
        _, _, _, fn = self._spec()
        return fn(*self.orders, *self.moduli, *map(Fraction, self.shifts))

    def to_json_dict(self) -> dict:
        order_names, mod_names, shift_names, _ = self._spec()
        out: dict = {"family": self.family}
        for name, v in zip(order_names, self.orders):
            out[name] = v
        for name, v in zip(mod_names, self.moduli):
            out[name] = v
        for name, v in zip(shift_names, self.shifts):
            out[name] = format_rational(v)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SumRequest":
        family = data.get("family")
        if family not in _FAMILY_SPECS:
            raise ValueError(f"unknown sum family: {family!r}")
        order_names, mod_names, shift_names, _ = _FAMILY_SPECS[family]
        try:
            orders = tuple(int(data[n]) for n in order_names)
            moduli = tuple(int(data[n]) for n in mod_names)
            shifts = tuple(parse_rational(str(data[n])) for n in shift_names)
        except KeyError as exc:
            raise ValueError(f"missing parameter {exc.args[0]!r} for {family}") from None
        return cls(family=family, orders=orders, moduli=moduli, shifts=shifts)


def clear_caches() -> None:
    """Drop all memoized sum values (used to bound memory in long sweeps)."""
    for fn in (classical_s, rademacher_s, berndt_s, apostol_s, carlitz_s,
               hwz_s, s_mn_two, s_n_two, s_mn_plain, count_ladder):
        fn.cache_clear()
