"""Ideals of Z and Z/nZ.

Every ideal of these rings is principal, so an ideal is stored as its
nonnegative generator.  Over Z/nZ the generator is normalized to a divisor
of n, with ``n`` itself standing for the zero ideal and ``1`` for the whole
ring.  Over Z (modulus 0) any generator >= 0 is allowed.

Each predicate has two routes: ``method="fast"`` reads the answer off the
factorization of the generator, ``method="brute"`` decides the defining
quantifier by enumerating ring elements.  Brute force is only defined for
Z/nZ.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .errors import NotProperError, RingMismatchError

__all__ = [
    "RingSpec",
    "Ideal",
    "factorize",
    "radical_of",
    "ideal_radical",
    "ideal_product",
    "ideal_sum",
    "ideal_intersection",
    "is_prime_ideal",
    "is_primary_ideal",
    "is_2_absorbing_ideal",
    "is_2_absorbing_primary_ideal",
    "divisors",
]


@dataclass(frozen=True)
class RingSpec:
    """The acting ring: Z/nZ for ``modulus >= 1``, symbolic Z for 0."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError(f"ring modulus must be >= 0, got {self.modulus}")

    @property
    def is_integers(self) -> bool:
        return self.modulus == 0

    def elements(self) -> range:
        if self.is_integers:
            raise ValueError("Z has no finite element list")
        return range(self.modulus)

    def ideal(self, a: int) -> "Ideal":
        """The principal ideal (a), normalized."""
        if self.is_integers:
            return Ideal(abs(a), self)
        return Ideal(gcd(a, self.modulus) or self.modulus, self)

    def ideals(self) -> list["Ideal"]:
        """All ideals of Z/nZ, by increasing generator."""
        return [Ideal(d, self) for d in divisors(len(self.elements()))]

    def zero_ideal(self) -> "Ideal":
        return Ideal(self.modulus, self)

    def unit_ideal(self) -> "Ideal":
        return Ideal(1, self)

    def __str__(self):
        return "Z" if self.is_integers else f"Z/{self.modulus}Z"


@dataclass(frozen=True)
class Ideal:
    generator: int
    ring: RingSpec

    def __post_init__(self):
        g, n = self.generator, self.ring.modulus
        if g < 0:
            raise ValueError(f"ideal generator must be >= 0, got {g}")
        if n and (g == 0 or n % g):
            raise ValueError(f"generator {g} does not divide the modulus {n}")

    @property
    def is_proper(self) -> bool:
        return self.generator != 1

    @property
    def is_zero(self) -> bool:
        return self.generator == self.ring.modulus

    def contains(self, a: int) -> bool:
        if self.generator == 0:
            return a == 0
        return a % self.generator == 0

    def __str__(self):
        return f"({self.generator}) in {self.ring}"


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, primes increasing."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def radical_of(n: int) -> int:
    """Product of the distinct primes of n (``rad(0) = 0``)."""
    if n == 0:
        return 0
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def _same_ring(I: Ideal, J: Ideal) -> RingSpec:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in different rings: {I.ring} vs {J.ring}")
    return I.ring


def ideal_radical(I: Ideal) -> Ideal:
    return Ideal(radical_of(I.generator), I.ring)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return R.ideal(I.generator * J.generator)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return R.ideal(gcd(I.generator, J.generator))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    if I.generator == 0 or J.generator == 0:
        return Ideal(0, R)
    return R.ideal(lcm(I.generator, J.generator))


def _require_proper(I: Ideal):
    if not I.is_proper:
        raise NotProperError(f"{I} is the whole ring; the predicate needs a proper ideal")


def _check_method(I: Ideal, method: str):
    if method not in ("fast", "brute"):
        raise ValueError(f"unknown method {method!r}")
    if method == "brute" and I.ring.is_integers:
        raise ValueError("brute-force mode needs a finite ring Z/nZ")


# -- fast routes: read off the generator's factorization -------------------

def _exponents(g: int) -> list[int]:
    return [e for _, e in factorize(g)]


def _prime_fast(g: int) -> bool:
    return g == 0 or _exponents(g) == [1]


def _primary_fast(g: int) -> bool:
    return g == 0 or len(_exponents(g)) == 1


def _two_absorbing_fast(g: int) -> bool:
    # nonzero proper (g) is 2-absorbing iff g in {p, p^2, pq}
    return g == 0 or sum(_exponents(g)) <= 2


def _two_absorbing_primary_fast(g: int) -> bool:
    return g == 0 or len(_exponents(g)) <= 2


# -- brute-force routes ----------------------------------------------------
#
# All four conditions only test membership in I or in sqrt(I), and both sets
# are unions of cosets of I.  The quantifiers are therefore decided over the
# quotient ring R/I = Z/gZ, which depends on g alone.

def _residues(g: int) -> np.ndarray:
    return np.arange(g, dtype=np.int64)


@lru_cache(maxsize=4)
def _brute_tables(g: int):
    x = _residues(g)
    in_I = x % g == 0
    # nilpotents of Z/gZ: x^k = 0 for some k; k = bit_length(g) suffices
    in_rad = np.zeros(g, dtype=bool)
    power = x.copy()
    for _ in range(max(1, g.bit_length())):
        in_rad |= power == 0
        power = (power * x) % g
    prod = np.multiply.outer(x, x) % g
    return x, in_I, in_rad, prod


@lru_cache(maxsize=None)
def _prime_brute(g: int) -> bool:
    x, in_I, _, prod = _brute_tables(g)
    ok = ~in_I[prod] | in_I[:, None] | in_I[None, :]
    return bool(ok.all())


@lru_cache(maxsize=None)
def _primary_brute(g: int) -> bool:
    x, in_I, in_rad, prod = _brute_tables(g)
    ok = ~in_I[prod] | in_I[:, None] | in_rad[None, :]
    return bool(ok.all())


def _triples(g: int, target) -> bool:
    x, in_I, _, prod = _brute_tables(g)
    ab_in = in_I[prod]
    for c in range(g):
        abc_in = in_I[(prod * c) % g]
        ac = target[(x * c) % g]
        ok = ~abc_in | ab_in | ac[:, None] | ac[None, :]
        if not ok.all():
            return False
    return True


@lru_cache(maxsize=None)
def _two_absorbing_brute(g: int) -> bool:
    return _triples(g, _brute_tables(g)[1])


@lru_cache(maxsize=None)
def _two_absorbing_primary_brute(g: int) -> bool:
    return _triples(g, _brute_tables(g)[2])


def _decide(I: Ideal, method: str, fast, brute) -> bool:
    _check_method(I, method)
    _require_proper(I)
    if method == "fast":
        return fast(I.generator)
    return brute(I.generator)


def is_prime_ideal(I: Ideal, method: str = "fast") -> bool:
    """``ab in I`` forces ``a in I`` or ``b in I``."""
    return _decide(I, method, _prime_fast, _prime_brute)


def is_primary_ideal(I: Ideal, method: str = "fast") -> bool:
    """``ab in I`` forces ``a in I`` or ``b in sqrt(I)``."""
    return _decide(I, method, _primary_fast, _primary_brute)


def is_2_absorbing_ideal(I: Ideal, method: str = "fast") -> bool:
    """``abc in I`` forces one of ``ab, ac, bc`` into I."""
    return _decide(I, method, _two_absorbing_fast, _two_absorbing_brute)


def is_2_absorbing_primary_ideal(I: Ideal, method: str = "fast") -> bool:
    """``abc in I`` forces ``ab in I`` or ``ac``/``bc`` into sqrt(I)."""
    return _decide(I, method, _two_absorbing_primary_fast, _two_absorbing_primary_brute)
