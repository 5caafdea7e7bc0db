"""Small exact number-theoretic helpers (Catalan numbers, totient, Moebius)."""

from functools import lru_cache
from math import comb

# C_12; exhaustive routines refuse more elements than this unless told otherwise
ENUMERATION_CAP = 208012


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan requires n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def _check_positive(m: int) -> None:
    if m < 1:
        raise ValueError(f"argument must be a positive integer, got {m}")


def divisors(m: int) -> list[int]:
    """Divisors of ``m`` in ascending order."""
    _check_positive(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def factorize(m: int) -> dict[int, int]:
    _check_positive(m)
    factors = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    result = m
    for p in factorize(m):
        result -= result // p
    return result


def moebius(m: int) -> int:
    factors = factorize(m)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def chi_odd(m: int) -> int:
    _check_positive(m)
    return m % 2


def check_cap(count: int, limit: int | None) -> None:
    from .errors import ResourceLimitError

    if limit is not None and count > limit:
        raise ResourceLimitError(f"{count} objects exceed the enumeration cap of {limit}")
