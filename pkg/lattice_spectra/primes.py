# lattice_spectra/primes.py
from __future__ import annotations

import logging
from typing import Iterator

import gmpy2

log = logging.getLogger(__name__)

# The first twelve primes are a deterministic witness set below this limit.
_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 318_665_857_834_031_151_167_461


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """
    Miller-Rabin, deterministic for n < 3.1e23 (covers every 64-bit input).
    Larger inputs fall back to gmpy2's probabilistic test.
    """
    if n < 2:
        return False
    for p in _BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= _DETERMINISTIC_LIMIT:
        log.warning("is_prime(%d): beyond the deterministic range, using a probabilistic test", n)
        return bool(gmpy2.is_prime(n, 50))

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_strong_probable_prime(n, a, d, s) for a in _BASES)


def primes_from(start: int, bound: int) -> Iterator[int]:
    """Primes p with start <= p <= bound, increasing."""
    n = max(start, 2)
    if n <= 2 <= bound:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while n <= bound:
        if is_prime(n):
            yield n
        n += 2
