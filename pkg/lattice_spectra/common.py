# lattice_spectra/common.py
"""Integer helpers shared by the exact-value, form and counting modules."""
from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Optional, Tuple

import gmpy2

from .config import settings
from .errors import DomainError


def isqrt(n: int) -> int:
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return int(gmpy2.isqrt(n))


def exact_sqrt(n: int) -> Optional[int]:
    """Return s >= 0 with s*s == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    s, rem = gmpy2.isqrt_rem(n)
    return int(s) if rem == 0 else None


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, u, v) with u*a + v*b == g == gcd(a, b)."""
    g, u, v = gmpy2.gcdext(a, b)
    return int(g), int(u), int(v)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@lru_cache(maxsize=4096)
def squarefree_decompose(n: int, bound: int | None = None) -> Tuple[int, int]:
    """
    Write n = k^2 * m with m squarefree (sign kept on m).

    Trial division runs up to `bound` (settings.SQUAREFREE_BOUND by default).
    The cofactor left after trial division is accepted when it is 1, provably
    prime (below bound^2), or a perfect square; anything else could hide a
    square factor and is rejected.
    """
    if n == 0:
        raise DomainError("squarefree decomposition of 0 is undefined")
    bound = settings.SQUAREFREE_BOUND if bound is None else bound
    sign = -1 if n < 0 else 1
    rest = abs(n)
    k, m = 1, 1

    p = 2
    while p <= bound and p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                m *= p
        p = 3 if p == 2 else p + 2

    if rest > 1:
        root = exact_sqrt(rest)
        if root is not None:
            k *= root
        elif rest < bound * bound or p * p > rest:
            m *= rest
        else:
            raise DomainError(
                f"cannot certify the squarefree part of {n}: cofactor {rest} exceeds "
                f"the trial-division bound {bound}.\n"
                "Hint: raise LATTICE_SQUAREFREE_BOUND or pass a canonical radicand."
            )
    return k, sign * m
