# lattice_spectra/repcount.py
"""
Representation counts.

For a positive-definite form F and n >= 0:
  R(n)      number of integer pairs with F(x, y) == n
  r_plus(n) number of Aut+(F)-orbits among them (R / |Aut+| for n > 0)
  r_full(n) number of orbits under every automorphism, improper ones included

Also the first-quadrant counts behind Dirichlet rectangle multiplicities and
exact enumeration for forms x^2 + b xy + c y^2 with real quadratic b, c.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple, Union

from .common import ceil_div, exact_sqrt, isqrt
from .errors import DomainError, SearchExhausted
from .exactnum import (
    AnyValue,
    arith,
    as_exact,
    bounds,
    common_coordinates,
    rational_square_root,
    sign,
)
from .qform import Form, improper_automorphism, proper_automorphisms, require_definite

log = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class RepSet:
    target: Union[int, AnyValue]
    solutions: Tuple[Point, ...]
    R: int
    R_plus: Optional[int]
    R_full: Optional[int]
    primitive_count: int

    def __len__(self) -> int:
        return self.R


def _is_primitive_point(pt: Point) -> bool:
    return gcd(pt[0], pt[1]) == 1


def _sorted(points) -> Tuple[Point, ...]:
    return tuple(sorted(set(points), key=lambda p: (p[1], p[0])))


# ============================================================
# Integer forms
# ============================================================

def _solve(form: Form, n: int) -> Tuple[Point, ...]:
    if n < 0:
        raise DomainError(f"cannot represent negative n={n} by a positive definite form")
    if n == 0:
        return ((0, 0),)
    a, b, _c = form
    delta = form.delta
    y_max = isqrt(4 * a * n // -delta)
    out: List[Point] = []
    for y in range(-y_max, y_max + 1):
        s = exact_sqrt(delta * y * y + 4 * a * n)
        if s is None:
            continue
        for root in {s, -s}:
            num = -b * y + root
            if num % (2 * a) == 0:
                out.append((num // (2 * a), y))
    for x, y in out:
        if form(x, y) != n:
            raise AssertionError(f"({form}) at ({x},{y}) is {form(x, y)}, expected {n}")
    return _sorted(out)


def _orbit_count(points: Tuple[Point, ...], group) -> int:
    seen = set()
    orbits = 0
    for pt in points:
        if pt in seen:
            continue
        orbits += 1
        seen.update(g.apply(*pt) for g in group)
    return orbits


def _full_group(form: Form):
    group = proper_automorphisms(form)
    improper = improper_automorphism(form)
    if improper is not None:
        group = group + [improper @ g for g in group]
    return group


def _rep_set(form: Form, n: int, solutions: Tuple[Point, ...]) -> RepSet:
    R = len(solutions)
    if n == 0:
        r_plus = r_full = R
    else:
        aut = proper_automorphisms(form)
        if R % len(aut):
            raise AssertionError(f"R={R} for ({form}) at {n} is not a multiple of |Aut+|={len(aut)}")
        r_plus = R // len(aut)
        r_full = _orbit_count(solutions, _full_group(form))
    return RepSet(
        target=n,
        solutions=solutions,
        R=R,
        R_plus=r_plus,
        R_full=r_full,
        primitive_count=sum(1 for pt in solutions if _is_primitive_point(pt)),
    )


def representations(form: Form, n: int) -> RepSet:
    """All (x, y) with F(x, y) == n, sorted by (y, x)."""
    require_definite(form)
    return _rep_set(form, n, _solve(form, n))


def count_R(form: Form, n: int) -> int:
    require_definite(form)
    return len(_solve(form, n))


def count_r_plus(form: Form, n: int) -> int:
    return representations(form, n).R_plus


def count_r_full(form: Form, n: int) -> int:
    return representations(form, n).R_full


def primitive_representations(form: Form, n: int) -> RepSet:
    require_definite(form)
    sols = tuple(pt for pt in _solve(form, n) if _is_primitive_point(pt))
    return _rep_set(form, n, sols)


def value_counts(form: Form, n_max: int) -> Counter:
    """
    Counter {n: R(n)} for 1 <= n <= n_max, from one pass over the lattice
    points inside the ellipse F <= n_max. Values with R(n) == 0 are absent.
    """
    require_definite(form)
    counts: Counter = Counter()
    if n_max < 1:
        return counts
    a, b, _c = form
    delta = form.delta
    y_max = isqrt(4 * a * n_max // -delta)
    for y in range(-y_max, y_max + 1):
        disc = delta * y * y + 4 * a * n_max
        if disc < 0:
            continue
        s = isqrt(disc)
        lo = ceil_div(-b * y - s, 2 * a) - 1
        hi = (-b * y + s) // (2 * a) + 1
        for x in range(lo, hi + 1):
            v = form(x, y)
            if 1 <= v <= n_max:
                counts[v] += 1
    return counts


# ============================================================
# Rectangle counts
# ============================================================

def first_quadrant_count(m: int, n: int, N: int) -> Tuple[int, List[Point]]:
    """Points with x >= 1, y >= 1 and m x^2 + n y^2 == N, sorted by y."""
    if m < 1 or n < 1:
        raise DomainError(f"first_quadrant_count needs positive coefficients, got m={m}, n={n}")
    out: List[Point] = []
    y = 1
    while n * y * y < N:
        rest = N - n * y * y
        if rest % m == 0:
            x = exact_sqrt(rest // m)
            if x:
                out.append((x, y))
        y += 1
    return len(out), out


# ============================================================
# Irrational coefficients
# ============================================================

def irrational_value(b, c, x: int, y: int) -> AnyValue:
    """x^2 + b xy + c y^2, exactly."""
    return arith("add", arith("add", x * x, arith("mul", b, x * y)), arith("mul", c, y * y))


def _sqrt_upper(t: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    m = ceil_div(t.numerator * scale * scale, t.denominator)
    s = isqrt(m)
    if s * s < m:
        s += 1
    return Fraction(s, scale)


def _min_eigenvalue_lower_bound(b: AnyValue, c: AnyValue) -> Fraction:
    """
    Rational 0 < mu <= smallest eigenvalue of [[1, b/2], [b/2, c]],
    so that x^2 + bxy + cy^2 >= mu (x^2 + y^2).
    """
    bits = 16
    while True:
        b_lo, b_hi = bounds(b, bits)
        c_lo, c_hi = bounds(c, bits)
        gap = max((1 - c_lo) ** 2, (1 - c_hi) ** 2)
        b_sq = max(b_lo * b_lo, b_hi * b_hi)
        mu = (1 + c_lo - _sqrt_upper(gap + b_sq, bits)) / 2
        if mu > 0:
            return mu
        bits *= 2


def _x_candidates(B: List[Fraction], C: List[Fraction]) -> List[Fraction]:
    # x^2 + B x + C == 0 coordinate-wise, with B, C over one basis
    for bi, ci in zip(B[1:], C[1:]):
        if bi != 0:
            return [-ci / bi]
    if any(ci != 0 for ci in C[1:]):
        return []
    disc = B[0] * B[0] - 4 * C[0]
    root = rational_square_root(disc)
    if root is None:
        return []
    return list({(-B[0] + root) / 2, (-B[0] - root) / 2})


def representations_irrational(b, c, z, box: Optional[int] = None) -> RepSet:
    """
    All integer (x, y) with x^2 + b xy + c y^2 == z exactly.

    The scan radius comes from a rational lower bound on the form's smallest
    eigenvalue; `box`, when given, caps it and SearchExhausted is raised if
    the ellipse does not fit.
    """
    b, c, z = as_exact(b), as_exact(c), as_exact(z)
    if sign(arith("sub", arith("mul", b, b), arith("mul", c, 4))) >= 0:
        raise DomainError(f"x^2 + ({b})xy + ({c})y^2 is not positive definite")

    z_sign = sign(z)
    if z_sign < 0:
        return RepSet(target=z, solutions=(), R=0, R_plus=None, R_full=None, primitive_count=0)
    if z_sign == 0:
        return RepSet(target=z, solutions=((0, 0),), R=1, R_plus=None, R_full=None, primitive_count=0)

    mu = _min_eigenvalue_lower_bound(b, c)
    z_hi = bounds(z, 32)[1]
    radius = isqrt(int(z_hi / mu))
    if box is not None and radius > box:
        raise SearchExhausted(
            f"representations of {z} need a scan radius of {radius}, above the box {box}.\n"
            "Hint: raise --box / LATTICE_BOX.",
            bound=box,
        )
    log.debug("irrational scan for z=%s: mu >= %s, radius %d", z, mu, radius)

    _field, (bc, cc, zc) = common_coordinates(b, c, z)
    out: List[Point] = []
    for y in range(-radius, radius + 1):
        B = [y * v for v in bc]
        C = [y * y * u - w for u, w in zip(cc, zc)]
        for x in _x_candidates(B, C):
            if x.denominator != 1:
                continue
            xi = int(x)
            if sign(arith("sub", irrational_value(b, c, xi, y), z)) == 0:
                out.append((xi, y))
    sols = _sorted(out)
    return RepSet(
        target=z,
        solutions=sols,
        R=len(sols),
        R_plus=None,
        R_full=None,
        primitive_count=sum(1 for pt in sols if _is_primitive_point(pt)),
    )


def count_irrational(b, c, z, box: Optional[int] = None) -> Tuple[int, int]:
    """(R, R // 2): all solutions and solutions up to the sign symmetry."""
    R = representations_irrational(b, c, z, box).R
    return R, R // 2
