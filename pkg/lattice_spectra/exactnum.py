# lattice_spectra/exactnum.py
"""
Exact arithmetic over Q and real quadratic fields Q(sqrt d), plus one
biquadratic level Q(sqrt d1, sqrt d2).

Every value is kept in a single canonical form:
  - a rational is an ExactValue with q == 0 and d None;
  - an element of one quadratic field is an ExactValue p + q*sqrt(d), d squarefree >= 2;
  - only genuinely biquadratic elements are CompositeValues, written over the
    basis {1, sqrt(d1), sqrt(d2), sqrt(d1*d2)} where (d1, d2) are the two
    smallest squarefree radicands of the field.
Equality of values is therefore equality of canonical coordinates.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .common import exact_sqrt, isqrt, squarefree_decompose
from .errors import DomainError, ExactValueError

Rational = Fraction
Number = Union[int, Fraction, "ExactValue", "CompositeValue"]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise ExactValueError(f"expected an integer or Fraction, got {type(v).__name__}")


# ============================================================
# Value types
# ============================================================

@dataclass(frozen=True, eq=False)
class ExactValue:
    """p + q*sqrt(d); rational when q == 0 (then d is None)."""

    p: Fraction
    q: Fraction = Fraction(0)
    d: Optional[int] = None

    def __post_init__(self):
        p, q, d = _frac(self.p), _frac(self.q), self.d
        if q != 0:
            if d is None:
                raise ExactValueError("an irrational part needs a radicand d")
            if d < 0:
                raise ExactValueError(f"negative radicand {d}: only real values are supported")
            if d == 0:
                q = Fraction(0)
            else:
                k, m = squarefree_decompose(d)
                if m == 1:
                    p, q = p + q * k, Fraction(0)
                else:
                    q, d = q * k, m
        if q == 0:
            d = None
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, n: int) -> "ExactValue":
        return cls(Fraction(0), Fraction(1), n)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def radicals(self) -> Tuple[int, ...]:
        return () if self.d is None else (self.d,)

    def conjugate(self) -> "ExactValue":
        return ExactValue(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        if self.d is None:
            return self.p * self.p
        return self.p * self.p - self.d * self.q * self.q

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if isinstance(other, ExactValue):
            return (self.p, self.q, self.d) == (other.p, other.q, other.d)
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __repr__(self) -> str:
        return f"ExactValue({format_value(self)})"

    def __str__(self) -> str:
        return format_value(self)

    # arithmetic delegates to arith()
    def __add__(self, other):
        return arith("add", self, other)

    def __radd__(self, other):
        return arith("add", other, self)

    def __sub__(self, other):
        return arith("sub", self, other)

    def __rsub__(self, other):
        return arith("sub", other, self)

    def __mul__(self, other):
        return arith("mul", self, other)

    def __rmul__(self, other):
        return arith("mul", other, self)

    def __truediv__(self, other):
        return arith("mul", self, arith("invert", other))

    def __rtruediv__(self, other):
        return arith("mul", other, arith("invert", self))

    def __neg__(self):
        return arith("neg", self)

    def __lt__(self, other):
        return sign(arith("sub", self, other)) < 0

    def __le__(self, other):
        return sign(arith("sub", self, other)) <= 0

    def __gt__(self, other):
        return sign(arith("sub", self, other)) > 0

    def __ge__(self, other):
        return sign(arith("sub", self, other)) >= 0


@dataclass(frozen=True, eq=False)
class CompositeValue:
    """
    c0 + c1*sqrt(d1) + c2*sqrt(d2) + c3*sqrt(d1*d2) for distinct squarefree
    d1, d2 >= 2. The constructor rewrites the value over the canonical pair
    of the field (its two smallest squarefree radicands), so
    CompositeValue(2, 6, 0, 1, 1, 0) is stored over (2, 3) as sqrt(2) + sqrt(6).
    """

    d1: int
    d2: int
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self):
        d1, d2 = self.d1, self.d2
        if d1 < 2 or d2 < 2 or d1 == d2:
            raise ExactValueError(f"composite radicands must be distinct and >= 2, got {d1}, {d2}")
        for d in (d1, d2):
            if squarefree_decompose(d)[0] != 1:
                raise ExactValueError(
                    f"composite radicand {d} is not squarefree.\n"
                    "Hint: build the value with arith() or parse_value(), which canonicalise radicands."
                )
        coords = [_frac(getattr(self, name)) for name in ("c0", "c1", "c2", "c3")]
        e1, e2 = _common_field((d1, d2))
        if (e1, e2) != (d1, d2):
            g, d3 = squarefree_decompose(d1 * d2)
            basis = (ExactValue.sqrt(d1), ExactValue.sqrt(d2), ExactValue(Fraction(0), Fraction(g), d3))
            out = [coords[0], Fraction(0), Fraction(0), Fraction(0)]
            for coef, root in zip(coords[1:], basis):
                out = [u + coef * v for u, v in zip(out, _lift(root, e1, e2))]
            coords = out
        object.__setattr__(self, "d1", e1)
        object.__setattr__(self, "d2", e2)
        for name, value in zip(("c0", "c1", "c2", "c3"), coords):
            object.__setattr__(self, name, value)

    @property
    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def is_rational(self) -> bool:
        return False

    def radicals(self) -> Tuple[int, ...]:
        return (self.d1, self.d2)

    def __eq__(self, other) -> bool:
        if isinstance(other, CompositeValue) and (self.d1, self.d2) == (other.d1, other.d2):
            return self.coords == other.coords
        if isinstance(other, (int, Fraction, ExactValue, CompositeValue)):
            return sign(arith("sub", self, other)) == 0
        return NotImplemented

    def __hash__(self) -> int:
        canon = _collapse(self.d1, self.d2, list(self.coords))
        if isinstance(canon, ExactValue):
            return hash(canon)
        return hash((self.d1, self.d2, self.coords))

    def __repr__(self) -> str:
        return f"CompositeValue({format_value(self)})"

    def __str__(self) -> str:
        return format_value(self)

    def __add__(self, other):
        return arith("add", self, other)

    def __radd__(self, other):
        return arith("add", other, self)

    def __sub__(self, other):
        return arith("sub", self, other)

    def __rsub__(self, other):
        return arith("sub", other, self)

    def __mul__(self, other):
        return arith("mul", self, other)

    def __rmul__(self, other):
        return arith("mul", other, self)

    def __truediv__(self, other):
        return arith("mul", self, arith("invert", other))

    def __rtruediv__(self, other):
        return arith("mul", other, arith("invert", self))

    def __neg__(self):
        return arith("neg", self)

    def __lt__(self, other):
        return sign(arith("sub", self, other)) < 0

    def __le__(self, other):
        return sign(arith("sub", self, other)) <= 0

    def __gt__(self, other):
        return sign(arith("sub", self, other)) > 0

    def __ge__(self, other):
        return sign(arith("sub", self, other)) >= 0


AnyValue = Union[ExactValue, CompositeValue]


def as_exact(v) -> AnyValue:
    if isinstance(v, (ExactValue, CompositeValue)):
        return v
    if isinstance(v, (int, Fraction)):
        return ExactValue(Fraction(v))
    raise ExactValueError(f"cannot interpret {v!r} as an exact value")


# ============================================================
# Field bookkeeping
# ============================================================

def _sqf(n: int) -> int:
    return squarefree_decompose(n)[1]


def _common_field(radicals: Iterable[int]) -> Tuple[int, ...]:
    """
    Canonical generators for the smallest field containing every radical:
    () for Q, (d,) for Q(sqrt d), (d1, d2) for a biquadratic field.
    """
    gens = sorted(set(radicals))
    if len(gens) <= 1:
        return tuple(gens)
    field = {gens[0], gens[1], _sqf(gens[0] * gens[1])}
    for d in gens[2:]:
        if d not in field:
            raise ExactValueError(
                f"radicals {gens} need more than two independent square roots; "
                "only Q(sqrt d1, sqrt d2) is supported"
            )
    d1, d2, _ = sorted(field)
    return (d1, d2)


def _lift(x: AnyValue, d1: int, d2: int) -> List[Fraction]:
    """Coordinates of x over {1, sqrt d1, sqrt d2, sqrt(d1 d2)}."""
    if isinstance(x, CompositeValue):
        if (x.d1, x.d2) != (d1, d2):
            raise ExactValueError(f"value {x} does not live in Q(sqrt {d1}, sqrt {d2})")
        return list(x.coords)
    if x.d is None:
        return [x.p, Fraction(0), Fraction(0), Fraction(0)]
    if x.d == d1:
        return [x.p, x.q, Fraction(0), Fraction(0)]
    if x.d == d2:
        return [x.p, Fraction(0), x.q, Fraction(0)]
    # sqrt(d3) = sqrt(d1 d2) / g where d1 d2 = g^2 d3
    g, d3 = squarefree_decompose(d1 * d2)
    if x.d == d3:
        return [x.p, Fraction(0), Fraction(0), x.q / g]
    raise ExactValueError(f"value {x} does not live in Q(sqrt {d1}, sqrt {d2})")


def _collapse(d1: int, d2: int, c: List[Fraction]) -> AnyValue:
    c0, c1, c2, c3 = c
    if c1 == 0 and c2 == 0 and c3 == 0:
        return ExactValue(c0)
    if c2 == 0 and c3 == 0:
        return ExactValue(c0, c1, d1)
    if c1 == 0 and c3 == 0:
        return ExactValue(c0, c2, d2)
    if c1 == 0 and c2 == 0:
        g, d3 = squarefree_decompose(d1 * d2)
        return ExactValue(c0, c3 * g, d3)
    return CompositeValue(d1, d2, c0, c1, c2, c3)


def common_coordinates(*values) -> Tuple[Tuple[int, ...], List[List[Fraction]]]:
    """
    Write every value over one basis of their common field.

    Returns (radicals, coords): coords[i][0] is the rational part of values[i];
    the remaining entries are the coefficients of sqrt(d1), sqrt(d2), sqrt(d1 d2)
    (just sqrt(d) for a quadratic field).
    """
    vals = [as_exact(v) for v in values]
    field = _common_field(r for v in vals for r in v.radicals())
    if len(field) == 2:
        return field, [_lift(v, *field) for v in vals]
    return field, [[v.p, v.q] for v in vals]


def _mul4(d1: int, d2: int, a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return [
        a0 * b0 + d1 * a1 * b1 + d2 * a2 * b2 + d1 * d2 * a3 * b3,
        a0 * b1 + a1 * b0 + d2 * (a2 * b3 + a3 * b2),
        a0 * b2 + a2 * b0 + d1 * (a1 * b3 + a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    ]


def _invert(x: AnyValue) -> AnyValue:
    if sign(x) == 0:
        raise ExactValueError("division by zero")
    if isinstance(x, ExactValue):
        if x.d is None:
            return ExactValue(1 / x.p)
        n, conj = x.norm(), x.conjugate()
        return ExactValue(conj.p / n, conj.q / n, conj.d)
    # x * sigma(x) lies in Q(sqrt d1) when sigma flips sqrt d2
    d1, d2 = x.d1, x.d2
    conj = [x.c0, x.c1, -x.c2, -x.c3]
    inner = _collapse(d1, d2, _mul4(d1, d2, list(x.coords), conj))
    inner_inv = _invert(inner)
    return _collapse(d1, d2, _mul4(d1, d2, conj, _lift(inner_inv, d1, d2)))


def arith(op: str, x, y=None) -> AnyValue:
    """
    Exact field operation: op in {add, sub, mul, neg, invert}.

    Mixed operands are promoted to the smallest common field; results come
    back canonical (collapsed to an ExactValue whenever possible).
    """
    x = as_exact(x)
    if op == "neg":
        return arith("mul", x, ExactValue(Fraction(-1)))
    if op == "invert":
        return _invert(x)
    if y is None:
        raise ExactValueError(f"operation {op!r} needs two operands")
    y = as_exact(y)

    field = _common_field(x.radicals() + y.radicals())
    if len(field) <= 1:
        d = field[0] if field else None
        xp, xq = x.p, (x.q if x.d is not None else Fraction(0))
        yp, yq = y.p, (y.q if y.d is not None else Fraction(0))
        if op == "add":
            return ExactValue(xp + yp, xq + yq, d)
        if op == "sub":
            return ExactValue(xp - yp, xq - yq, d)
        if op == "mul":
            dd = d or 0
            return ExactValue(xp * yp + dd * xq * yq, xp * yq + xq * yp, d)
        raise ExactValueError(f"unknown operation {op!r}")

    d1, d2 = field
    a, b = _lift(x, d1, d2), _lift(y, d1, d2)
    if op == "add":
        return _collapse(d1, d2, [u + v for u, v in zip(a, b)])
    if op == "sub":
        return _collapse(d1, d2, [u - v for u, v in zip(a, b)])
    if op == "mul":
        return _collapse(d1, d2, _mul4(d1, d2, a, b))
    raise ExactValueError(f"unknown operation {op!r}")


# ============================================================
# Sign by exact zero test + interval refinement
# ============================================================

def _sqrt_bounds(n: int, bits: int) -> Tuple[Fraction, Fraction]:
    scale = 1 << bits
    s = isqrt(n * scale * scale)
    if s * s == n * scale * scale:
        return Fraction(s, scale), Fraction(s, scale)
    return Fraction(s, scale), Fraction(s + 1, scale)


def _term(coef: Fraction, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    return (coef * lo, coef * hi) if coef >= 0 else (coef * hi, coef * lo)


def bounds(x, bits: int = 32) -> Tuple[Fraction, Fraction]:
    """Rational interval [lo, hi] containing x, of width O(2^-bits)."""
    x = as_exact(x)
    if isinstance(x, ExactValue):
        if x.d is None:
            return x.p, x.p
        lo, hi = _term(x.q, *_sqrt_bounds(x.d, bits))
        return x.p + lo, x.p + hi
    lo, hi = x.c0, x.c0
    for coef, radicand in ((x.c1, x.d1), (x.c2, x.d2), (x.c3, x.d1 * x.d2)):
        t_lo, t_hi = _term(coef, *_sqrt_bounds(radicand, bits))
        lo, hi = lo + t_lo, hi + t_hi
    return lo, hi


def sign(x) -> int:
    """Exact sign of x in {-1, 0, +1}."""
    x = as_exact(x)
    if isinstance(x, ExactValue):
        if x.q == 0:
            return (x.p > 0) - (x.p < 0)
    elif not any(x.coords):
        return 0
    # {1, sqrt d1, sqrt d2, sqrt(d1 d2)} is a Q-basis, so a value with a
    # nonzero coordinate is nonzero and separates from 0
    # once the interval is narrow enough
    bits = 16
    while True:
        lo, hi = bounds(x, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


# ============================================================
# Rationality predicates
# ============================================================

def is_rational(x) -> Optional[Fraction]:
    x = as_exact(x)
    if isinstance(x, ExactValue) and x.q == 0:
        return x.p
    return None


def rational_square_root(x) -> Optional[Fraction]:
    """s >= 0 with s*s == x when x is a square in Q, else None."""
    x = _frac(x)
    if x < 0:
        return None
    num, den = exact_sqrt(x.numerator), exact_sqrt(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class Dependent:
    """c == alpha*b + beta exactly."""

    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class Independent:
    """{1, b, c} is linearly independent over Q."""


DependenceReport = Union[Dependent, Independent]


def linear_dependence(b, c) -> DependenceReport:
    """Decide whether c == alpha*b + beta for rationals alpha, beta (b, c irrational)."""
    b, c = as_exact(b), as_exact(c)
    for name, v in (("b", b), ("c", c)):
        if is_rational(v) is not None:
            raise DomainError(f"linear_dependence needs irrational values; {name}={v} is rational")
    _field, (cb, cc) = common_coordinates(b, c)
    vb, vc = cb[1:], cc[1:]
    i = next(j for j, v in enumerate(vb) if v != 0)
    alpha = vc[i] / vb[i]
    if any(w != alpha * v for v, w in zip(vb, vc)):
        return Independent()
    return Dependent(alpha=alpha, beta=cc[0] - alpha * cb[0])


# ============================================================
# Text grammar
# ============================================================

_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<coef>\d+(?:/\d+)?)(?:\*sqrt\((?P<rad>\d+)\))?|sqrt\((?P<bare>\d+)\))$"
)


def parse_value(text: str) -> AnyValue:
    """
    Parse `INT`, `INT/INT`, `INT/INT+INT/INT*sqrt(INT)` and sums of such terms.
    Whitespace is ignored. Example: `-1/2+3/4*sqrt(5)`.
    """
    s = re.sub(r"\s+", "", text or "")
    if not s:
        raise ExactValueError("empty exact value")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ExactValueError(f"cannot parse exact value {text!r}")
    total: AnyValue = ExactValue(Fraction(0))
    for term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise ExactValueError(f"cannot parse term {term!r} of exact value {text!r}")
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError as exc:
            raise ExactValueError(f"zero denominator in {term!r}") from exc
        if m.group("sign") == "-":
            coef = -coef
        rad = m.group("rad") or m.group("bare")
        value = ExactValue(coef) if rad is None else ExactValue(Fraction(0), coef, int(rad))
        total = arith("add", total, value)
    return total


def _fmt_frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _fmt_terms(pairs: List[Tuple[Fraction, Optional[int]]]) -> str:
    out = ""
    for coef, rad in pairs:
        if coef == 0:
            continue
        mag = abs(coef)
        if rad is None:
            body = _fmt_frac(mag)
        elif mag == 1:
            body = f"sqrt({rad})"
        else:
            body = f"{_fmt_frac(mag)}*sqrt({rad})"
        if not out:
            out = ("-" if coef < 0 else "") + body
        else:
            out += ("-" if coef < 0 else "+") + body
    return out or "0"


def format_value(x) -> str:
    """Canonical text form; parse_value(format_value(x)) == x."""
    x = as_exact(x)
    if isinstance(x, ExactValue):
        return _fmt_terms([(x.p, None), (x.q, x.d)])
    return _fmt_terms([(x.c0, None), (x.c1, x.d1), (x.c2, x.d2), (x.c3, x.d1 * x.d2)])
