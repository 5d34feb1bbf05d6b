# lattice_spectra/spectra.py
"""
Eigenvalue multiplicities of the Dirichlet Laplacian on rectangles and of
the Laplacian on flat 2-tori.

Rectangle [0, a] x [0, b]: eigenvalues pi^2 (m^2/a^2 + n^2/b^2), m, n >= 1.
With (a/b)^2 == q_r/p_r in lowest terms the multiplicity of the (m0, n0)
level is the number of x, y >= 1 with p_r x^2 + q_r y^2 == p_r m0^2 + q_r n0^2.

Torus spanned by a = (1, 0) and b = r(cos t, sin t), both scaled by |a|:
multiplicities are counts of integer points on the ellipses
x^2 - 2 r cos(t) xy + r^2 y^2 == const. A torus is given by the exact pair
(rcos, rsq) = (r cos t, r^2).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .config import settings
from .errors import DomainError, SearchExhausted
from .exactnum import (
    AnyValue,
    Dependent,
    arith,
    as_exact,
    is_rational,
    linear_dependence,
    parse_value,
    rational_square_root,
    sign,
)
from .qform import Discriminant, Form, discriminant, is_positive_definite, is_primitive
from .repcount import (
    Point,
    count_R,
    first_quadrant_count,
    irrational_value,
    representations,
    representations_irrational,
    value_counts,
)
from .witness import MultiplicityWitness, quadrant_scan_witness, theorem_q_witness

log = logging.getLogger(__name__)


# ============================================================
# Specs and results
# ============================================================

@dataclass(frozen=True)
class RectangleSpec:
    ratio_sq: AnyValue

    def __post_init__(self):
        value = as_exact(self.ratio_sq)
        if sign(value) <= 0:
            raise DomainError(f"ratio_sq must be positive, got {value}")
        object.__setattr__(self, "ratio_sq", value)

    @classmethod
    def parse(cls, text: str) -> "RectangleSpec":
        return cls(parse_value(text))

    @property
    def rational_pair(self) -> Optional[Tuple[int, int]]:
        """(p_r, q_r) with ratio_sq == q_r / p_r in lowest terms, or None."""
        r = is_rational(self.ratio_sq)
        if r is None:
            return None
        return r.denominator, r.numerator


@dataclass(frozen=True)
class TorusSpec:
    rcos: AnyValue
    rsq: AnyValue

    def __post_init__(self):
        rcos, rsq = as_exact(self.rcos), as_exact(self.rsq)
        if sign(rcos) < 0:
            raise DomainError(f"rcos must be >= 0 (replace b by -b), got {rcos}")
        if sign(rsq) <= 0:
            raise DomainError(f"rsq must be positive, got {rsq}")
        if sign(arith("sub", rsq, arith("mul", rcos, rcos))) <= 0:
            raise DomainError(f"rsq - rcos^2 must be positive (sin t != 0), got rcos={rcos}, rsq={rsq}")
        object.__setattr__(self, "rcos", rcos)
        object.__setattr__(self, "rsq", rsq)

    @classmethod
    def parse(cls, rcos: str, rsq: str) -> "TorusSpec":
        return cls(parse_value(rcos), parse_value(rsq))

    @property
    def is_rational(self) -> bool:
        return is_rational(self.rcos) is not None and is_rational(self.rsq) is not None

    @property
    def b(self) -> AnyValue:
        return arith("mul", self.rcos, -2)

    @property
    def c(self) -> AnyValue:
        return self.rsq


@dataclass(frozen=True)
class TorusFormData:
    alpha: int
    beta: int
    gamma: int
    delta: int
    tau: int
    form: Form
    discriminant: Discriminant


class MultiplicityTag(str, Enum):
    ALL_NATURALS = "N"
    SINGLETON_ONE = "{1}"
    TWO_N = "2N"
    FOUR_N = "4N"
    SIX_N = "6N"
    SET_TWO = "{2}"
    SET_TWO_FOUR = "{2,4}"

    def allows(self, m: int) -> bool:
        if self is MultiplicityTag.ALL_NATURALS:
            return m >= 1
        if self is MultiplicityTag.SINGLETON_ONE:
            return m == 1
        if self is MultiplicityTag.SET_TWO:
            return m == 2
        if self is MultiplicityTag.SET_TWO_FOUR:
            return m in (2, 4)
        step = {MultiplicityTag.TWO_N: 2, MultiplicityTag.FOUR_N: 4, MultiplicityTag.SIX_N: 6}[self]
        return m >= step and m % step == 0


@dataclass(frozen=True)
class StatementReading:
    """rcos == alpha * rsq + beta; the {2,4} test is on alpha^2 + beta."""

    alpha: Fraction
    beta: Fraction
    value: Fraction
    tag: MultiplicityTag
    consistent: bool


@dataclass(frozen=True)
class MultiplicitySet:
    tag: MultiplicityTag
    case: str
    delta: Optional[int] = None
    statement_reading: Optional[StatementReading] = None

    def __str__(self) -> str:
        return self.tag.value


@dataclass(frozen=True)
class RectWitness:
    witness: MultiplicityWitness
    p_r: int
    q_r: int

    @property
    def level(self) -> int:
        return self.witness.value

    def eigenvalue_text(self) -> str:
        return f"{self.level}*pi^2/({self.q_r}*b^2)"


@dataclass(frozen=True)
class SampleResult:
    observed: Tuple[int, ...]
    levels: int
    generators: Dict[int, Point]


# ============================================================
# Rectangles
# ============================================================

def rect_classify(spec: RectangleSpec) -> MultiplicitySet:
    if spec.rational_pair is not None:
        return MultiplicitySet(MultiplicityTag.ALL_NATURALS, "ratio_sq rational")
    return MultiplicitySet(MultiplicityTag.SINGLETON_ONE, "ratio_sq irrational")


def _require_rational(spec: RectangleSpec) -> Tuple[int, int]:
    pair = spec.rational_pair
    if pair is None:
        raise DomainError(
            f"ratio_sq={spec.ratio_sq} is irrational: every eigenvalue is simple.\n"
            "Hint: `rect classify` reports this case."
        )
    return pair


def rect_level(spec: RectangleSpec, m0: int, n0: int) -> Tuple[int, List[Point]]:
    """(N, index pairs) for the eigenvalue of (m0, n0), N in units of pi^2/(q_r b^2)."""
    if m0 < 1 or n0 < 1:
        raise DomainError(f"indices must be positive, got ({m0}, {n0})")
    p_r, q_r = _require_rational(spec)
    N = p_r * m0 * m0 + q_r * n0 * n0
    _count, sols = first_quadrant_count(p_r, q_r, N)
    return N, sols


def rect_multiplicity(spec: RectangleSpec, m0: int, n0: int) -> int:
    return len(rect_level(spec, m0, n0)[1])


def rect_witness(spec: RectangleSpec, k: int, bound: Optional[int] = None) -> RectWitness:
    """An eigenvalue of multiplicity exactly k."""
    p_r, q_r = _require_rational(spec)
    if p_r * q_r > 3:
        w = theorem_q_witness(p_r, q_r, k, bound)
    else:
        w = quadrant_scan_witness(p_r, q_r, k, bound)
    return RectWitness(witness=w, p_r=p_r, q_r=q_r)


# ============================================================
# Tori: rational branch
# ============================================================

def torus_form(spec: TorusSpec) -> TorusFormData:
    two_rcos, rsq = is_rational(arith("mul", spec.rcos, 2)), is_rational(spec.rsq)
    if two_rcos is None or rsq is None:
        raise DomainError(f"torus_form needs rational rcos and rsq, got rcos={spec.rcos}, rsq={spec.rsq}")
    alpha, beta = two_rcos.numerator, two_rcos.denominator
    gamma, delta = rsq.numerator, rsq.denominator
    tau = gcd(beta, delta)
    form = Form(beta * delta // tau, -alpha * delta // tau, gamma * beta // tau)
    if not is_primitive(form) or not is_positive_definite(form):
        raise AssertionError(f"torus form ({form}) is not primitive positive definite")
    if tau * tau * form.delta != alpha * alpha * delta * delta - 4 * beta * beta * gamma * delta:
        raise AssertionError(f"discriminant identity fails for torus form ({form})")
    return TorusFormData(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        delta=delta,
        tau=tau,
        form=form,
        discriminant=discriminant(form),
    )


# ============================================================
# Tori: classification
# ============================================================

def _square_tag(v: Fraction) -> MultiplicityTag:
    return MultiplicityTag.SET_TWO_FOUR if rational_square_root(v) is not None else MultiplicityTag.SET_TWO


def _statement_reading(dep: Dependent, tag: MultiplicityTag) -> StatementReading:
    # c == aL*b + bL with b == -2 rcos, c == rsq, solved for rcos
    alpha = -1 / (2 * dep.alpha)
    beta = dep.beta / (2 * dep.alpha)
    value = alpha * alpha + beta
    reading = _square_tag(value)
    return StatementReading(alpha=alpha, beta=beta, value=value, tag=reading, consistent=reading == tag)


def torus_classify(spec: TorusSpec) -> MultiplicitySet:
    """The set of eigenvalue multiplicities of the torus (rcos, rsq)."""
    if spec.is_rational:
        data = torus_form(spec)
        d = data.discriminant.delta
        if d == -3:
            tag = MultiplicityTag.SIX_N
        elif d == -4:
            tag = MultiplicityTag.FOUR_N
        else:
            tag = MultiplicityTag.TWO_N
        return MultiplicitySet(tag, f"rational: discriminant {d}", delta=d)

    rcos_q, rsq_q = is_rational(spec.rcos), is_rational(spec.rsq)
    if rcos_q is not None:
        return MultiplicitySet(MultiplicityTag.SET_TWO_FOUR, "rcos rational, rsq irrational")
    if rsq_q is not None:
        if rational_square_root(rsq_q) is not None:
            return MultiplicitySet(MultiplicityTag.SET_TWO_FOUR, "rcos irrational, r rational")
        return MultiplicitySet(MultiplicityTag.SET_TWO, "rcos irrational, r irrational, rsq rational")

    dep = linear_dependence(spec.b, spec.c)
    if not isinstance(dep, Dependent):
        return MultiplicitySet(MultiplicityTag.SET_TWO, "1, rcos, rsq linearly independent")
    value = dep.alpha * dep.alpha + dep.beta
    tag = _square_tag(value)
    reading = _statement_reading(dep, tag)
    if not reading.consistent:
        log.info(
            "torus (%s, %s): rcos = %s*rsq + %s gives %s, the dependence test gives %s",
            spec.rcos, spec.rsq, reading.alpha, reading.beta, reading.tag.value, tag.value,
        )
    squared = "a square" if tag is MultiplicityTag.SET_TWO_FOUR else "not a square"
    return MultiplicitySet(
        tag,
        f"rsq = {dep.alpha}*b + {dep.beta} with b = -2 rcos; {value} is {squared}",
        statement_reading=reading,
    )


# ============================================================
# Tori: multiplicities
# ============================================================

def torus_multiplicity(spec: TorusSpec, generator: Point, box: Optional[int] = None) -> int:
    """Number of lattice points on the ellipse through `generator`."""
    x0, y0 = generator
    if x0 == 0 and y0 == 0:
        raise DomainError("generator must be a nonzero lattice point")
    if spec.is_rational:
        form = torus_form(spec).form
        return count_R(form, form(x0, y0))
    z = irrational_value(spec.b, spec.c, x0, y0)
    return representations_irrational(spec.b, spec.c, z, box).R


def _box_points(box: int):
    pts = [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if (x, y) != (0, 0)]
    pts.sort(key=lambda p: (p[0] * p[0] + p[1] * p[1], p[1], p[0]))
    return pts


def _sample_rational(form: Form, n_max: Optional[int], box: int) -> SampleResult:
    if n_max is not None:
        counts = value_counts(form, n_max)
        levels = sorted(counts)
    else:
        levels = sorted({form(x, y) for x, y in _box_points(box)})
        counts = value_counts(form, levels[-1]) if levels else {}
    generators: Dict[int, Point] = {}
    for n in levels:
        r = counts[n]
        if r not in generators:
            generators[r] = _choose_generator(representations(form, n).solutions)
    return SampleResult(observed=tuple(sorted(generators)), levels=len(levels), generators=generators)


def _choose_generator(solutions) -> Point:
    return min(solutions, key=lambda p: (p[1] < 0, p[0] < 0, abs(p[0]) + abs(p[1]), p))


def _sample_irrational(spec: TorusSpec, box: int) -> SampleResult:
    b, c = spec.b, spec.c
    seen = set()
    generators: Dict[int, Point] = {}
    levels = 0
    for pt in _box_points(box):
        if pt in seen:
            continue
        z = irrational_value(b, c, *pt)
        sols = representations_irrational(b, c, z).solutions
        seen.update(sols)
        levels += 1
        generators.setdefault(len(sols), pt)
    return SampleResult(observed=tuple(sorted(generators)), levels=levels, generators=generators)


def multiplicity_set_sample(spec: TorusSpec, n_max: Optional[int] = None, box: Optional[int] = None) -> SampleResult:
    """
    Distinct multiplicities observed at desk scale.

    Rational tori scan every level <= n_max of the integer form (or the levels
    of the generators in the box when n_max is None); irrational tori recount
    the ellipse through every generator with |x|, |y| <= box.
    """
    box = settings.BOX if box is None else box
    if spec.is_rational:
        result = _sample_rational(torus_form(spec).form, n_max, box)
    else:
        result = _sample_irrational(spec, box)
    log.info("sampled %d levels of torus (%s, %s): %s", result.levels, spec.rcos, spec.rsq, result.observed)
    return result


def torus_four_witness(spec: TorusSpec, box: Optional[int] = None) -> Tuple[Point, Tuple[Point, ...]]:
    """A generator of an irrational torus whose eigenvalue has multiplicity 4, with its four points."""
    if spec.is_rational:
        raise DomainError("torus_four_witness is for irrational tori; rational ones are covered by torus_classify")
    box = settings.BOX if box is None else box
    b, c = spec.b, spec.c
    seen = set()
    for pt in _box_points(box):
        if pt in seen:
            continue
        sols = representations_irrational(b, c, irrational_value(b, c, *pt)).solutions
        seen.update(sols)
        if len(sols) == 4:
            log.info("multiplicity 4 for torus (%s, %s) at %s", spec.rcos, spec.rsq, pt)
            return pt, sols
    raise SearchExhausted(
        f"no multiplicity-4 eigenvalue with a generator in the box {box} for torus ({spec.rcos}, {spec.rsq}).\n"
        "Hint: raise --box / LATTICE_BOX.",
        bound=box,
        trace_length=len(seen),
    )
