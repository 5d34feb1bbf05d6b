# lattice_spectra/qform.py
"""
Integer binary quadratic forms ax^2 + bxy + cy^2.

Every equivalence answer comes with a UnimodularMap certificate T such that
F∘T == G, where (F∘T)(x, y) = F(px + qy, rx + sy). Certificates are checked
coefficient-wise before they are returned.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from .common import exact_sqrt, gcd_all, isqrt, squarefree_decompose, xgcd
from .errors import DomainError

log = logging.getLogger(__name__)


# ============================================================
# Core types
# ============================================================

@dataclass(frozen=True)
class UnimodularMap:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise DomainError(f"map ({self.p},{self.q};{self.r},{self.s}) has determinant {self.det}, not ±1")

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    @property
    def is_proper(self) -> bool:
        return self.det == 1

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def inverse(self) -> "UnimodularMap":
        d = self.det
        return UnimodularMap(d * self.s, -d * self.q, -d * self.r, d * self.p)

    def __neg__(self) -> "UnimodularMap":
        return UnimodularMap(-self.p, -self.q, -self.r, -self.s)

    def apply(self, x: int, y: int) -> Tuple[int, int]:
        return (self.p * x + self.q * y, self.r * x + self.s * y)

    def as_rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.p, self.q), (self.r, self.s))


IDENTITY = UnimodularMap(1, 0, 0, 1)
SWAP = UnimodularMap(0, -1, 1, 0)  # (x, y) -> (-y, x)
FLIP = UnimodularMap(1, 0, 0, -1)  # (x, y) -> (x, -y)


def translation(k: int) -> UnimodularMap:
    return UnimodularMap(1, k, 0, 1)


@dataclass(frozen=True)
class Discriminant:
    delta: int
    delta0: int
    conductor: int


@dataclass(frozen=True)
class Form:
    a: int
    b: int
    c: int

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    @property
    def delta(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def transform(self, t: UnimodularMap) -> "Form":
        """F∘T: the form (x, y) -> F(px + qy, rx + sy)."""
        a, b, c = self.a, self.b, self.c
        p, q, r, s = t.p, t.q, t.r, t.s
        return Form(
            a * p * p + b * p * r + c * r * r,
            2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            a * q * q + b * q * s + c * s * s,
        )

    def opposite(self) -> "Form":
        return Form(self.a, -self.b, self.c)

    @classmethod
    def parse(cls, text: str) -> "Form":
        parts = [t.strip() for t in (text or "").split(",")]
        if len(parts) != 3:
            raise DomainError(f"form must be 'a,b,c', got {text!r}")
        try:
            return cls(*(int(t) for t in parts))
        except ValueError as exc:
            raise DomainError(f"form coefficients must be integers, got {text!r}") from exc


# ============================================================
# Discriminants
# ============================================================

def is_fundamental(delta: int) -> bool:
    if delta == 1 or delta % 4 not in (0, 1):
        return False
    if delta % 4 == 1:
        return squarefree_decompose(delta)[0] == 1
    if delta % 16 not in (8, 12):
        return False
    return squarefree_decompose(delta // 4)[0] == 1


def decompose_discriminant(delta: int) -> Discriminant:
    if delta % 4 not in (0, 1):
        raise DomainError(f"{delta} is not a discriminant (must be 0 or 1 mod 4)")
    if delta == 0 or (delta > 0 and exact_sqrt(delta) is not None):
        raise DomainError(
            f"{delta} is a perfect square: not the discriminant of a definite form "
            "and it has no fundamental decomposition"
        )
    k, m = squarefree_decompose(delta)
    delta0 = m if m % 4 == 1 else 4 * m
    conductor = k if m % 4 == 1 else k // 2
    if delta0 * conductor * conductor != delta or not is_fundamental(delta0):
        raise DomainError(f"no fundamental decomposition for discriminant {delta}")
    return Discriminant(delta=delta, delta0=delta0, conductor=conductor)


def discriminant(form: Form) -> Discriminant:
    return decompose_discriminant(form.delta)


def is_primitive(form: Form) -> bool:
    return gcd_all(form) == 1


def is_positive_definite(form: Form) -> bool:
    return form.a > 0 and form.delta < 0


def require_definite(form: Form) -> None:
    if not is_primitive(form):
        raise DomainError(f"form ({form}) is not primitive")
    if not is_positive_definite(form):
        raise DomainError(f"form ({form}) is not positive definite (delta={form.delta})")


def principal_form(delta: int) -> Form:
    if delta >= 0 or delta % 4 not in (0, 1):
        raise DomainError(f"{delta} is not a negative discriminant")
    k = delta % 2
    return Form(1, k, (k - delta) // 4)


# ============================================================
# Reduction and equivalence
# ============================================================

def is_reduced(form: Form) -> bool:
    a, b, c = form
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def _verified(form: Form, t: UnimodularMap, target: Form) -> None:
    if form.transform(t) != target:
        raise AssertionError(f"certificate check failed: ({form})∘{t} != ({target})")


def reduce(form: Form) -> Tuple[Form, UnimodularMap]:
    """Unique reduced form properly equivalent to `form`, and T with form∘T == reduced."""
    require_definite(form)
    cur, t = form, IDENTITY
    while True:
        # bring b into (-a, a]
        k = (cur.a - cur.b) // (2 * cur.a)
        if k:
            step = translation(k)
            cur, t = cur.transform(step), t @ step
        if cur.a > cur.c:
            cur, t = cur.transform(SWAP), t @ SWAP
            continue
        break
    if cur.a == cur.c and cur.b < 0:
        cur, t = cur.transform(SWAP), t @ SWAP
    _verified(form, t, cur)
    return cur, t


def is_equivalent(f: Form, g: Form) -> Optional[UnimodularMap]:
    """Proper map T with f∘T == g, or None when f and g are in different classes."""
    if f.delta != g.delta:
        require_definite(f)
        require_definite(g)
        return None
    rf, tf = reduce(f)
    rg, tg = reduce(g)
    if rf != rg:
        return None
    t = tf @ tg.inverse()
    _verified(f, t, g)
    return t


# ============================================================
# Composition
# ============================================================

def compose(f: Form, g: Form) -> Form:
    """Reduced representative of the Gauss product class [f][g] (Dirichlet composition)."""
    require_definite(f)
    require_definite(g)
    delta = f.delta
    if g.delta != delta:
        raise DomainError(f"discriminant mismatch: {delta} vs {g.delta}")

    (a1, b1, _c1), (a2, b2, c2) = tuple(f), tuple(g)
    if a1 > a2:
        (a1, b1, _c1), (a2, b2, c2) = (a2, b2, c2), (a1, b1, _c1)
    s = (b1 + b2) // 2
    n = b2 - s

    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _v = xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = xgcd(s, d)
        x2, y2 = u, -v

    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    num = b3 * b3 - delta
    if num % (4 * a3):
        raise AssertionError(f"composition of ({f}) and ({g}) produced a non-integral form")
    composed = Form(a3, b3, num // (4 * a3))
    if composed.delta != delta or not is_primitive(composed):
        raise AssertionError(f"composition of ({f}) and ({g}) left discriminant {delta}")
    return reduce(composed)[0]


# ============================================================
# Automorphisms
# ============================================================

_AUT_TABLE = {
    -4: [IDENTITY, UnimodularMap(0, -1, 1, 0)],
    -3: [IDENTITY, UnimodularMap(0, -1, 1, 1), UnimodularMap(1, 1, -1, 0)],
}


def proper_automorphisms(form: Form) -> List[UnimodularMap]:
    """The full group Aut+(form): order 6, 4 or 2 as delta is -3, -4 or below."""
    reduced, t = reduce(form)
    base = _AUT_TABLE.get(form.delta, [IDENTITY])
    t_inv = t.inverse()
    out: List[UnimodularMap] = []
    for m in base:
        for a in (m, -m):
            conj = t @ a @ t_inv
            _verified(form, conj, form)
            out.append(conj)
    log.debug("Aut+(%s) has order %d", form, len(out))
    return out


def improper_automorphism(form: Form) -> Optional[UnimodularMap]:
    """A determinant -1 symmetry of form, present iff the form is ambiguous."""
    t = is_equivalent(form, form.opposite())
    if t is None:
        return None
    # form∘T == (a,-b,c) and (a,-b,c)∘FLIP == form
    m = t @ FLIP
    _verified(form, m, form)
    return m


def is_ambiguous(form: Form) -> bool:
    return is_equivalent(form, form.opposite()) is not None


# ============================================================
# Class group
# ============================================================

def class_group(delta: int) -> List[Form]:
    """One reduced primitive form per class of discriminant delta, sorted by (a, b, c)."""
    if delta >= 0 or delta % 4 not in (0, 1):
        raise DomainError(f"{delta} is not a negative discriminant (need delta < 0, delta = 0 or 1 mod 4)")
    out: List[Form] = []
    a_max = isqrt(-delta // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b - delta) % 2:
                continue
            num = b * b - delta
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            f = Form(a, b, c)
            if is_reduced(f) and gcd(gcd(a, b), c) == 1:
                out.append(f)
    out.sort(key=lambda f: (f.a, f.b, f.c))
    log.debug("class group of %d has order %d", delta, len(out))
    return out
