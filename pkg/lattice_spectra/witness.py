# lattice_spectra/witness.py
"""
Constructive searches. Each returned witness has been recounted with
repcount before it leaves this module; a candidate that fails its recount
is skipped and the search moves on.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .config import settings
from .errors import DomainError, SearchExhausted
from .primes import primes_from
from .qform import Form, discriminant, is_ambiguous, principal_form, require_definite
from .repcount import Point, count_r_plus, first_quadrant_count, representations, value_counts

log = logging.getLogger(__name__)

KIND_THEOREM_Q = "rect_theorem_q"
KIND_RECT_SCAN = "rect_scan"
KIND_SURJECTIVITY = "r_plus_surjectivity"


@dataclass(frozen=True)
class PrimeWitness:
    p: int
    rep: Point
    form: Form


@dataclass(frozen=True)
class MultiplicityWitness:
    kind: str
    target_count: int
    value: int
    solutions: Tuple[Point, ...]
    prime: Optional[int] = None
    trace_length: int = 0
    extra: Dict[str, int] = field(default_factory=dict)


def _choose_rep(solutions: Iterable[Point]) -> Point:
    # one representative per sign pair, smallest x first with y >= 0 preferred
    cands = [(x, y) for x, y in solutions if x > 0 or (x == 0 and y > 0)]
    return min(cands, key=lambda pt: (pt[1] < 0, pt[0], pt[1]))


def _represented_primes(form: Form, coprime_to: int, bound: int) -> Iterator[Tuple[int, Tuple[Point, ...]]]:
    for p in primes_from(2, bound):
        if gcd(p, coprime_to) != 1:
            continue
        sols = representations(form, p).solutions
        if sols:
            yield p, sols


# ============================================================
# Represented primes
# ============================================================

def find_represented_prime(form: Form, avoid: Iterable[int] = (), bound: Optional[int] = None) -> PrimeWitness:
    require_definite(form)
    bound = settings.SEARCH_BOUND if bound is None else bound
    avoid = list(avoid)
    scanned = 0
    for p in primes_from(2, bound):
        scanned += 1
        if any(gcd(p, a) != 1 for a in avoid):
            continue
        sols = representations(form, p).solutions
        if not sols:
            continue
        rep = _choose_rep(sols)
        if form(*rep) != p or gcd(*rep) != 1:
            raise AssertionError(f"bad representation {rep} of {p} by ({form})")
        log.info("smallest prime represented by (%s) avoiding %s: %d = F%s", form, avoid, p, rep)
        return PrimeWitness(p=p, rep=rep, form=form)
    raise SearchExhausted(
        f"no prime <= {bound} represented by ({form}) and coprime to {avoid}.\n"
        "Hint: raise --bound / LATTICE_SEARCH_BOUND.",
        bound=bound,
        trace_length=scanned,
    )


# ============================================================
# Rectangle witnesses: p^(2k-1) = m x^2 + n y^2
# ============================================================

def theorem_q_witness(m: int, n: int, k: int, bound: Optional[int] = None) -> MultiplicityWitness:
    """
    Prime p, represented by mx^2 + ny^2 uniquely up to signs with xy != 0,
    such that N = p^(2k-1) has exactly k solutions with x, y >= 1.
    """
    if m < 1 or n < 1 or k < 1:
        raise DomainError(f"m, n and k must be positive, got m={m}, n={n}, k={k}")
    if gcd(m, n) != 1:
        raise DomainError(f"m={m} and n={n} must be coprime")
    if m * n <= 3:
        raise DomainError(
            f"m*n = {m * n} <= 3: the unique-representation construction needs m*n > 3.\n"
            "Hint: use `rect witness`, which scans levels directly for these ratios."
        )
    bound = settings.SEARCH_BOUND if bound is None else bound
    form = Form(m, 0, n)
    tried = 0
    for p in primes_from(2, bound):
        if gcd(p, 2 * m * n) != 1:
            continue
        rs = representations(form, p)
        if rs.R != 4 or any(x * y == 0 for x, y in rs.solutions):
            continue
        N = p ** (2 * k - 1)
        if N > settings.VALUE_BOUND:
            raise SearchExhausted(
                f"candidate level {p}^{2 * k - 1} exceeds the value bound {settings.VALUE_BOUND}.\n"
                "Hint: raise LATTICE_VALUE_BOUND.",
                bound=settings.VALUE_BOUND,
                trace_length=tried,
            )
        tried += 1
        count, sols = first_quadrant_count(m, n, N)
        if count == k:
            log.info("theorem-q witness (m=%d, n=%d, k=%d): p=%d, N=%d", m, n, k, p, N)
            return MultiplicityWitness(
                kind=KIND_THEOREM_Q,
                target_count=k,
                value=N,
                solutions=tuple(sols),
                prime=p,
                trace_length=tried,
            )
        log.debug("p=%d gives %d positive solutions at %d, wanted %d; advancing", p, count, N, k)
    raise SearchExhausted(
        f"no prime <= {bound} gives exactly {k} positive solutions of {m}x^2 + {n}y^2 = p^{2 * k - 1}.\n"
        "Hint: raise --bound / LATTICE_SEARCH_BOUND.",
        bound=bound,
        trace_length=tried,
    )


def _quadrant_tally(m: int, n: int, limit: int) -> Dict[int, int]:
    tally: Dict[int, int] = {}
    x = 1
    while m * x * x + n <= limit:
        y = 1
        while m * x * x + n * y * y <= limit:
            v = m * x * x + n * y * y
            tally[v] = tally.get(v, 0) + 1
            y += 1
        x += 1
    return tally


def quadrant_scan_witness(m: int, n: int, k: int, bound: Optional[int] = None) -> MultiplicityWitness:
    """Smallest N <= bound with exactly k solutions of mx^2 + ny^2 = N, x, y >= 1."""
    if m < 1 or n < 1 or k < 1:
        raise DomainError(f"m, n and k must be positive, got m={m}, n={n}, k={k}")
    bound = settings.SEARCH_BOUND if bound is None else bound
    limit, scanned = min(256, bound), 0
    while True:
        tally = _quadrant_tally(m, n, limit)
        scanned += len(tally)
        hits = sorted(N for N, c in tally.items() if c == k)
        if hits:
            N = hits[0]
            count, sols = first_quadrant_count(m, n, N)
            if count != k:
                raise AssertionError(f"level {N}: tally {tally[N]} disagrees with recount {count}")
            log.info("quadrant scan witness (m=%d, n=%d, k=%d): N=%d", m, n, k, N)
            return MultiplicityWitness(
                kind=KIND_RECT_SCAN,
                target_count=k,
                value=N,
                solutions=tuple(sols),
                trace_length=scanned,
            )
        if limit >= bound:
            break
        limit = min(4 * limit, bound)
    raise SearchExhausted(
        f"no level N <= {bound} has exactly {k} solutions of {m}x^2 + {n}y^2 = N with x, y >= 1.\n"
        "Hint: raise --bound / LATTICE_SEARCH_BOUND.",
        bound=bound,
        trace_length=scanned,
    )


# ============================================================
# Surjectivity of r_plus
# ============================================================

def _base_values(form: Form, ambiguous: bool, q: int, conductor: int, delta: int, bound: int) -> Iterator[int]:
    if not ambiguous:
        # a split prime p hits the class of F exactly once
        for p, _ in _represented_primes(form, q * conductor * delta, bound):
            yield p
        return
    # ambiguous class: small represented values, smallest first
    limit = 16 * form.a * form.c
    counts = value_counts(form, limit)
    for v in sorted(counts):
        if gcd(v, q) == 1:
            yield v


def surjectivity_witness(
    form: Form,
    k: int,
    bound: Optional[int] = None,
    max_primes: int = 6,
    max_bases: int = 6,
) -> MultiplicityWitness:
    """n with r_plus(F, n) == k exactly, built as n0 * q^(k-1)."""
    require_definite(form)
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    bound = settings.SEARCH_BOUND if bound is None else bound
    disc = discriminant(form)
    delta, conductor = disc.delta, disc.conductor
    ambiguous = is_ambiguous(form)
    principal = principal_form(delta)
    tried = 0

    for q_index, (q, _) in enumerate(_represented_primes(principal, conductor * delta, bound)):
        if q_index >= max_primes:
            break
        for b_index, n0 in enumerate(_base_values(form, ambiguous, q, conductor, delta, bound)):
            if b_index >= max_bases:
                break
            n = n0 * q ** (k - 1)
            if n > settings.VALUE_BOUND:
                break
            tried += 1
            rs = representations(form, n)
            if rs.R_plus == k:
                log.info("surjectivity witness for (%s), k=%d: n=%d (q=%d, n0=%d)", form, k, n, q, n0)
                return MultiplicityWitness(
                    kind=KIND_SURJECTIVITY,
                    target_count=k,
                    value=n,
                    solutions=rs.solutions,
                    prime=q,
                    trace_length=tried,
                    extra={"n0": n0},
                )
            log.debug("n=%d = %d*%d^%d has r_plus=%d, wanted %d", n, n0, q, k - 1, rs.R_plus, k)

    log.info("constructive search for (%s), k=%d failed after %d candidates; scanning", form, k, tried)
    for n in range(1, bound + 1):
        tried += 1
        if count_r_plus(form, n) == k:
            rs = representations(form, n)
            return MultiplicityWitness(
                kind=KIND_SURJECTIVITY,
                target_count=k,
                value=n,
                solutions=rs.solutions,
                trace_length=tried,
            )
    raise SearchExhausted(
        f"no n <= {bound} with r_plus = {k} for ({form}).\n"
        "Hint: raise --bound / LATTICE_SEARCH_BOUND.",
        bound=bound,
        trace_length=tried,
    )


# ============================================================
# Histograms
# ============================================================

def multiplicity_histogram(form: Form, n_max: int) -> Dict[int, int]:
    """{R(n): how many 1 <= n <= n_max have it}."""
    require_definite(form)
    if n_max < 1:
        return {}
    counts = value_counts(form, n_max)
    hist: Dict[int, int] = {}
    for n in range(1, n_max + 1):
        r = counts.get(n, 0)
        hist[r] = hist.get(r, 0) + 1
    return dict(sorted(hist.items()))
