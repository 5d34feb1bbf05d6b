from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from lattice_spectra.common import isqrt
from lattice_spectra.errors import DomainError, SearchExhausted
from lattice_spectra.exactnum import parse_value
from lattice_spectra.qform import Form
from lattice_spectra.repcount import (
    count_irrational,
    count_R,
    count_r_full,
    count_r_plus,
    first_quadrant_count,
    irrational_value,
    primitive_representations,
    representations,
    representations_irrational,
    value_counts,
)


def naive_solutions(form, n):
    # |x| <= sqrt(4cn/|delta|), |y| <= sqrt(4an/|delta|)
    a, _b, c = form
    d = -form.delta
    xm, ym = isqrt(4 * c * n // d) + 1, isqrt(4 * a * n // d) + 1
    return sorted(
        ((x, y) for x in range(-xm, xm + 1) for y in range(-ym, ym + 1) if form(x, y) == n),
        key=lambda p: (p[1], p[0]),
    )


# ============================================================
# Integer forms
# ============================================================

def test_sum_of_two_squares_at_five():
    rs = representations(Form(1, 0, 1), 5)
    assert rs.solutions == ((-1, -2), (1, -2), (-2, -1), (2, -1), (-2, 1), (2, 1), (-1, 2), (1, 2))
    assert (rs.R, rs.R_plus, rs.R_full) == (8, 2, 1)
    assert rs.primitive_count == 8
    assert len(rs) == 8


def test_sum_of_two_squares_at_twenty_five():
    rs = representations(Form(1, 0, 1), 25)
    assert (rs.R, rs.R_plus, rs.R_full) == (12, 3, 2)
    prim = primitive_representations(Form(1, 0, 1), 25)
    assert prim.R == 8
    assert all(gcd(x, y) == 1 for x, y in prim.solutions)


def test_zero_has_one_representation():
    rs = representations(Form(2, 1, 3), 0)
    assert rs.solutions == ((0, 0),)
    assert (rs.R, rs.R_plus, rs.R_full) == (1, 1, 1)


def test_negative_target():
    with pytest.raises(DomainError):
        representations(Form(1, 0, 1), -1)


@pytest.mark.parametrize("form,n,R,r_plus", [
    (Form(1, 1, 1), 7, 12, 2),
    (Form(1, 1, 1), 1, 6, 1),
    (Form(2, 1, 3), 2, 2, 1),
    (Form(1, 0, 5), 2, 0, 0),
    (Form(2, 2, 3), 2, 2, 1),
])
def test_counts(form, n, R, r_plus):
    assert count_R(form, n) == R
    assert count_r_plus(form, n) == r_plus


def test_r_full_merges_mirror_orbits():
    assert count_r_full(Form(1, 0, 1), 25) == 2
    assert count_r_full(Form(1, 0, 1), 5) == 1
    # (2,1,3) has no improper symmetry
    assert count_r_full(Form(2, 1, 3), 2) == count_r_plus(Form(2, 1, 3), 2)


def test_value_counts():
    assert dict(value_counts(Form(1, 0, 1), 10)) == {1: 4, 2: 4, 4: 4, 5: 8, 8: 4, 9: 4, 10: 8}
    assert dict(value_counts(Form(1, 1, 1), 1)) == {1: 6}
    assert value_counts(Form(1, 0, 1), 0) == {}


def test_value_counts_rejects_indefinite():
    with pytest.raises(DomainError):
        value_counts(Form(1, 3, 1), 10)


# ============================================================
# Rectangle counts
# ============================================================

@pytest.mark.parametrize("m,n,N,expected", [
    (1, 1, 25, [(4, 3), (3, 4)]),
    (1, 1, 2, [(1, 1)]),
    (1, 5, 29, [(3, 2)]),
    (1, 1, 3, []),
    (2, 3, 125, [(7, 3), (5, 5)]),
])
def test_first_quadrant_count(m, n, N, expected):
    assert first_quadrant_count(m, n, N) == (len(expected), expected)


def test_first_quadrant_needs_positive_coefficients():
    with pytest.raises(DomainError):
        first_quadrant_count(0, 1, 5)


# ============================================================
# Irrational coefficients
# ============================================================

def test_irrational_sqrt2_ellipse():
    b, c = parse_value("sqrt(2)"), 1
    rs = representations_irrational(b, c, parse_value("5+2*sqrt(2)"))
    assert rs.solutions == ((-1, -2), (-2, -1), (2, 1), (1, 2))
    assert rs.R_plus is None
    assert count_irrational(b, c, parse_value("5+2*sqrt(2)")) == (4, 2)


def test_irrational_value_is_exact():
    assert irrational_value(parse_value("sqrt(2)"), 1, 1, 2) == parse_value("5+2*sqrt(2)")


def test_irrational_edge_targets():
    b, c = parse_value("sqrt(2)"), 1
    assert representations_irrational(b, c, -1).R == 0
    assert representations_irrational(b, c, 0).solutions == ((0, 0),)
    assert representations_irrational(b, c, parse_value("sqrt(3)")).R == 0


def test_irrational_rejects_indefinite():
    with pytest.raises(DomainError):
        representations_irrational(parse_value("2*sqrt(2)"), 1, 5)


def test_irrational_box_too_small():
    with pytest.raises(SearchExhausted) as exc:
        representations_irrational(parse_value("sqrt(2)"), 1, parse_value("5+2*sqrt(2)"), box=2)
    assert exc.value.bound == 2
    assert representations_irrational(parse_value("sqrt(2)"), 1, parse_value("5+2*sqrt(2)"), box=20).R == 4


def test_irrational_with_rational_coefficients_matches_integer_form():
    # x^2 + xy + y^2 through the exact path
    rs = representations_irrational(1, 1, 7)
    assert rs.R == count_R(Form(1, 1, 1), 7)


@pytest.mark.parametrize("b,c,gen", [
    ("-1", "sqrt(2)", (0, 1)),
    ("-sqrt(2)", "1", (1, 0)),
    ("-2*sqrt(2)", "2+sqrt(2)", (3, 0)),
    ("-sqrt(2)", "3/4+sqrt(2)", (1, 1)),
    ("-2*sqrt(2)", "1+sqrt(3)", (2, 1)),
])
def test_irrational_matches_naive_scan(b, c, gen):
    b, c = parse_value(b), parse_value(c)
    z = irrational_value(b, c, *gen)
    naive = sorted(
        ((x, y) for x in range(-12, 13) for y in range(-12, 13) if irrational_value(b, c, x, y) == z),
        key=lambda p: (p[1], p[0]),
    )
    assert list(representations_irrational(b, c, z).solutions) == naive


# ============================================================
# Oracle equivalence
# ============================================================

@st.composite
def form_and_target(draw):
    a = draw(st.integers(1, 50))
    b = draw(st.integers(-50, 50))
    c = draw(st.integers(1, 50))
    assume(b * b < 4 * a * c)
    assume(gcd(gcd(a, b), c) == 1)
    n = draw(st.integers(1, 5000))
    return Form(a, b, c), n


@given(form_and_target())
def test_representations_match_naive_oracle(case):
    form, n = case
    rs = representations(form, n)
    assert list(rs.solutions) == naive_solutions(form, n)


@given(form_and_target())
def test_R_is_a_multiple_of_the_automorphism_count(case):
    form, n = case
    rs = representations(form, n)
    step = {-3: 6, -4: 4}.get(form.delta, 2)
    assert rs.R % step == 0
    assert rs.R_full <= rs.R_plus


@given(form_and_target())
def test_value_counts_agree_with_count_R(case):
    form, n = case
    n = min(n, 300)
    counts = value_counts(form, n)
    assert counts.get(n, 0) == count_R(form, n)


def test_fraction_targets_have_no_integer_points():
    assert representations_irrational(1, 1, Fraction(1, 2)).R == 0
