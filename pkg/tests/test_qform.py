from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from lattice_spectra.errors import DomainError
from lattice_spectra.qform import (
    FLIP,
    Form,
    UnimodularMap,
    class_group,
    compose,
    decompose_discriminant,
    discriminant,
    improper_automorphism,
    is_ambiguous,
    is_equivalent,
    is_reduced,
    principal_form,
    proper_automorphisms,
    reduce,
    require_definite,
)


def F(a, b, c):
    return Form(a, b, c)


# ============================================================
# Discriminants
# ============================================================

@pytest.mark.parametrize("form,delta,delta0,conductor", [
    (F(1, 0, 1), -4, -4, 1),
    (F(1, 1, 1), -3, -3, 1),
    (F(1, 0, 3), -12, -3, 2),
    (F(1, 0, 4), -16, -4, 2),
    (F(1, 1, 7), -27, -3, 3),
    (F(1, 0, 5), -20, -20, 1),
    (F(1, 0, 2), -8, -8, 1),
])
def test_discriminant_decomposition(form, delta, delta0, conductor):
    d = discriminant(form)
    assert (d.delta, d.delta0, d.conductor) == (delta, delta0, conductor)


@pytest.mark.parametrize("delta", [0, 9, 16, -5, 3])
def test_bad_discriminants(delta):
    with pytest.raises(DomainError):
        decompose_discriminant(delta)


def test_principal_form():
    assert principal_form(-23) == F(1, 1, 6)
    assert principal_form(-20) == F(1, 0, 5)
    assert principal_form(-3) == F(1, 1, 1)
    with pytest.raises(DomainError):
        principal_form(5)


def test_form_parse():
    assert Form.parse(" 2, -1 ,3") == F(2, -1, 3)
    assert str(F(2, -1, 3)) == "2,-1,3"
    with pytest.raises(DomainError):
        Form.parse("1,0")
    with pytest.raises(DomainError):
        Form.parse("1,x,1")


@pytest.mark.parametrize("form", [F(2, 0, 2), F(1, 0, -1), F(-1, 0, -1), F(1, 2, 1)])
def test_require_definite_rejects(form):
    with pytest.raises(DomainError):
        require_definite(form)


def test_unimodular_map_needs_unit_determinant():
    with pytest.raises(DomainError):
        UnimodularMap(2, 0, 0, 1)
    t = UnimodularMap(2, 1, 1, 1)
    assert t @ t.inverse() == UnimodularMap(1, 0, 0, 1)


# ============================================================
# Reduction and equivalence
# ============================================================

def test_reduce_with_certificate():
    f = F(10, 14, 5)
    reduced, t = reduce(f)
    assert reduced == F(1, 0, 1)
    assert t.det == 1
    assert f.transform(t) == reduced


def test_reduce_tie_breaks_to_positive_b():
    assert reduce(F(2, -2, 3))[0] == F(2, 2, 3)
    assert reduce(F(3, -1, 3))[0] == F(3, 1, 3)


def test_distinct_classes_are_not_equivalent():
    assert is_equivalent(F(2, 1, 3), F(2, -1, 3)) is None
    assert is_equivalent(F(1, 0, 1), F(1, 1, 1)) is None


def test_equivalence_certificate():
    f, g = F(1, 0, 1), F(10, 14, 5)
    t = is_equivalent(f, g)
    assert t is not None and t.det == 1
    assert f.transform(t) == g


# ============================================================
# Class groups and composition
# ============================================================

@pytest.mark.parametrize("delta,forms", [
    (-3, [F(1, 1, 1)]),
    (-4, [F(1, 0, 1)]),
    (-20, [F(1, 0, 5), F(2, 2, 3)]),
    (-23, [F(1, 1, 6), F(2, -1, 3), F(2, 1, 3)]),
    (-56, [F(1, 0, 14), F(2, 0, 7), F(3, -2, 5), F(3, 2, 5)]),
])
def test_class_group(delta, forms):
    assert class_group(delta) == forms


def test_class_group_rejects_positive():
    with pytest.raises(DomainError):
        class_group(5)


@pytest.mark.parametrize("f,g,product", [
    (F(3, 2, 5), F(3, 2, 5), F(2, 0, 7)),
    (F(3, 2, 5), F(3, -2, 5), F(1, 0, 14)),
    (F(2, -1, 3), F(2, -1, 3), F(2, 1, 3)),
    (F(1, 0, 5), F(2, 2, 3), F(2, 2, 3)),
    (F(2, 2, 3), F(2, 2, 3), F(1, 0, 5)),
])
def test_compose(f, g, product):
    assert compose(f, g) == product


def test_compose_discriminant_mismatch():
    with pytest.raises(DomainError):
        compose(F(1, 0, 1), F(1, 1, 1))


def test_class_group_of_minus_23_is_cyclic_of_order_three():
    g = F(2, 1, 3)
    assert compose(compose(g, g), g) == F(1, 1, 6)


# ============================================================
# Automorphisms
# ============================================================

@pytest.mark.parametrize("form,order", [
    (F(1, 1, 1), 6),
    (F(1, 0, 1), 4),
    (F(2, 1, 3), 2),
    (F(1, 2, 2), 4),
    (F(3, 3, 1), 6),
])
def test_proper_automorphisms(form, order):
    aut = proper_automorphisms(form)
    assert len(aut) == order
    assert len(set(aut)) == order
    for t in aut:
        assert t.det == 1
        assert form.transform(t) == form


def test_improper_automorphism():
    m = improper_automorphism(F(1, 0, 5))
    assert m is not None and m.det == -1
    assert F(1, 0, 5).transform(m) == F(1, 0, 5)
    assert improper_automorphism(F(2, 1, 3)) is None


@pytest.mark.parametrize("form,expected", [
    (F(1, 1, 6), True),
    (F(2, 2, 3), True),
    (F(2, 1, 3), False),
    (F(3, 2, 5), False),
    (F(2, 0, 7), True),
])
def test_is_ambiguous(form, expected):
    assert is_ambiguous(form) is expected


def test_flip_fixes_diagonal_forms():
    assert F(3, 0, 7).transform(FLIP) == F(3, 0, 7)


# ============================================================
# Properties
# ============================================================

@st.composite
def definite_forms(draw, max_coef=50):
    a = draw(st.integers(1, max_coef))
    b = draw(st.integers(-max_coef, max_coef))
    c = draw(st.integers(1, max_coef))
    assume(b * b < 4 * a * c)
    assume(gcd(gcd(a, b), c) == 1)
    return Form(a, b, c)


@given(definite_forms())
def test_reduce_is_reduced_and_certified(f):
    reduced, t = reduce(f)
    assert is_reduced(reduced)
    assert t.det == 1
    assert f.transform(t) == reduced
    assert reduce(reduced)[0] == reduced


@given(definite_forms())
def test_reduced_form_is_listed_in_class_group(f):
    assert reduce(f)[0] in class_group(f.delta)


@given(definite_forms())
def test_principal_class_is_the_identity(f):
    e = principal_form(f.delta)
    assert compose(e, f) == reduce(f)[0]
    assert compose(f, f.opposite()) == e


@given(definite_forms(), st.data())
def test_compose_is_commutative(f, data):
    g = data.draw(st.sampled_from(class_group(f.delta)))
    assert compose(f, g) == compose(g, f)


@given(definite_forms())
def test_automorphism_orders(f):
    aut = proper_automorphisms(f)
    expected = {-3: 6, -4: 4}.get(f.delta, 2)
    assert len(aut) == expected
    for t in aut:
        assert f.transform(t) == f


@st.composite
def unimodular_maps(draw):
    t = UnimodularMap(1, 0, 0, 1)
    for k in draw(st.lists(st.integers(-3, 3), min_size=1, max_size=4)):
        t = t @ UnimodularMap(1, k, 0, 1) @ UnimodularMap(0, -1, 1, 0)
    return t


@given(definite_forms(), unimodular_maps(), unimodular_maps())
def test_equivalence_is_symmetric_and_transitive(f, t, s):
    g = f.transform(t)
    h = g.transform(s)
    fg, gh = is_equivalent(f, g), is_equivalent(g, h)
    assert fg is not None and gh is not None
    # inverting a certificate answers the reverse question
    assert g.transform(fg.inverse()) == f
    assert is_equivalent(g, f) is not None
    # chaining certificates answers f ~ h
    assert f.transform(fg @ gh) == h
    hf = is_equivalent(h, f)
    assert hf is not None and h.transform(hf) == f


@given(definite_forms())
def test_ambiguous_iff_order_two_iff_improper_symmetry(f):
    order_two = compose(f, f) == principal_form(f.delta)
    has_improper = improper_automorphism(f) is not None
    assert is_ambiguous(f) is order_two
    assert has_improper is order_two


SMALL_CLASS_GROUPS = [
    d for d in range(-3, -260, -1)
    if d % 4 in (0, 1) and len(class_group(d)) <= 6
]


@pytest.mark.parametrize("delta", SMALL_CLASS_GROUPS)
def test_compose_is_associative(delta):
    forms = class_group(delta)
    for f in forms:
        for g in forms:
            fg = compose(f, g)
            for h in forms:
                assert compose(fg, h) == compose(f, compose(g, h))
