import itertools

import pytest
from hypothesis import given, strategies as st

from cubicacm import catalog
from cubicacm.catalog import Label, LabelError
from cubicacm.lattice import H, K, degree, dot


@pytest.mark.parametrize("kind,n,deg,square", [
    ("line", 27, 1, -1), ("conic", 27, 2, 0), ("cubic", 72, 3, 1),
])
def test_curve_families(kind, n, deg, square):
    fam = catalog.enumerate_classes(kind)
    assert len(fam) == n
    assert all(degree(d) == deg and dot(d, d) == square for d in fam)
    assert all(dot(d, ln) >= 0 for d in fam for ln in catalog.lines() if d != ln)


def test_roots_and_exceptional():
    roots = catalog.roots()
    assert len(roots) == 72
    assert all(dot(r, r) == -2 and dot(r, H) == 0 for r in roots)
    assert set(catalog.exceptional()) == set(catalog.lines())
    assert all(dot(e, K) == -1 and dot(e, e) == -1 for e in catalog.exceptional())


def test_sixers():
    sixers = catalog.sixers()
    assert len(sixers) == 72 and len(set(sixers)) == 72
    for s in sixers:
        assert catalog.is_sixer(s)


def test_labels_cover_families():
    for kind, n in (("line", 27), ("conic", 27), ("cubic", 72)):
        labels = list(catalog.all_labels(kind))
        assert len(labels) == n
        assert {catalog.named_class(lab) for lab in labels} == set(catalog.enumerate_classes(kind))


def test_label_round_trip():
    for lab in catalog.all_labels():
        assert catalog.label_of(catalog.named_class(lab)) == lab


@pytest.mark.parametrize("label", [
    Label("L_ij", (1, 1)), Label("L_i", (7,)), Label("C^ij", (2, 1)),
    Label("T_ijk", (1, 2)), Label("X", ()),
])
def test_bad_labels(label):
    with pytest.raises(LabelError):
        catalog.named_class(label)


def test_named_examples():
    assert catalog.named_class(Label("L_ij", (1, 2))) == (1, -1, -1, 0, 0, 0, 0)
    assert catalog.named_class(Label("T_0")) == (1, 0, 0, 0, 0, 0, 0)
    assert catalog.named_class(Label("T^0")) == (5, -2, -2, -2, -2, -2, -2)


def test_cubics_are_h_minus_roots():
    assert {H - r for r in catalog.roots()} == set(catalog.cubics())


def test_companion_is_an_involution():
    lines, conics = set(catalog.lines()), set(catalog.conics())
    assert {catalog.companion(x) for x in lines} == conics
    for x in itertools.chain(catalog.lines(), catalog.conics(), catalog.cubics()):
        assert catalog.companion(catalog.companion(x)) == x


def test_every_cubic_misses_a_line():
    for d in range(3, 7):
        for x in catalog.rational(d):
            assert any(dot(x, ln) == 0 for ln in catalog.lines())


@pytest.mark.parametrize("d", range(1, 7))
def test_rational_bound_is_safe(d):
    assert catalog.rational(d) == catalog.rational(d, a0_max=3 * d) or d <= 2
    if d >= 3:
        from cubicacm import cohomology
        assert all(cohomology.h0(x) == d for x in catalog.rational(d))


def test_membership():
    assert catalog.classify_membership(H) == "none"
    assert catalog.classify_membership(catalog.lines()[0]) == "line"
    assert catalog.classify_membership(catalog.roots()[0]) == "root"
    with pytest.raises(ValueError):
        catalog.companion(H)


@given(st.sampled_from(sorted(catalog.lines())), st.sampled_from(sorted(catalog.lines())))
def test_line_pairs_meet_in_at_most_one_point(x, y):
    assert dot(x, y) in ((-1,) if x == y else (0, 1))
