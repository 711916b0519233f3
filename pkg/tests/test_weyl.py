import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubicacm import catalog, weyl
from cubicacm.lattice import H, K, dot
from strategies import classes


@pytest.fixture(scope="module")
def group():
    return weyl.generate_group()


def test_simple_roots_are_roots():
    assert len(weyl.SIMPLE_ROOTS) == 6
    assert all(weyl.is_root(a) for a in weyl.SIMPLE_ROOTS)


def test_reflection_rejects_non_roots():
    with pytest.raises(weyl.DomainError):
        weyl.reflect(H, H)


@given(st.sampled_from(weyl.SIMPLE_ROOTS), classes(), classes())
def test_reflection_is_isometric_involution(alpha, x, y):
    rx, ry = weyl.reflect(alpha, x), weyl.reflect(alpha, y)
    assert dot(rx, ry) == dot(x, y)
    assert weyl.reflect(alpha, rx) == x
    assert weyl.reflect(alpha, K) == K


def test_group_order(group):
    assert len(group) == weyl.ORDER == 51840


@settings(max_examples=25)
@given(st.integers(0, 51839), st.integers(0, 51839))
def test_closed_under_composition(group, i, j):
    g = weyl.WeylElement(group.matrices[i]) @ weyl.WeylElement(group.matrices[j])
    assert g in group


def test_lines_form_one_orbit(group):
    images = {tuple(v) for v in group.act(catalog.lines()[0])}
    assert images == {tuple(x) for x in catalog.lines()}


def test_orbit_sizes():
    assert len(weyl.orbit(catalog.lines()[0])) == 27
    assert len(weyl.orbit(catalog.conics()[0])) == 27
    assert len(weyl.orbit(catalog.cubics()[0])) == 72
    assert weyl.orbit(H) == {H}
    assert len(weyl.set_orbit(catalog.sixers()[0])) == 72


def test_sixer_root():
    roots = {weyl.sixer_root(s) for s in catalog.sixers()}
    assert roots == set(catalog.roots())
    with pytest.raises(weyl.DomainError):
        weyl.sixer_root(catalog.lines()[:5] + (H - catalog.lines()[0] - catalog.lines()[1],))


def test_disk_cache_round_trip(tmp_path):
    g1 = weyl.generate_group(str(tmp_path))
    assert any(tmp_path.iterdir())
    from cubicacm import _cache
    _cache.clear_caches()
    g2 = weyl.generate_group(str(tmp_path))
    assert np.array_equal(np.sort(g1.matrices.reshape(len(g1), -1), axis=0),
                          np.sort(g2.matrices.reshape(len(g2), -1), axis=0))


def test_unreadable_cache_is_ignored(tmp_path):
    (tmp_path / (weyl.CACHE_FORMAT + ".npy")).write_bytes(b"garbage")
    from cubicacm import _cache
    _cache.clear_caches()
    assert len(weyl.generate_group(str(tmp_path))) == 51840
