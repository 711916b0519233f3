import pytest

from cubicacm import catalog, patterns
from cubicacm.lattice import H, ZERO, dot
from cubicacm.parser import parse_class as P


def test_parse_pattern():
    assert patterns.parse_pattern("H+C-2L1") == [(1, "H"), (1, "C"), (-2, "L1")]
    assert patterns.parse_pattern("0") == []
    with pytest.raises(ValueError):
        patterns.parse_pattern("H C")


@pytest.mark.parametrize("pattern,disjoint,count", [
    ("L1+L2+L3", True, 720), ("H+C+L", True, 270), ("H+L1+L2", True, 216),
    ("H+T", False, 72), ("L", False, 27), ("R4", False, len(catalog.rational(4))),
])
def test_realization_counts(pattern, disjoint, count):
    assert len(patterns.realizations(pattern, disjoint=disjoint)) == count


def test_match_returns_witness():
    d = P("H + C[1] + L[2]")
    w = patterns.match(d, "H+C+L", disjoint=True)
    assert w is not None and H + w["C"] + w["L"] == d
    assert dot(w["C"], w["L"]) == 0
    assert patterns.match(P("H + C[1] + L[1]"), "H+C+L", disjoint=True) is None


def test_context_symbols():
    m, n = P("C[1]"), P("L[1]")
    assert patterns.matches(m - n + H, "M-N+H", {"M": m, "N": n})
    assert patterns.matches(ZERO, "0")
    with pytest.raises(ValueError):
        patterns.matches(ZERO, "Q")


def test_matches_agrees_with_match():
    for d in list(catalog.cubics())[:10] + list(catalog.conics())[:5]:
        for pat in ("L1+L2", "C", "H-L1-L2", "L+C-H"):
            assert patterns.matches(d, pat) == (patterns.match(d, pat) is not None)
