import pytest
from hypothesis import given, strategies as st

from cubicacm import catalog
from cubicacm.lattice import ELL, H, K, ZERO, DivisorClass, b
from cubicacm.parser import ParseError, format_class, format_label, parse_class
from strategies import classes


@pytest.mark.parametrize("text,value", [
    ("3l - b1 - b2 - b3 - b4 - b5 - b6", H),
    ("L[1,2]", (1, -1, -1, 0, 0, 0, 0)),
    ("H - T[1,2,3]", (1, 0, 0, 0, -1, -1, -1)),
    ("L[2,1]", (1, -1, -1, 0, 0, 0, 0)),
    ("K", K),
    ("2*L[1] + 3 b2", (0, 2, 3, 0, 0, 0, 0)),
    ("2H", 2 * H),
    ("[1,0,0,0,0,0,-1]", (1, 0, 0, 0, 0, 0, -1)),
    ("L^[6]", (2, -1, -1, -1, -1, -1, 0)),
    ("C^[1,2]", (2, 0, 0, -1, -1, -1, -1)),
    ("T[2|1]", (3, 0, -2, -1, -1, -1, -1)),
    ("T^[]", (5, -2, -2, -2, -2, -2, -2)),
    ("T[]", ELL),
    ("0l", ZERO),
    ("-b1", -b(1)),
    ("  l+b1  ", (1, 1, 0, 0, 0, 0, 0)),
])
def test_parse_examples(text, value):
    assert parse_class(text) == DivisorClass(value)


@pytest.mark.parametrize("text,position", [
    ("b7", 1), ("b0", 1), ("L[1,1]", 4), ("L[7]", 2), ("T[1|1]", 4),
    ("H +", 3), ("H H", 2), ("", 0), ("L[1|2]", 3), ("C^[1,2,3]", 0),
    ("[1,2]", 4), ("x", 0), ("3 * ", 4), ("H $ l", 2), ("L[1", 3), ("2*-H", 2),
])
def test_rejects_with_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_class(text)
    assert info.value.position == position
    assert "^" in info.value.caret()


def test_every_label_parses():
    for lab in catalog.all_labels():
        text = catalog.label_text(lab)
        assert parse_class(text) == catalog.named_class(lab)
        assert format_label(catalog.named_class(lab)) == text


@given(classes(20, 20))
def test_format_round_trip(d):
    text = format_class(d)
    assert parse_class(text) == d
    assert format_class(parse_class(text)) == text


@given(classes(5, 5), classes(5, 5), st.integers(0, 9))
def test_linear_combinations(x, y, k):
    text = f"{k}*[{','.join(map(str, x))}] - [{','.join(map(str, y))}]"
    assert parse_class(text) == k * x - y


def test_zero_prints_as_zero_line():
    assert format_class(ZERO) == "0l"
    assert format_class(-b(1)) == "-b1"
    assert format_label(H) is None
