"""Named divisor classes and the finite families built from them.

Lines, conics and twisted cubics are the classes of smooth rational curves
of degree 1, 2 and 3 on the surface. Roots are the classes of square -2
orthogonal to H, and a sixer is a set of six pairwise disjoint lines.
"""
from __future__ import annotations

import itertools
import math
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

from ._cache import cached
from .lattice import ELL, H, ZERO, DivisorClass, b, degree, dot

INDICES = range(1, 7)

# family name -> (kind, arity); T_i^j takes an ordered pair
FAMILIES: Dict[str, Tuple[str, int]] = {
    "L_i": ("line", 1),
    "L_ij": ("line", 2),
    "L^j": ("line", 1),
    "C_i": ("conic", 1),
    "C^ij": ("conic", 2),
    "C^j": ("conic", 1),
    "T_0": ("cubic", 0),
    "T_ijk": ("cubic", 3),
    "T_i^j": ("cubic", 2),
    "T^ijk": ("cubic", 3),
    "T^0": ("cubic", 0),
}

KINDS = ("line", "conic", "cubic", "root", "exceptional", "sixer")


class Label(NamedTuple):
    family: str
    indices: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return label_text(self)


class LabelError(ValueError):
    pass


def _check_label(label: Label) -> None:
    if label.family not in FAMILIES:
        raise LabelError(f"unknown family {label.family!r}")
    arity = FAMILIES[label.family][1]
    idx = label.indices
    if len(idx) != arity:
        raise LabelError(f"{label.family} takes {arity} indices, got {len(idx)}")
    for i in idx:
        if not 1 <= i <= 6:
            raise LabelError(f"index {i} outside 1..6")
    if len(set(idx)) != len(idx):
        raise LabelError(f"repeated index in {idx}")
    if label.family != "T_i^j" and tuple(sorted(idx)) != tuple(idx):
        raise LabelError(f"indices of {label.family} must be sorted")


def _sum_b(indices) -> DivisorClass:
    return sum((b(i) for i in indices), ZERO)


def _others(*excluded: int) -> List[int]:
    return [i for i in INDICES if i not in excluded]


def named_class(label: Label) -> DivisorClass:
    """Coordinate vector of a named line, conic or cubic."""
    _check_label(label)
    f, idx = label.family, label.indices
    if f == "L_i":
        return b(idx[0])
    if f == "L_ij":
        return ELL - _sum_b(idx)
    if f == "L^j":
        return 2 * ELL - _sum_b(_others(idx[0]))
    if f == "C_i":
        return ELL - b(idx[0])
    if f == "C^ij":
        return 2 * ELL - _sum_b(_others(*idx))
    if f == "C^j":
        return 3 * ELL - _sum_b(_others(idx[0])) - 2 * b(idx[0])
    if f == "T_0":
        return ELL
    if f == "T_ijk":
        return 2 * ELL - _sum_b(idx)
    if f == "T_i^j":
        i, j = idx
        return 3 * ELL - _sum_b(_others(i, j)) - 2 * b(i)
    if f == "T^ijk":
        return 4 * ELL - _sum_b(idx) - 2 * _sum_b(_others(*idx))
    return 5 * ELL - 2 * _sum_b(INDICES)  # T^0


def all_labels(kind: Optional[str] = None) -> Iterator[Label]:
    """Every well-formed label, optionally restricted to one kind."""
    for family, (fkind, arity) in FAMILIES.items():
        if kind is not None and fkind != kind:
            continue
        if family == "T_i^j":
            combos = itertools.permutations(INDICES, 2)
        else:
            combos = itertools.combinations(INDICES, arity)
        for idx in combos:
            yield Label(family, tuple(idx))


def label_text(label: Label) -> str:
    """Render a label in the command-line syntax, e.g. ``C^[1,2]``."""
    f, idx = label.family, label.indices
    inner = ",".join(str(i) for i in idx)
    if f == "T_i^j":
        inner = f"{idx[0]}|{idx[1]}"
    head = {"L_i": "L", "L_ij": "L", "L^j": "L^", "C_i": "C", "C^ij": "C^",
            "C^j": "C^", "T_0": "T", "T_ijk": "T", "T_i^j": "T",
            "T^ijk": "T^", "T^0": "T^"}[f]
    return f"{head}[{inner}]"


@cached
def _label_index() -> Dict[DivisorClass, Label]:
    return {named_class(lab): lab for lab in all_labels()}


def label_of(d: DivisorClass) -> Optional[Label]:
    """Inverse of named_class on lines, conics and cubics."""
    return _label_index().get(DivisorClass(d))


# -- enumeration by invariants -------------------------------------------------

def _tuples(n: int, total: int, squares: int) -> Iterator[Tuple[int, ...]]:
    """All integer n-tuples with the given sum and sum of squares."""
    if n == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if squares < 0 or total * total > n * squares:
        return
    bound = math.isqrt(squares)
    for x in range(-bound, bound + 1):
        for rest in _tuples(n - 1, total - x, squares - x * x):
            yield (x,) + rest


def classes_with(deg: int, square: int) -> List[DivisorClass]:
    """All classes D with D.H = deg and D.D = square (a finite set when
    square is small enough for the Hodge index bound to bite)."""
    # Cauchy-Schwarz on the six exceptional coordinates bounds a0.
    disc = 24 * deg * deg - 72 * square
    if disc < 0:
        return []
    spread = math.isqrt(disc) // 6 + 1
    out = []
    for a0 in range(deg - spread, deg + spread + 1):
        total = deg - 3 * a0
        squares = a0 * a0 - square
        for rest in _tuples(6, total, squares):
            cand = DivisorClass((a0,) + rest)
            # the scan solves the equations for the standard form; re-check
            if dot(cand, cand) == square and degree(cand) == deg:
                out.append(cand)
    return sorted(out)


def _nef_against(d: DivisorClass, lines_: Tuple[DivisorClass, ...]) -> bool:
    return all(dot(d, ln) >= 0 for ln in lines_)


@cached
def lines() -> Tuple[DivisorClass, ...]:
    return tuple(classes_with(1, -1))


@cached
def conics() -> Tuple[DivisorClass, ...]:
    return tuple(classes_with(2, 0))


@cached
def cubics() -> Tuple[DivisorClass, ...]:
    ls = lines()
    return tuple(d for d in classes_with(3, 1) if _nef_against(d, ls))


@cached
def roots() -> Tuple[DivisorClass, ...]:
    return tuple(classes_with(0, -2))


@cached
def exceptional() -> Tuple[DivisorClass, ...]:
    # square -1 and pairing -1 with the canonical class
    return tuple(classes_with(1, -1))


@cached
def sixers() -> Tuple[FrozenSet[DivisorClass], ...]:
    ls = lines()
    out = []

    def grow(chosen: List[DivisorClass], start: int) -> None:
        if len(chosen) == 6:
            out.append(frozenset(chosen))
            return
        for k in range(start, len(ls)):
            if all(dot(ls[k], c) == 0 for c in chosen):
                chosen.append(ls[k])
                grow(chosen, k + 1)
                chosen.pop()

    grow([], 0)
    return tuple(out)


def is_sixer(members) -> bool:
    ms = list(members)
    if len(set(ms)) != 6:
        return False
    if any(dot(v, v) != -1 or degree(v) != 1 for v in ms):
        return False
    return all(dot(v, w) == 0 for v, w in itertools.combinations(ms, 2))


@cached
def rational(d: int, a0_max: Optional[int] = None) -> Tuple[DivisorClass, ...]:
    """Classes of smooth rational curves of degree d.

    For d >= 3 these are the nef classes with D.H = d and D.D = d - 2; the
    scan runs over a0 in [ceil(d/3), a0_max] with 0 <= m_i <= a0, where
    D = a0*l - sum m_i b_i.
    """
    if d <= 0:
        raise ValueError("degree must be positive")
    if d == 1:
        return lines()
    if d == 2:
        return conics()
    if a0_max is None:
        a0_max = 2 * d
    ls = lines()
    found = set()
    for a0 in range(-(-d // 3), a0_max + 1):
        total = 3 * a0 - d
        squares = a0 * a0 - (d - 2)
        for ms in _multisets(6, total, squares, a0):
            for perm in set(itertools.permutations(ms)):
                cand = DivisorClass((a0,) + tuple(-m for m in perm))
                if _nef_against(cand, ls):
                    found.add(cand)
    return tuple(sorted(found))


def _multisets(n: int, total: int, squares: int, top: int) -> Iterator[Tuple[int, ...]]:
    """Non-increasing n-tuples in [0, top] with given sum and square sum."""
    if n == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if total < 0 or squares < 0 or total * total > n * squares:
        return
    for x in range(min(top, math.isqrt(squares)), -1, -1):
        for rest in _multisets(n - 1, total - x, squares - x * x, x):
            yield (x,) + rest


def enumerate_classes(kind: str):
    """Complete set of classes of the given kind.

    ``kind`` is one of line, conic, cubic, root, exceptional, sixer or
    ``rational(d)``.
    """
    if kind.startswith("rational(") and kind.endswith(")"):
        return frozenset(rational(int(kind[len("rational("):-1])))
    table = {"line": lines, "conic": conics, "cubic": cubics, "root": roots,
             "exceptional": exceptional, "sixer": sixers}
    if kind not in table:
        raise ValueError(f"unknown kind {kind!r}")
    return frozenset(table[kind]())


@cached
def _membership() -> Dict[DivisorClass, str]:
    out: Dict[DivisorClass, str] = {}
    for kind, fam in (("root", roots()), ("cubic", cubics()),
                      ("conic", conics()), ("line", lines())):
        for d in fam:
            out[d] = kind
    return out


def classify_membership(d) -> str:
    """line, conic, cubic, root or none. Exceptional vectors and lines are
    the same classes; they are reported as line."""
    d = DivisorClass(d)
    sq, deg = dot(d, d), degree(d)
    expected = {(-1, 1): "line", (0, 2): "conic", (1, 3): "cubic",
                (-2, 0): "root"}.get((sq, deg))
    if expected is None:
        return "none"
    found = _membership().get(d, "none")
    if expected in ("line", "conic", "root") and found != expected:
        raise AssertionError(f"{d} has {expected} invariants but is not enumerated")
    return found


def companion(d) -> DivisorClass:
    """H - D on lines and conics, 2H - D on cubics."""
    kind = classify_membership(d)
    if kind in ("line", "conic"):
        return H - d
    if kind == "cubic":
        return 2 * H - d
    raise ValueError(f"{tuple(d)} is not a line, conic or cubic")
