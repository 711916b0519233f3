"""Existential matching of classes against symbolic patterns.

A pattern is a signed sum such as ``H+C+L``, ``2M-H`` or ``L1+L2+L3``.
Symbols starting with L, C or T (optionally followed by digits) range over
lines, conics and cubics; ``R4`` etc. range over rational curves of that
degree; ``H`` is the hyperplane class and any other name must be bound in
the context. A class matches when some assignment of catalog classes to the
free symbols makes the sum equal to it.
"""
from __future__ import annotations

import itertools
import re
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from . import catalog
from ._cache import cached
from .lattice import H, ZERO, DivisorClass, dot

_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*([A-Za-z][A-Za-z0-9]*|0)\s*")


def parse_pattern(text: str) -> List[Tuple[int, str]]:
    terms = []
    pos = 0
    first = True
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad pattern {text!r} at {pos}")
        if not first and not m.group(1):
            raise ValueError(f"missing operator in {text!r} at {pos}")
        first = False
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3) != "0":
            terms.append((sign * coef, m.group(3)))
        pos = m.end()
    return terms


def _family(symbol: str) -> Optional[FrozenSet[DivisorClass]]:
    m = re.fullmatch(r"R(\d+)", symbol)
    if m:
        return frozenset(catalog.rational(int(m.group(1))))
    head = symbol[0]
    if head in "LCT" and (len(symbol) == 1 or symbol[1:].isdigit()):
        return frozenset({"L": catalog.lines, "C": catalog.conics,
                          "T": catalog.cubics}[head]())
    return None


def match(d, text: str, context: Optional[Mapping[str, DivisorClass]] = None,
          disjoint: bool = False) -> Optional[Dict[str, DivisorClass]]:
    """Return an assignment of the free symbols realizing ``d``, or None.

    With ``disjoint`` the free symbols must be pairwise orthogonal.
    """
    context = dict(context or {})
    context.setdefault("H", H)
    fixed = ZERO
    free: Dict[str, int] = {}
    for coef, sym in parse_pattern(text):
        if sym in context:
            fixed = fixed + coef * DivisorClass(context[sym])
        elif _family(sym) is not None:
            free[sym] = free.get(sym, 0) + coef
        else:
            raise ValueError(f"unbound symbol {sym!r} in {text!r}")
    target = DivisorClass(d) - fixed
    names = list(free)
    if not names:
        return {} if target.is_zero() else None
    # solve the last unit-coefficient symbol by lookup, search the rest
    names.sort(key=lambda s: abs(free[s]) != 1)
    last, search = names[0], names[1:]
    if abs(free[last]) != 1:
        raise ValueError(f"pattern {text!r} needs a unit-coefficient symbol")
    pools = [sorted(_family(s)) for s in search]
    last_pool = _family(last)
    for combo in itertools.product(*pools):
        if disjoint and any(dot(x, y) != 0 for x, y in itertools.combinations(combo, 2)):
            continue
        rest = target - sum((free[s] * c for s, c in zip(search, combo)), ZERO)
        cand = rest if free[last] == 1 else -rest
        if cand in last_pool:
            if disjoint and any(dot(cand, c) != 0 for c in combo):
                continue
            out = dict(zip(search, combo))
            out[last] = cand
            return out
    return None


def _split(text: str, context: Mapping[str, DivisorClass]) -> Tuple[DivisorClass, Tuple[Tuple[int, str], ...]]:
    fixed = ZERO
    free: Dict[str, int] = {}
    for coef, sym in parse_pattern(text):
        if sym in context:
            fixed = fixed + coef * DivisorClass(context[sym])
        elif _family(sym) is not None:
            free[sym] = free.get(sym, 0) + coef
        else:
            raise ValueError(f"unbound symbol {sym!r} in {text!r}")
    return fixed, tuple(sorted(free.items()))


@cached
def _free_sums(free: Tuple[Tuple[int, str], ...], disjoint: bool) -> FrozenSet[DivisorClass]:
    pools = [sorted(_family(sym)) for sym, _ in free]
    out = set()
    for combo in itertools.product(*pools):
        if disjoint and any(dot(x, y) != 0 for x, y in itertools.combinations(combo, 2)):
            continue
        out.add(sum((c * x for (_, c), x in zip(free, combo)), ZERO))
    return frozenset(out)


def realizations(text: str, context: Optional[Mapping[str, DivisorClass]] = None,
                 disjoint: bool = False) -> FrozenSet[DivisorClass]:
    """Every class of the form ``text`` as the free symbols range over
    their families."""
    context = dict(context or {})
    context.setdefault("H", H)
    fixed, free = _split(text, context)
    return frozenset(fixed + x for x in _free_sums(free, disjoint))


def matches(d, text: str, context: Optional[Mapping[str, DivisorClass]] = None,
            disjoint: bool = False) -> bool:
    """Membership test backed by the cached set of all realizations."""
    context = dict(context or {})
    context.setdefault("H", H)
    fixed, free = _split(text, context)
    return DivisorClass(d) - fixed in _free_sums(free, disjoint)


def free_symbols(text: str, bound: Sequence[str] = ()) -> List[str]:
    return [s for _, s in parse_pattern(text) if s not in bound and s != "H"]
