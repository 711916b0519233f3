"""aCM line bundles and the numerical classification of rank-two aCM bundles.

A bundle is aCM when h^1 of every twist by H vanishes. For a line bundle
D the twists D + tH are nef for t large and anti-nef after Serre duality for
t small, so only a finite window of twists needs checking.

Rank-two bundles enter only through their Chern classes and through
extensions 0 -> M -> E -> N -> 0 of line bundles. The classifier reads the
resolution type off the invariants (c1.H, c1.c1, c2) of a normalized pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import catalog, patterns
from ._cache import cached
from .cohomology import euler_char, h0, h0_array, h_vector, h_vectors_array
from .lattice import H, ZERO, DivisorClass, degree, dot, gram_matrix

# -- line bundles ----------------------------------------------------------------

MARGIN = 3


def acm_window(d) -> Tuple[int, int]:
    """Twists outside the returned range have vanishing h^1."""
    meets = [dot(d, ln) for ln in catalog.lines()]
    # d + tH is nef once t >= max(-d.L); -H - d - tH is nef once t <= -1 - max(d.L)
    t_high = max(0, max(-m for m in meets))
    t_low = min(0, -1 - max(meets))
    return t_low - MARGIN, t_high + MARGIN


def is_acm(d) -> bool:
    lo, hi = acm_window(d)
    return all(h_vector(DivisorClass(d) + t * H).h1 == 0 for t in range(lo, hi + 1))


def h0_series(d, start: int, length: int) -> List[int]:
    return [h0(DivisorClass(d) + t * H) for t in range(start, start + length)]


def hilbert_numerator(series: Sequence[int], start: int) -> Dict[int, int]:
    """Coefficients of (1 - z)^4 * sum h0(t) z^t, keyed by exponent.

    ``series`` must start at a twist with no sections before it and be long
    enough for the numerator to have died out.
    """
    out = {}
    for k in range(len(series)):
        c = sum((-1) ** j * math.comb(4, j) * series[k - j]
                for j in range(5) if k - j >= 0)
        if c:
            out[start + k] = c
    return out


def resolution_shape(numerator: Dict[int, int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Generator and syzygy twists read off a Hilbert numerator.

    A term c*z^k with c > 0 is c generators of twist -k; c < 0 gives
    syzygies. Exact whenever no generator and syzygy share a degree.
    """
    gens, syz = [], []
    for k in sorted(numerator):
        c = numerator[k]
        (gens if c > 0 else syz).extend([-k] * abs(c))
    return tuple(sorted(gens, reverse=True)), tuple(sorted(syz, reverse=True))


def line_bundle_shape(d) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    start = 0
    while h0(DivisorClass(d) + (start - 1) * H) > 0:
        start -= 1
    while h0(DivisorClass(d) + start * H) == 0:
        start += 1
    num = hilbert_numerator(h0_series(d, start, 12), start)
    if any(k >= start + 8 for k in num):
        raise AssertionError(f"Hilbert numerator of {tuple(d)} did not terminate")
    return resolution_shape(num)


SHAPES = {
    "OO": ((0,), (-3,)),
    "line": ((0, -1), (-2, -2)),
    "conic": ((0, 0), (-1, -2)),
    "cubic": ((0, 0, 0), (-1, -1, -1)),
}


def shape_name(shape) -> Optional[str]:
    for name, s in SHAPES.items():
        if s == shape:
            return name
    return None


@cached
def acm_line_catalog(a0_range: Tuple[int, int] = (0, 6),
                     coord_range: Tuple[int, int] = (-3, 2)) -> Dict[DivisorClass, str]:
    """Normalized aCM line bundles in a coordinate box, with their shapes.

    Normalized means h0(D) > 0 and h0(D - H) = 0.
    """
    r0 = np.arange(a0_range[0], a0_range[1] + 1)
    r = np.arange(coord_range[0], coord_range[1] + 1)
    grids = np.meshgrid(r0, r, r, r, r, r, r, indexing="ij")
    cand = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
    hvec = np.array(H, dtype=np.int64)
    keep = (h0_array(cand) > 0) & (h0_array(cand - hvec) == 0)
    cand = cand[keep]
    ok = np.ones(len(cand), dtype=bool)
    for t in range(-8, 9):
        ok &= h_vectors_array(cand + t * hvec)[:, 1] == 0
    out = {}
    for row in cand[ok]:
        d = DivisorClass(row.tolist())
        lo, hi = acm_window(d)
        if lo < -8 or hi > 8:  # wider than the vectorised scan
            if not is_acm(d):
                continue
        out[d] = shape_name(line_bundle_shape(d)) or "other"
    return out


# -- resolution types and Chern classes -------------------------------------------

@dataclass(frozen=True)
class ResolutionType:
    label: str
    group: str
    gen_twists: Tuple[int, ...]
    syz_twists: Tuple[int, ...]
    hilbert: Tuple[int, int, int]
    dual_label: str
    dual_shift: int
    kernel: Optional[Tuple[str, int]]
    c1_pattern: str
    c1_disjoint: bool
    c2: int
    c1_degree: int
    c1_square: int

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.c1_degree, self.c1_square, self.c2)

    def hilbert_at(self, t: int) -> int:
        p2, p1, p0 = self.hilbert
        return p2 * t * t + p1 * t + p0


def _rt(label, group, gens, syz, hilb, dual, shift, kernel, pattern, c2, deg, sq,
        disjoint=False):
    return ResolutionType(label, group, tuple(gens), tuple(syz), hilb, dual, shift,
                          kernel, pattern, disjoint, c2, deg, sq)


_A = ([0] * 6, [-1] * 6, (3, 9, 6))
_B = ([0] * 5, [-1] * 4 + [-2], (3, 8, 5))
_C = ([0] + [-1] * 4, [-2] * 5, (3, 4, 1))

RESOLUTION_TYPES: Dict[str, ResolutionType] = {r.label: r for r in [
    _rt("A1", "A", *_A, "A1", -2, None, "2H", 5, 6, 12),
    _rt("A2", "A", *_A, "A2", -2, None, "H+T", 4, 6, 10),
    _rt("A3", "A", *_A, "A3", -2, None, "H+C+L", 3, 6, 8, disjoint=True),
    _rt("B1", "B", *_B, "C1", -1, None, "H+C", 3, 5, 7),
    _rt("B2", "B", *_B, "C2", -1, None, "H+L1+L2", 2, 5, 5, disjoint=True),
    _rt("C1", "C", *_C, "B1", -1, None, "H-C", 1, 1, -1),
    _rt("C2", "C", *_C, "B2", -1, None, "H-L1-L2", 0, 1, -3, disjoint=True),
    _rt("D", "D", [0] * 4, [-1, -1, -2, -2], (3, 7, 4), "F", -1, ("F", -1), "H+L", 2, 4, 4),
    _rt("E", "E", [0, 0, 0, -1], [-1, -2, -2, -2], (3, 6, 3), "E", -1, ("G", -1), "H", 2, 3, 3),
    _rt("F", "F", [0, 0, -1, -1], [-2] * 4, (3, 5, 2), "D", -1, ("D", -2), "C", 1, 2, 0),
    _rt("G", "G", [0, -1, -1, -1], [-2, -2, -2, -3], (3, 3, 1), "G", 0, ("E", -2), "0", 1, 0, 0),
    _rt("H3", "H", [0, 0, 0], [-2, -2, -2], (3, 6, 3), "H3", -1, None, "T", 1, 3, 1),
]}


class ChernShapeError(ValueError):
    """The invariants match a row but the class has the wrong shape."""


def twist_chern(c1, c2: int, t: int) -> Tuple[DivisorClass, int]:
    """Chern classes of E(t) for a rank-two E."""
    c1 = DivisorClass(c1)
    return c1 + 2 * t * H, c2 + t * degree(c1) + 3 * t * t


def rank2_euler_char(c1, c2: int) -> int:
    return (dot(c1, c1) + degree(c1)) // 2 - c2 + 2


def expected_moduli_dim(c1, c2: int) -> int:
    return 4 * c2 - dot(c1, c1) - 3


def rank2_type(c1, c2: int) -> Optional[ResolutionType]:
    """Resolution type of a normalized rank-two aCM bundle with these Chern
    classes, or None."""
    c1 = DivisorClass(c1)
    key = (degree(c1), dot(c1, c1), c2)
    for rt in RESOLUTION_TYPES.values():
        if rt.triple == key:
            if not patterns.matches(c1, rt.c1_pattern, disjoint=rt.c1_disjoint):
                raise ChernShapeError(f"{tuple(c1)} has the invariants of {rt.label} "
                                      f"but is not of the form {rt.c1_pattern}")
            return rt
    return None


def normalize_chern(c1, c2: int) -> Tuple[int, DivisorClass, int, Optional[ResolutionType]]:
    """The twist t putting deg c1 in 0..6, preferring one that matches a row.

    Returns (t, c1(t), c2(t), type or None).
    """
    deg = degree(c1)
    options = range(math.ceil(-deg / 6), math.floor((6 - deg) / 6) + 1)
    fallback = None
    for t in options:
        n1, n2 = twist_chern(c1, c2, t)
        try:
            rt = rank2_type(n1, n2)
        except ChernShapeError:
            rt = None
        if rt is not None:
            return t, n1, n2, rt
        if fallback is None:
            fallback = (t, n1, n2, None)
    return fallback


# -- extensions -----------------------------------------------------------------

class NoExtensionError(ValueError):
    pass


def ext_dim(m, n, t: int = 0) -> int:
    """dim Ext^1(N, M(t)) = h^1(M - N + tH)."""
    return h_vector(DivisorClass(m) - DivisorClass(n) + t * H).h1


def hilbert_poly_pair(m, n) -> Tuple[int, int, int]:
    """Coefficients of chi(M + tH) + chi(N + tH)."""
    p1 = degree(m) + degree(n) + 3
    return 3, p1, euler_char(m) + euler_char(n)


@cached
def _twisted_catalog() -> Dict[DivisorClass, Tuple[DivisorClass, int]]:
    base = [ZERO] + list(catalog.lines()) + list(catalog.conics()) + list(catalog.cubics())
    return {x + s * H: (x, s) for x in base for s in range(-8, 9)}


@cached
def _twisted_arrays() -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    keys = sorted(_twisted_catalog())
    arr = np.array(keys, dtype=np.int64)
    g = gram_matrix()
    return arr, arr @ g, np.einsum("ni,ij,nj->n", arr, g, arr)


def split_summands(c1, c2: int) -> Optional[Tuple[DivisorClass, DivisorClass]]:
    """A pair of aCM line bundles with sum c1 and product c2, if any."""
    pool = _twisted_catalog()
    arr, paired, squares = _twisted_arrays()
    # d1 . (c1 - d1) = c2 narrows the candidates before the membership test
    hits = np.nonzero(paired @ np.array(c1, dtype=np.int64) - squares == c2)[0]
    found = []
    for i in hits:
        d1 = DivisorClass(arr[i].tolist())
        d2 = DivisorClass(c1) - d1
        if d2 in pool:
            found.append(tuple(sorted((d1, d2))))
    return min(found) if found else None


def pattern_of(d) -> Optional[str]:
    """Name of d as a twisted catalog class, e.g. ``T-H``, ``C``, ``-L``."""
    d = DivisorClass(d)
    if -d in catalog.lines():
        return "-L"
    hit = _twisted_catalog().get(d)
    if hit is None:
        return None
    base, s = hit
    head = {"line": "L", "conic": "C", "cubic": "T"}.get(catalog.classify_membership(base), "0")
    if head == "0":
        return {0: "0", 1: "H", -1: "-H"}.get(s, f"{s}H")
    if s == 0:
        return head
    return f"{head}{'+' if s > 0 else '-'}{'' if abs(s) == 1 else abs(s)}H"


@dataclass(frozen=True)
class ExtensionRecord:
    M: DivisorClass
    N: DivisorClass
    t: int
    ext_dim: int
    c1: DivisorClass
    c2: int
    normal_twist: int
    normal_c1: DivisorClass
    normal_c2: int
    type: str
    split: Optional[Tuple[DivisorClass, DivisorClass]]
    simple_sufficient: bool
    unobstructed: bool
    hilbert: Tuple[int, int, int]
    hilbert_matches: Optional[bool]
    stability_label: str = "n/a"
    notes: Tuple[str, ...] = field(default=())


def extension_profile(m, n, t: int = 0) -> ExtensionRecord:
    """Numerical data of a nonsplit extension 0 -> M(t) -> E -> N -> 0."""
    m, n = DivisorClass(m), DivisorClass(n)
    e = ext_dim(m, n, t)
    if e == 0:
        raise NoExtensionError(f"Ext^1(N, M({t})) = 0: every extension splits")
    mt = m + t * H
    c1, c2 = mt + n, dot(mt, n)
    s, n1, n2, rt = normalize_chern(c1, c2)
    split = None if rt is not None else split_summands(c1, c2)
    diff = mt - n
    hv_plus, hv_minus = h_vector(diff), h_vector(-diff)
    hilb = hilbert_poly_pair(mt, n)
    matches = None
    if rt is not None:
        # P_E(x) = P_type(x + s)
        p2, p1, p0 = rt.hilbert
        shifted = (p2, p1 + 2 * p2 * s, p2 * s * s + p1 * s + p0)
        matches = shifted == hilb
    from .census import stability_of  # table lookup, deferred to avoid a cycle
    return ExtensionRecord(
        M=m, N=n, t=t, ext_dim=e, c1=c1, c2=c2,
        normal_twist=s, normal_c1=n1, normal_c2=n2,
        type=rt.label if rt is not None else "split",
        split=split,
        simple_sufficient=hv_plus.h0 == 0 and hv_minus.h0 == 0,
        unobstructed=hv_plus.h2 == 0 and hv_minus.h2 == 0,
        hilbert=hilb, hilbert_matches=matches,
        stability_label=stability_of(mt, n),
    )


def pair_shape(m, n) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Resolution twists predicted by the Hilbert function of M + N.

    Valid for extensions with M aCM, where h0(E(t)) = h0(M(t)) + h0(N(t)).
    Generator and syzygy terms of equal degree cancel in the numerator.
    """
    start = -12
    series = [a + b for a, b in zip(h0_series(m, start, 30), h0_series(n, start, 30))]
    return resolution_shape(hilbert_numerator(series, start))


def type_numerator(rt: ResolutionType, shift: int = 0) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for g in rt.gen_twists:
        out[-g - shift] = out.get(-g - shift, 0) + 1
    for s in rt.syz_twists:
        out[-s - shift] = out.get(-s - shift, 0) - 1
    return {k: v for k, v in out.items() if v}


def slope_filter(m, n, a0_bound: int = 6, coord_bound: int = 4) -> set:
    """Effective K with 2 K.H >= (M+N).H that map nontrivially to M or N.

    A necessary condition for K to destabilize an extension of N by M.
    """
    m, n = DivisorClass(m), DivisorClass(n)
    lo = -(-(degree(m) + degree(n)) // 2)
    hi = max(degree(m), degree(n))
    if lo > hi:
        return set()
    r0 = np.arange(-a0_bound, a0_bound + 1)
    r = np.arange(-coord_bound, coord_bound + 1)
    grids = np.meshgrid(r0, r, r, r, r, r, indexing="ij")
    base = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
    partial = 3 * base[:, 0] + base[:, 1:].sum(axis=1)
    found = []
    for deg in range(lo, hi + 1):
        last = deg - partial
        ok = np.abs(last) <= coord_bound
        cand = np.concatenate([base[ok], last[ok, None]], axis=1)
        cand = cand[h0_array(cand) > 0]
        if not len(cand):
            continue
        keep = (h0_array(np.array(m) - cand) > 0) | (h0_array(np.array(n) - cand) > 0)
        found.extend(cand[keep].tolist())
    return {DivisorClass(k) for k in found}
