"""Cohomology of line bundles on the cubic surface.

The canonical class is -H, so Riemann-Roch reads chi(D) = (D.D + D.H)/2 + 1
and Serre duality is h^i(D) = h^{2-i}(-H - D). The effective cone is spanned
by the 27 lines: if D.L < 0 for a line L then L is a fixed component of |D|,
and once D is nef all higher cohomology vanishes. Together these give h^0
for every class by stripping lines.
"""
from __future__ import annotations

from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ._cache import cached
from .catalog import lines
from .lattice import H, DivisorClass, degree, dot, gram_matrix


class CohomologyTriple(NamedTuple):
    h0: int
    h1: int
    h2: int


class FixedMoving(NamedTuple):
    moving: DivisorClass
    fixed_lines: Tuple[DivisorClass, ...]


class Positivity(NamedTuple):
    effective: bool
    nef: bool
    ample: bool


def euler_char(d) -> int:
    return (dot(d, d) + degree(d)) // 2 + 1


def genus(d) -> int:
    """Arithmetic genus of a curve in the class d (adjunction)."""
    return (dot(d, d) - degree(d)) // 2 + 1


@cached
def _sorted_lines(reverse: bool) -> Tuple[DivisorClass, ...]:
    return tuple(sorted(lines(), reverse=reverse))


def is_nef(d) -> bool:
    return all(dot(d, ln) >= 0 for ln in lines())


def fixed_moving(d, order: str = "lex") -> Optional[FixedMoving]:
    """Split an effective class into its moving part and fixed lines.

    Returns None when d is not effective. When several lines meet the
    current class negatively the smallest in ``order`` ("lex" or "revlex")
    is removed first.
    """
    current = DivisorClass(d)
    ordered = _sorted_lines(order == "revlex")
    fixed: List[DivisorClass] = []
    while True:
        deg = degree(current)
        if deg < 0:
            return None
        bad = next((ln for ln in ordered if dot(current, ln) < 0), None)
        if bad is None:
            break
        if degree(bad) <= 0:
            raise AssertionError("line of non-positive degree")
        current = current - bad
        fixed.append(bad)
    if degree(current) == 0 and not current.is_zero():
        return None
    return FixedMoving(current, tuple(fixed))


def h0(d) -> int:
    fm = fixed_moving(d)
    return 0 if fm is None else euler_char(fm.moving)


def h_vector(d) -> CohomologyTriple:
    d = DivisorClass(d)
    a = h0(d)
    c = h0(-H - d)
    b = a + c - euler_char(d)
    if b < 0:
        raise AssertionError(f"negative h1 for {tuple(d)}")
    return CohomologyTriple(a, b, c)


def h1(d) -> int:
    return h_vector(d).h1


def positivity(d) -> Positivity:
    ds = [dot(d, ln) for ln in lines()]
    return Positivity(
        effective=h0(d) > 0,
        nef=min(ds) >= 0,
        ample=dot(d, d) > 0 and min(ds) > 0,
    )


# -- vectorised versions for sweeps ------------------------------------------

def _line_arrays() -> Tuple[np.ndarray, np.ndarray]:
    ls = np.array(_sorted_lines(False), dtype=np.int64)
    return ls, (ls @ gram_matrix()).T.astype(np.float64)


def _chi_array(arr: np.ndarray) -> np.ndarray:
    g = gram_matrix()
    sq = np.einsum("ni,ij,nj->n", arr, g, arr)
    deg = arr @ (g @ np.array(H, dtype=np.int64))
    return (sq + deg) // 2 + 1


def h0_array(classes) -> np.ndarray:
    """h^0 of every row of an (n, 7) integer array."""
    arr = np.array(classes, dtype=np.int64).reshape(-1, 7)
    ls, pairing = _line_arrays()
    hvec = gram_matrix() @ np.array(H, dtype=np.int64)
    out = np.zeros(len(arr), dtype=np.int64)
    active = np.arange(len(arr))
    cur = arr.copy()
    for _ in range(10_000):
        if not len(active):
            break
        rows = cur[active]
        deg = rows @ hvec
        alive = deg >= 0
        active, rows = active[alive], rows[alive]
        # float matmul is exact at these magnitudes and much faster
        meet = rows.astype(np.float64) @ pairing
        neg = meet < 0
        stuck = ~neg.any(axis=1)
        done = active[stuck]
        nonzero = rows[stuck].any(axis=1) & ((rows[stuck] @ hvec) == 0)
        vals = _chi_array(rows[stuck])
        vals[nonzero] = 0
        out[done] = vals
        keep = ~stuck
        first = np.argmax(neg[keep], axis=1)
        active = active[keep]
        cur[active] = rows[keep] - ls[first]
    else:
        raise AssertionError("line stripping did not terminate")
    return out


def h_vectors_array(classes) -> np.ndarray:
    """(n, 3) array of (h0, h1, h2) for every row."""
    arr = np.array(classes, dtype=np.int64).reshape(-1, 7)
    a = h0_array(arr)
    c = h0_array(-np.array(H, dtype=np.int64) - arr)
    b = a + c - _chi_array(arr)
    return np.stack([a, b, c], axis=1)


def box(a0_bound: int, m_bound: int) -> np.ndarray:
    """All classes with |a0| <= a0_bound and |a_i| <= m_bound."""
    r0 = np.arange(-a0_bound, a0_bound + 1)
    r = np.arange(-m_bound, m_bound + 1)
    grids = np.meshgrid(r0, r, r, r, r, r, r, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def degree_array(arr: np.ndarray) -> np.ndarray:
    return np.asarray(arr, dtype=np.int64) @ (gram_matrix() @ np.array(H, dtype=np.int64))


def nef_mask(arr: np.ndarray) -> np.ndarray:
    _, pairing = _line_arrays()
    return (np.asarray(arr, dtype=np.float64) @ pairing >= 0).all(axis=1)


def sweep(classes: Sequence[Sequence[int]]) -> List[CohomologyTriple]:
    return [CohomologyTriple(*map(int, row)) for row in h_vectors_array(classes)]
