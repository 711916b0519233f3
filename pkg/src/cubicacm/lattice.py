"""Picard lattice of a smooth cubic surface.

Classes are integer 7-vectors ``(a0, a1, ..., a6)`` standing for
``a0*l + a1*b1 + ... + a6*b6`` where ``l`` is the pullback of a plane line
and ``b1..b6`` are the exceptional curves of the blow-up.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Tuple

import numpy as np

RANK = 7

# Diagonal of the Gram matrix. Read at call time so tests can swap it.
GRAM_DIAG: Tuple[int, ...] = (1, -1, -1, -1, -1, -1, -1)


class DivisorClass(tuple):
    """An element of the Picard lattice, stored as a 7-tuple of ints."""

    __slots__ = ()

    def __new__(cls, coeffs: Iterable[int] = (0,) * RANK) -> "DivisorClass":
        values = tuple(int(c) for c in coeffs)
        if len(values) != RANK:
            raise ValueError(f"expected {RANK} coordinates, got {len(values)}")
        return super().__new__(cls, values)

    def __add__(self, other):  # type: ignore[override]
        return DivisorClass(x + y for x, y in zip(self, other))

    def __radd__(self, other):
        if other == 0:  # allows sum() over classes
            return self
        return DivisorClass(x + y for x, y in zip(other, self))

    def __sub__(self, other):
        return DivisorClass(x - y for x, y in zip(self, other))

    def __neg__(self):
        return DivisorClass(-x for x in self)

    def __mul__(self, k):  # type: ignore[override]
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return DivisorClass(int(k) * x for x in self)

    __rmul__ = __mul__

    def dot(self, other: Sequence[int]) -> int:
        return dot(self, other)

    @property
    def degree(self) -> int:
        return degree(self)

    @property
    def square(self) -> int:
        return dot(self, self)

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self) -> str:
        return f"DivisorClass({tuple(self)})"


def dot(d1: Sequence[int], d2: Sequence[int]) -> int:
    """Intersection number of two classes."""
    g = GRAM_DIAG
    return (g[0] * d1[0] * d2[0] + g[1] * d1[1] * d2[1] + g[2] * d1[2] * d2[2]
            + g[3] * d1[3] * d2[3] + g[4] * d1[4] * d2[4] + g[5] * d1[5] * d2[5]
            + g[6] * d1[6] * d2[6])


def gram_matrix() -> np.ndarray:
    return np.diag(np.array(GRAM_DIAG, dtype=np.int64))


def unit(i: int) -> DivisorClass:
    v = [0] * RANK
    v[i] = 1
    return DivisorClass(v)


ZERO = DivisorClass()
ELL = unit(0)


def b(i: int) -> DivisorClass:
    """Exceptional class b_i, 1 <= i <= 6."""
    if not 1 <= i <= 6:
        raise ValueError(f"exceptional index {i} outside 1..6")
    return unit(i)


H = DivisorClass((3, -1, -1, -1, -1, -1, -1))
K = -H


def degree(d: Sequence[int]) -> int:
    """Degree with respect to the hyperplane class, d . H."""
    return dot(d, H)


def combine(terms: Iterable[Tuple[int, Sequence[int]]]) -> DivisorClass:
    """Integer linear combination of classes."""
    acc = [0] * RANK
    for k, d in terms:
        for i in range(RANK):
            acc[i] += k * d[i]
    return DivisorClass(acc)


def as_array(classes: Iterable[Sequence[int]]) -> np.ndarray:
    """Stack classes into an (n, 7) int64 array."""
    arr = np.array([tuple(c) for c in classes], dtype=np.int64)
    return arr.reshape(-1, RANK)
