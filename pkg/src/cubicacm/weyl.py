"""The Weyl group W(E6) acting on the Picard lattice.

Group elements are 7x7 integer matrices acting on coordinate columns. The
group is generated by the reflections in the simple roots
``l - b1 - b2 - b3`` and ``b_i - b_{i+1}``.
"""
from __future__ import annotations

import os
from collections import deque
from typing import Callable, Hashable, Iterable, Iterator, List, Optional, Set, TypeVar

import numpy as np

from ._cache import cached
from .lattice import ELL, H, RANK, DivisorClass, b, dot, gram_matrix

ORDER = 51840
CACHE_FORMAT = "weyl-e6-v1"

SIMPLE_ROOTS = (
    ELL - b(1) - b(2) - b(3),
    b(1) - b(2),
    b(2) - b(3),
    b(3) - b(4),
    b(4) - b(5),
    b(5) - b(6),
)


class DomainError(ValueError):
    pass


def is_root(alpha) -> bool:
    return dot(alpha, alpha) == -2 and dot(alpha, H) == 0


def reflect(alpha, d) -> DivisorClass:
    """Reflection of d in the hyperplane orthogonal to the root alpha."""
    if not is_root(alpha):
        raise DomainError(f"{tuple(alpha)} is not a root")
    k = dot(d, alpha)
    return DivisorClass(x + k * a for x, a in zip(d, alpha))


def reflection_matrix(alpha) -> np.ndarray:
    if not is_root(alpha):
        raise DomainError(f"{tuple(alpha)} is not a root")
    a = np.array(alpha, dtype=np.int64)
    return np.eye(RANK, dtype=np.int64) + np.outer(a, gram_matrix() @ a)


class WeylElement:
    """A lattice isometry fixing H, stored as an integer matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix) -> None:
        m = np.array(matrix, dtype=np.int64).reshape(RANK, RANK)
        m.setflags(write=False)
        self.matrix = m

    def __call__(self, d) -> DivisorClass:
        return DivisorClass(self.matrix @ np.asarray(d, dtype=np.int64))

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.matrix @ other.matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())

    def __repr__(self) -> str:
        return f"WeylElement({self.matrix.tolist()})"


def generators() -> List[WeylElement]:
    return [WeylElement(reflection_matrix(a)) for a in SIMPLE_ROOTS]


class WeylGroup:
    """Finite set of group elements backed by an (n, 7, 7) array."""

    def __init__(self, matrices: np.ndarray) -> None:
        self.matrices = np.ascontiguousarray(matrices, dtype=np.int64)
        self.matrices.setflags(write=False)
        self._keys = {m.astype(np.int8).tobytes() for m in self.matrices}

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self) -> Iterator[WeylElement]:
        return (WeylElement(m) for m in self.matrices)

    def __contains__(self, g) -> bool:
        m = g.matrix if isinstance(g, WeylElement) else np.asarray(g)
        return np.asarray(m, dtype=np.int8).tobytes() in self._keys

    def act(self, d) -> np.ndarray:
        """Images of d under every element, as an (n, 7) array."""
        return self.matrices @ np.asarray(d, dtype=np.int64)


def _closure(gens: np.ndarray, limit: int) -> np.ndarray:
    ident = np.eye(RANK, dtype=np.int64)
    seen = {ident.astype(np.int8).tobytes()}
    found = [ident[None]]
    frontier = ident[None]
    while len(frontier):
        products = np.einsum("gij,fjk->gfik", gens, frontier).reshape(-1, RANK, RANK)
        if np.abs(products).max() > 127:
            raise DomainError("matrix entries outgrew a finite group")
        fresh = []
        for m in products:
            key = m.astype(np.int8).tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(m)
        if len(seen) > limit:
            raise DomainError(f"closure exceeded {limit} elements")
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, RANK, RANK)
        found.append(frontier)
    return np.concatenate(found)


def _cache_path(cache_dir: str) -> str:
    return os.path.join(cache_dir, CACHE_FORMAT + ".npy")


def _load_cached(cache_dir: Optional[str]) -> Optional[np.ndarray]:
    if not cache_dir:
        return None
    try:
        arr = np.load(_cache_path(cache_dir), allow_pickle=False)
    except (OSError, ValueError):
        return None
    if arr.shape != (ORDER, RANK, RANK):
        return None
    return arr.astype(np.int64)


def _store_cached(cache_dir: Optional[str], arr: np.ndarray) -> None:
    if not cache_dir:
        return
    try:
        os.makedirs(cache_dir, exist_ok=True)
        tmp = _cache_path(cache_dir) + f".{os.getpid()}.tmp.npy"
        np.save(tmp, arr.astype(np.int8), allow_pickle=False)
        os.replace(tmp, _cache_path(cache_dir))
    except OSError:
        pass


@cached
def _group(cache_dir: Optional[str]) -> WeylGroup:
    arr = _load_cached(cache_dir)
    if arr is None:
        gens = np.array([g.matrix for g in generators()])
        arr = _closure(gens, limit=2 * ORDER)
        _store_cached(cache_dir, arr)
    return WeylGroup(arr)


# used when generate_group is called without an explicit directory
DEFAULT_CACHE_DIR: Optional[str] = None


def generate_group(cache_dir: Optional[str] = None) -> WeylGroup:
    """Closure of the six simple reflections under composition."""
    return _group(cache_dir if cache_dir is not None else DEFAULT_CACHE_DIR)


T = TypeVar("T", bound=Hashable)


def bfs_orbit(start: T, moves: Iterable[Callable[[T], T]]) -> Set[T]:
    moves = list(moves)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for mv in moves:
            y = mv(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbit(d) -> Set[DivisorClass]:
    """W-orbit of a class by breadth-first search over the generators."""
    moves = [lambda x, a=a: reflect(a, x) for a in SIMPLE_ROOTS]
    return bfs_orbit(DivisorClass(d), moves)


def set_orbit(members) -> Set[frozenset]:
    """W-orbit of a finite set of classes, e.g. a sixer."""
    moves = [lambda s, a=a: frozenset(reflect(a, x) for x in s) for a in SIMPLE_ROOTS]
    return bfs_orbit(frozenset(DivisorClass(x) for x in members), moves)


def sixer_root(members) -> DivisorClass:
    """The root attached to a sixer: (sum of members - 2H) / 3."""
    from .catalog import is_sixer

    if not is_sixer(members):
        raise DomainError("not a sixer")
    total = sum((DivisorClass(v) for v in members), DivisorClass()) - 2 * H
    if any(x % 3 for x in total):
        raise AssertionError(f"non-integral sixer root {tuple(total)}/3")
    w = DivisorClass(x // 3 for x in total)
    if not is_root(w):
        raise AssertionError(f"sixer root {tuple(w)} is not a root")
    return w
