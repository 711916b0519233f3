"""Memoization shared by the enumeration modules.

Every cached function registers itself so the whole set can be dropped at
once, e.g. after the intersection form has been swapped in a test.
"""
from __future__ import annotations

import functools
from typing import Callable, List, TypeVar

F = TypeVar("F", bound=Callable)

_REGISTRY: List[Callable] = []


def cached(fn: F) -> F:
    wrapped = functools.lru_cache(maxsize=None)(fn)
    _REGISTRY.append(wrapped)
    return wrapped  # type: ignore[return-value]


def clear_caches() -> None:
    for fn in _REGISTRY:
        fn.cache_clear()
