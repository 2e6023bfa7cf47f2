"""Subsets of a finite carrier encoded as Python ints (bit ``i`` set iff ``i`` is a member)."""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

MAX_WIDTH = 64  # numpy tables store sets as uint64


def mask(elements: Iterable[int]) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def full(n: int) -> int:
    return (1 << n) - 1


def members(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def iter_members(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def size(m: int) -> int:
    return m.bit_count()


def subset(a: int, b: int) -> bool:
    return a & ~b == 0


def contains(m: int, e: int) -> bool:
    return (m >> e) & 1 == 1


def lowest(m: int) -> int:
    return (m & -m).bit_length() - 1


def sort_key(m: int) -> tuple[int, list[int]]:
    """Canonical order for families of subsets: by size, then by sorted members."""
    return (m.bit_count(), members(m))


def to_bool(m: int, n: int) -> np.ndarray:
    return np.array([(m >> i) & 1 for i in range(n)], dtype=bool)


def from_bool(v: np.ndarray) -> int:
    return mask(int(i) for i in np.flatnonzero(v))


def fmt(m: int) -> str:
    return "{" + ",".join(str(i) for i in members(m)) + "}"
