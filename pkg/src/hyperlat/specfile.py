"""JSON hyperring spec files.

Accepted shapes::

    {"kind": "zn_scaled", "n": 6, "A": [1, 2, 3, 4, 5]}
    {"kind": "table", "n": N, "add": [[...]], "zero": z, "one": e | null, "mul": [[[...]]]}
    {"kind": "product", "left": <spec>, "right": <spec>}
    {"kind": "quotient", "base": <spec>, "ideal": [indices]}

``mul[i][j]`` is a sorted array of element indices.  Product elements
``(i, j)`` are numbered ``i * n_right + j``.
"""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from . import bits
from .constructions import product, quotient
from .core import FiniteHyperring, StructureError, from_tables, zn_scaled

DEFAULT_MAX_N = 36


class SpecError(ValueError):
    """The spec document is malformed (as opposed to describing an invalid hyperring)."""


def max_carrier() -> int:
    raw = os.environ.get("HYPERLAT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"HYPERLAT_MAX_N must be an integer, got {raw!r}") from None


def _int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SpecError(f"{key!r} must be an integer")
    return v


def _index_list(v: Any, n: int, what: str) -> list[int]:
    if not isinstance(v, list) or any(not isinstance(e, int) or isinstance(e, bool) for e in v):
        raise SpecError(f"{what} must be a list of integers")
    if any(not 0 <= e < n for e in v):
        raise SpecError(f"{what} references elements outside [0, {n})")
    return v


def build(doc: Any, max_n: int | None = None) -> FiniteHyperring:
    """Construct the hyperring described by a parsed spec document."""
    cap = max_carrier() if max_n is None else max_n
    if not isinstance(doc, dict):
        raise SpecError("spec must be a JSON object")
    kind = doc.get("kind")
    if kind == "zn_scaled":
        n = _int(doc, "n")
        if not 2 <= n <= cap:
            raise SpecError(f"n must be in [2, {cap}]")
        A = _index_list(doc.get("A"), n, "A")
        if not A:
            raise SpecError("A must be nonempty")
        H = zn_scaled(n, A)
    elif kind == "table":
        H = _table(doc, cap)
    elif kind == "product":
        if "left" not in doc or "right" not in doc:
            raise SpecError("product spec needs 'left' and 'right'")
        left, right = build(doc["left"], cap), build(doc["right"], cap)
        if left.n * right.n > cap:
            raise SpecError(f"product carrier {left.n * right.n} exceeds cap {cap}")
        H = product(left, right)
    elif kind == "quotient":
        base = build(doc.get("base"), cap)
        ideal = _index_list(doc.get("ideal"), base.n, "ideal")
        if not ideal:
            raise SpecError("ideal must be nonempty")
        H, _ = quotient(base, bits.mask(ideal))
    else:
        raise SpecError(f"unknown spec kind {kind!r}")
    if H.n > cap:
        raise SpecError(f"carrier size {H.n} exceeds cap {cap}")
    return H


def _table(doc: dict, cap: int) -> FiniteHyperring:
    n = _int(doc, "n")
    if not 1 <= n <= cap:
        raise SpecError(f"n must be in [1, {cap}]")
    add, mul = doc.get("add"), doc.get("mul")
    if not isinstance(add, list) or len(add) != n or any(not isinstance(r, list) or len(r) != n for r in add):
        raise SpecError("'add' must be an n x n array")
    for r in add:
        _index_list(r, n, "add entries")
    if not isinstance(mul, list) or len(mul) != n or any(not isinstance(r, list) or len(r) != n for r in mul):
        raise SpecError("'mul' must be an n x n array of index arrays")
    for row in mul:
        for entry in row:
            _index_list(entry, n, "mul entries")
            if entry != sorted(set(entry)):
                raise SpecError("mul entries must be sorted arrays without repeats")
    zero = _int(doc, "zero")
    if not 0 <= zero < n:
        raise SpecError("zero outside the carrier")
    one = doc.get("one")
    if one is not None and (not isinstance(one, int) or not 0 <= one < n):
        raise SpecError("one must be null or an element index")
    try:
        return from_tables(add, zero, mul, one=one, name=str(doc.get("name", "table")))
    except StructureError as e:
        raise SpecError(str(e)) from e


def to_table(H: FiniteHyperring) -> dict:
    return {
        "kind": "table",
        "name": H.name,
        "n": H.n,
        "add": [list(r) for r in H.add],
        "zero": H.zero,
        "one": H.one,
        "mul": [[bits.members(m) for m in r] for r in H.mul],
    }


def load(path: str | Path, max_n: int | None = None) -> FiniteHyperring:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise SpecError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}: invalid JSON ({e})") from e
    return build(doc, max_n)
