"""Finite multiplicative hyperrings: tables, axiom validation and element/set arithmetic.

A hyperring on the carrier ``{0, ..., n-1}`` is stored as an abelian-group
addition table and a hyperproduct table whose entries are subsets encoded as
bitmasks (see :mod:`hyperlat.bits`).  Hyperrings are immutable; derived tables
and memoized results live in a private cache attached to the instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import bits
from .bits import MAX_WIDTH


class StructureError(ValueError):
    """Tables are dimensionally inconsistent or reference elements outside the carrier."""


class AxiomError(ValueError):
    """A hyperring failed axiom validation where a valid one is required."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        names = ", ".join(r.name for r in report.failures)
        super().__init__(f"hyperring {report.name!r} violates: {names}")


@dataclass(frozen=True, eq=False)
class FiniteHyperring:
    n: int
    add: tuple[tuple[int, ...], ...]
    zero: int
    mul: tuple[tuple[int, ...], ...]
    one: int | None = None
    name: str = ""
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_WIDTH:
            raise StructureError(f"carrier size must be in [1, {MAX_WIDTH}], got {n}")
        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise StructureError("addition table must be n x n")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise StructureError("hyperproduct table must be n x n")
        if any(not 0 <= v < n for row in self.add for v in row):
            raise StructureError("addition table references elements outside the carrier")
        top = bits.full(n)
        if any(m < 0 or m & ~top for row in self.mul for m in row):
            raise StructureError("hyperproduct table references elements outside the carrier")
        if not 0 <= self.zero < n:
            raise StructureError("zero outside the carrier")
        if self.one is not None and not 0 <= self.one < n:
            raise StructureError("identity outside the carrier")

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FiniteHyperring({self.name or '<table>'}, n={self.n})"

    @property
    def full(self) -> int:
        return bits.full(self.n)

    def prod(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def sum(self, x: int, y: int) -> int:
        return self.add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    @cached_property
    def neg(self) -> tuple[int, ...]:
        out = []
        for x in range(self.n):
            inv = [y for y in range(self.n) if self.add[x][y] == self.zero]
            out.append(inv[0] if inv else self.zero)
        return tuple(out)

    @cached_property
    def add_array(self) -> np.ndarray:
        return np.array(self.add, dtype=np.int64).reshape(self.n, self.n)

    @cached_property
    def mul_array(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.uint64).reshape(self.n, self.n)

    @cached_property
    def mul_bits(self) -> np.ndarray:
        """Boolean cube ``[x, y, z]``: ``z`` belongs to ``x o y``."""
        shifts = np.arange(self.n, dtype=np.uint64)
        return ((self.mul_array[:, :, None] >> shifts) & np.uint64(1)).astype(bool)

    @cached_property
    def triple(self) -> np.ndarray:
        """``[x, y, z]`` -> bitmask of ``(x o y) o z``."""
        n = self.n
        out = np.zeros((n, n, n), dtype=np.uint64)
        mb = self.mul_bits
        M = self.mul_array
        for u in range(n):
            out |= np.where(mb[:, :, u, None], M[u][None, None, :], np.uint64(0))
        return out

    @cached_property
    def translations(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """``[x][k][v]``: mask of ``x + y`` over ``y`` in nibble ``k`` of a set whose nibble value is ``v``."""
        out = []
        for x in range(self.n):
            row = self.add[x]
            per_x = []
            for k in range(0, self.n, 4):
                t = [0] * 16
                for v in range(1, 16):
                    low = (v & -v).bit_length() - 1
                    y = k + low
                    t[v] = t[v & (v - 1)] | (1 << row[y] if y < self.n else 0)
                per_x.append(tuple(t))
            out.append(tuple(per_x))
        return tuple(out)

    @cached_property
    def absorb_union(self) -> tuple[int, ...]:
        """``x`` -> ``R o x``, the union of ``r o x`` over all ``r``."""
        out = []
        for x in range(self.n):
            m = 0
            for r in range(self.n):
                m |= self.mul[r][x]
            out.append(m)
        return tuple(out)


def from_tables(
    add: Sequence[Sequence[int]],
    zero: int,
    mul: Sequence[Sequence[Iterable[int]]],
    one: int | None = None,
    name: str = "",
) -> FiniteHyperring:
    """Build a hyperring from an addition table and a table of element lists."""
    n = len(add)
    mul_masks = []
    for row in mul:
        mask_row = []
        for entry in row:
            entry = list(entry)
            if any(not isinstance(e, int) or not 0 <= e < n for e in entry):
                raise StructureError("hyperproduct entry references elements outside the carrier")
            mask_row.append(bits.mask(entry))
        mul_masks.append(tuple(mask_row))
    return FiniteHyperring(
        n=n,
        add=tuple(tuple(int(v) for v in row) for row in add),
        zero=zero,
        mul=tuple(mul_masks),
        one=one,
        name=name,
    )


@dataclass(frozen=True)
class ZnScaledSpec:
    n: int
    A: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus must be at least 2")
        if not self.A:
            raise ValueError("scaling set A must be nonempty")
        if any(not 0 <= a < self.n for a in self.A):
            raise ValueError(f"scaling set members must lie in [0, {self.n})")

    def build(self) -> FiniteHyperring:
        return zn_scaled(self.n, self.A)


def zn_scaled(n: int, A: Iterable[int]) -> FiniteHyperring:
    """Z_n with ``x o y = {x*a*y mod n : a in A}``.

    The identity is designated as 1 when every ``x`` lies in ``x o 1``.
    """
    spec = ZnScaledSpec(n, tuple(sorted(set(A))))
    add = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    mul = tuple(
        tuple(bits.mask((x * a * y) % n for a in spec.A) for y in range(n)) for x in range(n)
    )
    one = 1 if all((mul[x][1] >> x) & 1 for x in range(n)) else None
    name = f"zn{n}[{','.join(map(str, spec.A))}]"
    return FiniteHyperring(n=n, add=add, zero=0, mul=mul, one=one, name=name)


def zn_coset(n: int, A: Iterable[int], d: int) -> FiniteHyperring:
    """Z_n with ``x o y = {x*a*y + k : a in A, k in dZ_n}``; ``d`` must divide ``n``.

    Unlike :func:`zn_scaled`, products with zero are the whole ideal ``dZ_n``
    rather than ``{0}`` when ``d < n``.
    """
    if n % d:
        raise ValueError("d must divide n")
    A = tuple(sorted(set(a % n for a in A)))
    if not A:
        raise ValueError("scaling set A must be nonempty")
    K = [k for k in range(0, n, d)]
    add = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    mul = tuple(
        tuple(bits.mask((x * a * y + k) % n for a in A for k in K) for y in range(n))
        for x in range(n)
    )
    H = FiniteHyperring(n=n, add=add, zero=0, mul=mul,
                        name=f"zc{n}[{','.join(map(str, A))}]+{d}Z")
    e = find_identity(H)
    return H if e is None else _with_one(H, e)


def _with_one(H: FiniteHyperring, one: int | None) -> FiniteHyperring:
    return FiniteHyperring(n=H.n, add=H.add, zero=H.zero, mul=H.mul, one=one, name=H.name)


def with_identity(H: FiniteHyperring, one: int | None) -> FiniteHyperring:
    """Copy of ``H`` with a different designated identity."""
    return _with_one(H, one)


# ---------------------------------------------------------------- set arithmetic

def hyperproduct(H: FiniteHyperring, A: int, B: int) -> int:
    """``A o B``, the union of ``x o y`` over ``x in A, y in B``."""
    if not A or not B:
        raise ValueError("hyperproduct operands must be nonempty")
    out = 0
    for x in bits.iter_members(A):
        row = H.mul[x]
        for y in bits.iter_members(B):
            out |= row[y]
    return out


def set_times(H: FiniteHyperring, A: int, r: int) -> int:
    """``A o r``."""
    out = 0
    for x in bits.iter_members(A):
        out |= H.mul[x][r]
    return out


def set_sum(H: FiniteHyperring, X: int, Y: int) -> int:
    """Setwise sum ``{x + y : x in X, y in Y}``."""
    if bits.size(X) > bits.size(Y):
        X, Y = Y, X
    nibbles = [(Y >> k) & 15 for k in range(0, H.n, 4)]
    out = 0
    T = H.translations
    for x in bits.iter_members(X):
        tx = T[x]
        for k, v in enumerate(nibbles):
            if v:
                out |= tx[k][v]
    return out


def set_neg(H: FiniteHyperring, X: int) -> int:
    return bits.mask(H.neg[x] for x in bits.iter_members(X))


def power(H: FiniteHyperring, x: int, k: int) -> int:
    """``x^k``, the ``k``-fold hyperproduct of ``{x}``."""
    if k < 1:
        raise ValueError("exponent must be positive")
    cur = 1 << x
    for _ in range(k - 1):
        cur = set_times(H, cur, x)
    return cur


def is_commutative(H: FiniteHyperring) -> bool:
    M = H.mul_array
    return bool((M == M.T).all())


# ---------------------------------------------------------------- distinguished elements

def identities(H: FiniteHyperring) -> list[int]:
    """Every ``e`` with ``a in a o e`` for all ``a``."""
    mb = H.mul_bits
    diag = mb[np.arange(H.n), :, np.arange(H.n)]  # [a, e]: a in a o e
    return [int(e) for e in np.flatnonzero(diag.all(axis=0))]


def find_identity(H: FiniteHyperring) -> int | None:
    ids = identities(H)
    return ids[0] if ids else None


def identity_of(H: FiniteHyperring) -> int | None:
    """The designated identity, falling back to the least identity witness."""
    if H.one is not None:
        return H.one
    return find_identity(H)


def has_nonzero_identity(H: FiniteHyperring) -> bool:
    e = identity_of(H)
    return e is not None and e != H.zero


def units(H: FiniteHyperring) -> int:
    e = identity_of(H)
    if e is None:
        raise ValueError(f"{H.name or 'hyperring'} has no identity")
    return bits.mask(x for x in range(H.n)
                     if any((H.mul[x][y] >> e) & 1 for y in range(H.n)))


def zero_divisors(H: FiniteHyperring) -> int:
    z = 1 << H.zero
    return bits.mask(x for x in range(H.n)
                     if any(y != H.zero and H.mul[x][y] == z for y in range(H.n)))


def ann(H: FiniteHyperring, x: int) -> int:
    z = 1 << H.zero
    return bits.mask(y for y in range(H.n) if H.mul[x][y] == z)


# ---------------------------------------------------------------- axioms

@dataclass(frozen=True)
class AxiomResult:
    name: str
    ok: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    name: str
    results: tuple[AxiomResult, ...]
    identities: tuple[int, ...]
    commutative: bool

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.ok]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "commutative": self.commutative,
            "identities": list(self.identities),
            "axioms": [
                {"name": r.name, "ok": r.ok,
                 "witness": list(r.witness) if r.witness is not None else None,
                 "detail": r.detail}
                for r in self.results
            ],
        }


def _first(violations: np.ndarray) -> tuple[int, ...] | None:
    idx = np.argwhere(violations)
    if len(idx) == 0:
        return None
    return tuple(int(i) for i in idx[0])


def _result(name: str, violations: np.ndarray, detail: str) -> AxiomResult:
    w = _first(violations)
    return AxiomResult(name, w is None, w, "" if w is None else detail)


def sum_cube(H: FiniteHyperring, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Setwise sums of boolean set rows: ``out[i, j] = X[i] + Y[j]``."""
    n = H.n
    onehot = np.zeros((n, n, n), dtype=np.float32)
    A = H.add_array
    u, w = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    onehot[u, w, A] = 1.0
    tmp = (X.astype(np.float32) @ onehot.reshape(n, n * n)).reshape(X.shape[0], n, n)
    out = np.tensordot(tmp, Y.astype(np.float32), axes=([1], [1]))  # [i, z, j]
    return out.transpose(0, 2, 1) > 0


def validate_axioms(H: FiniteHyperring) -> ValidationReport:
    """Exhaustively check the multiplicative-hyperring axioms.

    Each failed axiom carries the lexicographically first violating tuple.
    """
    n = H.n
    A = H.add_array
    idx = np.arange(n)
    z = H.zero
    res: list[AxiomResult] = []

    left = A[A[:, :, None], idx[None, None, :]]
    right = A[idx[:, None, None], A[None, :, :]]
    res.append(_result("add_associative", left != right, "(a+b)+c != a+(b+c)"))
    res.append(_result("add_commutative", A != A.T, "a+b != b+a"))
    res.append(_result("add_identity", (A[z, :] != idx) | (A[:, z] != idx), "0+a != a"))
    res.append(_result("add_inverses", ~(A == z).any(axis=1), "a has no negative"))

    M = H.mul_array
    res.append(_result("mul_nonempty", M == 0, "a o b is empty"))

    # checks below index through these tables; stop if the group or hyperproduct is broken
    if not all(r.ok for r in res):
        return ValidationReport(H.name, tuple(res), (), False)

    mb = H.mul_bits
    T = H.triple
    R3 = np.zeros((n, n, n), dtype=np.uint64)
    for v in range(n):
        R3 |= np.where(mb[None, :, :, v], M[:, v][:, None, None], np.uint64(0))
    res.append(_result("mul_associative", T != R3, "(a o b) o c != a o (b o c)"))

    ldist = None
    rdist = None
    for a in range(n):
        if ldist is None:
            S = sum_cube(H, mb[a], mb[a])
            lhs = mb[a][A]  # [b, c, z]: z in a o (b+c)
            bad = lhs & ~S
            if bad.any():
                b, c, _ = _first(bad)
                ldist = (a, b, c)
        if rdist is None:
            col = mb[:, a, :]
            S = sum_cube(H, col, col)
            lhs = col[A]
            bad = lhs & ~S
            if bad.any():
                b, c, _ = _first(bad)
                rdist = (a, b, c)
    res.append(AxiomResult("left_distributive", ldist is None, ldist,
                           "" if ldist is None else "a o (b+c) not within a o b + a o c"))
    res.append(AxiomResult("right_distributive", rdist is None, rdist,
                           "" if rdist is None else "(b+c) o a not within b o a + c o a"))

    neg = np.array(H.neg)
    negprod = mb[:, :, neg]  # [a, b, z]: -z in a o b, i.e. z in -(a o b)
    sign = (mb[:, neg, :] != negprod).any(axis=2) | (mb[neg, :, :] != negprod).any(axis=2)
    res.append(_result("sign_rule", sign, "a o (-b), (-a) o b, -(a o b) differ"))

    ids = tuple(identities(H))
    if H.one is not None:
        res.append(_result("identity", ~mb[idx, H.one, idx], "a not in a o 1"))
    return ValidationReport(H.name, tuple(res), ids, is_commutative(H))


def require_valid(H: FiniteHyperring) -> FiniteHyperring:
    """Return ``H`` if it passes validation (memoized), else raise :class:`AxiomError`."""
    report = H._memo.get("validation")
    if report is None:
        report = H._memo["validation"] = validate_axioms(H)
    if not report.ok:
        raise AxiomError(report)
    return H
