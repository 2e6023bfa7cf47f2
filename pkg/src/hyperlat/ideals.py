"""Hyperideals: recognition, generation, enumeration, radicals and colon ideals.

All results are memoized on the hyperring, so repeated queries over the same
instance (as the theorem harness does) are cheap.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

import numpy as np

from . import bits
from .core import FiniteHyperring, hyperproduct, set_sum, set_times


class NotAHyperidealError(ValueError):
    pass


class NoProperIdealError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Hyperideal:
    ring: FiniteHyperring
    members: int

    def __post_init__(self):
        if not is_hyperideal(self.ring, self.members):
            raise NotAHyperidealError(f"{bits.fmt(self.members)} is not a hyperideal of {self.ring.name}")

    @property
    def proper(self) -> bool:
        return self.members != self.ring.full

    def elements(self) -> list[int]:
        return bits.members(self.members)

    def __contains__(self, x: int) -> bool:
        return bits.contains(self.members, x)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __len__(self) -> int:
        return bits.size(self.members)

    def __le__(self, other: "Hyperideal") -> bool:
        return bits.subset(self.members, other.members)

    def __lt__(self, other: "Hyperideal") -> bool:
        return self.members != other.members and self <= other

    def __eq__(self, other) -> bool:
        if isinstance(other, Hyperideal):
            return self.ring is other.ring and self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __repr__(self) -> str:
        return f"Hyperideal({bits.fmt(self.members)})"


IdealLike = Union[Hyperideal, int]


def as_mask(I: IdealLike) -> int:
    return I.members if isinstance(I, Hyperideal) else I


def _memo(H: FiniteHyperring, key, fn):
    cache = H._memo
    if key not in cache:
        cache[key] = fn()
    return cache[key]


def _ideal(H: FiniteHyperring, m: int) -> Hyperideal:
    return _memo(H, ("ideal", m), lambda: Hyperideal(H, m))


# ---------------------------------------------------------------- recognition

def is_subgroup(H: FiniteHyperring, S: int) -> bool:
    if not S:
        return False
    xs = bits.members(S)
    for a in xs:
        row = H.add[a]
        for b in xs:
            if not bits.contains(S, row[H.neg[b]]):
                return False
    return True


def absorbs(H: FiniteHyperring, S: int) -> bool:
    """``r o x`` lies in ``S`` for every ``r`` and every ``x in S``."""
    au = H.absorb_union
    return all(bits.subset(au[x], S) for x in bits.iter_members(S))


def is_hyperideal(H: FiniteHyperring, S: IdealLike) -> bool:
    S = as_mask(S)
    return is_subgroup(H, S) and absorbs(H, S)


# ---------------------------------------------------------------- generation

def subgroup_closure(H: FiniteHyperring, S: int) -> int:
    """Least additive subgroup containing ``S`` (``{0}`` for the empty set)."""
    cur = S | (1 << H.zero)
    while True:
        nxt = cur | set_sum(H, cur, cur) | bits.mask(H.neg[x] for x in bits.iter_members(cur))
        if nxt == cur:
            return cur
        cur = nxt


def _generated_mask(H: FiniteHyperring, S: int) -> int:
    au = H.absorb_union
    cur = S
    while True:
        nxt = cur
        for x in bits.iter_members(cur):
            nxt |= au[x]
        nxt = subgroup_closure(H, nxt)
        if nxt == cur:
            return cur
        cur = nxt


def generated_ideal(H: FiniteHyperring, S: int | Iterable[int]) -> Hyperideal:
    """Least hyperideal containing ``S``."""
    if not isinstance(S, int):
        S = bits.mask(S)
    if not S:
        raise ValueError("generating set must be nonempty")
    return _ideal(H, _memo(H, ("gen", S), lambda: _generated_mask(H, S)))


def principal(H: FiniteHyperring, x: int) -> Hyperideal:
    return generated_ideal(H, 1 << x)


def zero_ideal(H: FiniteHyperring) -> Hyperideal:
    """The least hyperideal, ``<0>``; equal to ``{0}`` whenever ``{0}`` absorbs."""
    return generated_ideal(H, 1 << H.zero)


# ---------------------------------------------------------------- enumeration

def additive_subgroups(H: FiniteHyperring) -> list[int]:
    def compute():
        cyclic = {subgroup_closure(H, 1 << g) for g in range(H.n)}
        seen = {1 << H.zero}
        frontier = [1 << H.zero]
        while frontier:
            new = []
            for S in frontier:
                for C in cyclic:
                    if bits.subset(C, S):
                        continue
                    J = subgroup_closure(H, S | C)
                    if J not in seen:
                        seen.add(J)
                        new.append(J)
            frontier = new
        return sorted(seen, key=bits.sort_key)
    return _memo(H, "subgroups", compute)


def ideal_masks(H: FiniteHyperring) -> list[int]:
    """Bitmasks of all hyperideals, sorted by (size, members)."""
    return _memo(H, "ideal_masks", lambda: [S for S in additive_subgroups(H) if absorbs(H, S)])


def enumerate_hyperideals(H: FiniteHyperring) -> list[Hyperideal]:
    return [_ideal(H, m) for m in ideal_masks(H)]


def proper_ideal_masks(H: FiniteHyperring) -> list[int]:
    return [m for m in ideal_masks(H) if m != H.full]


def maximal_masks(H: FiniteHyperring) -> list[int]:
    def compute():
        proper = proper_ideal_masks(H)
        if not proper:
            raise NoProperIdealError(f"{H.name or 'hyperring'} has no proper hyperideals")
        return [I for I in proper
                if not any(I != K and bits.subset(I, K) for K in proper)]
    return _memo(H, "maximal", compute)


def maximal_hyperideals(H: FiniteHyperring) -> list[Hyperideal]:
    return [_ideal(H, m) for m in maximal_masks(H)]


def is_local(H: FiniteHyperring) -> bool:
    return len(maximal_masks(H)) == 1


def _intersection(masks: Iterable[int], start: int) -> int:
    out = start
    for m in masks:
        out &= m
    return out


def jacobson(H: FiniteHyperring) -> Hyperideal:
    """Intersection of all maximal hyperideals."""
    return _ideal(H, _memo(H, "jacobson", lambda: _intersection(maximal_masks(H), H.full)))


def jacobson_of(H: FiniteHyperring, I: IdealLike) -> Hyperideal:
    """Intersection of the maximal hyperideals containing the proper hyperideal ``I``."""
    I = as_mask(I)
    if I == H.full:
        raise ValueError("J(I) is defined for proper hyperideals only")

    def compute():
        above = [M for M in maximal_masks(H) if bits.subset(I, M)]
        # finite ascent always reaches a maximal ideal
        assert above, "proper hyperideal with no maximal hyperideal above it"
        return _intersection(above, H.full)
    return _ideal(H, _memo(H, ("jacobson_of", I), compute))


# ---------------------------------------------------------------- primes and radicals

def _is_prime_mask(H: FiniteHyperring, P: int) -> bool:
    if P == H.full:
        return False
    outside = [x for x in range(H.n) if not bits.contains(P, x)]
    return not any(bits.subset(H.mul[x][y], P) for x in outside for y in outside)


def prime_masks(H: FiniteHyperring) -> list[int]:
    return _memo(H, "primes", lambda: [P for P in proper_ideal_masks(H) if _is_prime_mask(H, P)])


def prime_radical(H: FiniteHyperring, I: IdealLike) -> Hyperideal:
    """Intersection of the primes containing ``I``; the whole carrier when there are none."""
    I = as_mask(I)

    def compute():
        return _intersection((P for P in prime_masks(H) if bits.subset(I, P)), H.full)
    return _ideal(H, _memo(H, ("radical", I), compute))


def power_radical(H: FiniteHyperring, I: IdealLike) -> int:
    """``{r : r^k within I for some k >= 1}``, by walking ``r, r^2, ...`` until a power repeats."""
    I = as_mask(I)

    def reaches(r: int) -> bool:
        cur = 1 << r
        seen = set()
        while cur not in seen:
            if bits.subset(cur, I):
                return True
            seen.add(cur)
            cur = set_times(H, cur, r)
        return False

    return _memo(H, ("dradical", I), lambda: bits.mask(r for r in range(H.n) if reaches(r)))


# ---------------------------------------------------------------- colon ideals and products

def colon_mask(H: FiniteHyperring, I: int, x: int) -> int:
    return bits.mask(r for r in range(H.n) if bits.subset(H.mul[r][x], I))


def colon(H: FiniteHyperring, I: IdealLike, x: int) -> Hyperideal:
    """``(I : x) = {r : r o x within I}``."""
    I = as_mask(I)
    return _ideal(H, _memo(H, ("colon", I, x), lambda: colon_mask(H, I, x)))


def colon_set(H: FiniteHyperring, I: IdealLike, T: int | Iterable[int]) -> Hyperideal:
    """``(I : T) = {r : r o t within I for all t in T}``."""
    I = as_mask(I)
    if not isinstance(T, int):
        T = bits.mask(T)
    if not T:
        raise ValueError("T must be nonempty")
    out = H.full
    for t in bits.iter_members(T):
        out &= colon(H, I, t).members
    return _ideal(H, out)


def set_product(H: FiniteHyperring, I: IdealLike, J: IdealLike) -> int:
    """Raw union of ``a o b`` over ``a in I, b in J``."""
    return hyperproduct(H, as_mask(I), as_mask(J))


def ideal_product(H: FiniteHyperring, I: IdealLike, J: IdealLike) -> Hyperideal:
    """Hyperideal generated by ``I o J``."""
    return generated_ideal(H, set_product(H, I, J))


# ---------------------------------------------------------------- C-classes

def product_family(H: FiniteHyperring) -> frozenset[int]:
    """Every finite product ``r1 o r2 o ... o rk`` as a bitmask."""
    def compute():
        seen = {1 << r for r in range(H.n)}
        frontier = list(seen)
        while frontier:
            new = []
            for S in frontier:
                for r in range(H.n):
                    P = set_times(H, S, r)
                    if P not in seen:
                        seen.add(P)
                        new.append(P)
            frontier = new
        return frozenset(seen)
    return _memo(H, "product_family", compute)


def sum_family(H: FiniteHyperring) -> frozenset[int]:
    """Every finite sum of members of :func:`product_family`."""
    def compute():
        prods = sorted(product_family(H))
        # shifted[x, j] = x + prods[j]; then S + prods[j] is the OR of rows x in S
        shifted = np.array([[set_sum(H, 1 << x, P) for P in prods] for x in range(H.n)], dtype=np.uint64)
        seen = set(prods)
        frontier = list(prods)
        while frontier:
            new = []
            for S in frontier:
                sums = np.bitwise_or.reduce(shifted[bits.members(S)], axis=0)
                for E in set(sums.tolist()):
                    if E not in seen:
                        seen.add(E)
                        new.append(E)
            frontier = new
        return frozenset(seen)
    return _memo(H, "sum_family", compute)


def _closed_against(family: Iterable[int], I: int) -> bool:
    return all(not (A & I) or bits.subset(A, I) for A in family)


def is_c_hyperideal(H: FiniteHyperring, I: IdealLike) -> bool:
    I = as_mask(I)
    return _memo(H, ("is_c", I), lambda: _closed_against(product_family(H), I))


def is_strong_c_hyperideal(H: FiniteHyperring, I: IdealLike) -> bool:
    I = as_mask(I)
    return _memo(H, ("is_strong_c", I), lambda: _closed_against(sum_family(H), I))



def minimal_generators(H: FiniteHyperring, I: IdealLike, search: int = 3) -> list[int]:
    """A smallest generating subset of ``I`` (exhaustive up to ``search`` elements, greedy beyond)."""
    I = as_mask(I)
    elems = bits.members(I)
    for k in range(1, min(search, len(elems)) + 1):
        for combo in itertools.combinations(elems, k):
            if _generated_mask(H, bits.mask(combo)) == I:
                return list(combo)
    chosen, cur = [], 0
    for x in elems:
        if not bits.contains(cur, x):
            chosen.append(x)
            cur = _generated_mask(H, bits.mask(chosen))
    return chosen
