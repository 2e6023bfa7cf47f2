"""Per-instance query cache shared by all claims."""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .. import bits
from .. import classify as cl
from .. import ideals as idl
from ..core import FiniteHyperring, has_nonzero_identity, hyperproduct, zero_divisors
from .corpus import Instance


class Ctx:
    def __init__(self, inst: Instance):
        self.inst = inst
        self.H: FiniteHyperring = inst.ring
        self.n = self.H.n
        self.full = self.H.full

    # ring-level data
    @cached_property
    def ideals(self) -> list[int]:
        return idl.ideal_masks(self.H)

    @cached_property
    def proper(self) -> list[int]:
        return idl.proper_ideal_masks(self.H)

    @cached_property
    def maximal(self) -> list[int]:
        return idl.maximal_masks(self.H)

    @cached_property
    def J(self) -> int:
        return idl.jacobson(self.H).members

    @cached_property
    def has_identity(self) -> bool:
        return has_nonzero_identity(self.H)

    @cached_property
    def local(self) -> bool:
        return idl.is_local(self.H)

    @cached_property
    def zero_divisors(self) -> int:
        return zero_divisors(self.H)

    @cached_property
    def zero_absorbing(self) -> bool:
        z = 1 << self.H.zero
        return all(self.H.mul[x][self.H.zero] == z for x in range(self.n))

    @cached_property
    def primes(self) -> list[int]:
        return idl.prime_masks(self.H)

    def other(self, ring: FiniteHyperring) -> "Ctx":
        """Context for a related ring (hom target or source), cached by identity."""
        cache = self.__dict__.setdefault("_others", {})
        if id(ring) not in cache:
            cache[id(ring)] = Ctx(Instance(ring.name, ring, "related"))
        return cache[id(ring)]

    @cached_property
    def sqrt_zero(self) -> int:
        return self.rad(idl.zero_ideal(self.H).members)

    # ideal-level queries
    def cls(self, name: str, I: int) -> bool:
        if I == self.full:
            return False
        return cl.holds(name, self.H, I)

    def rad(self, I: int) -> int:
        return idl.prime_radical(self.H, I).members

    def drad(self, I: int) -> int:
        return idl.power_radical(self.H, I)

    def jof(self, I: int) -> int:
        return idl.jacobson_of(self.H, I).members

    def colon(self, I: int, x: int) -> int:
        return idl.colon(self.H, I, x).members

    def colon_set(self, I: int, T: int) -> int:
        return idl.colon_set(self.H, I, T).members

    def iprod(self, A: int, B: int) -> int:
        return idl.ideal_product(self.H, A, B).members

    def sprod(self, A: int, B: int) -> int:
        return hyperproduct(self.H, A, B)

    def elem_times(self, x: int, S: int) -> int:
        return hyperproduct(self.H, 1 << x, S)

    def principal(self, x: int) -> int:
        return idl.principal(self.H, x).members

    def is_c(self, I: int) -> bool:
        return idl.is_c_hyperideal(self.H, I)

    def is_strong_c(self, I: int) -> bool:
        return idl.is_strong_c_hyperideal(self.H, I)

    def outside(self, S: int) -> list[int]:
        return [x for x in range(self.n) if not bits.contains(S, x)]

    def colon_values(self, targets: tuple[int, ...], pool: list[int]) -> dict[tuple[int, ...], int]:
        """Distinct tuples ``((X1:T), (X2:T), ...)`` over nonempty ``T`` drawn from ``R`` that meet ``pool``.

        Every ``(X:T)`` is an intersection of ``(X:t)``; elements outside the
        pool only shrink the intersection, so the closure runs over all
        elements while requiring at least one pool element.
        """
        per = {t: tuple(self.colon(X, t) for X in targets) for t in range(self.n)}
        pool_set = set(pool)
        found: dict[tuple[tuple[int, ...], bool], int] = {}
        frontier = []
        for t in range(self.n):
            key = (per[t], t in pool_set)
            if key not in found:
                found[key] = 1 << t
                frontier.append(key)
        while frontier:
            new = []
            for vals, hit in frontier:
                T = found[(vals, hit)]
                for t in range(self.n):
                    v = tuple(a & b for a, b in zip(vals, per[t]))
                    key = (v, hit or t in pool_set)
                    if key not in found:
                        found[key] = T | (1 << t)
                        new.append(key)
            frontier = new
        return {vals: T for (vals, hit), T in found.items() if hit}

    # products of ideals for the strong-C equivalence
    @cached_property
    def elem_ideal_table(self) -> dict[int, np.ndarray]:
        """ideal ``K`` -> array over ``x`` of ``x o K``."""
        return {K: np.array([self.elem_times(x, K) for x in range(self.n)], dtype=np.uint64)
                for K in self.ideals}

    def set_times_ideal(self, S: int, K: int) -> int:
        row = self.elem_ideal_table[K]
        out = 0
        for s in bits.iter_members(S):
            out |= int(row[s])
        return out

    @cached_property
    def pair_elem_ideal(self) -> dict[int, np.ndarray]:
        """ideal ``K`` -> ``[a, b]`` mask of ``a o b o K``."""
        mb = self.H.mul_bits
        out = {}
        for K, row in self.elem_ideal_table.items():
            out[K] = np.bitwise_or.reduce(np.where(mb, row[None, None, :], np.uint64(0)), axis=2)
        return out
