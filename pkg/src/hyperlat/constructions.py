"""Products, quotients and good homomorphisms, with ideal transport along them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import bits
from .bits import MAX_WIDTH
from .core import FiniteHyperring, StructureError, hyperproduct, identity_of, validate_axioms
from .ideals import Hyperideal, IdealLike, as_mask, is_hyperideal


class ConstructionError(ValueError):
    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


def _validated(H: FiniteHyperring) -> FiniteHyperring:
    report = validate_axioms(H)
    H._memo["validation"] = report
    if not report.ok:
        bad = report.failures[0]
        raise ConstructionError(f"{H.name} fails {bad.name}", bad.witness)
    return H


# ---------------------------------------------------------------- products

def pair_index(H2: FiniteHyperring, i: int, j: int) -> int:
    return i * H2.n + j


def product(H1: FiniteHyperring, H2: FiniteHyperring) -> FiniteHyperring:
    """Direct product with ``(i, j)`` encoded as ``i * n2 + j``."""
    n1, n2 = H1.n, H2.n
    n = n1 * n2
    if n > MAX_WIDTH:
        raise StructureError(f"product carrier {n} exceeds engine bound {MAX_WIDTH}")
    pairs = [(i, j) for i in range(n1) for j in range(n2)]
    add = tuple(
        tuple(H1.add[a][c] * n2 + H2.add[b][d] for (c, d) in pairs) for (a, b) in pairs
    )
    mul = []
    for (a, b) in pairs:
        row = []
        for (c, d) in pairs:
            right = bits.members(H2.mul[b][d])
            m = 0
            for x in bits.iter_members(H1.mul[a][c]):
                base = x * n2
                for y in right:
                    m |= 1 << (base + y)
            row.append(m)
        mul.append(tuple(row))
    e1, e2 = identity_of(H1), identity_of(H2)
    one = e1 * n2 + e2 if e1 is not None and e2 is not None else None
    P = FiniteHyperring(n=n, add=add, zero=H1.zero * n2 + H2.zero, mul=tuple(mul), one=one,
                        name=f"({H1.name} x {H2.name})")
    return _validated(P)


def ideal_pair(H1: FiniteHyperring, H2: FiniteHyperring, I1: IdealLike, I2: IdealLike) -> int:
    """Bitmask of ``I1 x I2`` inside ``product(H1, H2)``."""
    right = bits.members(as_mask(I2))
    return bits.mask(i * H2.n + j for i in bits.iter_members(as_mask(I1)) for j in right)


# ---------------------------------------------------------------- homomorphisms

@dataclass(frozen=True, eq=False)
class GoodHom:
    source: FiniteHyperring
    target: FiniteHyperring
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source.n or any(not 0 <= v < self.target.n for v in self.map):
            raise StructureError("map must send each source element to a target element")

    def image_set(self, S: int) -> int:
        return bits.mask(self.map[x] for x in bits.iter_members(S))

    def preimage_set(self, S: int) -> int:
        return bits.mask(x for x in range(self.source.n) if bits.contains(S, self.map[x]))

    @property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.n


def hom_violation(phi: GoodHom) -> tuple | None:
    """First ``(x, y)`` where addition or the hyperproduct is not preserved."""
    S, T, f = phi.source, phi.target, phi.map
    for x in range(S.n):
        for y in range(S.n):
            if f[S.add[x][y]] != T.add[f[x]][f[y]]:
                return (x, y)
            if phi.image_set(S.mul[x][y]) != T.mul[f[x]][f[y]]:
                return (x, y)
    return None


def validate_hom(phi: GoodHom) -> bool:
    return hom_violation(phi) is None


def identity_hom(H: FiniteHyperring) -> GoodHom:
    return GoodHom(H, H, tuple(range(H.n)))


def product_projections(H1: FiniteHyperring, H2: FiniteHyperring,
                        P: FiniteHyperring) -> tuple[GoodHom, GoodHom]:
    n2 = H2.n
    return (GoodHom(P, H1, tuple(k // n2 for k in range(P.n))),
            GoodHom(P, H2, tuple(k % n2 for k in range(P.n))))


def kernel(phi: GoodHom) -> Hyperideal:
    return Hyperideal(phi.source, phi.preimage_set(1 << phi.target.zero))


def preimage_ideal(phi: GoodHom, I2: IdealLike) -> Hyperideal:
    return Hyperideal(phi.source, phi.preimage_set(as_mask(I2)))


def image_ideal(phi: GoodHom, I1: IdealLike) -> Hyperideal:
    if not phi.surjective:
        raise ValueError("image_ideal requires a surjective homomorphism")
    return Hyperideal(phi.target, phi.image_set(as_mask(I1)))


# ---------------------------------------------------------------- quotients

@dataclass(frozen=True, eq=False)
class QuotientWitness:
    cosets: tuple[int, ...]
    projection: GoodHom


def quotient(H: FiniteHyperring, K: IdealLike) -> tuple[FiniteHyperring, QuotientWitness]:
    """``H / K`` on the additive cosets of ``K``, indexed by least representative.

    The induced hyperproduct is checked for independence of representatives
    and the result is re-validated.
    """
    K = as_mask(K)
    if not is_hyperideal(H, K):
        raise ConstructionError(f"{bits.fmt(K)} is not a hyperideal")
    label = [-1] * H.n
    cosets = []
    ks = bits.members(K)
    for x in range(H.n):
        if label[x] >= 0:
            continue
        c = bits.mask(H.add[x][k] for k in ks)
        for y in bits.iter_members(c):
            label[y] = len(cosets)
        cosets.append(c)
    m = len(cosets)
    reps = [bits.lowest(c) for c in cosets]

    def project(S: int) -> int:
        return bits.mask(label[z] for z in bits.iter_members(S))

    add = tuple(tuple(label[H.add[reps[i]][reps[j]]] for j in range(m)) for i in range(m))
    mul = []
    for i in range(m):
        row = []
        for j in range(m):
            row.append(project(hyperproduct(H, cosets[i], cosets[j])))
        mul.append(tuple(row))
    for x, y in itertools.product(range(H.n), repeat=2):
        if project(H.mul[x][y]) != mul[label[x]][label[y]]:
            raise ConstructionError("induced hyperproduct depends on coset representatives", (x, y))
    e = identity_of(H)
    Q = FiniteHyperring(n=m, add=add, zero=label[H.zero], mul=tuple(mul),
                        one=None if e is None else label[e],
                        name=f"{H.name}/{bits.fmt(K)}")
    _validated(Q)
    pi = GoodHom(H, Q, tuple(label))
    return Q, QuotientWitness(tuple(cosets), pi)


def quotient_ideal(w: QuotientWitness, I: IdealLike) -> Hyperideal:
    """``I / K`` as a hyperideal of the quotient."""
    return image_ideal(w.projection, I)


# ---------------------------------------------------------------- isomorphism (small carriers)

def find_isomorphism(H1: FiniteHyperring, H2: FiniteHyperring, max_n: int = 8) -> tuple[int, ...] | None:
    """Brute-force search for a bijection preserving both operations."""
    if H1.n != H2.n:
        return None
    if H1.n > max_n:
        raise ValueError(f"isomorphism search limited to carriers of size {max_n}")
    n = H1.n
    for perm in itertools.permutations(range(n)):
        if perm[H1.zero] != H2.zero:
            continue
        phi = GoodHom(H1, H2, perm)
        if validate_hom(phi):
            return perm
    return None

