"""Membership of proper hyperideals in the J-prime family and supporting classes.

Every predicate is decided by exhaustive scan over element pairs or triples.
A checker returns ``None`` when the ideal belongs to the class and otherwise
the lexicographically first counterwitness, so negative answers can always be
re-verified by hand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import bits
from .core import FiniteHyperring, identity_of, is_commutative, require_valid, ann
from .ideals import (
    IdealLike,
    NotAHyperidealError,
    as_mask,
    generated_ideal,
    ideal_masks,
    is_c_hyperideal,
    is_hyperideal,
    is_strong_c_hyperideal,
    jacobson,
    jacobson_of,
    prime_radical,
    product_family,
    sum_family,
    zero_ideal,
)

Witness = tuple  # of elements; () when no element-level witness exists

J_PRIMARY_NOTE = ("2_absorbing_j_primary reads 'x o z in J(I)' as containment "
                  "x o z within J(I), matching 2_absorbing_j_prime")


class PreconditionError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two class flags contradict an implication that must hold."""


def _check_ring(H: FiniteHyperring) -> None:
    require_valid(H)
    if "commutative" not in H._memo:
        H._memo["commutative"] = is_commutative(H)
    if not H._memo["commutative"]:
        raise PreconditionError("classifiers require a commutative hyperring")


def check_proper_ideal(H: FiniteHyperring, I: IdealLike) -> int:
    _check_ring(H)
    I = as_mask(I)
    if I == H.full:
        raise PreconditionError("ideal must be proper")
    if I not in set(ideal_masks(H)):
        if not is_hyperideal(H, I):
            raise NotAHyperidealError(f"{bits.fmt(I)} is not a hyperideal")
    return I


def _within(table: np.ndarray, m: int, n: int) -> np.ndarray:
    return (table & np.uint64(bits.full(n) ^ m)) == 0


def _member_vec(H: FiniteHyperring, m: int) -> np.ndarray:
    return bits.to_bool(m, H.n)


def _first(bad: np.ndarray) -> Witness | None:
    idx = np.argwhere(bad)
    if len(idx) == 0:
        return None
    return tuple(int(i) for i in idx[0])


def _pair_scan(H: FiniteHyperring, I: int, left: int, right: int) -> Witness | None:
    """First (x, y) with ``x o y`` inside ``I``, ``x`` outside ``left``, ``y`` outside ``right``."""
    inside = _within(H.mul_array, I, H.n)
    bad = inside & ~_member_vec(H, left)[:, None] & ~_member_vec(H, right)[None, :]
    return _first(bad)


def _triple_scan(H: FiniteHyperring, I: int, pair_target: int, other_target: int) -> Witness | None:
    """First (x, y, z) with ``x o y o z`` inside ``I`` and none of the three pair escapes."""
    inside = _within(H.triple, I, H.n)
    xy = _within(H.mul_array, pair_target, H.n)
    other = xy if other_target == pair_target else _within(H.mul_array, other_target, H.n)
    bad = inside & ~xy[:, :, None] & ~other[:, None, :] & ~other[None, :, :]
    return _first(bad)


def _sqrt_zero(H: FiniteHyperring) -> int:
    return prime_radical(H, zero_ideal(H)).members


# ---------------------------------------------------------------- checkers

def _prime(H, I):
    return _pair_scan(H, I, I, I)


def _maximal(H, I):
    for y in range(H.n):
        if bits.contains(I, y):
            continue
        K = generated_ideal(H, I | (1 << y)).members
        if K != H.full:
            return (y,)
    return None


def _j_prime(H, I):
    return _pair_scan(H, I, jacobson(H).members, I)


def _j_primary(H, I):
    return _pair_scan(H, I, jacobson_of(H, I).members, I)


def _quasi_j_prime(H, I):
    rad = prime_radical(H, I).members
    if rad == H.full:
        return ()
    return _pair_scan(H, rad, jacobson(H).members, rad)


def _quasi_primary(H, I):
    rad = prime_radical(H, I).members
    if rad == H.full:
        return ()
    return _pair_scan(H, rad, rad, rad)


def _n_hyperideal(H, I):
    return _pair_scan(H, I, _sqrt_zero(H), I)


def _r_hyperideal(H, I):
    z = 1 << H.zero
    regular = bits.mask(x for x in range(H.n) if ann(H, x) == z)
    return _pair_scan(H, I, H.full ^ regular, I)


def _two_absorbing(H, I):
    return _triple_scan(H, I, I, I)


def _two_absorbing_primary(H, I):
    return _triple_scan(H, I, I, prime_radical(H, I).members)


def _two_absorbing_j_prime(H, I):
    return _triple_scan(H, I, I, jacobson(H).members)


def _two_absorbing_j_primary(H, I):
    return _triple_scan(H, I, I, jacobson_of(H, I).members)


def _family_witness(family, I):
    for A in sorted(family, key=bits.sort_key):
        if A & I and not bits.subset(A, I):
            return tuple(bits.members(A))
    return None


def _c_hyperideal(H, I):
    return None if is_c_hyperideal(H, I) else _family_witness(product_family(H), I)


def _strong_c_hyperideal(H, I):
    return None if is_strong_c_hyperideal(H, I) else _family_witness(sum_family(H), I)


CHECKERS: dict[str, Callable[[FiniteHyperring, int], Witness | None]] = {
    "prime": _prime,
    "maximal": _maximal,
    "j_prime": _j_prime,
    "j_primary": _j_primary,
    "quasi_j_prime": _quasi_j_prime,
    "quasi_primary": _quasi_primary,
    "n_hyperideal": _n_hyperideal,
    "r_hyperideal": _r_hyperideal,
    "2_absorbing": _two_absorbing,
    "2_absorbing_primary": _two_absorbing_primary,
    "2_absorbing_j_prime": _two_absorbing_j_prime,
    "2_absorbing_j_primary": _two_absorbing_j_primary,
    "c_hyperideal": _c_hyperideal,
    "strong_c_hyperideal": _strong_c_hyperideal,
}


def find_violation(name: str, H: FiniteHyperring, I: IdealLike) -> Witness | None:
    """Counterwitness showing ``I`` is not in class ``name``, or ``None`` if it is."""
    I = check_proper_ideal(H, I)
    key = ("class", name, I)
    if key not in H._memo:
        H._memo[key] = CHECKERS[name](H, I)
    return H._memo[key]


def holds(name: str, H: FiniteHyperring, I: IdealLike) -> bool:
    return find_violation(name, H, I) is None


def is_prime(H, I) -> bool:
    return holds("prime", H, I)


def is_maximal(H, I) -> bool:
    return holds("maximal", H, I)


def is_j_prime(H, I) -> bool:
    return holds("j_prime", H, I)


def is_j_primary(H, I) -> bool:
    return holds("j_primary", H, I)


def is_quasi_j_prime(H, I) -> bool:
    return holds("quasi_j_prime", H, I)


def is_quasi_primary(H, I) -> bool:
    return holds("quasi_primary", H, I)


def is_n_hyperideal(H, I) -> bool:
    return holds("n_hyperideal", H, I)


def is_r_hyperideal(H, I) -> bool:
    return holds("r_hyperideal", H, I)


def is_2_absorbing(H, I) -> bool:
    return holds("2_absorbing", H, I)


def is_2_absorbing_primary(H, I) -> bool:
    return holds("2_absorbing_primary", H, I)


def is_2_absorbing_j_prime(H, I) -> bool:
    return holds("2_absorbing_j_prime", H, I)


def is_2_absorbing_j_primary(H, I) -> bool:
    return holds("2_absorbing_j_primary", H, I)


def j_mult_closed_violation(H: FiniteHyperring, S: int) -> Witness | None:
    """``(x,)`` for an ``x`` outside J(R) missing from ``S``, or ``(x, y)`` with ``x o y`` escaping ``S``."""
    _check_ring(H)
    if not S:
        raise ValueError("S must be nonempty")
    J = jacobson(H).members
    outside_j = H.full ^ J
    missing = outside_j & ~S
    if missing:
        return (bits.lowest(missing),)
    inside = _within(H.mul_array, S, H.n)
    bad = ~inside & _member_vec(H, outside_j)[:, None] & _member_vec(H, S)[None, :]
    return _first(bad)


def is_j_mult_closed(H: FiniteHyperring, S: int) -> bool:
    return j_mult_closed_violation(H, S) is None


# ---------------------------------------------------------------- reports

# (antecedent, consequent, needs an identity)
IMPLICATIONS = [
    ("prime", "2_absorbing", False),
    ("prime", "quasi_primary", False),
    ("2_absorbing", "2_absorbing_primary", False),
    ("j_prime", "j_primary", False),
    ("2_absorbing_j_prime", "2_absorbing_j_primary", False),
    ("maximal", "prime", True),
    ("n_hyperideal", "j_prime", True),
    ("j_prime", "2_absorbing_j_prime", True),
]


@dataclass
class ClassificationReport:
    ideal: tuple[int, ...]
    flags: dict[str, bool]
    witnesses: dict[str, Witness | None]
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "ideal": list(self.ideal),
            "flags": dict(self.flags),
            "witnesses": {k: (list(v) if v is not None else None) for k, v in self.witnesses.items()},
            "notes": list(self.notes),
        }


def classify(H: FiniteHyperring, I: IdealLike) -> ClassificationReport:
    I = check_proper_ideal(H, I)
    witnesses = {name: find_violation(name, H, I) for name in CHECKERS}
    flags = {name: w is None for name, w in witnesses.items()}
    has_one = identity_of(H) is not None
    for a, b, needs_one in IMPLICATIONS:
        if needs_one and not has_one:
            continue
        if flags[a] and not flags[b]:
            raise ConsistencyError(f"{a} holds but {b} fails for {bits.fmt(I)} in {H.name}")
    return ClassificationReport(tuple(bits.members(I)), flags, witnesses, [J_PRIMARY_NOTE])
