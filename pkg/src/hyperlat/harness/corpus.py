"""Deterministic instance corpora for the theorem harness."""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field, fields

from .. import bits
from ..constructions import GoodHom, product, product_projections, quotient
from ..core import FiniteHyperring, is_commutative, require_valid, zn_coset, zn_scaled
from ..ideals import proper_ideal_masks

A_MENU = ("one", "plus_minus_one", "nonzero", "two_three")


def menu_set(name: str, n: int) -> tuple[int, ...]:
    if name == "one":
        A = {1}
    elif name == "plus_minus_one":
        A = {1, n - 1}
    elif name == "nonzero":
        A = set(range(1, n))
    elif name == "two_three":
        A = {2 % n, 3 % n}
    else:
        raise ValueError(f"unknown A-menu entry {name!r}")
    return tuple(sorted(A))


@dataclass(frozen=True)
class CorpusSpec:
    zn_min: int = 2
    zn_max: int = 10
    a_menu: tuple[str, ...] = A_MENU
    extra_zn: tuple[tuple[int, tuple[int, ...]], ...] = ((6, (1, 2, 3, 4, 5)),)
    product_max: int = 30
    triple_max: int = 12
    quotients: bool = True
    random_tables: int = 12
    random_max_n: int = 9
    seed: int = 0
    max_n: int = 36

    @classmethod
    def from_dict(cls, doc: dict) -> "CorpusSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"unknown corpus spec keys: {sorted(unknown)}")
        kw = dict(doc)
        if "a_menu" in kw:
            kw["a_menu"] = tuple(kw["a_menu"])
        if "extra_zn" in kw:
            kw["extra_zn"] = tuple((int(n), tuple(A)) for n, A in kw["extra_zn"])
        return cls(**kw)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["a_menu"] = list(self.a_menu)
        d["extra_zn"] = [[n, list(A)] for n, A in self.extra_zn]
        return d

    def check_bounds(self) -> None:
        if self.max_n > bits.MAX_WIDTH:
            raise ValueError(f"max_n cannot exceed {bits.MAX_WIDTH}")
        for label, v in (("zn_max", self.zn_max), ("product_max", self.product_max),
                         ("triple_max", self.triple_max), ("random_max_n", self.random_max_n)):
            if v > self.max_n:
                raise ValueError(f"{label}={v} exceeds max_n={self.max_n}")
        for n, A in self.extra_zn:
            if n > self.max_n:
                raise ValueError(f"extra instance n={n} exceeds max_n={self.max_n}")
        for name in self.a_menu:
            if name not in A_MENU:
                raise ValueError(f"unknown A-menu entry {name!r}")


@dataclass(eq=False)
class Instance:
    id: str
    ring: FiniteHyperring
    kind: str  # base | random | product | triple | quotient
    factors: tuple["Instance", ...] = ()
    parent: "Instance | None" = None
    kernel: int | None = None
    homs: tuple[tuple[str, GoodHom], ...] = field(default=())

    def __repr__(self) -> str:
        return f"Instance({self.id!r}, n={self.ring.n})"


def _admissible(H: FiniteHyperring) -> bool:
    require_valid(H)
    return is_commutative(H) and bool(proper_ideal_masks(H))


def build_corpus(spec: CorpusSpec | None = None) -> list[Instance]:
    """Base zn_scaled menu, seeded random coset tables, products, triple products, quotients."""
    spec = spec or CorpusSpec()
    spec.check_bounds()
    out: list[Instance] = []
    seen: set[str] = set()

    def emit(inst: Instance) -> Instance | None:
        if inst.id in seen or not _admissible(inst.ring):
            return None
        seen.add(inst.id)
        out.append(inst)
        return inst

    base: list[Instance] = []
    wanted = [(n, menu_set(a, n)) for n in range(spec.zn_min, spec.zn_max + 1) for a in spec.a_menu]
    wanted += list(spec.extra_zn)
    for n, A in wanted:
        H = zn_scaled(n, A)
        inst = emit(Instance(H.name, H, "base"))
        if inst:
            base.append(inst)

    rng = random.Random(spec.seed)
    randoms: list[Instance] = []
    for k in range(spec.random_tables):
        n = rng.randint(2, max(2, spec.random_max_n))
        divisors = [d for d in range(2, n + 1) if n % d == 0]
        d = rng.choice(divisors)
        A = rng.sample(range(n), rng.randint(1, n))
        H = zn_coset(n, A, d)
        inst = emit(Instance(f"rand{k:02d}:{H.name}", H, "random"))
        if inst:
            randoms.append(inst)

    for i, left in enumerate(base):
        for right in base[i:]:
            if left.ring.n * right.ring.n > spec.product_max:
                continue
            P = product(left.ring, right.ring)
            p1, p2 = product_projections(left.ring, right.ring, P)
            emit(Instance(f"{left.id} x {right.id}", P, "product", factors=(left, right),
                          homs=(("proj1", p1), ("proj2", p2))))

    for i, a in enumerate(base):
        for j in range(i, len(base)):
            b = base[j]
            for c in base[j:]:
                if a.ring.n * b.ring.n * c.ring.n > spec.triple_max:
                    continue
                P = product(product(a.ring, b.ring), c.ring)
                emit(Instance(f"{a.id} x {b.id} x {c.id}", P, "triple", factors=(a, b, c)))

    if spec.quotients:
        for parent in base + randoms:
            for K in proper_ideal_masks(parent.ring):
                Q, w = quotient(parent.ring, K)
                emit(Instance(f"{parent.id}/{bits.fmt(K)}", Q, "quotient", parent=parent,
                              kernel=K, homs=(("pi", w.projection),)))
    return out


def default_corpus() -> list[Instance]:
    return build_corpus(CorpusSpec())
