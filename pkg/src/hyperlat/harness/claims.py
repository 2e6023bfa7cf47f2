"""Executable claim catalogue.

Each claim enumerates the bindings satisfying its hypothesis on one instance
and evaluates its conclusion on each.  Bindings are plain dicts: uppercase
keys hold element sets (bitmasks), lowercase keys hold elements or labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .. import bits
from .. import classify as cl
from ..constructions import ideal_pair
from ..core import has_nonzero_identity, hyperproduct
from .context import Ctx

Binding = dict
Outcome = "bool | tuple[bool, dict]"

LAW, REPORTED = "law", "reported"


@dataclass(frozen=True)
class Claim:
    id: str
    tier: str
    description: str
    bindings: Callable[[Ctx], Iterator[Binding]]
    conclusion: Callable[[Ctx, Binding], "bool | tuple[bool, dict]"]
    requires: tuple[str, ...] = ()  # instance-level filters
    kinds: tuple[str, ...] | None = None  # None: every kind
    filters: tuple[str, ...] = field(default=())  # binding-level filters, for the record

    def applies(self, ctx: Ctx) -> bool:
        if self.kinds is not None and ctx.inst.kind not in self.kinds:
            return False
        return all(REQUIREMENTS[r](ctx) for r in self.requires)


def _factor_identities(ctx: Ctx) -> bool:
    return bool(ctx.inst.factors) and all(has_nonzero_identity(f.ring) for f in ctx.inst.factors)


REQUIREMENTS: dict[str, Callable[[Ctx], bool]] = {
    "identity": lambda c: c.has_identity,
    "zero_absorbing": lambda c: c.zero_absorbing,
    "factor_identities": _factor_identities,
}


def _sub(a: int, b: int) -> bool:
    return bits.subset(a, b)


def _single(ctx: Ctx) -> Iterator[Binding]:
    yield {}


def _each_proper(ctx: Ctx, cls: str | None = None) -> Iterator[Binding]:
    for I in ctx.proper:
        if cls is None or ctx.cls(cls, I):
            yield {"I": I}


def _pairs(ctx: Ctx, cls: str) -> Iterator[Binding]:
    good = [I for I in ctx.proper if ctx.cls(cls, I)]
    for i, A in enumerate(good):
        for B in good[i:]:
            yield {"I1": A, "I2": B}


def _strictly_above(ctx: Ctx, I: int, cls: str) -> list[int]:
    return [K for K in ctx.proper if K != I and _sub(I, K) and ctx.cls(cls, K)]


def _detail(ok: bool, **kw) -> tuple[bool, dict]:
    return ok, {k: v for k, v in kw.items()}


def _in_class(name: str, key: str = "I"):
    """Conclusion "b[key] is in class name", carrying the classifier's counterwitness on failure."""
    def conclusion(ctx: Ctx, b: Binding):
        w = cl.find_violation(name, ctx.H, b[key])
        if w is None:
            return True
        return _detail(False, **{"class": name, "counterwitness": list(w)})
    return conclusion


# ---------------------------------------------------------------- J-prime basics

def _local_equivalence(ctx: Ctx, b: Binding):
    every = all(ctx.cls("j_prime", I) for I in ctx.proper)
    principal = [ctx.principal(x) for x in range(ctx.n)]
    every_principal = all(ctx.cls("j_prime", P) for P in set(principal) if P != ctx.full)
    return _detail(ctx.local == every == every_principal,
                   local=ctx.local, all_j_prime=every, all_principal_j_prime=every_principal)


def _t38w_bindings(ctx: Ctx):
    if ctx.local and ctx.sqrt_zero != ctx.J and _sub(ctx.sqrt_zero, ctx.J):
        yield {"J": ctx.J}


def _t312_conclusion(ctx: Ctx, b: Binding):
    I = b["I"]
    i = ctx.cls("j_prime", I)
    ii = all(ctx.colon(I, x) == I for x in ctx.outside(ctx.J))
    iii = True
    for A in ctx.ideals:
        if _sub(A, ctx.J):
            continue
        for B in ctx.ideals:
            if _sub(ctx.sprod(A, B), I) and not _sub(B, I):
                iii = False
                break
        if not iii:
            break
    return _detail(i == ii == iii, j_prime=i, colon_fixed=ii, ideal_products=iii)


def _t313c_conclusion(ctx: Ctx, b: Binding):
    I = b["I"]
    lhs = ctx.cls("j_prime", I)
    rhs = all(_sub(ctx.colon(I, y), ctx.J) for y in ctx.outside(I))
    return _detail(lhs == rhs, j_prime=lhs, colons_in_j=rhs)


def _t311_bindings(ctx: Ctx):
    for I in ctx.proper:
        if not ctx.cls("j_prime", I):
            continue
        for (value,), T in sorted(ctx.colon_values((I,), ctx.outside(I)).items()):
            yield {"I": I, "T": T, "C": value}


def _t313j_bindings(ctx: Ctx):
    if ctx.J in ctx.primes:
        yield {"J": ctx.J}


def _t313j_conclusion(ctx: Ctx, b: Binding):
    jp = ctx.cls("j_prime", ctx.J)
    above = _strictly_above(ctx, ctx.J, "j_prime")
    return _detail(jp and not above, j_prime=jp, j_prime_above=[bits.members(K) for K in above])


def _t316c_bindings(ctx: Ctx):
    jp = [A for A in ctx.proper if ctx.cls("j_prime", A)]
    for H in ctx.ideals:
        if _sub(H, ctx.J):
            continue
        for i, A1 in enumerate(jp):
            for A2 in jp[i + 1:]:
                if ctx.iprod(A1, H) == ctx.iprod(A2, H):
                    yield {"part": "cancel", "H": H, "A1": A1, "A2": A2}
        for I in ctx.ideals:
            P = ctx.iprod(I, H)
            if ctx.cls("j_prime", P):
                yield {"part": "absorb", "H": H, "I": I}


def _t316c_conclusion(ctx: Ctx, b: Binding):
    if b["part"] == "cancel":
        return b["A1"] == b["A2"]
    return ctx.iprod(b["I"], b["H"]) == b["I"]


# ---------------------------------------------------------------- transport

def _homs(ctx: Ctx):
    """(label, phi, source ctx, target ctx) for every hom attached to the instance."""
    for label, phi in ctx.inst.homs:
        src = ctx if phi.source is ctx.H else ctx.other(phi.source)
        tgt = ctx if phi.target is ctx.H else ctx.other(phi.target)
        yield label, phi, src, tgt


def _t313h_bindings(ctx: Ctx):
    for label, phi, src, tgt in _homs(ctx):
        ker = phi.preimage_set(1 << tgt.H.zero)
        if not _sub(ker, src.J):
            continue
        for I2 in tgt.proper:
            if tgt.cls("j_prime", I2):
                yield {"hom": label, "I2": I2}


def _hom_named(ctx: Ctx, label: str):
    for lab, phi, src, tgt in _homs(ctx):
        if lab == label:
            return phi, src, tgt
    raise KeyError(label)


def _t313h_conclusion(ctx: Ctx, b: Binding):
    phi, src, tgt = _hom_named(ctx, b["hom"])
    pre = phi.preimage_set(b["I2"])
    return _detail(src.cls("j_prime", pre), preimage=bits.members(pre))


def _t314h_bindings(ctx: Ctx):
    for label, phi, src, tgt in _homs(ctx):
        if not phi.surjective:
            continue
        # side condition used mid-proof; skipped (vacuous) when it fails
        if not _sub(phi.image_set(src.J), tgt.J):
            continue
        ker = phi.preimage_set(1 << tgt.H.zero)
        for I1 in src.proper:
            if _sub(ker, I1) and src.is_c(I1) and src.cls("j_prime", I1):
                yield {"hom": label, "I1": I1}


def _t314h_conclusion(ctx: Ctx, b: Binding):
    phi, src, tgt = _hom_named(ctx, b["hom"])
    img = phi.image_set(b["I1"])
    return _detail(tgt.cls("j_prime", img), image=bits.members(img))


def _quotient_parts(ctx: Ctx):
    parent = ctx.other(ctx.inst.parent.ring)
    pi = dict(ctx.inst.homs)["pi"]
    return parent, pi, ctx.inst.kernel


def _c315_bindings(ctx: Ctx):
    parent, pi, K = _quotient_parts(ctx)
    for I in parent.proper:
        if _sub(K, I) and parent.cls("j_prime", I):
            yield {"K": K, "I": I}


def _c315_conclusion(ctx: Ctx, b: Binding):
    parent, pi, K = _quotient_parts(ctx)
    return ctx.cls("j_prime", pi.image_set(b["I"]))


def _c316_bindings(ctx: Ctx):
    parent, pi, K = _quotient_parts(ctx)
    for I in parent.proper:
        if _sub(K, I & parent.J) and ctx.cls("j_prime", pi.image_set(I)):
            yield {"K": K, "I": I}


def _c316_conclusion(ctx: Ctx, b: Binding):
    parent, pi, K = _quotient_parts(ctx)
    return parent.cls("j_prime", b["I"])


# ---------------------------------------------------------------- complements, separators, products

def _t318_conclusion(ctx: Ctx, b: Binding):
    from ..classify import is_j_mult_closed
    I = b["I"]
    lhs = ctx.cls("j_prime", I)
    rhs = is_j_mult_closed(ctx.H, ctx.full ^ I)
    return _detail(lhs == rhs, j_prime=lhs, complement_closed=rhs)


SEPARATOR_FULL_SEARCH = 6  # enumerate every subset of J(R) up to this size


def j_closed_sets(ctx: Ctx) -> list[int]:
    """J-multiplicatively closed sets of the form (R - J(R)) u T with T inside J(R)."""
    from ..classify import is_j_mult_closed
    base = ctx.full ^ ctx.J
    inner = bits.members(ctx.J)
    if len(inner) <= SEPARATOR_FULL_SEARCH:
        extras = {bits.mask(x for k, x in enumerate(inner) if s >> k & 1) for s in range(1 << len(inner))}
    else:
        extras = {0, ctx.J} | {ctx.J & ~I for I in ctx.ideals if _sub(I, ctx.J)}
    out = []
    for T in sorted(extras, key=bits.sort_key):
        S = base | T
        if S and is_j_mult_closed(ctx.H, S):
            out.append(S)
    return out


def _t319z_bindings(ctx: Ctx):
    for S in j_closed_sets(ctx):
        disjoint = [I for I in ctx.ideals if not I & S]
        for Q in disjoint:
            if not any(Q != K and _sub(Q, K) for K in disjoint):
                yield {"S": S, "Q": Q}


def _no_jprime(ctx: Ctx, b: Binding):
    return not ctx.cls("j_prime", b["I"])


def _t323_bindings(ctx: Ctx):
    for I in ctx.proper:
        if _sub(I, ctx.J):
            yield {"I": I}


def _t323_conclusion(ctx: Ctx, b: Binding):
    a, c = ctx.cls("j_prime", b["I"]), ctx.cls("j_primary", b["I"])
    return _detail(a == c, j_prime=a, j_primary=c)


# ---------------------------------------------------------------- quasi J-prime

def _t43_bindings(ctx: Ctx):
    for I in ctx.proper:
        if not ctx.cls("quasi_j_prime", I):
            continue
        for H in ctx.ideals:
            for x in ctx.outside(ctx.J):
                if _sub(ctx.elem_times(x, H), I):
                    yield {"I": I, "H": H, "x": x}


def _quasi_pairs_ok(ctx: Ctx, I: int, rad: int) -> bool:
    for A in ctx.ideals:
        if _sub(A, ctx.J):
            continue
        for B in ctx.ideals:
            if _sub(ctx.sprod(A, B), I) and not _sub(B, rad):
                return False
    return True


def _quasi_elem_ok(ctx: Ctx, I: int, left: int, rad: int) -> bool:
    for x in ctx.outside(left):
        for y in ctx.outside(rad):
            if _sub(ctx.H.mul[x][y], I):
                return False
    return True


def _t44_conclusion(ctx: Ctx, b: Binding):
    I = b["I"]
    rad = ctx.rad(I)
    i = ctx.cls("quasi_j_prime", I)
    ii = _quasi_pairs_ok(ctx, I, rad)
    iii = _quasi_elem_ok(ctx, I, ctx.J, rad)
    return _detail(i == ii == iii, quasi_j_prime=i, ideal_form=ii, element_form=iii)


def _t45_conclusion(ctx: Ctx, b: Binding):
    I = b["I"]
    lhs = ctx.cls("quasi_j_prime", I)
    rhs = _sub(I, ctx.J) and _quasi_elem_ok(ctx, I, ctx.jof(I), ctx.rad(I))
    return _detail(lhs == rhs, quasi_j_prime=lhs, criterion=rhs)


def _colon_bindings(ctx: Ctx):
    for I in ctx.proper:
        if not (ctx.is_c(I) and ctx.cls("quasi_j_prime", I)):
            continue
        rad = ctx.rad(I)
        values = ctx.colon_values((I, rad), ctx.outside(ctx.J))
        for (IS, RS), S in sorted(values.items()):
            yield {"I": I, "S": S, "IS": IS, "RS": RS}


def _l46_conclusion(ctx: Ctx, b: Binding):
    return _sub(b["RS"], ctx.rad(b["IS"]))


def _t47_conclusion(ctx: Ctx, b: Binding):
    return ctx.cls("quasi_j_prime", b["IS"])


def _t48_bindings(ctx: Ctx):
    for I in ctx.proper:
        if ctx.cls("quasi_j_prime", I) and not _strictly_above(ctx, I, "quasi_j_prime"):
            yield {"I": I}


def _c49_conclusion(ctx: Ctx, b: Binding):
    a, c = ctx.cls("j_prime", ctx.J), ctx.cls("quasi_j_prime", ctx.J)
    return _detail(a == c, j_prime=a, quasi_j_prime=c)


def _t410_bindings(ctx: Ctx):
    gens = {generated for a in range(ctx.n) for x in range(a, ctx.n)
            for generated in [_generated(ctx, ctx.H.mul[a][x])]}
    if all(ctx.cls("quasi_j_prime", G) for G in gens if G != ctx.full):
        for M in ctx.maximal:
            yield {"M": M}


def _generated(ctx: Ctx, S: int) -> int:
    from ..ideals import generated_ideal
    return generated_ideal(ctx.H, S).members


def _t411_conclusion(ctx: Ctx, b: Binding):
    every = all(ctx.cls("quasi_j_prime", M) for M in ctx.maximal)
    return _detail(every == ctx.local, all_maximal_quasi=every, local=ctx.local)


def _t412_bindings(ctx: Ctx):
    if set(ctx.primes) != set(ctx.maximal):
        return
    for I in ctx.proper:
        if _sub(I, ctx.J) and ctx.cls("quasi_j_prime", I):
            yield {"I": I}


def _t413_bindings(ctx: Ctx):
    for b in _pairs(ctx, "quasi_j_prime"):
        yield {**b, "op": "meet"}
        yield {**b, "op": "product"}


def _t413_conclusion(ctx: Ctx, b: Binding):
    A, B = b["I1"], b["I2"]
    X = A & B if b["op"] == "meet" else ctx.iprod(A, B)
    return _detail(ctx.cls("quasi_j_prime", X), result=bits.members(X))


# ---------------------------------------------------------------- 2-absorbing J-prime

def _t55_conclusion(ctx: Ctx, b: Binding):
    I = b["I"]
    in_ji, in_jr = _sub(I, ctx.jof(I)), _sub(I, ctx.J)
    return _detail(in_ji and in_jr, within_j_of_i=in_ji, within_j_of_r=in_jr)


def _t56_bindings(ctx: Ctx):
    for I in ctx.proper:
        if _sub(I, ctx.J) and ctx.cls("2_absorbing_primary", I):
            yield {"I": I}


def _t57_bindings(ctx: Ctx):
    if len(ctx.maximal) > 2:
        return
    for I in ctx.proper:
        if ctx.cls("2_absorbing_primary", I) and not ctx.cls("quasi_primary", I):
            yield {"I": I}


def _t59_bindings(ctx: Ctx):
    for I in ctx.proper:
        if not ctx.cls("2_absorbing_j_prime", I):
            continue
        for a in range(ctx.n):
            for c in range(a, ctx.n):
                if not _sub(ctx.H.mul[a][c], I):
                    yield {"I": I, "a": a, "b": c}


def _t59_conclusion(ctx: Ctx, b: Binding):
    a, c = b["a"], b["b"]
    col = ctx.colon_set(b["I"], ctx.H.mul[a][c])
    ja, jb = ctx.colon(ctx.J, a), ctx.colon(ctx.J, c)
    return _detail(_sub(col, ja) or _sub(col, jb), colon=bits.members(col))


def strong_c_conditions(ctx: Ctx, I: int) -> dict[str, bool]:
    """The four formulations of 2-absorbing J-primeness: elementwise, element-ideal, mixed, ideal-triple."""
    H, J = ctx.H, ctx.J
    ids = ctx.ideals
    elementwise = ctx.cls("2_absorbing_j_prime", I)

    # a o b o K within I  =>  a o b within I  or  a o K within J  or  b o K within J
    element_ideal = True
    for K in ids:
        abk = ctx.pair_elem_ideal[K]
        xk = ctx.elem_ideal_table[K]
        for a in range(ctx.n):
            for c in range(ctx.n):
                if not _sub(int(abk[a, c]), I):
                    continue
                if _sub(H.mul[a][c], I) or _sub(int(xk[a]), J) or _sub(int(xk[c]), J):
                    continue
                element_ideal = False
                break
            if not element_ideal:
                break
        if not element_ideal:
            break

    raw = {(A, B): ctx.set_times_ideal(A, B) for A in ids for B in ids}

    # a o K o T within I  =>  a o K within I  or  a o T within J  or  K o T within J
    mixed = True
    for K in ids:
        for T in ids:
            KT = raw[(K, T)]
            for a in range(ctx.n):
                if not _sub(hyperproduct(H, 1 << a, KT), I):
                    continue
                if (_sub(int(ctx.elem_ideal_table[K][a]), I) or _sub(int(ctx.elem_ideal_table[T][a]), J)
                        or _sub(KT, J)):
                    continue
                mixed = False
                break
            if not mixed:
                break
        if not mixed:
            break

    # A o K o T within I  =>  A o K within I  or  A o T within J  or  K o T within J
    triple = True
    for A in ids:
        for K in ids:
            for T in ids:
                KT = raw[(K, T)]
                if not _sub(hyperproduct(H, A, KT), I):
                    continue
                if _sub(raw[(A, K)], I) or _sub(raw[(A, T)], J) or _sub(KT, J):
                    continue
                triple = False
                break
            if not triple:
                break
        if not triple:
            break
    return {"elementwise": elementwise, "element_ideal": element_ideal,
            "mixed": mixed, "ideal_triple": triple}


def _t510_bindings(ctx: Ctx):
    for I in ctx.proper:
        if ctx.is_strong_c(I):
            yield {"I": I}


def _t510_conclusion(ctx: Ctx, b: Binding):
    conds = strong_c_conditions(ctx, b["I"])
    return _detail(len(set(conds.values())) == 1, **conds)


def _t511_bindings(ctx: Ctx):
    if all(ctx.cls("2_absorbing_j_prime", I) for I in ctx.proper):
        yield {}


def _t515_conclusion(ctx: Ctx, b: Binding):
    I = b["I"]
    lhs = ctx.cls("2_absorbing_j_prime", I)
    primary = ctx.cls("2_absorbing_j_primary", I)
    same = ctx.jof(I) == ctx.J
    return _detail(lhs == (primary and same), two_abs_j_prime=lhs, two_abs_j_primary=primary,
                   j_of_i_is_j=same)


def _t516_bindings(ctx: Ctx):
    left, right = ctx.inst.factors
    for I1 in ctx.other(left.ring).ideals:
        for I2 in ctx.other(right.ring).ideals:
            if I1 == left.ring.full and I2 == right.ring.full:
                continue
            yield {"I1": I1, "I2": I2}


def _t516_conclusion(ctx: Ctx, b: Binding):
    left, right = (ctx.other(f.ring) for f in ctx.inst.factors)
    P = ideal_pair(left.H, right.H, b["I1"], b["I2"])
    lhs = ctx.cls("2_absorbing_j_prime", P)
    j1, j2 = left.cls("j_prime", b["I1"]), right.cls("j_prime", b["I2"])
    return _detail(lhs == (j1 and j2), product_two_abs=lhs, left_j_prime=j1, right_j_prime=j2)


def _no_two_abs(ctx: Ctx, b: Binding):
    return not ctx.cls("2_absorbing_j_prime", b["I"])


# ---------------------------------------------------------------- catalogue

def _mk(id, tier, desc, bindings, conclusion, requires=(), kinds=None, filters=()):
    return Claim(id, tier, desc, bindings, conclusion, tuple(requires), kinds, tuple(filters))


def _cls_claim(hyp: str, concl: str):
    return (lambda c: _each_proper(c, hyp)), (lambda c, b: c.cls(concl, b["I"]))


def _build() -> list[Claim]:
    C = []
    add = C.append
    ID = ("identity",)

    add(_mk("T3.4", LAW, "J-prime ideals lie inside J(R)",
            lambda c: _each_proper(c, "j_prime"), lambda c, b: _sub(b["I"], c.J), ID))
    add(_mk("T3.5", LAW, "local iff every proper ideal is J-prime iff every proper principal ideal is",
            _single, _local_equivalence, ID))
    add(_mk("L3.6", LAW, "maximal ideals are prime",
            lambda c: ({"I": M} for M in c.maximal), lambda c, b: c.cls("prime", b["I"]), ID))
    add(_mk("T3.7", LAW, "n-hyperideals are J-prime", *_cls_claim("n_hyperideal", "j_prime"), ID))
    add(_mk("T3.8w", LAW, "local with sqrt(0) strictly inside J(R): J(R) is J-prime but not an n-hyperideal",
            _t38w_bindings,
            lambda c, b: _detail(c.cls("j_prime", c.J) and not c.cls("n_hyperideal", c.J)), ID))
    add(_mk("T3.9", LAW, "Z(R) inside J(R): r-hyperideals are J-prime",
            lambda c: _each_proper(c, "r_hyperideal") if _sub(c.zero_divisors, c.J) else iter(()),
            lambda c, b: c.cls("j_prime", b["I"]), ID + ("zero_absorbing",)))
    add(_mk("T3.10", LAW, "intersections of J-prime ideals are J-prime",
            lambda c: _pairs(c, "j_prime"), lambda c, b: c.cls("j_prime", b["I1"] & b["I2"])))
    add(_mk("T3.12", LAW, "J-prime iff (I:x) = I off J(R) iff the ideal-product criterion",
            _each_proper, _t312_conclusion))
    add(_mk("T3.13c", LAW, "J-prime iff (I:y) inside J(R) for every y outside I",
            _each_proper, _t313c_conclusion))
    add(_mk("T3.11", LAW, "(I:T) is J-prime for J-prime I and T not inside I",
            _t311_bindings, lambda c, b: c.cls("j_prime", b["C"]), ID))
    add(_mk("T3.12m", LAW, "J-prime ideals maximal among J-prime ideals are prime",
            lambda c: (b for b in _each_proper(c, "j_prime") if not _strictly_above(c, b["I"], "j_prime")),
            lambda c, b: c.cls("prime", b["I"]), ID))
    add(_mk("T3.13j", LAW, "prime J(R) is J-prime with no J-prime ideal strictly above",
            _t313j_bindings, _t313j_conclusion, ID))
    add(_mk("T3.16c", LAW, "cancellation and absorption by an ideal H not inside J(R)",
            _t316c_bindings, _t316c_conclusion))
    add(_mk("T3.13h", LAW, "preimages of J-prime ideals along homs with kernel inside J(R1)",
            _t313h_bindings, _t313h_conclusion, kinds=("product", "quotient")))
    add(_mk("T3.14h", LAW, "images of J-prime C-ideals along surjective homs with kernel inside them",
            _t314h_bindings, _t314h_conclusion, kinds=("product", "quotient"),
            filters=("c_hyperideal(I1)", "image of J(R1) inside J(R2)")))
    add(_mk("C3.15", LAW, "I/K is J-prime for J-prime I containing K",
            _c315_bindings, _c315_conclusion, kinds=("quotient",)))
    add(_mk("C3.16", LAW, "K inside I and J(R), I/K J-prime: I is J-prime",
            _c316_bindings, _c316_conclusion, kinds=("quotient",)))
    add(_mk("T3.18", LAW, "J-prime iff the complement is J-multiplicatively closed",
            lambda c: (b for b in _each_proper(c) if c.is_c(b["I"])), _t318_conclusion, ID,
            filters=("c_hyperideal(I)",)))
    add(_mk("T3.19z", LAW, "ideals maximal among those missing a J-multiplicatively closed S are J-prime",
            _t319z_bindings, lambda c, b: c.cls("j_prime", b["Q"])))
    add(_mk("T3.21p", LAW, "a product of rings with nonzero identity has no J-prime ideal",
            _each_proper, _no_jprime, ("factor_identities",), kinds=("product", "triple")))
    add(_mk("T3.23", LAW, "inside J(R): J-prime iff J-primary", _t323_bindings, _t323_conclusion))

    add(_mk("T4.3", LAW, "quasi J-prime I, x o H inside I, x outside J(R): H inside sqrt(I)",
            _t43_bindings, lambda c, b: _sub(b["H"], c.rad(b["I"]))))
    add(_mk("T4.4", LAW, "quasi J-prime iff the ideal-product form iff the element form",
            _each_proper, _t44_conclusion, ID))
    add(_mk("T4.5", LAW, "quasi J-prime iff I inside J(R) and the J(I) element criterion",
            _each_proper, _t45_conclusion, ID))
    add(_mk("L4.6", LAW, "(sqrt(I):S) inside sqrt((I:S)) for quasi J-prime I and S not inside J(R)",
            _colon_bindings, _l46_conclusion, ID, filters=("c_hyperideal(I)",)))
    add(_mk("T4.7", LAW, "(I:S) is quasi J-prime for quasi J-prime I and S not inside J(R)",
            _colon_bindings, _t47_conclusion, ID, filters=("c_hyperideal(I)",)))
    add(_mk("T4.8", LAW, "quasi J-prime ideals maximal among quasi J-prime ideals are J-prime",
            _t48_bindings, lambda c, b: c.cls("j_prime", b["I"]), ID))
    add(_mk("C4.9", LAW, "J(R) is J-prime iff it is quasi J-prime", _single, _c49_conclusion, ID))
    add(_mk("T4.10", REPORTED, "every proper <a o b> quasi J-prime: maximal ideals are quasi J-prime",
            _t410_bindings, _in_class("quasi_j_prime", "M")))
    add(_mk("T4.11", LAW, "every maximal ideal quasi J-prime iff local", _single, _t411_conclusion, ID))
    add(_mk("T4.12q", REPORTED, "primes maximal, quasi J-prime I inside J(R): quasi primary",
            _t412_bindings, _in_class("quasi_primary"), ID))
    add(_mk("T4.13", LAW, "intersections and products of quasi J-prime ideals are quasi J-prime",
            _t413_bindings, _t413_conclusion))

    add(_mk("T5.4", LAW, "J-prime ideals are 2-absorbing J-prime",
            *_cls_claim("j_prime", "2_absorbing_j_prime"), ID))
    add(_mk("T5.5", REPORTED, "2-absorbing J-prime I lies inside J(I) and inside J(R)",
            lambda c: _each_proper(c, "2_absorbing_j_prime"), _t55_conclusion, ID))
    add(_mk("T5.6", LAW, "2-absorbing primary inside J(R): 2-absorbing J-prime",
            _t56_bindings, lambda c, b: c.cls("2_absorbing_j_prime", b["I"]), ID))
    add(_mk("T5.7", REPORTED, "at most two maximal ideals, 2-absorbing primary, not quasi primary: 2-absorbing J-prime",
            _t57_bindings, _in_class("2_absorbing_j_prime"), ID))
    add(_mk("T5.9", LAW, "(I : a o b) inside (J(R):a) or (J(R):b) when a o b is not inside I",
            _t59_bindings, _t59_conclusion))
    add(_mk("T5.10", LAW, "strong C-ideals: four formulations of 2-absorbing J-prime agree",
            _t510_bindings, _t510_conclusion, filters=("strong_c_hyperideal(I)",)))
    add(_mk("T5.11", LAW, "every proper ideal 2-absorbing J-prime: local",
            _t511_bindings, lambda c, b: _detail(c.local), ID))
    add(_mk("T5.12", LAW, "intersections of 2-absorbing J-prime ideals are 2-absorbing J-prime",
            lambda c: _pairs(c, "2_absorbing_j_prime"),
            lambda c, b: c.cls("2_absorbing_j_prime", b["I1"] & b["I2"])))
    add(_mk("T5.15", LAW, "2-absorbing J-prime iff 2-absorbing J-primary with J(I) = J(R)",
            _each_proper, _t515_conclusion, ID))
    add(_mk("T5.16", LAW, "I1 x I2 is 2-absorbing J-prime iff both factors are J-prime",
            _t516_bindings, _t516_conclusion, ("factor_identities",), kinds=("product",)))
    add(_mk("T5.17", LAW, "a triple product of rings with nonzero identity has no 2-absorbing J-prime ideal",
            _each_proper, _no_two_abs, ("factor_identities",), kinds=("triple",)))
    return C


CLAIMS: list[Claim] = _build()
BY_ID: dict[str, Claim] = {c.id: c for c in CLAIMS}


def select(ids: str | list[str] | None) -> list[Claim]:
    """Claims named by a comma-separated string or list, in catalog order; ``all``/None selects everything."""
    if ids is None or ids == "all":
        return list(CLAIMS)
    if isinstance(ids, str):
        ids = [s.strip() for s in ids.split(",") if s.strip()]
    if "all" in ids:
        return list(CLAIMS)
    for i in ids:
        if i not in BY_ID:
            raise KeyError(f"unknown claim id {i!r}")
    wanted = set(ids)
    return [c for c in CLAIMS if c.id in wanted]
