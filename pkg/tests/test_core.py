import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlat import bits
from hyperlat.core import (
    AxiomError,
    FiniteHyperring,
    StructureError,
    ZnScaledSpec,
    ann,
    find_identity,
    from_tables,
    hyperproduct,
    identities,
    is_commutative,
    require_valid,
    units,
    validate_axioms,
    zero_divisors,
    zn_coset,
    zn_scaled,
)

from oracles import Oracle, as_mask, as_set, naive_zn_product

Z6 = (6, (1, 2, 3, 4, 5))


def z6():
    return zn_scaled(*Z6)


def test_zn_formula_examples():
    H = z6()
    assert as_set(H.mul[2][3]) == {0}
    assert as_set(zn_scaled(5, [1]).mul[2][3]) == {1}
    H4 = zn_scaled(4, [1, 3])
    assert as_set(H4.mul[2][2]) == {0}
    assert as_set(H4.mul[1][1]) == {1, 3}


@given(st.integers(2, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1), min_size=1))))
@settings(max_examples=60, deadline=None)
def test_zn_matches_naive_formula(case):
    n, A = case
    H = zn_scaled(n, A)
    for x in range(n):
        for y in range(n):
            assert as_set(H.mul[x][y]) == naive_zn_product(n, A, x, y)
            assert H.add[x][y] == (x + y) % n


@given(st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1), min_size=1))))
@settings(max_examples=40, deadline=None)
def test_zn_family_is_valid_and_commutative(case):
    n, A = case
    H = zn_scaled(n, A)
    assert validate_axioms(H).ok
    assert is_commutative(H)


def test_empty_a_rejected():
    with pytest.raises(ValueError):
        ZnScaledSpec(6, ())
    with pytest.raises(ValueError):
        zn_scaled(6, [])


def test_identity_field():
    assert z6().one == 1
    assert zn_scaled(6, [2, 4]).one is None
    assert zn_scaled(5, [1]).one == 1


def test_validate_examples():
    assert validate_axioms(z6()).ok
    assert validate_axioms(zn_scaled(4, [1, 3])).ok


def _corrupted():
    H = z6()
    mul = [[bits.members(m) for m in row] for row in H.mul]
    mul[1][1] = [0]
    return from_tables([list(r) for r in H.add], 0, mul, one=1, name="corrupt")


def test_corrupted_table_fails_with_witness():
    report = validate_axioms(_corrupted())
    assert not report.ok
    names = {r.name for r in report.failures}
    assert names & {"mul_associative", "identity"}
    for r in report.failures:
        assert r.witness is not None
    with pytest.raises(AxiomError):
        require_valid(_corrupted())


def test_corrupted_witness_rechecks():
    H = _corrupted()
    report = validate_axioms(H)
    assoc = next(r for r in report.results if r.name == "mul_associative")
    if not assoc.ok:
        a, b, c = assoc.witness
        assert hyperproduct(H, H.mul[a][b], 1 << c) != hyperproduct(H, 1 << a, H.mul[b][c])


def test_dimension_mismatch_is_structural():
    with pytest.raises(StructureError):
        from_tables([[0, 1], [1, 0]], 0, [[[0]]])
    with pytest.raises(StructureError):
        from_tables([[0, 1], [1, 0]], 0, [[[0], [5]], [[0], [1]]])


def test_empty_hyperproduct_fails_validation():
    H = from_tables([[0, 1], [1, 0]], 0, [[[0], []], [[0], [1]]])
    report = validate_axioms(H)
    bad = {r.name: r.witness for r in report.failures}
    assert bad == {"mul_nonempty": (0, 1)}


def test_non_group_addition_fails_validation():
    H = from_tables([[0, 0], [0, 0]], 0, [[[0], [0]], [[0], [0]]])
    report = validate_axioms(H)
    assert not report.ok
    assert report.failures[0].name.startswith("add_")


def test_zero_ring_validates():
    H = from_tables([[0]], 0, [[[0]]])
    assert validate_axioms(H).ok


def test_hyperproduct_examples():
    H = z6()
    assert hyperproduct(H, 1 << 2, 1 << 3) == 1
    assert as_set(hyperproduct(H, 1 << 1, 1 << 1)) == {1, 2, 3, 4, 5}
    for y in range(6):
        assert hyperproduct(H, 1, 1 << y) == 1
    with pytest.raises(ValueError):
        hyperproduct(H, 0, 1)


@given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 63), st.integers(0, 63))
def test_hyperproduct_monotone(a, b, c, d):
    H = z6()
    A, A2 = a | 1, (a | c) | 1
    B, B2 = b | 2, (b | d) | 2
    assert bits.subset(hyperproduct(H, A, B), hyperproduct(H, A2, B2))


def test_identity_examples():
    assert find_identity(z6()) == 1
    assert find_identity(zn_scaled(5, [1])) == 1
    assert find_identity(zn_scaled(6, [2, 4])) is None
    assert identities(z6()) == Oracle(z6()).identities()


def test_units_examples():
    assert as_set(units(zn_scaled(5, [1]))) == {1, 2, 3, 4}
    assert as_set(units(zn_scaled(4, [1, 3]))) == {1, 3}
    H = z6()
    assert as_set(units(H)) == Oracle(H).units(1)
    with pytest.raises(ValueError):
        units(zn_scaled(6, [2, 4]))


def test_zero_divisors_examples():
    H = z6()
    zd = as_set(zero_divisors(H))
    assert {2, 3} <= zd
    assert zd == Oracle(H).zero_divisors()
    assert as_set(zero_divisors(zn_scaled(5, [1]))) - {0} == set()
    assert 2 in as_set(zero_divisors(zn_scaled(4, [1, 3])))


def test_ann_examples():
    H = z6()
    assert as_set(ann(H, 2)) == {0, 3}
    assert as_set(ann(H, 1)) == {0}
    assert as_set(ann(H, 3)) == {0, 2, 4}


@given(st.integers(2, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1), min_size=1), st.integers(0, n - 1))))
@settings(max_examples=40, deadline=None)
def test_ann_is_an_ideal(case):
    from hyperlat.ideals import is_hyperideal
    n, A, x = case
    H = zn_scaled(n, A)
    assert is_hyperideal(H, ann(H, x))
    assert as_set(ann(H, x)) == Oracle(H).ann(x)


def test_coset_family_valid():
    for n, A, d in [(6, [1, 2], 3), (8, [1, 3, 5], 4), (9, [2], 3), (4, [0, 1], 2)]:
        H = zn_coset(n, A, d)
        assert validate_axioms(H).ok, H.name
        assert is_commutative(H)
        for x in range(n):
            for y in range(n):
                expect = {(x * a * y + k) % n for a in A for k in range(0, n, d)}
                assert as_set(H.mul[x][y]) == expect


def test_frozen():
    H = z6()
    assert isinstance(H, FiniteHyperring)
    with pytest.raises(Exception):
        H.n = 7


def test_mask_helpers_roundtrip():
    for S in [set(), {0}, {1, 5, 63}]:
        assert as_set(bits.mask(S)) == S
        assert bits.mask(S) == as_mask(S)
