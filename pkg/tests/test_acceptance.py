"""End-to-end acceptance checks, one test group per numbered criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""
import dataclasses
import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from hyperlat import bits
from hyperlat import classify as cl
from hyperlat.cli import main
from hyperlat.constructions import ideal_pair
from hyperlat.core import has_nonzero_identity
from hyperlat.harness import claims as claims_mod
from hyperlat.harness import run_suite
from hyperlat.harness.claims import strong_c_conditions
from hyperlat.harness.context import Ctx
from hyperlat.ideals import (
    ideal_masks,
    is_c_hyperideal,
    is_strong_c_hyperideal,
    jacobson,
    power_radical,
    prime_radical,
    proper_ideal_masks,
)
from hyperlat.specfile import load

from oracles import Oracle, as_mask, as_set

ROOT = Path(__file__).resolve().parent.parent
SPECS = ROOT / "specs"
REPORTED_IDS = ("T4.10", "T4.12q", "T5.5", "T5.7")


def test_criteria_catalog_complete():
    from conftest import CRITERIA
    assert sorted(CRITERIA) == list(range(1, 10))


# 1 -------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_z6_zero_ideal():
    t = time.perf_counter()
    H = load(SPECS / "z6.json")
    report = cl.classify(H, bits.mask([0]))
    elapsed = time.perf_counter() - t
    assert report.flags["2_absorbing_j_prime"] is True
    assert report.flags["j_prime"] is False
    x, y = report.witnesses["j_prime"]
    assert bits.members(H.mul[x][y]) == [0]
    assert elapsed < 1.0


# 2 -------------------------------------------------------------------------

@pytest.mark.criterion(2)
def test_enumeration_matches_subset_filter(corpus):
    checked = 0
    for inst in corpus:
        H = inst.ring
        if H.n > 12:
            continue
        assert sorted(ideal_masks(H)) == sorted(as_mask(I) for I in Oracle(H).ideals()), inst.id
        checked += 1
    assert checked > 100


# 3 -------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_power_radical_law(corpus):
    equal_cases = 0
    for inst in corpus:
        H = inst.ring
        o = Oracle(H) if H.n <= 12 else None
        for I in ideal_masks(H):
            D, rad = power_radical(H, I), prime_radical(H, I).members
            assert bits.subset(D, rad), (inst.id, bits.fmt(I))
            if is_c_hyperideal(H, I):
                assert D == rad, (inst.id, bits.fmt(I))
                equal_cases += 1
            if o is not None:
                assert as_set(D) == o.power_radical(as_set(I))
                assert as_set(rad) == o.radical(as_set(I))
    assert equal_cases > 0


# 4 -------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_default_suite_law_tier_clean(suite_timed):
    report, elapsed = suite_timed
    assert [(f.claim, f.instance) for f in report.law_violations] == []
    assert report.vacuous_laws == ["T3.8w"]
    assert report.passed
    assert elapsed < 300


@pytest.mark.criterion(4)
def test_default_suite_exit_code(capsys):
    code = main(["theorems"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.rstrip().endswith("PASS")


# 5 -------------------------------------------------------------------------

def _oracle_pair_scan(H, I, left):
    """First (x, y) with x o y inside I, x outside ``left``, y outside I."""
    for x in range(H.n):
        if bits.contains(left, x):
            continue
        for y in range(H.n):
            if not bits.contains(I, y) and bits.subset(H.mul[x][y], I):
                return x, y
    return None


@pytest.mark.criterion(5)
def test_unital_products_have_no_j_prime(corpus):
    products = [i for i in corpus if i.kind == "product" and i.ring.n <= 30
                and all(has_nonzero_identity(f.ring) for f in i.factors)]
    assert products
    for inst in products:
        H = inst.ring
        J = jacobson(H).members
        for I in proper_ideal_masks(H):
            assert not cl.is_j_prime(H, I), (inst.id, bits.fmt(I))
            assert _oracle_pair_scan(H, I, J) is not None


@pytest.mark.criterion(5)
def test_triple_products_have_no_two_absorbing_j_prime(corpus):
    triples = [i for i in corpus if i.kind == "triple" and i.ring.n <= 12]
    assert triples
    for inst in triples:
        H = inst.ring
        o = Oracle(H)
        for I in proper_ideal_masks(H):
            assert not cl.is_2_absorbing_j_prime(H, I), (inst.id, bits.fmt(I))
            assert not o.classes(as_set(I))["2_absorbing_j_prime"]


# 6 -------------------------------------------------------------------------

def _in_class(H, I, name):
    # classes are families of proper ideals
    return I != H.full and cl.holds(name, H, I)


@pytest.mark.criterion(6)
def test_product_characterization(corpus):
    pairs = 0
    for inst in (i for i in corpus if i.kind == "product"):
        a, b = inst.factors
        H1, H2, P = a.ring, b.ring, inst.ring
        for I1 in ideal_masks(H1):
            for I2 in ideal_masks(H2):
                X = ideal_pair(H1, H2, I1, I2)
                lhs = _in_class(P, X, "2_absorbing_j_prime")
                rhs = _in_class(H1, I1, "j_prime") and _in_class(H2, I2, "j_prime")
                assert lhs == rhs, (inst.id, bits.fmt(I1), bits.fmt(I2))
                pairs += 1
    assert pairs > 1000


# 7 -------------------------------------------------------------------------

@pytest.mark.criterion(7)
def test_strong_c_formulations_agree(corpus):
    seen = 0
    for inst in corpus:
        H = inst.ring
        strong = [I for I in proper_ideal_masks(H) if is_strong_c_hyperideal(H, I)]
        if not strong:
            continue
        o = Oracle(H)
        ideals = [as_set(m) for m in ideal_masks(H)]
        J = as_set(jacobson(H).members)
        ctx = Ctx(inst)
        for I in strong:
            forms = o.two_absorbing_forms(as_set(I), ideals, J)
            assert len(set(forms.values())) == 1, (inst.id, bits.fmt(I), forms)
            assert strong_c_conditions(ctx, I) == forms
            assert forms["elementwise"] == cl.is_2_absorbing_j_prime(H, I)
            seen += 1
    assert seen > 0


# 8 -------------------------------------------------------------------------

def _flipped(claim):
    """Same hypothesis, conclusion forced false so every binding is a violation."""
    real = claim.conclusion

    def conclusion(ctx, b):
        out = real(ctx, b)
        detail = out[1] if isinstance(out, tuple) else {}
        return False, {"flipped": True, "original": bool(out[0] if isinstance(out, tuple) else out), **detail}
    return dataclasses.replace(claim, conclusion=conclusion)


@pytest.mark.criterion(8)
def test_reported_tier_catalog():
    tiers = {c.id: c.tier for c in claims_mod.CLAIMS}
    for cid in REPORTED_IDS:
        assert tiers[cid] == "reported"


@pytest.mark.criterion(8)
def test_reported_findings_in_default_run(suite_timed):
    report, _ = suite_timed
    for f in report.findings:
        if f.claim in REPORTED_IDS and f.verdict == "violated":
            assert f.bindings and f.witness
    assert report.passed == (not report.law_violations)


@pytest.mark.criterion(8)
def test_reported_violations_never_change_exit_code(monkeypatch, capsys):
    new = [_flipped(c) if c.id in REPORTED_IDS else c for c in claims_mod.CLAIMS]
    monkeypatch.setattr(claims_mod, "CLAIMS", new)
    monkeypatch.setattr(claims_mod, "BY_ID", {c.id: c for c in new})
    suite = ",".join(REPORTED_IDS)
    code = main(["theorems", "--suite", suite, "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0 and doc["passed"] is True
    violated = [f for f in doc["findings"] if f["verdict"] == "violated"]
    assert {f["claim"] for f in violated} == set(REPORTED_IDS)
    for f in violated:
        assert f["tier"] == "reported"
        assert f["bindings"] and f["witness"]["flipped"] is True
    code = main(["theorems", "--suite", suite])
    text = capsys.readouterr().out
    assert code == 0 and "[reported]" in text and text.rstrip().endswith("PASS")


@pytest.mark.criterion(8)
def test_reported_conclusions_carry_witnesses(corpus):
    inst = next(i for i in corpus if i.id == "zn6[1,2,3,4,5]")
    ctx = Ctx(inst)
    by_id = claims_mod.BY_ID
    # hand each conclusion a binding outside its class; the witness must be the classifier's
    exercised = 0
    for cid, key, name in (("T4.10", "M", "quasi_j_prime"), ("T4.12q", "I", "quasi_primary"),
                           ("T5.7", "I", "2_absorbing_j_prime"), ("T5.7", "I", "prime")):
        failing = [I for I in ctx.proper if not ctx.cls(name, I)]
        if not failing:
            continue
        exercised += 1
        conclusion = by_id[cid].conclusion if name != "prime" else claims_mod._in_class(name)
        ok, detail = conclusion(ctx, {key: failing[0]})
        assert not ok and detail["class"] == name
        assert tuple(detail["counterwitness"]) == cl.find_violation(name, inst.ring, failing[0])
    outside_j = [I for I in ctx.proper if not bits.subset(I, ctx.J)]
    ok, detail = by_id["T5.5"].conclusion(ctx, {"I": outside_j[0]})
    assert not ok and detail["within_j_of_r"] is False
    assert exercised


# 9 -------------------------------------------------------------------------

def _cli_json(hash_seed, *extra):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    proc = subprocess.run([sys.executable, "-m", "hyperlat", "theorems", "--format", "json", *extra],
                          capture_output=True, env=env, cwd=ROOT)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


@pytest.mark.criterion(9)
def test_byte_identical_reports(suite_timed):
    a = _cli_json(1)
    b = _cli_json(2)
    assert a == b
    report, _ = suite_timed
    assert a == (report.to_json() + "\n").encode()


@pytest.mark.criterion(9)
def test_byte_identical_reports_with_seed():
    small = str(SPECS / "corpus_small.json")
    assert _cli_json(3, "--corpus", small, "--seed", "99") == _cli_json(4, "--corpus", small, "--seed", "99")


@pytest.mark.criterion(9)
def test_in_process_rerun_identical(small_corpus):
    assert run_suite(small_corpus).to_json() == run_suite(small_corpus).to_json()
