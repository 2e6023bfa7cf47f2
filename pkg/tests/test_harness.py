import dataclasses
import json
from pathlib import Path

import pytest

from hyperlat import bits
from hyperlat.cli import main
from hyperlat.harness import CLAIMS, CorpusSpec, build_corpus, recheck, run_suite, select
from hyperlat.harness import claims as claims_mod
from hyperlat.harness.context import Ctx
from hyperlat.harness.runner import VACUOUS, VIOLATED, decode_binding, encode_binding, evaluate

SMALL = str(Path(__file__).resolve().parent.parent / "specs" / "corpus_small.json")
REPORTED_IDS = {"T4.10", "T4.12q", "T5.5", "T5.7"}


def test_catalog_ids_unique_and_tiers():
    ids = [c.id for c in CLAIMS]
    assert len(ids) == len(set(ids))
    assert {c.id for c in CLAIMS if c.tier == "reported"} == REPORTED_IDS
    assert all(c.tier in ("law", "reported") for c in CLAIMS)
    for c in CLAIMS:
        assert set(c.requires) <= set(claims_mod.REQUIREMENTS)


def test_select():
    assert select("all") == CLAIMS == select(None)
    assert [c.id for c in select("T5.16, T3.4,T3.4")] == ["T3.4", "T5.16"]
    assert [c.id for c in select(["T5.5"])] == ["T5.5"]
    with pytest.raises(KeyError):
        select("T3.4,nope")


def test_corpus_spec_roundtrip_and_bounds():
    spec = CorpusSpec(zn_max=5, random_tables=3, seed=4)
    assert CorpusSpec.from_dict(spec.to_dict()) == spec
    with pytest.raises(ValueError):
        CorpusSpec.from_dict({"colour": "red"})
    with pytest.raises(ValueError):
        build_corpus(CorpusSpec(zn_max=40, max_n=36))
    with pytest.raises(ValueError):
        build_corpus(CorpusSpec(a_menu=("bogus",)))


def test_corpus_deterministic_under_seed():
    a = build_corpus(CorpusSpec(zn_max=4, random_tables=6, seed=3))
    b = build_corpus(CorpusSpec(zn_max=4, random_tables=6, seed=3))
    c = build_corpus(CorpusSpec(zn_max=4, random_tables=6, seed=5))
    assert [i.id for i in a] == [i.id for i in b]
    assert [i.id for i in a] != [i.id for i in c]
    for x, y in zip(a, b):
        assert x.ring.mul == y.ring.mul


def test_corpus_kinds_well_formed(small_corpus):
    kinds = {i.kind for i in small_corpus}
    assert kinds == {"base", "random", "product", "triple", "quotient"}
    for inst in small_corpus:
        if inst.kind == "product":
            assert len(inst.factors) == 2
            assert inst.ring.n == inst.factors[0].ring.n * inst.factors[1].ring.n
        if inst.kind == "quotient":
            assert inst.parent is not None and inst.kernel is not None


def test_small_suite_passes_and_is_deterministic(small_corpus):
    r1 = run_suite(small_corpus)
    r2 = run_suite(build_corpus(CorpusSpec.from_dict(
        {"zn_min": 2, "zn_max": 5, "a_menu": ["one", "nonzero"], "extra_zn": [], "product_max": 12,
         "triple_max": 8, "random_tables": 2, "random_max_n": 6})))
    assert r1.passed
    assert r1.to_json() == r2.to_json()
    doc = json.loads(r1.to_json())
    assert len(doc["findings"]) == len(CLAIMS) * len(small_corpus)


def test_empty_corpus_all_vacuous():
    report = run_suite([])
    assert report.passed
    assert all(s.is_vacuous for s in report.summaries)
    assert report.warnings


def test_binding_codec():
    b = {"I": bits.mask([0, 3]), "a": 2, "J2": 1}
    enc = encode_binding(b)
    assert enc == {"I": [0, 3], "a": 2, "J2": [0]}
    assert decode_binding(json.loads(json.dumps(enc))) == b


def _claim(tier, conclusion, id="X1"):
    return claims_mod.Claim(id, tier, "injected", lambda c: ({"I": I} for I in c.proper), conclusion)


def test_evaluate_stops_at_first_violation(small_corpus):
    inst = next(i for i in small_corpus if i.id == "zn4[1]")
    seen = []

    def concl(ctx, b):
        seen.append(b["I"])
        return False, {"why": "injected"}
    f = evaluate(_claim("law", concl), Ctx(inst))
    assert f.verdict == VIOLATED and f.checked == 1 and len(seen) == 1
    assert f.bindings == {"I": bits.members(seen[0])}
    assert f.witness == {"why": "injected"}


def test_evaluate_surfaces_errors(small_corpus):
    def concl(ctx, b):
        raise RuntimeError("boom")
    f = evaluate(_claim("law", concl), Ctx(small_corpus[0]))
    assert f.verdict == VIOLATED and "boom" in f.witness["error"]


def test_vacuous_when_no_bindings(small_corpus):
    c = claims_mod.Claim("X2", "law", "never", lambda ctx: iter(()), lambda ctx, b: True)
    assert evaluate(c, Ctx(small_corpus[0])).verdict == VACUOUS


def _patch(monkeypatch, claim):
    new = [claim if c.id == claim.id else c for c in claims_mod.CLAIMS]
    monkeypatch.setattr(claims_mod, "CLAIMS", new)
    monkeypatch.setattr(claims_mod, "BY_ID", {c.id: c for c in new})


def test_injected_law_violation_fails_exit_code(monkeypatch, capsys):
    broken = dataclasses.replace(claims_mod.BY_ID["T3.4"], conclusion=lambda c, b: (False, {"why": "injected"}))
    _patch(monkeypatch, broken)
    code = main(["theorems", "--corpus", SMALL, "--suite", "T3.4", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 1 and doc["passed"] is False


def test_recheck_confirms_genuine_violations(monkeypatch, small_corpus):
    # a deliberately false law with real counterwitnesses: every proper ideal is prime
    broken = dataclasses.replace(claims_mod.BY_ID["T5.5"], tier="law",
                                 conclusion=claims_mod._in_class("prime"))
    _patch(monkeypatch, broken)
    report = run_suite(small_corpus, ["T5.5"])
    bad = report.law_violations
    assert bad
    by_id = {i.id: i for i in small_corpus}
    for f in bad:
        assert recheck("T5.5", by_id[f.instance], f.bindings)
    ok = next(f for f in report.findings if f.verdict == "verified")
    inst = by_id[ok.instance]
    some = Ctx(inst).proper[0]
    assert not recheck("T5.5", inst, {"I": bits.members(some)})
    assert not recheck("T5.5", inst, None)
    assert not recheck("T5.5", inst, {"I": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9][: inst.ring.n]})
