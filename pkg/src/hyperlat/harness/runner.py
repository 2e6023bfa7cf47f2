"""Run claims over a corpus and aggregate findings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .. import bits
from .claims import LAW, Claim, select
from .context import Ctx
from .corpus import Instance

VERIFIED, VIOLATED, VACUOUS = "verified", "violated", "vacuous"


def encode_binding(b: dict) -> dict:
    """JSON form: uppercase keys are element sets, written as sorted lists."""
    out = {}
    for k, v in b.items():
        out[k] = bits.members(v) if k[:1].isupper() and isinstance(v, int) else v
    return out


def decode_binding(b: dict) -> dict:
    out = {}
    for k, v in b.items():
        out[k] = bits.mask(v) if k[:1].isupper() and isinstance(v, list) else v
    return out


@dataclass
class Finding:
    claim: str
    instance: str
    tier: str
    verdict: str
    checked: int
    bindings: dict | None = None  # first violating binding, already encoded
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"claim": self.claim, "instance": self.instance, "tier": self.tier,
                "verdict": self.verdict, "checked": self.checked,
                "bindings": self.bindings, "witness": self.witness}


@dataclass
class ClaimSummary:
    id: str
    tier: str
    description: str
    verified: int = 0
    violated: int = 0
    vacuous: int = 0
    checks: int = 0

    @property
    def is_vacuous(self) -> bool:
        return self.verified + self.violated == 0

    def to_dict(self) -> dict:
        return {"id": self.id, "tier": self.tier, "description": self.description,
                "verified": self.verified, "violated": self.violated, "vacuous": self.vacuous,
                "checks": self.checks, "is_vacuous": self.is_vacuous}


@dataclass
class SuiteReport:
    summaries: list[ClaimSummary]
    findings: list[Finding]
    instances: list[str]
    warnings: list[str] = field(default_factory=list)

    @property
    def law_violations(self) -> list[Finding]:
        return [f for f in self.findings if f.verdict == VIOLATED and f.tier == LAW]

    @property
    def reported_violations(self) -> list[Finding]:
        return [f for f in self.findings if f.verdict == VIOLATED and f.tier != LAW]

    @property
    def passed(self) -> bool:
        return not self.law_violations

    @property
    def vacuous_laws(self) -> list[str]:
        return [s.id for s in self.summaries if s.tier == LAW and s.is_vacuous]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "instances": list(self.instances),
            "claims": [s.to_dict() for s in self.summaries],
            "findings": [f.to_dict() for f in self.findings],
            "vacuous_laws": self.vacuous_laws,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"instances: {len(self.instances)}"]
        for w in self.warnings:
            lines.append(f"warning: {w}")
        for s in self.summaries:
            flag = " VACUOUS" if s.is_vacuous else ""
            lines.append(f"{s.id:8} {s.tier:8} verified={s.verified:<4} violated={s.violated:<4} "
                         f"vacuous={s.vacuous:<4} checks={s.checks}{flag}")
        for f in self.findings:
            if f.verdict == VIOLATED or (verbose and f.verdict == VERIFIED):
                lines.append(f"  [{f.tier}] {f.claim} on {f.instance}: {f.verdict}"
                             + (f" bindings={json.dumps(f.bindings, sort_keys=True)}" if f.bindings else "")
                             + (f" witness={json.dumps(f.witness, sort_keys=True)}" if f.witness else ""))
        lines.append("PASS" if self.passed else f"FAIL: {len(self.law_violations)} law-tier violation(s)")
        return "\n".join(lines)


def _outcome(result) -> tuple[bool, dict | None]:
    if isinstance(result, tuple):
        return bool(result[0]), result[1] or None
    return bool(result), None


def evaluate(claim: Claim, ctx: Ctx) -> Finding:
    """Check one claim on one instance, stopping at the first violation."""
    checked = 0
    if claim.applies(ctx):
        try:
            for b in claim.bindings(ctx):
                checked += 1
                ok, detail = _outcome(claim.conclusion(ctx, b))
                if not ok:
                    return Finding(claim.id, ctx.inst.id, claim.tier, VIOLATED, checked,
                                   encode_binding(b), detail or {})
        except Exception as e:  # surfaced as a finding, never swallowed
            return Finding(claim.id, ctx.inst.id, claim.tier, VIOLATED, checked, None,
                           {"error": f"{type(e).__name__}: {e}"})
    verdict = VERIFIED if checked else VACUOUS
    return Finding(claim.id, ctx.inst.id, claim.tier, verdict, checked)


def run_suite(corpus: list[Instance], claims: str | list[str] | None = None) -> SuiteReport:
    selected = select(claims)
    summaries = {c.id: ClaimSummary(c.id, c.tier, c.description) for c in selected}
    findings = []
    for inst in corpus:
        ctx = Ctx(inst)
        for claim in selected:
            f = evaluate(claim, ctx)
            s = summaries[claim.id]
            setattr(s, f.verdict, getattr(s, f.verdict) + 1)
            s.checks += f.checked
            findings.append(f)
    order = {c.id: k for k, c in enumerate(selected)}
    findings.sort(key=lambda f: (order[f.claim], f.instance))
    warnings = []
    if not corpus:
        warnings.append("empty corpus: every claim is vacuous")
    return SuiteReport([summaries[c.id] for c in selected], findings, [i.id for i in corpus], warnings)


def recheck(claim_id: str, instance: Instance, bindings: dict) -> bool:
    """Re-evaluate a reported violation from scratch; True iff it is still a violation."""
    claim = select([claim_id])[0]
    ctx = Ctx(instance)
    if not claim.applies(ctx):
        return False
    if bindings is None:
        return False
    b = decode_binding(bindings)
    if b not in list(claim.bindings(ctx)):
        return False
    ok, _ = _outcome(claim.conclusion(ctx, b))
    return not ok
