"""Command-line front end.

Exit codes: 0 success, 1 domain failure (axiom or law violation, not a
hyperideal, ...), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import bits
from . import classify as cl
from . import ideals as idl
from .core import AxiomError, FiniteHyperring, StructureError, require_valid, validate_axioms
from .specfile import SpecError, load, max_carrier

OK, DOMAIN, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


@dataclasses.dataclass(frozen=True)
class CliConfig:
    command: str
    path: str | None
    format: str = "text"
    ideal: tuple[int, ...] | None = None
    generate: bool = False
    corpus: str | None = None
    suite: str = "all"
    seed: int | None = None
    verbose: bool = False


def _emit(cfg: CliConfig, doc: dict, text: str) -> None:
    if cfg.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _parse_ideal(raw: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in raw.split(",") if t.strip() != "")
    except ValueError:
        raise UsageError(f"--ideal expects comma-separated element indices, got {raw!r}") from None
    if not vals:
        raise UsageError("--ideal needs at least one element")
    return vals


def _load(cfg: CliConfig) -> FiniteHyperring:
    return load(cfg.path)


def _selected(cfg: CliConfig, H: FiniteHyperring, required: bool = True) -> int | None:
    if cfg.ideal is None:
        if required:
            raise UsageError("this command needs --ideal")
        return None
    for x in cfg.ideal:
        if not 0 <= x < H.n:
            raise UsageError(f"element {x} outside the carrier [0, {H.n})")
    S = bits.mask(cfg.ideal)
    if cfg.generate:
        return idl.generated_ideal(H, S).members
    if not idl.is_hyperideal(H, S):
        raise DomainError(f"{bits.fmt(S)} is not a hyperideal")
    return S


def _valid(H: FiniteHyperring) -> None:
    try:
        require_valid(H)
    except AxiomError as e:
        raise DomainError(str(e)) from e


# ---------------------------------------------------------------- commands

def cmd_validate(cfg: CliConfig) -> int:
    H = _load(cfg)
    report = validate_axioms(H)
    lines = [f"{H.name or 'hyperring'}: n={H.n} commutative={report.commutative} "
             f"identities={list(report.identities)}"]
    for r in report.results:
        status = "ok" if r.ok else "FAIL"
        extra = "" if r.ok else f" witness={list(r.witness) if r.witness is not None else None} {r.detail}".rstrip()
        lines.append(f"  {r.name:22} {status}{extra}")
    lines.append("valid" if report.ok else "invalid")
    _emit(cfg, report.to_dict(), "\n".join(lines))
    return OK if report.ok else DOMAIN


def _ideal_rows(H: FiniteHyperring) -> list[dict]:
    rows = []
    maximal = set(idl.maximal_masks(H)) if idl.proper_ideal_masks(H) else set()
    for I in idl.ideal_masks(H):
        proper = I != H.full
        rows.append({
            "elements": bits.members(I),
            "size": bits.size(I),
            "generators": idl.minimal_generators(H, I),
            "proper": proper,
            "maximal": I in maximal,
            "prime": proper and cl.holds("prime", H, I),
            "c_hyperideal": idl.is_c_hyperideal(H, I),
        })
    return rows


def cmd_ideals(cfg: CliConfig) -> int:
    H = _load(cfg)
    _valid(H)
    rows = _ideal_rows(H)
    lines = [f"{len(rows)} hyperideals of {H.name or 'hyperring'} (n={H.n})"]
    for r in rows:
        flags = [k for k in ("maximal", "prime", "c_hyperideal") if r[k]]
        lines.append(f"  {bits.fmt(bits.mask(r['elements'])):24} size={r['size']:<3} "
                     f"gens={r['generators']} {' '.join(flags)}".rstrip())
    _emit(cfg, {"ring": H.name, "n": H.n, "count": len(rows), "ideals": rows}, "\n".join(lines))
    return OK


def cmd_classify(cfg: CliConfig) -> int:
    H = _load(cfg)
    _valid(H)
    I = _selected(cfg, H)
    try:
        report = cl.classify(H, I)
    except cl.PreconditionError as e:
        raise DomainError(str(e)) from e
    doc = report.to_dict()
    lines = [f"ideal {bits.fmt(I)} in {H.name or 'hyperring'}"]
    for name in cl.CHECKERS:
        w = report.witnesses[name]
        lines.append(f"  {name:22} {str(report.flags[name]).lower()}"
                     + ("" if w is None else f"  witness={list(w)}"))
    for note in report.notes:
        lines.append(f"note: {note}")
    _emit(cfg, doc, "\n".join(lines))
    return OK


def cmd_radical(cfg: CliConfig) -> int:
    H = _load(cfg)
    _valid(H)
    I = _selected(cfg, H)
    rad = idl.prime_radical(H, I).members
    D = idl.power_radical(H, I)
    c = idl.is_c_hyperideal(H, I)
    doc = {"ideal": bits.members(I), "prime_radical": bits.members(rad), "power_radical": bits.members(D),
           "c_hyperideal": c, "equal": D == rad}
    text = (f"ideal        {bits.fmt(I)}\nprime radical {bits.fmt(rad)}\npower radical "
            f"{bits.fmt(D)}\nc_hyperideal {str(c).lower()}")
    _emit(cfg, doc, text)
    return OK


def cmd_jacobson(cfg: CliConfig) -> int:
    H = _load(cfg)
    _valid(H)
    I = _selected(cfg, H, required=False)
    try:
        if I is None:
            J = idl.jacobson(H).members
        else:
            J = idl.jacobson_of(H, I).members
    except (idl.NoProperIdealError, ValueError) as e:
        raise DomainError(str(e)) from e
    maximal = idl.maximal_masks(H)
    doc = {"ideal": None if I is None else bits.members(I), "jacobson": bits.members(J),
           "maximal": [bits.members(M) for M in maximal], "local": len(maximal) == 1}
    label = "J(R)" if I is None else f"J({bits.fmt(I)})"
    text = f"{label} = {bits.fmt(J)}\nmaximal: {', '.join(bits.fmt(M) for M in maximal)}"
    _emit(cfg, doc, text)
    return OK


def cmd_theorems(cfg: CliConfig) -> int:
    from .harness import CorpusSpec, build_corpus, run_suite, select

    doc = {}
    if cfg.corpus:
        try:
            doc = json.loads(Path(cfg.corpus).read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError) as e:
            raise SpecError(f"cannot read {cfg.corpus}: {e}") from e
        except json.JSONDecodeError as e:
            raise SpecError(f"{cfg.corpus}: invalid JSON ({e})") from e
        if not isinstance(doc, dict):
            raise SpecError("corpus spec must be a JSON object")
    doc.setdefault("max_n", max_carrier())
    if cfg.seed is not None:
        doc["seed"] = cfg.seed
    try:
        spec = CorpusSpec.from_dict(doc)
        select(cfg.suite)
        corpus = build_corpus(spec)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(str(e.args[0] if isinstance(e, KeyError) else e)) from e
    report = run_suite(corpus, cfg.suite)
    if cfg.format == "json":
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
    _emit(cfg, report.to_dict(), report.to_text(verbose=cfg.verbose))
    return OK if report.passed else DOMAIN


COMMANDS = {
    "validate": cmd_validate,
    "ideals": cmd_ideals,
    "classify": cmd_classify,
    "radical": cmd_radical,
    "jacobson": cmd_jacobson,
    "theorems": cmd_theorems,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    selector = argparse.ArgumentParser(add_help=False)
    selector.add_argument("--ideal", type=str, help="comma-separated element indices")
    selector.add_argument("--generate", action="store_true",
                          help="treat --ideal as generators rather than the ideal itself")

    p = argparse.ArgumentParser(prog="hyperlat", description="Finite multiplicative hyperring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("validate", "ideals"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("path")
    for name in ("classify", "radical", "jacobson"):
        sp = sub.add_parser(name, parents=[common, selector])
        sp.add_argument("path")
    th = sub.add_parser("theorems", parents=[common])
    th.add_argument("--corpus", help="corpus spec JSON (defaults to the built-in corpus)")
    th.add_argument("--suite", default="all", help="comma-separated claim ids, or 'all'")
    th.add_argument("--seed", type=int)
    th.add_argument("--verbose", action="store_true", help="list verified findings too")
    return p


def parse_config(argv: list[str] | None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    ideal = _parse_ideal(ns.ideal) if getattr(ns, "ideal", None) is not None else None
    seed = getattr(ns, "seed", None)
    if seed is not None and not 0 <= seed < 2 ** 64:
        raise UsageError("--seed must fit in an unsigned 64-bit integer")
    return CliConfig(
        command=ns.command,
        path=getattr(ns, "path", None),
        format=ns.format,
        ideal=ideal,
        generate=getattr(ns, "generate", False),
        corpus=getattr(ns, "corpus", None),
        suite=getattr(ns, "suite", "all"),
        seed=seed,
        verbose=getattr(ns, "verbose", False),
    )


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as e:  # argparse already printed usage
        return USAGE if e.code else OK
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except (UsageError, SpecError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (DomainError, AxiomError, StructureError, idl.NotAHyperidealError, cl.PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN


if __name__ == "__main__":
    sys.exit(main())
