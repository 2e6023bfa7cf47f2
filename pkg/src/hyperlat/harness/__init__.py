"""Executable claims, instance corpora and the suite runner."""
from .claims import CLAIMS, Claim, select
from .corpus import CorpusSpec, Instance, build_corpus, default_corpus
from .runner import Finding, SuiteReport, recheck, run_suite

__all__ = ["CLAIMS", "Claim", "CorpusSpec", "Finding", "Instance", "SuiteReport",
           "build_corpus", "default_corpus", "recheck", "run_suite", "select"]
