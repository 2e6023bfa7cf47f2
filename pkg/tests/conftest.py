import pytest

from hyperlat.constructions import product
from hyperlat.core import zn_coset, zn_scaled


def small_rings():
    """A spread of little hyperrings, with and without identity, zero-absorbing or not."""
    rings = [zn_scaled(n, A) for n, A in [
        (2, [1]), (3, [1]), (4, [1]), (4, [1, 3]), (5, [1]), (6, [1]), (6, [1, 2, 3, 4, 5]),
        (6, [2, 4]), (6, [5]), (7, [2, 3]), (8, [1]), (8, [1, 7]), (8, [2, 3]), (9, [1]),
        (10, [1, 9]), (12, [1]),
    ]]
    rings += [zn_coset(n, A, d) for n, A, d in [(4, [1], 2), (6, [1, 2], 3), (8, [1, 3], 4), (9, [1], 3)]]
    rings.append(product(zn_scaled(2, [1]), zn_scaled(3, [1])))
    rings.append(product(zn_scaled(2, [1]), zn_scaled(4, [1, 3])))
    return rings


@pytest.fixture(scope="session")
def rings():
    return small_rings()


@pytest.fixture
def z6():
    return zn_scaled(6, [1, 2, 3, 4, 5])


@pytest.fixture(scope="session")
def corpus():
    from hyperlat.harness import default_corpus
    return default_corpus()


@pytest.fixture(scope="session")
def suite_timed(corpus):
    """The full default suite, run once per session, with its wall time."""
    import time
    from hyperlat.harness import run_suite
    t = time.perf_counter()
    report = run_suite(corpus)
    return report, time.perf_counter() - t


@pytest.fixture(scope="session")
def small_corpus():
    import json
    from pathlib import Path
    from hyperlat.harness import CorpusSpec, build_corpus
    doc = json.loads((Path(__file__).resolve().parent.parent / "specs" / "corpus_small.json").read_text())
    return build_corpus(CorpusSpec.from_dict(doc))


# ---------------------------------------------------------------- acceptance summary

CRITERIA = {
    1: "z6 zero ideal: 2-absorbing J-prime, not J-prime (witness product {0})",
    2: "hyperideal enumeration equals the 2^n subset filter for n <= 12",
    3: "D = sqrt(I) on C-hyperideals, D within sqrt(I) always",
    4: "default theorem suite: no law violations, only T3.8w vacuous, under 5 minutes",
    5: "products of unital rings have no J-prime; triple products no 2-absorbing J-prime",
    6: "I1 x I2 2-absorbing J-prime iff I1 and I2 J-prime",
    7: "strong C-hyperideals: four 2-absorbing J-prime formulations agree",
    8: "reported-tier violations carry witnesses and leave the exit code alone",
    9: "identical spec and seed give byte-identical JSON reports",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key in report.keywords:
        if key.startswith("criterion_"):
            _outcomes.setdefault(int(key.split("_")[1]), []).append(report.passed)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.keywords[f"criterion_{m.args[0]}"] = True


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, text in CRITERIA.items():
        runs = _outcomes.get(n)
        status = "NOT RUN" if runs is None else ("PASS" if all(runs) else "FAIL")
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
