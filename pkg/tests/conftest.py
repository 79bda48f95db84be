import random

import pytest

from fibpart import ResidueRestriction

ACCEPTANCE_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    ACCEPTANCE_RESULTS.append((number, title, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {number:>2}. {title} ({duration:.2f}s)")


def random_restrictions(count, seed=20240611, moduli=(2, 30)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        M = rng.randint(*moduli)
        size = rng.randint(0, M)
        out.append(ResidueRestriction(M, rng.sample(range(M), size)))
    return out


@pytest.fixture(scope="session")
def restriction_corpus():
    return random_restrictions(100)
