import pytest

from affine_qschur.bases import BasisContext

# (criterion, item, passed) triples filled in by test_acceptance.py
ACCEPTANCE = []

CRITERIA = {
    1: "worked examples",
    2: "bidiagonal products agree with the Hecke oracle",
    3: "monomial elements are unitriangular",
    4: "bar involution",
    5: "canonical basis",
    6: "double coset structure",
    7: "algebra sanity",
}


@pytest.fixture(scope="session")
def contexts():
    """Shared memo tables, one per shape, reused across test modules."""
    cache = {}

    def get(n, d):
        if (n, d) not in cache:
            cache[(n, d)] = BasisContext(n, d)
        return cache[(n, d)]

    return get


@pytest.fixture
def criterion():
    def record(number, item, passed):
        ACCEPTANCE.append((number, item, bool(passed)))
        assert passed, f"criterion {number}: {item}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number, title in CRITERIA.items():
        items = [(item, ok) for n, item, ok in ACCEPTANCE if n == number]
        if not items:
            tr.write_line(f"criterion {number} ({title}): NOT RUN")
            continue
        good = sum(ok for _, ok in items)
        status = "PASS" if good == len(items) else "FAIL"
        line = f"criterion {number} ({title}): {status} [{good}/{len(items)} checks]"
        failing = [item for item, ok in items if not ok]
        if failing:
            line += "; failing: " + "; ".join(failing)
        tr.write_line(line)
