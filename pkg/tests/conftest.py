import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from heegaard_theta.layout import derive_combinatorics  # noqa: E402
from heegaard_theta.source import CORPUS, load_corpus  # noqa: E402

# filled by test_acceptance.py; printed at the end of the session
CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.fixture(scope="session")
def corpus():
    return {name: load_corpus(name) for name in CORPUS}


@pytest.fixture(scope="session")
def diagrams(corpus):
    return {name: derive_combinatorics(l) for name, l in corpus.items()}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
