import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from autocomm.automorphism import enumerate_automorphisms  # noqa: E402
from autocomm.catalog import standard_corpus  # noqa: E402


@lru_cache(maxsize=None)
def aut_of(G):
    return enumerate_automorphisms(G)


def corpus(max_order):
    return standard_corpus(max_order)


def corpus_params(max_order):
    return [pytest.param(G, id=G.name) for G in standard_corpus(max_order)]


@pytest.fixture
def aut():
    return aut_of


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(n))
