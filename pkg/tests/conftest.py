import shutil

import pytest

from bzsv.tables import default_corpus_path, load_corpus


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def by_id(corpus):
    return {e.id: e for e in corpus}


@pytest.fixture
def corpus_copy(tmp_path):
    """A writable copy of the shipped data directory."""
    dst = tmp_path / "data"
    shutil.copytree(default_corpus_path(), dst)
    return dst


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
