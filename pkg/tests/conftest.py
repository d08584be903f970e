import functools

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@functools.cache
def corpus_members():
    from hopflab.corpus_io.builders import default_corpus

    return tuple(default_corpus())


@pytest.fixture(scope="session")
def corpus():
    return dict(corpus_members())


@pytest.fixture(scope="session")
def h4():
    return dict(corpus_members())["H4"]


@pytest.fixture(scope="session")
def t3():
    return dict(corpus_members())["T3"]


@pytest.fixture(scope="session")
def uq_dual():
    return dict(corpus_members())["uqsl2_3_dual"]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(':'))):
            terminalreporter.write_line(line)
