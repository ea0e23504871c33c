import os
import random
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repo")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for randomised tests")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RESOLVESETS_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="set RESOLVESETS_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def datadir():
    return Path(__file__).parent / "data"


_CRITERIA = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line, print it, then assert."""
    lines = request.config.stash.setdefault(_CRITERIA, [])

    def check(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        lines.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_CRITERIA, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
