import json
from pathlib import Path

import pytest

from unionstab.diagram import parse_diagram
from unionstab.words import GroupPresentation

CORPUS = Path(__file__).parent / "corpus" / "diagrams.jsonl"

# standard trefoil, entered by hand: each crossing lists incoming under,
# then the other labels counterclockwise
TREFOIL_PD = """\
Xp 1 5 2 4
Xp 3 1 4 6
Xp 5 3 6 2
"""

THETA = """\
V 1+ 2+ 3+
V 3- 2- 1-
"""


def load_corpus():
    with CORPUS.open() as fh:
        return [json.loads(line) for line in fh]


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture
def trefoil_pd():
    return parse_diagram(TREFOIL_PD)


@pytest.fixture
def trefoil_group():
    # <x, y | x y x = y x y>
    return GroupPresentation(2, ((1, 2, 1, -2, -1, -2),))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
