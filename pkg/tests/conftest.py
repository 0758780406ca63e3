import itertools
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from activelat import families
from activelat.corpus import named_instances, random_instances
from activelat.matroid import from_bases, graphic, uniform

# criterion number -> list of (label, ok) filled by test_acceptance
ACCEPTANCE: dict[int, list] = {}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", help="also run the slow K5 cases")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        results = ACCEPTANCE[num]
        ok = all(r for _, r in results)
        bad = [name for name, r in results if not r]
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({len(results)} cases)"
        if bad:
            line += " failing: " + ", ".join(bad[:5])
        terminalreporter.write_line(line)


def small_matroids():
    """A fixed zoo of small matroids, with loops, coloops and parallel classes."""
    zoo = {
        "U2,4": uniform(4, 2),
        "U3,5": uniform(5, 3),
        "U0,3": uniform(3, 0),
        "U3,3": uniform(3, 3),
        "K4": families.complete(4),
        "C4": families.cycle(4),
        "P3": families.parallel(3),
        "F3": families.fan(3),
        "W3": families.wheel(3),
        "loopy": graphic(3, [(0, 1), (1, 1), (1, 2), (0, 2), (0, 2)]),
        "bridge": graphic(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
        "explicit": from_bases(5, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3), (1, 2)]),
    }
    return zoo


@pytest.fixture(scope="session")
def zoo():
    return small_matroids()


@pytest.fixture(scope="session")
def corpus_instances():
    return named_instances() + random_instances(50, seed=0)


def all_orders(m):
    for perm in itertools.permutations(range(m.size)):
        yield perm


def seeded_orders(m, count, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(m.size))
        rng.shuffle(perm)
        out.append(perm)
    return out
