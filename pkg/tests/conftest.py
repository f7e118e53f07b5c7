import random

import pytest

from spectral_turan import families as fam
from spectral_turan.graph import complete_graph, cycle_graph, path_graph
from spectral_turan.search import free_levels

import oracles


@pytest.fixture(scope="session")
def small_connected():
    """Every connected graph with at most 7 edges, one per isomorphism class."""
    return [g for level in free_levels(7, None) for g in level]


@pytest.fixture(scope="session")
def corpus(small_connected):
    rng = random.Random(2024)
    graphs = list(small_connected)
    graphs += [complete_graph(n) for n in range(2, 9)]
    graphs += [cycle_graph(n) for n in range(3, 12)] + [path_graph(n) for n in range(2, 14)]
    graphs += [fam.family_F(22, 1), fam.family_F(23, 2), fam.split_star(8, 2),
               fam.star_matching(20, 3), fam.h_figure1(18), fam.double_star(5, 3),
               fam.complete_bipartite(3, 5), fam.theta(2, 3, 4)]
    graphs += [oracles.random_connected_graph(rng, rng.randint(2, 14), rng.uniform(0.05, 0.6))
               for _ in range(150)]
    return graphs


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance line; collected problems fail the test."""
    import contextlib

    @contextlib.contextmanager
    def run(number: int, title: str):
        problems: list[str] = []
        line = None
        try:
            yield problems
        except Exception as e:
            line = f"criterion {number} FAIL  {title}: {type(e).__name__}: {e}"
            raise
        finally:
            if line is None:
                status = "PASS" if not problems else "FAIL"
                detail = "" if not problems else f": {len(problems)} problem(s), first: {problems[0]}"
                line = f"criterion {number} {status}  {title}{detail}"
            print(line)
            request.config.stash[_ACCEPTANCE_KEY].append(line)
        assert not problems, problems[:5]

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
