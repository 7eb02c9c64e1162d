"""Shared fixtures and the unpruned reference oracle.

The random batches are session-scoped because several acceptance criteria
reuse them: the construction sweep, the solver cross-check, and the palette
bound all look at the same seeded graphs.
"""

import itertools

import pytest

from liec import (
    EdgeColoring,
    enumerate_connected_graphs,
    random_cactus_vdc,
    random_unicyclic,
    verify_liec,
)
from liec.families import is_T_prime_member


def brute_exists_k_liec(g, k):
    """Try every assignment of k colors to the edges, no pruning at all.

    Exponential in the edge count; keep inputs at 6 edges or fewer.
    """
    edges = sorted(g.edges)
    for combo in itertools.product(range(k), repeat=len(edges)):
        coloring = EdgeColoring(dict(zip(edges, combo)), palette_size=k)
        if not verify_liec(g, coloring):
            return True
    return False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and "criterion" in nodeid:
                rows[nodeid.split("::")[-1]] = "PASS" if outcome == "passed" else "FAIL"
    if rows:
        terminalreporter.section("acceptance criteria")
        for name in sorted(rows):
            terminalreporter.write_line(f"{name}: {rows[name]}")


@pytest.fixture(scope="session")
def small_connected():
    """All connected graphs with 1..7 edges, up to isomorphism."""
    return list(enumerate_connected_graphs(7))


@pytest.fixture(scope="session")
def unicyclic_batch():
    """1000 seeded random unicyclic graphs, 5 <= n <= 18, with T' flags."""
    batch = []
    for i in range(1000):
        g = random_unicyclic(i, 5 + (i % 14))
        batch.append((i, g, is_T_prime_member(g)))
    return batch


@pytest.fixture(scope="session")
def cactus_batch():
    """500 seeded random vertex-disjoint-cycle cacti, 2..4 cycles."""
    batch = []
    for i in range(500):
        g = random_cactus_vdc(i, 2 + (i % 3))
        batch.append((i, g, is_T_prime_member(g)))
    return batch
