import pytest

from kreweras.nc import NoncrossingPartition
from kreweras.trees import enumerate_trees


def nc(text, n=None):
    """Shorthand: nc("1,3/2") -> NoncrossingPartition."""
    blocks = [[int(x) for x in chunk.split(",")] for chunk in text.split("/")]
    return NoncrossingPartition.from_blocks(blocks, n)


@pytest.fixture(scope="session")
def trees_by_n():
    return {n: list(enumerate_trees(n)) for n in range(1, 9)}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
