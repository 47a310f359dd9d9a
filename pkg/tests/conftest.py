from __future__ import annotations

import pytest

from burnkit.generators import complete_bipartite, complete_graph, prism_graph
from burnkit.reduction import build_H


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture(scope="session")
def prism():
    return prism_graph()


@pytest.fixture(scope="session")
def k4_instance(k4):
    """The full K4 reduction; built once, ~80k vertices."""
    return build_H(k4)
