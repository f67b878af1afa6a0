import random
from itertools import combinations

import pytest

from restchroma import Graph, Restraint, cycle_graph, path_graph


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


def random_graph(rng: random.Random, max_n: int = 6, edge_prob: float = 0.5) -> Graph:
    n = rng.randint(1, max_n)
    edges = [e for e in combinations(range(n), 2) if rng.random() < edge_prob]
    return Graph(n, edges)


def random_restraint(rng: random.Random, n: int, max_colour: int = 6, max_size: int = 3) -> Restraint:
    sets = []
    for _ in range(n):
        size = rng.randint(0, max_size)
        sets.append(rng.sample(range(1, max_colour + 1), min(size, max_colour)))
    return Restraint(sets)
