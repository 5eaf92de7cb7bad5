import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from cyclespec.generators import GenSpec, generate
from cyclespec.graph import Graph
from cyclespec.rng import Stream

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def gen(model: str, seed: int = 0, **params) -> Graph:
    return generate(GenSpec(model=model, params=params, seed=seed))


def random_graph(n: int, p, seed: int) -> Graph:
    """Plain Bernoulli graph over all vertex pairs (test helper)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    hits = Stream(seed).bernoulli_block(len(pairs), p)
    return Graph(n, [pairs[i] for i in np.flatnonzero(hits)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def tmp_graph_file(tmp_path):
    def write(g: Graph, name: str = "g.txt") -> str:
        from cyclespec.graph import serialize

        path = tmp_path / name
        path.write_text(serialize(g))
        return str(path)

    return write
