import itertools

import hypothesis
import pytest

from stirling_complexes import Cell, ComplexSpec, SimpleGraph, generate_named, is_valid_cell

hypothesis.settings.register_profile("suite", max_examples=40, deadline=None)
hypothesis.settings.load_profile("suite")


@pytest.fixture
def p3():
    return generate_named("path", 3)


@pytest.fixture
def p4():
    return generate_named("path", 4)


@pytest.fixture
def t4():
    # the 3-leg star; center is vertex 0
    return generate_named("star", 4)


@pytest.fixture
def c4():
    return generate_named("cycle", 4)


@pytest.fixture
def k4():
    return generate_named("complete", 4)


@pytest.fixture
def k5():
    return generate_named("complete", 5)


@pytest.fixture
def star_plus_edge():
    # the 3-leg star with one extra edge joining two leaves
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)])


def brute_force_cells(spec: ComplexSpec):
    """Independent route to the cell set: filter all raw element subsets."""
    g = spec.graph
    elements = list(range(g.n)) + list(g.edges)
    pools = [itertools.combinations(elements, size) for size in spec.colors.sizes]
    for combo in itertools.product(*pools):
        cell = Cell.make(combo)
        if is_valid_cell(spec, cell):
            yield cell


def all_simple_paths(g: SimpleGraph, u: int, v: int):
    """Every simple path between two vertices, by exhaustive search."""
    out = []

    def dfs(cur, seen, acc):
        if cur == v:
            out.append(tuple(acc))
            return
        for w in g.adjacency[cur]:
            if w not in seen:
                seen.add(w)
                acc.append(w)
                dfs(w, seen, acc)
                acc.pop()
                seen.discard(w)

    dfs(u, {u}, [u])
    return out
