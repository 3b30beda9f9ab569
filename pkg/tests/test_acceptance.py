"""End-to-end acceptance suite.

One test per numbered requirement; each prints a PASS line once its
assertions hold (run ``pytest tests/test_acceptance.py -v -s`` to see them).
Expected numbers are exact integers throughout.

Note on requirement 2: the 1-cell count for the star with five uniform groups
is 3810 = C(5,1) * (3 * 4**4 - 6); the closed form, the brute-force
enumeration, and the edge-tuple oracle all give that value, and the test
asserts their three-way agreement as well as the value itself.
"""

import itertools
import random

import pytest

from stirling_complexes import (
    ColorVector,
    ComplexSpec,
    HypothesisNotMetError,
    SimpleGraph,
    build_one_skeleton,
    component_labels,
    connected_components,
    count_valid_edge_tuples,
    enumerate_cells,
    f_vector,
    generate_named,
    is_nontrivial,
    leapfrog,
    max_dimension,
    occupancy,
    plan,
    plan_bfs,
    shortest_path,
    swap_colors,
    swap_third,
    two_one_cell_counts,
    uniform_cell_counts,
    verify_plan,
    wedge_count,
)

P3 = generate_named("path", 3)
P4 = generate_named("path", 4)
T4 = generate_named("star", 4)
C4 = generate_named("cycle", 4)
K4 = generate_named("complete", 4)
K5 = generate_named("complete", 5)
STAR_PLUS_EDGE = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)])

PLANNER_FIXTURES = [
    ("P3 (2,2,1)", P3, (2, 2, 1)),
    ("T4 (3,3,3)", T4, (3, 3, 3)),
    ("C4 (2,2,1,1)", C4, (2, 2, 1, 1)),
    ("K4 (2,1,1,1)", K4, (2, 1, 1, 1)),
]


def pad(seq, width):
    return tuple(seq) + (0,) * (width - len(seq))


def occ_map(g, cell):
    return [set(occupancy(cell, v)) for v in range(g.n)]


def random_simple_path(g, rng, z, x):
    """A random simple path from z to x, by randomized depth-first search."""

    def dfs(cur, seen, acc):
        if cur == x:
            return tuple(acc)
        nbrs = list(g.adjacency[cur])
        rng.shuffle(nbrs)
        for w in nbrs:
            if w not in seen:
                seen.add(w)
                acc.append(w)
                found = dfs(w, seen, acc)
                if found:
                    return found
                acc.pop()
                seen.discard(w)
        return None

    return dfs(z, {z}, [z])


def test_criterion_1_two_one_table():
    expected = [
        (P4, (108, 144), 37),
        (T4, (108, 144), 37),
        (C4, (108, 192), 85),
        (K4, (108, 288), 181),
        (K5, (840, 3120), 2281),
    ]
    for g, counts, circles in expected:
        spec = ComplexSpec(g, ColorVector.two_one(g.n))
        assert f_vector(spec) == counts
        assert two_one_cell_counts(g) == counts
        assert wedge_count(g) == circles
    print("ACCEPTANCE 1 (two-one table, enumeration = formula, wedge counts): PASS")


T4_UNIFORM_COLUMNS = {
    2: (12, 12, 0),
    3: (60, 126, 72, 0),
    4: (252, 744, 792, 312, 0),
    5: (1020, 3810, 5640, 4020, 1200, 0),
}
K5_UNIFORM_COLUMNS = {
    2: (20, 60, 30),
    3: (120, 690, 1260, 690),
    4: (620, 4920, 14520, 18720, 8730),
    5: (3120, 31150, 124200, 246800, 243600, 94890),
}


def check_uniform_column(g, size, r, expected, with_oracle):
    formula = uniform_cell_counts(g, r)
    fv = f_vector(ComplexSpec(g, ColorVector.uniform(size, r)))
    width = max(len(fv), len(formula), len(expected))
    assert pad(formula, width) == pad(expected, width)
    assert pad(fv, width) == pad(expected, width)
    if with_oracle:
        oracle = tuple(count_valid_edge_tuples(g, r, i) for i in range(r + 1))
        assert pad(oracle, width) == pad(expected, width)


def test_criterion_2_uniform_table():
    for r in range(2, 6):
        check_uniform_column(T4, 3, r, T4_UNIFORM_COLUMNS[r], with_oracle=True)
    for r in range(2, 5):
        check_uniform_column(K5, 4, r, K5_UNIFORM_COLUMNS[r], with_oracle=True)
    print("ACCEPTANCE 2 (uniform table, three-way agreement; star r<=5, complete r<=4): PASS")


@pytest.mark.slow
def test_criterion_2_uniform_table_k5_r5():
    check_uniform_column(K5, 4, 5, K5_UNIFORM_COLUMNS[5], with_oracle=True)
    print("ACCEPTANCE 2 (uniform table, complete graph r=5): PASS")


def test_criterion_3_in_text_counts():
    assert f_vector(ComplexSpec(T4, ColorVector((3, 2)))) == (12, 9)
    count, _ = connected_components(ComplexSpec(T4, ColorVector((3, 2))))
    assert count == 3
    assert f_vector(ComplexSpec(T4, ColorVector((1, 1, 1, 1, 1)))) == (240, 360)
    assert f_vector(ComplexSpec(P3, ColorVector((2, 2, 1)))) == (21, 32, 10)
    fv = f_vector(ComplexSpec(STAR_PLUS_EDGE, ColorVector((3, 3, 3, 3))))
    assert fv[2] == 1428
    print("ACCEPTANCE 3 (in-text cell counts): PASS")


def test_criterion_4_cover_off_fixtures():
    hexagon = f_vector(ComplexSpec(T4, ColorVector((2,)), require_cover=False))
    assert hexagon == (6, 6)
    twelve_gon = f_vector(ComplexSpec(T4, ColorVector((1, 1)), require_cover=False))
    assert twelve_gon == (12, 12)
    augmented = f_vector(ComplexSpec(STAR_PLUS_EDGE, ColorVector((2,)), require_cover=False))
    assert augmented == (6, 8, 1)
    print("ACCEPTANCE 4 (coverage-off hexagon, 12-gon, augmented-star fixtures): PASS")


def test_criterion_5_connectivity_and_planner():
    rng = random.Random(2024)
    for name, g, sizes in PLANNER_FIXTURES:
        spec = ComplexSpec(g, ColorVector(sizes))
        assert is_nontrivial(spec) and len(sizes) >= 3
        count, _ = connected_components(spec)
        assert count == 1, name
        cells = list(enumerate_cells(spec, dim=0))
        for _ in range(200):
            a, b = rng.choice(cells), rng.choice(cells)
            result = plan(spec, a, b)
            check = verify_plan(result)
            assert check and result.end == b, name
    print("ACCEPTANCE 5 (single component; 200 verified plans per fixture): PASS")


def _fixture_states():
    out = []
    for _, g, sizes in PLANNER_FIXTURES:
        spec = ComplexSpec(g, ColorVector(sizes))
        out.append((spec, list(enumerate_cells(spec, dim=0))))
    return out


def test_criterion_6_leapfrog_postconditions():
    rng = random.Random(61)
    states = _fixture_states()
    done = 0
    while done < 500:
        spec, cells = rng.choice(states)
        g = spec.graph
        cell = rng.choice(cells)
        omap = occ_map(g, cell)
        donors = [z for z in range(g.n) if len(omap[z]) >= 2]
        z = rng.choice(donors)
        k = rng.choice(sorted(omap[z]))
        targets = [x for x in range(g.n) if x != z and k not in omap[x]]
        if not targets:
            continue
        x = rng.choice(targets)
        path = random_simple_path(g, rng, z, x) if rng.random() < 0.5 else shortest_path(g, z, x)
        result = leapfrog(spec, cell, z, path, k)
        assert verify_plan(result)
        after = occ_map(g, result.end)
        assert after[x] == omap[x] | {k}
        assert len(after[z]) == len(omap[z]) - 1
        assert all(len(after[v]) == len(omap[v]) for v in path[1:-1])
        assert all(after[v] == omap[v] for v in set(range(g.n)) - set(path))
        done += 1
    print(f"ACCEPTANCE 6a (leapfrog occupancy contract, {done} random runs): PASS")


def test_criterion_6_swap_third_postconditions():
    rng = random.Random(62)
    states = _fixture_states()
    done = 0
    while done < 500:
        spec, cells = rng.choice(states)
        g = spec.graph
        cell = rng.choice(cells)
        omap = occ_map(g, cell)
        lone = [(w, next(iter(omap[w]))) for w in range(g.n) if len(omap[w]) == 1]
        avail = [z for z in range(g.n) if len(omap[z]) >= 2]
        if not lone or not avail:
            continue
        w, k = rng.choice(lone)
        z = rng.choice(avail)
        if k in omap[z]:
            continue
        i = rng.choice(sorted(omap[z]))
        other_carriers = tuple(v for v in range(g.n) if k in omap[v] and v != w)
        try:
            path = shortest_path(g, z, w, forbidden=other_carriers)
        except Exception:
            continue
        result = swap_third(spec, cell, z, w, path, i, k)
        assert verify_plan(result)
        after = occ_map(g, result.end)
        assert after[z] == (omap[z] - {i}) | {k}
        assert after[w] == {i}
        assert all(after[v] == omap[v] for v in range(g.n) if v not in (z, w))
        done += 1
    print(f"ACCEPTANCE 6b (swap-third occupancy contract, {done} random runs): PASS")


def test_criterion_6_swap_colors_postconditions():
    rng = random.Random(63)
    states = _fixture_states()
    done = 0
    while done < 500:
        spec, cells = rng.choice(states)
        g = spec.graph
        cell = rng.choice(cells)
        omap = occ_map(g, cell)
        x, y = rng.sample(range(g.n), 2)
        pick_i = sorted(omap[x] - omap[y])
        pick_j = sorted(omap[y] - omap[x])
        if not pick_i or not pick_j:
            continue
        i, j = rng.choice(pick_i), rng.choice(pick_j)
        result = swap_colors(spec, cell, x, y, i, j)
        assert verify_plan(result)
        after = occ_map(g, result.end)
        assert after[x] == (omap[x] - {i}) | {j}
        assert after[y] == (omap[y] - {j}) | {i}
        assert all(after[v] == omap[v] for v in range(g.n) if v not in (x, y))
        back = swap_colors(spec, result.end, x, y, j, i)
        assert verify_plan(back) and back.end == cell
        done += 1
    print(f"ACCEPTANCE 6c (swap occupancy contract + double-swap identity, {done} runs): PASS")


def test_criterion_7_negative_control():
    spec = ComplexSpec(T4, ColorVector((3, 2)))
    sk = build_one_skeleton(spec)
    _, labels = component_labels(sk)
    for (ia, a), (ib, b) in itertools.product(enumerate(sk.nodes), repeat=2):
        found = plan_bfs(spec, a, b)
        if labels[ia] == labels[ib]:
            assert found is not None and verify_plan(found)
        else:
            assert found is None
    with pytest.raises(HypothesisNotMetError):
        plan(spec, sk.nodes[0], sk.nodes[1])
    print("ACCEPTANCE 7 (two-color star: reachability = component labels; constructive refusal): PASS")


STRUCTURAL_SPECS = [
    ComplexSpec(P3, ColorVector((2, 2, 1))),
    ComplexSpec(P4, ColorVector.two_one(4)),
    ComplexSpec(T4, ColorVector.two_one(4)),
    ComplexSpec(C4, ColorVector.two_one(4)),
    ComplexSpec(K4, ColorVector.two_one(4)),
    ComplexSpec(T4, ColorVector((3, 2))),
    ComplexSpec(T4, ColorVector((3, 3, 3))),
    ComplexSpec(C4, ColorVector((2, 2, 1, 1))),
    ComplexSpec(K4, ColorVector((2, 1, 1, 1))),
    ComplexSpec(STAR_PLUS_EDGE, ColorVector((3, 3))),
]


def test_criterion_8_dimension_bound():
    for spec in STRUCTURAL_SPECS:
        bound = max_dimension(spec)
        for cell in enumerate_cells(spec):
            assert cell.dimension <= bound
    print("ACCEPTANCE 8a (dimension bound over all enumerations): PASS")


def test_criterion_8_color_permutation_symmetry():
    rng = random.Random(88)
    bases = [
        (P3, (2, 2, 1)),
        (T4, (3, 2)),
        (C4, (2, 2, 1, 1)),
        (K4, (2, 1, 1, 1)),
    ]
    tried = 0
    for g, sizes in bases:
        reference = f_vector(ComplexSpec(g, ColorVector(sizes)))
        for _ in range(3):
            shuffled = list(sizes)
            rng.shuffle(shuffled)
            assert f_vector(ComplexSpec(g, ColorVector(tuple(shuffled)))) == reference
            tried += 1
    assert tried >= 10
    print(f"ACCEPTANCE 8b (f-vector invariant under {tried} color permutations): PASS")


def test_criterion_8_skeleton_counts_match_f_vector():
    fixtures = [ComplexSpec(g, ColorVector(sizes)) for _, g, sizes in PLANNER_FIXTURES]
    fixtures += [
        ComplexSpec(T4, ColorVector((3, 2))),
        ComplexSpec(P3, ColorVector((2, 1, 1))),
        ComplexSpec(K5, ColorVector.two_one(5)),
        ComplexSpec(T4, ColorVector((2,)), require_cover=False),
        ComplexSpec(T4, ColorVector((1, 1)), require_cover=False),
        ComplexSpec(STAR_PLUS_EDGE, ColorVector((2,)), require_cover=False),
    ]
    for spec in fixtures:
        sk = build_one_skeleton(spec)
        fv = f_vector(spec)
        assert len(sk.nodes) == fv[0]
        assert len(sk.arcs) == (fv[1] if len(fv) > 1 else 0)
    print("ACCEPTANCE 8c (skeleton node/arc counts match f-vectors on every fixture): PASS")
