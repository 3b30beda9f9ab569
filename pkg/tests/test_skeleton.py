from collections import Counter

import pytest

from stirling_complexes import (
    Cell,
    ColorVector,
    ComplexSpec,
    EmptyComplexError,
    boundary_endpoints,
    build_one_skeleton,
    connected_components,
    enumerate_cells,
    euler_characteristic,
    f_vector,
    is_valid_cell,
    parse_edge_list,
)
from stirling_complexes.skeleton import skeleton_edge_list_text, skeleton_node_lines


class TestBoundaryEndpoints:
    def test_square_bottom_edge(self, p3):
        spec = ComplexSpec(p3, ColorVector((2, 2, 1)))
        one_cell = Cell.make([(0, 1), (0, 2), ((0, 1),)])
        a, b = boundary_endpoints(spec, one_cell)
        assert a == Cell.make([(0, 1), (0, 2), (0,)])
        assert b == Cell.make([(0, 1), (0, 2), (1,)])

    def test_rejects_other_dimensions(self, p3):
        spec = ComplexSpec(p3, ColorVector((2, 2, 1)))
        with pytest.raises(ValueError):
            boundary_endpoints(spec, Cell.make([(0, 1), (0, 2), (0,)]))

    def test_endpoints_valid_and_local(self, t4):
        spec = ComplexSpec(t4, ColorVector((3, 2)))
        for one_cell in enumerate_cells(spec, dim=1):
            a, b = boundary_endpoints(spec, one_cell)
            assert is_valid_cell(spec, a) and is_valid_cell(spec, b)
            assert a != b
            diff = [
                (pa, pb) for pa, pb in zip(a.parts, b.parts) if pa != pb
            ]
            assert len(diff) == 1
            pa, pb = diff[0]
            assert len(set(pa) ^ set(pb)) == 2


class TestSkeleton:
    def test_two_hexagons_complex(self, p3):
        sk = build_one_skeleton(ComplexSpec(p3, ColorVector((2, 1, 1))))
        assert (len(sk.nodes), len(sk.arcs)) == (15, 16)

    def test_star_two_colors(self, t4):
        sk = build_one_skeleton(ComplexSpec(t4, ColorVector((3, 2))))
        assert (len(sk.nodes), len(sk.arcs)) == (12, 9)

    def test_discrete_case_has_no_arcs(self, c4):
        sk = build_one_skeleton(ComplexSpec(c4, ColorVector((1, 1, 1, 1))))
        assert len(sk.arcs) == 0 and len(sk.nodes) > 0

    def test_empty_complex_rejected(self, p3):
        with pytest.raises(EmptyComplexError):
            build_one_skeleton(ComplexSpec(p3, ColorVector((1, 1))))

    @pytest.mark.parametrize(
        "family,sizes,cover",
        [
            ("path3", (2, 2, 1), True),
            ("star", (3, 2), True),
            ("star", (2,), False),
            ("star", (1, 1), False),
        ],
    )
    def test_counts_match_f_vector(self, family, sizes, cover, p3, t4):
        g = p3 if family == "path3" else t4
        spec = ComplexSpec(g, ColorVector(sizes), require_cover=cover)
        sk = build_one_skeleton(spec)
        fv = f_vector(spec)
        assert len(sk.nodes) == fv[0]
        assert len(sk.arcs) == (fv[1] if len(fv) > 1 else 0)


class TestComponents:
    def test_star_two_colors_splits_in_three(self, t4):
        count, labels = connected_components(ComplexSpec(t4, ColorVector((3, 2))))
        assert count == 3
        assert sorted(Counter(labels).values()) == [4, 4, 4]

    def test_star_balanced_two_colors_connected(self, t4):
        count, _ = connected_components(ComplexSpec(t4, ColorVector((3, 3))))
        assert count == 1

    def test_path_three_colors_connected(self, p3):
        count, _ = connected_components(ComplexSpec(p3, ColorVector((2, 2, 1))))
        assert count == 1

    def test_labels_dense_in_node_order(self, t4):
        _, labels = connected_components(ComplexSpec(t4, ColorVector((3, 2))))
        seen = []
        for lab in labels:
            if lab not in seen:
                seen.append(lab)
        assert seen == sorted(seen) and seen[0] == 0

    def test_invariant_under_color_permutation(self, t4):
        a, _ = connected_components(ComplexSpec(t4, ColorVector((3, 2))))
        b, _ = connected_components(ComplexSpec(t4, ColorVector((2, 3))))
        assert a == b


class TestEuler:
    def test_examples(self):
        assert euler_characteristic((15, 16)) == -1
        assert euler_characteristic((7,)) == 7
        assert euler_characteristic((21, 32, 10)) == -1


class TestExports:
    def test_edge_list_round_trip_shape(self, t4):
        sk = build_one_skeleton(ComplexSpec(t4, ColorVector((3, 2))))
        text = skeleton_edge_list_text(sk)
        header = text.splitlines()[0].split()
        assert header == ["12", "9"]
        reparsed = parse_edge_list(text)
        assert reparsed.n == 12 and reparsed.m == 9

    def test_node_lines(self, t4):
        sk = build_one_skeleton(ComplexSpec(t4, ColorVector((3, 2))))
        lines = skeleton_node_lines(sk)
        assert len(lines) == 12
        assert lines[0].startswith("0\t{")
