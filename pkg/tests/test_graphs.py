import numpy as np
import pytest

from trailcounts import families
from trailcounts.errors import EdgeListError
from trailcounts.graphs import (
    Graph,
    adjacency_matrix,
    matrix_power,
    occupation_string,
    pair_slot_index,
    pair_slots,
    parse_edge_list,
    slot_of_pair,
    walk_count,
)
from trailcounts.oracle import WalkClass, enumerate_walks

C4_ADJ = [
    [0, 1, 1, 0],
    [1, 0, 0, 1],
    [1, 0, 0, 1],
    [0, 1, 1, 0],
]


class TestParse:
    def test_four_cycle(self, c4):
        assert c4.n == 4
        assert c4.edges == frozenset({(1, 2), (1, 3), (2, 4), (3, 4)})

    def test_empty_with_header(self):
        g = parse_edge_list("n 1\n")
        assert g.n == 1
        assert g.edge_count == 0

    def test_duplicates_collapse_in_either_order(self):
        g = parse_edge_list("1 2\n2 1\n1 2")
        assert g.n == 2
        assert g.edges == frozenset({(1, 2)})

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a square\n\n1 2  # first edge\n1 3\n2 4\n3 4\n")
        assert g.edge_count == 4

    def test_self_loop_rejected_with_line_number(self):
        with pytest.raises(EdgeListError, match="line 2"):
            parse_edge_list("1 2\n3 3\n")

    def test_non_integer_token(self):
        with pytest.raises(EdgeListError, match="integer"):
            parse_edge_list("1 two\n")

    def test_label_exceeding_declared_n(self):
        with pytest.raises(EdgeListError, match="exceeds"):
            parse_edge_list("n 3\n1 4\n")

    def test_label_exceeding_earlier_than_header(self):
        with pytest.raises(EdgeListError, match="exceeds"):
            parse_edge_list("1 4\nn 3\n")

    def test_empty_without_header(self):
        with pytest.raises(EdgeListError, match="header"):
            parse_edge_list("")

    def test_zero_label_rejected(self):
        with pytest.raises(EdgeListError, match="start at 1"):
            parse_edge_list("0 1\n")


class TestGraph:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(1, 1)}))
        with pytest.raises(ValueError):
            Graph(3, frozenset({(2, 4)}))
        with pytest.raises(ValueError):
            Graph(0, frozenset())

    def test_neighbors_sorted(self, c4):
        assert c4.neighbors(1) == (2, 3)
        assert c4.neighbors(4) == (2, 3)
        assert c4.degree(1) == 2

    def test_vertex_range_checked(self, c4):
        with pytest.raises(ValueError):
            c4.neighbors(5)


class TestSlots:
    def test_lexicographic_order(self):
        assert pair_slots(4) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_bijection(self):
        index = pair_slot_index(5)
        assert sorted(index.values()) == list(range(10))
        assert slot_of_pair(5, 4, 2) == index[(2, 4)]

    def test_c4_occupation_string(self, c4):
        assert occupation_string(c4) == "110011"


class TestAdjacency:
    def test_c4_matrix(self, c4):
        assert adjacency_matrix(c4).tolist() == C4_ADJ

    def test_edgeless_zero(self):
        g = Graph(3, frozenset())
        assert adjacency_matrix(g).tolist() == [[0] * 3] * 3

    def test_k2(self, k2):
        assert adjacency_matrix(k2).tolist() == [[0, 1], [1, 0]]


class TestWalkCount:
    def test_c4_known_value(self, c4):
        assert walk_count(c4, 3, 1, 2) == 4

    def test_length_zero_identity(self, c4):
        assert walk_count(c4, 0, 2, 2) == 1
        assert walk_count(c4, 0, 1, 2) == 0

    def test_p3_matches_enumeration(self, p3):
        # independent route: list every length-2 walk and count
        assert len(enumerate_walks(p3, 2, 1, 3, WalkClass.WALK)) == 1
        assert walk_count(p3, 2, 1, 3) == 1

    def test_length_one_is_adjacency(self, c4):
        a = adjacency_matrix(c4)
        for u in range(1, 5):
            for v in range(1, 5):
                assert walk_count(c4, 1, u, v) == a[u - 1, v - 1]

    def test_symmetry(self, bowtie):
        for l in range(5):
            for u in range(1, 6):
                for v in range(1, 6):
                    assert walk_count(bowtie, l, u, v) == walk_count(bowtie, l, v, u)

    def test_arbitrary_precision(self):
        # closed form for complete graphs: walks 1->1 of length l in K_n are
        # ((n-1)**l + (n-1)*(-1)**l) / n, far beyond 64-bit at l = 40
        k6 = families.complete_graph(6)
        l = 40
        expected = (5**l + 5 * (-1) ** l) // 6
        assert expected > 2**63
        assert walk_count(k6, l, 1, 1) == expected

    def test_matrix_power_exact_dtype(self, c4):
        p = matrix_power(adjacency_matrix(c4), 5)
        assert p.dtype == np.dtype(object)
        assert p.tolist() == np.array(
            [[int(x) for x in row] for row in p], dtype=object
        ).tolist()

    def test_out_of_range_vertex(self, c4):
        with pytest.raises(ValueError):
            walk_count(c4, 2, 0, 1)
        with pytest.raises(ValueError):
            walk_count(c4, 2, 1, 9)
