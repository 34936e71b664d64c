import pytest

from trailcounts import families
from trailcounts.errors import BudgetExceededError
from trailcounts.graphs import Graph, slot_of_pair
from trailcounts.nilpotent import (
    PathVariant,
    Polynomial,
    cycle_count_symbolic,
    euler_trail_count_symbolic,
    formal_adjacency_edges,
    guarded_sum_from_literal,
    matrix_power_nilpotent,
    path_count_symbolic,
    trail_count_symbolic,
    vertex_observable_matrix,
)
from trailcounts.oracle import WalkClass, count_closed_euler_trails, count_walks


class TestPolynomial:
    def test_generator_squares_to_zero(self):
        x = Polynomial.generator(3)
        assert (x * x).is_zero()

    def test_unit_is_idempotent(self):
        one = Polynomial.one()
        assert one * one == one

    def test_commutative_product(self):
        x, y, z = (Polynomial.generator(i) for i in (0, 4, 7))
        assert x * y * z == z * (y * x)

    def test_shared_generator_kills_product(self):
        p = Polynomial.generator(0) * Polynomial.generator(1)
        q = Polynomial.generator(1) * Polynomial.generator(2)
        assert (p * q).is_zero()

    def test_addition_merges_and_drops_zeros(self):
        x = Polynomial.generator(2)
        s = x + x
        assert s.coefficient([2]) == 2
        assert Polynomial({0b100: 1, 0b1: 0}).term_count() == 1

    def test_scalar_multiplication(self):
        x = Polynomial.generator(0)
        assert (3 * x).coefficient([0]) == 3

    def test_terms_canonical_order(self):
        p = Polynomial.generator(5) + Polynomial.generator(1) + Polynomial.one()
        assert [gens for gens, _ in p.terms()] == [(), (1,), (5,)]

    def test_coefficient_sum(self):
        p = 2 * Polynomial.generator(0) + 3 * Polynomial.generator(1)
        assert p.coefficient_sum() == 5

    def test_json_serialization(self):
        p = 2 * (Polynomial.generator(0) * Polynomial.generator(3))
        assert p.to_json_obj() == [{"generators": [0, 3], "coeff": "2"}]

    def test_without_generator(self):
        p = Polynomial.generator(0) + Polynomial.generator(1)
        assert p.without_generator(0) == Polynomial.generator(1)


class TestFormalAdjacency:
    def test_c4_entries_share_generator_per_pair(self, c4):
        m = formal_adjacency_edges(c4)
        e12 = Polynomial.generator(slot_of_pair(4, 1, 2))
        assert m.entry(1, 2) == e12
        assert m.entry(2, 1) == e12
        assert m.entry(1, 4).is_zero()
        assert m.entry(2, 2).is_zero()

    def test_edgeless_all_zero(self):
        m = formal_adjacency_edges(Graph(3, frozenset()))
        assert all(m.entry(u, v).is_zero() for u in (1, 2, 3) for v in (1, 2, 3))

    def test_k2_single_generator(self, k2):
        m = formal_adjacency_edges(k2)
        assert m.entry(1, 2) == Polynomial.generator(0)

    def test_c4_cube_collapses_to_single_trail_monomial(self, c4):
        # of the four length-3 walk terms only the trail survives x*x = 0
        cube = matrix_power_nilpotent(formal_adjacency_edges(c4), 3)
        entry = cube.entry(1, 2)
        slots = (slot_of_pair(4, 1, 3), slot_of_pair(4, 3, 4), slot_of_pair(4, 2, 4))
        assert list(entry.terms()) == [(tuple(sorted(slots)), 1)]

    def test_power_one_is_identity_operation(self, c4):
        m = formal_adjacency_edges(c4)
        assert matrix_power_nilpotent(m, 1) == m

    def test_k2_square_diagonal_vanishes(self, k2):
        sq = matrix_power_nilpotent(formal_adjacency_edges(k2), 2)
        assert sq.entry(1, 1).is_zero()


class TestTrailCounts:
    def test_c4_known(self, c4):
        assert trail_count_symbolic(c4, 3, 1, 2) == 1

    def test_nonadjacent_pair(self, c4):
        assert trail_count_symbolic(c4, 1, 1, 4) == 0

    def test_matches_oracle(self, k4, bowtie):
        for g in (k4, bowtie):
            for l in range(1, 6):
                for u in (1, 2):
                    for v in (1, g.n):
                        assert trail_count_symbolic(g, l, u, v) == count_walks(
                            g, l, u, v, WalkClass.TRAIL
                        )

    def test_row_route_matches_matrix_route(self, bowtie):
        m = formal_adjacency_edges(bowtie)
        for l in (2, 4):
            full = matrix_power_nilpotent(m, l)
            for u in (1, 3):
                for v in (2, 5):
                    assert trail_count_symbolic(bowtie, l, u, v) == full.entry(
                        u, v
                    ).coefficient_sum()

    def test_length_validation(self, c4):
        with pytest.raises(ValueError):
            trail_count_symbolic(c4, 0, 1, 2)

    def test_budget(self):
        k6 = families.complete_graph(6)
        with pytest.raises(BudgetExceededError):
            trail_count_symbolic(k6, 6, 1, 2, term_budget=5)


class TestEulerSymbolic:
    def test_c4_closed(self, c4):
        assert euler_trail_count_symbolic(c4, 1, 1) == 2

    def test_k2_open(self, k2):
        assert euler_trail_count_symbolic(k2, 1, 2) == 1

    def test_star_center_closed(self, star3):
        assert euler_trail_count_symbolic(star3, 1, 1) == 0

    def test_edgeless(self):
        g = Graph(1, frozenset())
        assert euler_trail_count_symbolic(g, 1, 1) == 1

    def test_matches_oracle(self, bowtie):
        for u in range(1, 6):
            assert euler_trail_count_symbolic(bowtie, u, u) == count_closed_euler_trails(
                bowtie, u
            )


class TestVertexObservable:
    def test_c4_destination_generators(self, c4):
        m = vertex_observable_matrix(c4)
        assert m.entry(1, 2) == Polynomial.generator(1)  # destination vertex 2
        assert m.entry(2, 1) == Polynomial.generator(0)  # destination vertex 1
        assert m.entry(1, 4).is_zero()

    def test_k2_structure(self, k2):
        m = vertex_observable_matrix(k2)
        assert m.entry(1, 2) == Polynomial.generator(1)
        assert m.entry(2, 1) == Polynomial.generator(0)
        assert m.entry(1, 1).is_zero()

    def test_guarded_row_carries_start_generator(self, c4):
        m = vertex_observable_matrix(c4, PathVariant.START_GUARDED, start=1)
        assert m.entry(1, 2) == Polynomial.generator(1) * Polynomial.generator(0)
        assert m.entry(2, 4) == Polynomial.generator(3)

    def test_guarded_requires_start(self, c4):
        with pytest.raises(ValueError):
            vertex_observable_matrix(c4, PathVariant.START_GUARDED)


class TestPathCounts:
    def test_c4_guarded_equals_path_count(self, c4):
        assert path_count_symbolic(c4, 3, 1, 2, PathVariant.START_GUARDED) == 1

    def test_c4_literal_overcounts(self, c4):
        assert path_count_symbolic(c4, 3, 1, 2, PathVariant.LITERAL) == 2

    def test_k2_both_variants(self, k2):
        for variant in PathVariant:
            assert path_count_symbolic(k2, 1, 1, 2, variant) == 1

    def test_literal_matches_distinct_non_initial(self, k4, bowtie):
        for g in (k4, bowtie):
            for l in range(1, 5):
                for u in (1, 2):
                    for v in (1, g.n):
                        assert path_count_symbolic(g, l, u, v) == count_walks(
                            g, l, u, v, WalkClass.DISTINCT_NON_INITIAL
                        )

    def test_guarded_matches_paths(self, k4, bowtie):
        for g in (k4, bowtie):
            for l in range(1, 5):
                for u, v in ((1, 2), (2, g.n)):
                    assert path_count_symbolic(
                        g, l, u, v, PathVariant.START_GUARDED
                    ) == count_walks(g, l, u, v, WalkClass.PATH)

    def test_guarded_closed_rejected(self, c4):
        with pytest.raises(ValueError):
            path_count_symbolic(c4, 3, 1, 1, PathVariant.START_GUARDED)

    def test_guarded_equals_literal_filter(self, bowtie):
        m = vertex_observable_matrix(bowtie)
        for l in (2, 3, 4):
            entry = matrix_power_nilpotent(m, l).entry(1, 2)
            assert path_count_symbolic(
                bowtie, l, 1, 2, PathVariant.START_GUARDED
            ) == guarded_sum_from_literal(entry, 1)


class TestCycleCounts:
    def test_c4_square(self, c4):
        assert cycle_count_symbolic(c4, 4, 1) == 2

    def test_k4_triangles(self, k4):
        assert cycle_count_symbolic(k4, 3, 1) == 6

    def test_c4_has_no_triangle(self, c4):
        assert cycle_count_symbolic(c4, 3, 1) == 0

    def test_short_lengths_rejected(self, c4):
        with pytest.raises(ValueError):
            cycle_count_symbolic(c4, 2, 1)

    def test_matches_oracle_directed(self, bowtie):
        for l in (3, 4, 5):
            for u in (1, 2):
                assert cycle_count_symbolic(bowtie, l, u) == count_walks(
                    bowtie, l, u, u, WalkClass.DISTINCT_NON_INITIAL
                )


class TestStructuralProperties:
    def test_degree_equals_length(self, k4):
        m = formal_adjacency_edges(k4)
        for l in (1, 2, 3, 4):
            power = matrix_power_nilpotent(m, l)
            for u in range(1, 5):
                for v in range(1, 5):
                    assert all(len(gens) == l for gens, _ in power.entry(u, v).terms())

    def test_coefficients_positive(self, k4):
        power = matrix_power_nilpotent(formal_adjacency_edges(k4), 3)
        for u in range(1, 5):
            for v in range(1, 5):
                assert all(c >= 1 for _, c in power.entry(u, v).terms())

    def test_trail_bounded_by_walk_count(self, k4):
        from trailcounts.graphs import walk_count

        for l in range(1, 6):
            assert trail_count_symbolic(k4, l, 1, 2) <= walk_count(k4, l, 1, 2)
