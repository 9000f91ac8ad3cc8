"""ADE diagrams, intersection matrices, fundamental cycles."""

import pytest

from lctdv.dynkin import (InvalidRank, SingularityType, dynkin_graph,
                          edge_index_pairs, fundamental_cycle,
                          fundamental_cycle_bruteforce, intersection_matrix)
from lctdv.exactlin import QVector, is_negative_definite

ALL_TYPES_RANK_LE_8 = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
    "D4", "D5", "D6", "D7", "D8",
    "E6", "E7", "E8",
)


class TestSingularityType:
    def test_parse_and_str(self):
        t = SingularityType.parse(" D5 ")
        assert (t.kind, t.rank) == ("D", 5)
        assert str(t) == "D5"

    @pytest.mark.parametrize("bad", ["A0", "D3", "D2", "E5", "E9",
                                     "B3", "A", "5", "A-1", "a4"])
    def test_invalid_types_rejected(self, bad):
        with pytest.raises(InvalidRank):
            SingularityType.parse(bad)


class TestDiagrams:
    def test_chain_edges(self):
        # [TRIVIAL] A_n is the path 1-2-...-n.
        assert edge_index_pairs(SingularityType("A", 4)) == [
            (0, 1), (1, 2), (2, 3)]

    def test_fork_edges(self):
        # [TRIVIAL] D_n: two tips on node 3, then a chain.
        assert sorted(edge_index_pairs(SingularityType("D", 5))) == [
            (0, 2), (1, 2), (2, 3), (3, 4)]

    def test_branch_edges(self):
        # [TRIVIAL] E_n: chain 1-2-3-5-...-n with 4 attached to 3.
        assert sorted(edge_index_pairs(SingularityType("E", 6))) == [
            (0, 1), (1, 2), (2, 3), (2, 4), (4, 5)]

    @pytest.mark.parametrize("text", ALL_TYPES_RANK_LE_8)
    def test_edge_count_is_tree(self, text):
        t = SingularityType.parse(text)
        assert len(edge_index_pairs(t)) == t.rank - 1      # [TRIVIAL]

    def test_graph_prefix(self):
        g = dynkin_graph(SingularityType("A", 3), prefix="F")
        assert g.node_labels == ("F1", "F2", "F3")
        assert frozenset({"F1", "F2"}) in g.edges
        assert frozenset({"F1", "F3"}) not in g.edges


class TestIntersectionMatrix:
    @pytest.mark.parametrize("text", ALL_TYPES_RANK_LE_8)
    def test_shape_symmetry_definiteness(self, text):
        t = SingularityType.parse(text)
        m = intersection_matrix(t)
        assert m.nrows == m.ncols == t.rank
        assert m.is_symmetric()
        assert all(m.entry(i, i) == -2 for i in range(t.rank))  # [TRIVIAL]
        assert is_negative_definite(m)

    def test_off_diagonal_matches_edges(self):
        t = SingularityType("D", 6)
        m = intersection_matrix(t)
        edges = set(edge_index_pairs(t))
        for i in range(6):
            for j in range(i + 1, 6):
                expected = 1 if (i, j) in edges else 0
                assert m.entry(i, j) == expected


class TestFundamentalCycle:
    @pytest.mark.parametrize("text", ALL_TYPES_RANK_LE_8)
    def test_matches_bruteforce_oracle(self, text):
        # [DERIVED] exhaustive minimal-cycle search, rank <= 8.
        t = SingularityType.parse(text)
        assert fundamental_cycle(t) == fundamental_cycle_bruteforce(t)

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_chain_cycle_is_all_ones(self, n):
        # [PAPER] for A_n the fundamental cycle is the reduced cycle.
        assert fundamental_cycle(SingularityType("A", n)) == [1] * n

    @pytest.mark.parametrize("text", ALL_TYPES_RANK_LE_8)
    def test_cycle_self_intersection_is_minus_two(self, text):
        # [PAPER] Du Val fundamental cycles satisfy Z.Z = -2.
        t = SingularityType.parse(text)
        z = fundamental_cycle(t)
        assert z.dot(intersection_matrix(t).mul_vector(z)) == -2

    @pytest.mark.parametrize("text", ALL_TYPES_RANK_LE_8)
    def test_cycle_meets_every_curve_non_positively(self, text):
        t = SingularityType.parse(text)
        prod = intersection_matrix(t).mul_vector(fundamental_cycle(t))
        assert all(v <= 0 for v in prod)                   # [TRIVIAL]
