from fractions import Fraction
import pytest
from hypothesis import given, settings as hsettings
from app.core.exception import ResourceLimitException
from app.models.dsr import BOTH_DIRECTIONS, DsrEdge, DsrGraph
from app.models.matrix import QMatrix
from app.models.report import ConditionKind
from app.service.cycle_service import cycle_service
from app.service.dsr_service import dsr_service
from tests.strategies import dsr_graphs


def undirected_graph(s_count: int, r_count: int, pairs: list[tuple[int, int]], sign: int = 1) -> DsrGraph:
    """从 1 开始编号的无向边，标签都为 1"""
    edges = tuple(DsrEdge(s - 1, r - 1, sign, BOTH_DIRECTIONS, Fraction(1)) for s, r in pairs)
    return DsrGraph(s_count, r_count, edges)


class TestEnumeration:

    def setup_class(self):
        self.pair_graph = dsr_service.dsr_from_pair(
            QMatrix.of([[-1, 3], [0, 2], [-6, 1]]),
            QMatrix.of([[-6, 2], [0, 2], [8, 0]]),
        )

    def test_parallel_edges_form_two_cycle(self):
        cycles = cycle_service.enumerate_cycles(self.pair_graph)
        two_cycle = cycles[0]
        assert two_cycle.length == 2
        assert two_cycle.names() == ["S3", "R1"]
        assert two_cycle.is_e_cycle
        assert not two_cycle.is_s_cycle

    def test_census(self):
        census = cycle_service.census(cycle_service.enumerate_cycles(self.pair_graph))
        assert (census.total, census.e_cycles, census.o_cycles, census.s_cycles) == (2, 1, 1, 0)

    def test_direction_blocks_traversal(self):
        cycles = cycle_service.enumerate_cycles(self.pair_graph)
        # S3 只能经 S3→R1 离开，因此不存在经过 S2 的环
        assert all("S2" not in c.names() for c in cycles)
        four_cycle = cycles[1]
        assert four_cycle.length == 4
        assert cycle_service.classify(four_cycle) == "o-cycle"
        assert cycle_service.cycle_parity(four_cycle) == -1

    def test_cycle_cap(self):
        with pytest.raises(ResourceLimitException) as exc_info:
            cycle_service.enumerate_cycles(self.pair_graph, cap=1)
        assert exc_info.value.cap_name == "DSR_CYCLE_CAP"

    def test_tree_has_no_cycles(self):
        g = undirected_graph(2, 2, [(1, 1), (2, 1), (2, 2)], sign=-1)
        assert cycle_service.enumerate_cycles(g) == []
        star, star_star = cycle_service.check_conditions(g)
        assert star.holds and star_star.holds

    @hsettings(max_examples=100, deadline=None)
    @given(dsr_graphs())
    def test_enumerated_cycles_are_simple_and_traversable(self, g):
        cycles = cycle_service.enumerate_cycles(g)
        assert len({c.edge_keys for c in cycles}) == len(cycles)
        for c in cycles:
            assert c.length % 2 == 0 and c.length >= 2
            assert len(c.edge_keys) == c.length
            assert len(set(c.vertices)) == len(c.vertices)
            assert c.forward_ok or c.backward_ok
            assert c.parity in (1, -1)


class TestOrientation:

    def test_shared_single_edge_gives_s_to_r_intersection(self, cycle_by_edges):
        g = undirected_graph(3, 3, [(1, 1), (2, 1), (2, 2), (1, 2), (1, 3), (3, 3), (3, 1)])
        c = cycle_by_edges(g, [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 1)])
        d = cycle_by_edges(g, [(1, 1, 1), (3, 1, 1), (3, 3, 1), (1, 3, 1)])
        assert cycle_service.compatible_orientation(c, d)
        assert cycle_service.has_s_to_r_intersection(c, d)
        star = cycle_service.check_condition(g, ConditionKind.STAR)
        assert not star.holds
        assert (c, d) in star.witness_pairs or (d, c) in star.witness_pairs

    def test_even_shared_path_is_not_s_to_r(self, cycle_by_edges):
        g = undirected_graph(2, 3, [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
        c = cycle_by_edges(g, [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 1)])
        d = cycle_by_edges(g, [(1, 1, 1), (2, 1, 1), (2, 3, 1), (1, 3, 1)])
        assert cycle_service.compatible_orientation(c, d)
        assert not cycle_service.has_s_to_r_intersection(c, d)

    def test_disjoint_cycles(self, cycle_by_edges):
        g = undirected_graph(4, 4, [(1, 1), (2, 1), (2, 2), (1, 2), (3, 3), (4, 3), (4, 4), (3, 4)])
        c = cycle_by_edges(g, [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 1)])
        d = cycle_by_edges(g, [(3, 3, 1), (4, 3, 1), (4, 4, 1), (3, 4, 1)])
        assert cycle_service.compatible_orientation(c, d)
        assert not cycle_service.has_s_to_r_intersection(c, d)
        assert not cycle_service.has_vertex_only_overlap(c, d)

    def test_vertex_only_overlap_is_flagged(self):
        g = undirected_graph(3, 4, [(1, 1), (2, 1), (2, 2), (1, 2), (1, 3), (3, 3), (3, 4), (1, 4)])
        star = cycle_service.check_condition(g, ConditionKind.STAR)
        assert star.census.e_cycles == 2
        assert star.holds
        assert len(star.vertex_only_overlaps) == 1


class TestConditions:

    def test_star_star_lists_every_e_cycle(self):
        g = undirected_graph(2, 2, [(1, 1), (2, 1), (2, 2), (1, 2)])
        report = cycle_service.check_condition(g, ConditionKind.STAR_STAR)
        assert not report.holds
        assert len(report.witnesses) == 1

    def test_negative_four_cycle_is_o_cycle(self):
        g = undirected_graph(2, 2, [(1, 1), (2, 1), (2, 2)], sign=1)
        g = DsrGraph(2, 2, g.edges + (DsrEdge(0, 1, -1, BOTH_DIRECTIONS, Fraction(1)),))
        star, star_star = cycle_service.check_conditions(g)
        assert star_star.holds and star.holds
        assert star.census.o_cycles == 1

    def test_unbalanced_labels_break_star(self):
        edges = (
            DsrEdge(0, 0, 1, BOTH_DIRECTIONS, Fraction(2)),
            DsrEdge(1, 0, 1, BOTH_DIRECTIONS, Fraction(1)),
            DsrEdge(1, 1, 1, BOTH_DIRECTIONS, Fraction(1)),
            DsrEdge(0, 1, 1, BOTH_DIRECTIONS, Fraction(1)),
        )
        star = cycle_service.check_condition(DsrGraph(2, 2, edges), ConditionKind.STAR)
        assert not star.holds
        assert len(star.witnesses) == 1
        assert not cycle_service.is_s_cycle(star.witnesses[0])
