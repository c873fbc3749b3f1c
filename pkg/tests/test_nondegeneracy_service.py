from fractions import Fraction
import pytest
from hypothesis import given, settings as hsettings
from app.core.exception import InputException, ResourceLimitException
from app.models.dsr import BOTH_DIRECTIONS, Direction, DsrEdge, DsrGraph
from app.models.matrix import QMatrix
from app.service.dsr_service import dsr_service
from app.service.nondegeneracy_service import nondegeneracy_service
from tests.strategies import dsr_graphs

R_TO_S = frozenset({Direction.R_TO_S})
S_TO_R = frozenset({Direction.S_TO_R})


def crossed_graph() -> DsrGraph:
    """S1、S2 的两个方向分别连向不同的 R 顶点，S3 只有一条无向边"""
    return DsrGraph(3, 3, (
        DsrEdge(0, 0, -1, S_TO_R),
        DsrEdge(0, 1, 1, R_TO_S, Fraction(1)),
        DsrEdge(1, 0, 1, R_TO_S, Fraction(1)),
        DsrEdge(1, 1, -1, S_TO_R),
        DsrEdge(2, 2, -1, BOTH_DIRECTIONS, Fraction(1)),
    ))


class TestTermSubgraphs:

    def setup_class(self):
        self.g = crossed_graph()

    def test_s_to_r_term_subgraph(self):
        t = nondegeneracy_service.find_term_subgraph(self.g, [0, 1], [0, 1], Direction.S_TO_R)
        assert t.pairing == ((0, 0), (1, 1))

    def test_r_to_s_term_subgraph(self):
        t = nondegeneracy_service.find_term_subgraph(self.g, [0, 1], [0, 1], Direction.R_TO_S)
        assert t.pairing == ((0, 1), (1, 0))

    def test_missing_term_subgraph(self):
        assert nondegeneracy_service.find_term_subgraph(self.g, [0, 2], [0, 2], Direction.R_TO_S) is None

    def test_requires_square_selection(self):
        with pytest.raises(InputException):
            nondegeneracy_service.find_term_subgraph(self.g, [0, 1], [0], Direction.S_TO_R)

    def test_lexicographically_least_pairing(self):
        edges = tuple(DsrEdge(s, r, 1, BOTH_DIRECTIONS, Fraction(1)) for s in range(2) for r in range(2))
        t = nondegeneracy_service.find_term_subgraph(DsrGraph(2, 2, edges), [0, 1], [0, 1], Direction.R_TO_S)
        assert t.pairing == ((0, 0), (1, 1))


class TestNondegeneracy:

    def test_weak_but_not_full(self):
        report = nondegeneracy_service.nondegeneracy_report(crossed_graph())
        assert report.weakly
        assert not report.holds
        assert report.failing_gammas == ((0,), (1,), (0, 2), (1, 2))
        assert report.witness == (0, 2)

    def test_tree_is_nondegenerate(self):
        g = dsr_service.dsr_from_sets(QMatrix.of([[-1, 0], [-1, -1]]), QMatrix.of([["-", 0], ["-", "-"]]))
        assert nondegeneracy_service.is_nondegenerate(g)
        assert nondegeneracy_service.is_weakly_nondegenerate(g)

    def test_more_s_than_r_vertices(self):
        g = DsrGraph(2, 1, (DsrEdge(0, 0, 1, BOTH_DIRECTIONS, Fraction(1)),))
        assert nondegeneracy_service.weak_witness(g) is None
        assert not nondegeneracy_service.is_weakly_nondegenerate(g)
        assert not nondegeneracy_service.is_nondegenerate(g)

    def test_no_s_vertices(self):
        g = DsrGraph(0, 2)
        assert nondegeneracy_service.is_weakly_nondegenerate(g)
        assert nondegeneracy_service.is_nondegenerate(g)

    def test_s_vertex_cap(self):
        with pytest.raises(ResourceLimitException) as exc_info:
            nondegeneracy_service.nondegeneracy_report(crossed_graph(), s_cap=2)
        assert exc_info.value.cap_name == "NONDEGENERACY_S_CAP"

    def test_witness_pairs_share_delta(self):
        witness = nondegeneracy_service.weak_witness(crossed_graph())
        assert witness.delta == (0, 1, 2)
        assert witness.s_to_r.delta == witness.r_to_s.delta == witness.delta

    @hsettings(max_examples=100, deadline=None)
    @given(dsr_graphs())
    def test_nondegenerate_implies_weakly(self, g):
        report = nondegeneracy_service.nondegeneracy_report(g)
        if report.holds:
            assert report.weakly
        assert report.weakly == nondegeneracy_service.is_weakly_nondegenerate(g)
