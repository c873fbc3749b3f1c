from fractions import Fraction
import pytest
from hypothesis import given, settings as hsettings
from app.core.exception import InputException, QualitativeNotEvaluableException
from app.models.dsr import BOTH_DIRECTIONS, Direction, DsrEdge, DsrGraph, EdgeKey
from app.models.matrix import QMatrix
from app.service.dsr_service import dsr_service
from tests.strategies import exact_pairs

R_TO_S = frozenset({Direction.R_TO_S})
S_TO_R = frozenset({Direction.S_TO_R})


class TestPairConstruction:

    def setup_class(self):
        self.a = QMatrix.of([[-1, 3], [0, 2], [-6, 1]])
        self.b = QMatrix.of([[-6, 2], [0, 2], [8, 0]])
        self.g = dsr_service.dsr_from_pair(self.a, self.b)

    def test_edges(self):
        assert self.g.edges == (
            DsrEdge(0, 0, -1, BOTH_DIRECTIONS, Fraction(1)),
            DsrEdge(0, 1, 1, BOTH_DIRECTIONS, Fraction(3)),
            DsrEdge(1, 1, 1, BOTH_DIRECTIONS, Fraction(2)),
            DsrEdge(2, 0, -1, R_TO_S, Fraction(6)),
            DsrEdge(2, 0, 1, S_TO_R, None),
            DsrEdge(2, 1, 1, R_TO_S, Fraction(1)),
        )

    def test_shape_mismatch(self):
        with pytest.raises(InputException):
            dsr_service.dsr_from_pair(self.a, QMatrix.of([[1, 2]]))

    def test_qualitative_pair_rejected(self):
        with pytest.raises(QualitativeNotEvaluableException):
            dsr_service.dsr_from_pair(QMatrix.of([["+"]]), QMatrix.of([[1]]))

    def test_subgraph_renumbers_vertices(self):
        sub = dsr_service.dsr_subgraph(self.g, [2, 0], [0])
        assert (sub.s_count, sub.r_count) == (2, 1)
        assert [e.key for e in sub.edges] == [EdgeKey(0, 0, -1), EdgeKey(1, 0, -1), EdgeKey(1, 0, 1)]

    def test_subgraph_rejects_empty_selection(self):
        with pytest.raises(InputException):
            dsr_service.dsr_subgraph(self.g, [], [0])

    def test_networkx_view(self):
        graph = self.g.to_networkx()
        assert graph.number_of_nodes() == 5
        assert graph.number_of_edges() == 6


class TestGraphInvariants:

    def test_s_to_r_only_edge_has_infinite_label(self):
        with pytest.raises(InputException):
            DsrEdge(0, 0, 1, S_TO_R, Fraction(2))

    def test_finite_labels_are_positive(self):
        with pytest.raises(InputException):
            DsrEdge(0, 0, 1, R_TO_S, Fraction(-1))

    def test_parallel_edges_need_opposite_signs(self):
        with pytest.raises(InputException):
            DsrGraph(1, 1, (DsrEdge(0, 0, 1, R_TO_S, Fraction(1)), DsrEdge(0, 0, 1, S_TO_R)))

    def test_edges_are_sorted_by_key(self):
        g = DsrGraph(2, 1, (DsrEdge(1, 0, 1, BOTH_DIRECTIONS, None), DsrEdge(0, 0, -1, R_TO_S, Fraction(1))))
        assert [e.s for e in g.edges] == [0, 1]


class TestSets:

    def test_qualitative_entries_give_infinite_labels(self):
        g = dsr_service.dsr_from_sets(QMatrix.of([["-", 2]]), QMatrix.of([["-", 0]]))
        assert g.edges == (
            DsrEdge(0, 0, -1, BOTH_DIRECTIONS, None),
            DsrEdge(0, 1, 1, R_TO_S, Fraction(2)),
        )
        assert g.forced_infinite == frozenset()

    def test_disagreeing_values_force_infinite_label(self):
        pairs = [(QMatrix.of([[1]]), QMatrix.of([[1]])), (QMatrix.of([[2]]), QMatrix.of([[1]]))]
        g = dsr_service.dsr_for_factorizations(dsr_service.factorization_set(pairs))
        assert g.edges == (DsrEdge(0, 0, 1, BOTH_DIRECTIONS, None),)
        assert g.forced_infinite == frozenset({EdgeKey(0, 0, 1)})

    def test_agreeing_values_keep_label(self):
        pairs = [(QMatrix.of([[3]]), QMatrix.of([[1]])), (QMatrix.of([[3]]), QMatrix.of([[2]]))]
        g = dsr_service.dsr_for_factorizations(dsr_service.factorization_set(pairs))
        assert g.edges == (DsrEdge(0, 0, 1, BOTH_DIRECTIONS, Fraction(3)),)

    def test_superposition_ignores_order(self):
        pairs = [
            (QMatrix.of([[1, 0], [0, -1]]), QMatrix.of([[1, 0], [1, 1]])),
            (QMatrix.of([[-2, 1], [0, -1]]), QMatrix.of([[1, 0], [0, 1]])),
        ]
        forward = dsr_service.dsr_for_factorizations(dsr_service.factorization_set(pairs))
        backward = dsr_service.dsr_for_factorizations(dsr_service.factorization_set(reversed(pairs)))
        assert forward == backward
        assert forward.forced_infinite == backward.forced_infinite

    def test_factorization_shapes_must_agree(self):
        with pytest.raises(InputException):
            dsr_service.factorization_set([
                (QMatrix.of([[1]]), QMatrix.of([[1]])),
                (QMatrix.of([[1, 0]]), QMatrix.of([[1, 0]])),
            ])


class TestJacobianGraphs:

    def setup_class(self):
        self.m = QMatrix.of([["-", "-", "0"], ["0", "-1", "1"], ["+", "2", "-2"]])

    def test_jdsr_edges(self):
        g = dsr_service.jdsr(self.m)
        assert g.edges == (
            DsrEdge(0, 0, -1, BOTH_DIRECTIONS, None),
            DsrEdge(0, 1, -1, R_TO_S, None),
            DsrEdge(1, 1, -1, BOTH_DIRECTIONS, Fraction(1)),
            DsrEdge(1, 2, 1, R_TO_S, Fraction(1)),
            DsrEdge(2, 0, 1, R_TO_S, None),
            DsrEdge(2, 1, 1, R_TO_S, Fraction(2)),
            DsrEdge(2, 2, -1, BOTH_DIRECTIONS, Fraction(2)),
        )

    def test_dual_jdsr_splits_negative_diagonal(self):
        g = dsr_service.jdsr_dual(self.m)
        assert g.edges_between(0, 0) == (
            DsrEdge(0, 0, -1, R_TO_S, None),
            DsrEdge(0, 0, 1, S_TO_R, None),
        )

    def test_requires_square_matrix(self):
        with pytest.raises(InputException):
            dsr_service.jdsr(QMatrix.of([[1, 2]]))


class TestConventions:

    def test_to_minus_abt(self):
        a = QMatrix.of([[1, 2, 3], [0, -1, "+"]])
        b = QMatrix.of([[1, 0], [2, "-"], [0, 1]])
        a2, b2 = dsr_service.to_minus_abt(a, b)
        assert a2.to_text() == [["-1", "-2", "-3"], ["0", "1", "-"]]
        assert b2.to_text() == [["1", "2", "0"], ["0", "-", "1"]]

    def test_to_minus_abt_shape_check(self):
        with pytest.raises(InputException):
            dsr_service.to_minus_abt(QMatrix.of([[1, 2]]), QMatrix.of([[1, 2]]))

    @hsettings(max_examples=80, deadline=None)
    @given(exact_pairs())
    def test_negating_first_factor_matches_direct_construction(self, pair):
        a, b = pair
        assert dsr_service.negate_first_factor(dsr_service.dsr_from_pair(a, b)) == dsr_service.dsr_from_pair(a.negated(), b)

    @hsettings(max_examples=80, deadline=None)
    @given(exact_pairs())
    def test_r_to_s_labels_are_absolute_entries(self, pair):
        a, b = pair
        for e in dsr_service.dsr_from_pair(a, b).edges:
            if e.has_r_to_s:
                assert e.label == abs(a.value(e.s, e.r))
                assert e.sign == a.entry(e.s, e.r).sign
            if e.has_s_to_r:
                assert e.sign == b.entry(e.s, e.r).sign
