from itertools import permutations, product
import pytest
from hypothesis import given, settings as hsettings, strategies as st
from app.core.exception import InputException, ResourceLimitException
from app.models.igraph import ICycle, IEdge, IGraph
from app.models.matrix import QMatrix
from app.service.igraph_service import igraph_service


def brute_force_cycle_signs(h: IGraph) -> set[int]:
    """逐个顶点序列检查，得到所有简单环能取到的符号"""
    signs = set()
    for k in range(1, h.vertex_count + 1):
        for seq in permutations(range(h.vertex_count), k):
            if seq[0] != min(seq):
                continue
            steps = [h.signs_between(seq[i], seq[(i + 1) % k]) for i in range(k)]
            for choice in product(*steps):
                total = 1
                for s in choice:
                    total *= s
                signs.add(total)
    return signs


@st.composite
def igraphs(draw, max_n: int = 4):
    n = draw(st.integers(1, max_n))
    candidates = [IEdge(i, j, s) for i in range(n) for j in range(n) for s in (1, -1)]
    chosen = draw(st.lists(st.sampled_from(candidates), max_size=len(candidates), unique=True))
    return IGraph(n, frozenset(chosen))


class TestConstruction:

    def test_edge_from_column_to_row(self):
        h = igraph_service.igraph_from_matrix(QMatrix.of([[-1, 2], [0, "-"]]))
        assert h.edges == frozenset({IEdge(0, 0, -1), IEdge(1, 0, 1), IEdge(1, 1, -1)})

    def test_requires_square_matrix(self):
        with pytest.raises(InputException):
            igraph_service.igraph_from_matrix(QMatrix.of([[1, 2]]))

    def test_superpose_is_edge_union(self):
        h = igraph_service.igraph_from_matrices([QMatrix.of([[0, 1], [1, 0]]), QMatrix.of([[0, -1], [1, 0]])])
        assert h.signs_between(1, 0) == (-1, 1)
        assert h.signs_between(0, 1) == (1,)

    def test_superpose_rejects_mismatched_sizes(self):
        with pytest.raises(InputException):
            igraph_service.igraph_superpose([IGraph(1), IGraph(2)])
        with pytest.raises(InputException):
            igraph_service.igraph_superpose([])

    def test_edges_out_of_range(self):
        with pytest.raises(InputException):
            IGraph(1, frozenset({IEdge(0, 1, 1)}))

    def test_networkx_view_keeps_parallel_edges(self):
        h = IGraph(2, frozenset({IEdge(1, 0, 1), IEdge(1, 0, -1)}))
        assert h.to_networkx().number_of_edges(1, 0) == 2


class TestCycles:

    def setup_class(self):
        self.h = igraph_service.igraph_from_matrices(
            [QMatrix.of([[0, 1], [1, 0]]), QMatrix.of([[0, -1], [1, 0]])]
        )

    def test_parallel_signs_give_distinct_cycles(self):
        assert igraph_service.enumerate_icycles(self.h) == [
            ICycle((0, 1), (1, -1)),
            ICycle((0, 1), (1, 1)),
        ]

    def test_find_cycle_by_sign(self):
        positive = igraph_service.find_cycle(self.h, 1)
        negative = igraph_service.find_cycle(self.h, -1)
        assert positive.is_positive and positive.length == 2
        assert not negative.is_positive

    def test_self_loops_are_length_one_cycles(self):
        h = igraph_service.igraph_from_matrix(QMatrix.of([[1, 0], [0, -1]]))
        assert igraph_service.has_positive_cycle(h)
        assert igraph_service.has_negative_cycle(h)
        assert not igraph_service.has_negative_cycle(h, min_length=2)

    def test_acyclic(self):
        h = igraph_service.igraph_from_matrix(QMatrix.of([[0, 1], [0, 0]]))
        assert igraph_service.enumerate_icycles(h) == []
        assert igraph_service.find_cycle(h, 1) is None

    def test_cycle_cap(self):
        with pytest.raises(ResourceLimitException) as exc_info:
            igraph_service.enumerate_icycles(self.h, cap=1)
        assert exc_info.value.cap_name == "ICYCLE_CAP"

    def test_two_cycles_keep_sign_under_negation(self):
        signs = {c.sign for c in igraph_service.enumerate_icycles(IGraph(2, frozenset({IEdge(0, 1, 1), IEdge(1, 0, -1)})))}
        negated = {c.sign for c in igraph_service.enumerate_icycles(IGraph(2, frozenset({IEdge(0, 1, -1), IEdge(1, 0, 1)})))}
        assert signs == negated == {-1}

    @hsettings(max_examples=120, deadline=None)
    @given(igraphs())
    def test_signed_cycle_search_matches_brute_force(self, h):
        signs = brute_force_cycle_signs(h)
        assert igraph_service.has_positive_cycle(h) == (1 in signs)
        assert igraph_service.has_negative_cycle(h) == (-1 in signs)
        assert {c.sign for c in igraph_service.enumerate_icycles(h)} == signs
