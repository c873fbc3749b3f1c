"""
hypothesis 生成策略
"""
from fractions import Fraction
from hypothesis import strategies as st
from app.models.dsr import BOTH_DIRECTIONS, Direction, DsrEdge, DsrGraph
from app.models.matrix import QMatrix

EDGE_KINDS = ["none", "undirected", "r-to-s", "s-to-r", "split"]


@st.composite
def dsr_graphs(draw, max_s: int = 3, max_r: int = 3):
    """每个 (S, R) 位置随机取无边、无向边、单向边或一对异号单向边"""
    s_count = draw(st.integers(1, max_s))
    r_count = draw(st.integers(1, max_r))
    edges = []
    for s in range(s_count):
        for r in range(r_count):
            kind = draw(st.sampled_from(EDGE_KINDS))
            sign = draw(st.sampled_from([1, -1]))
            label = Fraction(draw(st.integers(1, 3)))
            if kind == "undirected":
                edges.append(DsrEdge(s, r, sign, BOTH_DIRECTIONS, label))
            elif kind == "r-to-s":
                edges.append(DsrEdge(s, r, sign, frozenset({Direction.R_TO_S}), label))
            elif kind == "s-to-r":
                edges.append(DsrEdge(s, r, sign, frozenset({Direction.S_TO_R})))
            elif kind == "split":
                edges.append(DsrEdge(s, r, sign, frozenset({Direction.R_TO_S}), label))
                edges.append(DsrEdge(s, r, -sign, frozenset({Direction.S_TO_R})))
    return DsrGraph(s_count, r_count, tuple(edges))


def int_grids(n: int, m: int, lo: int = -2, hi: int = 2):
    return st.lists(st.lists(st.integers(lo, hi), min_size=m, max_size=m), min_size=n, max_size=n)


@st.composite
def square_int_matrices(draw, max_n: int = 3, lo: int = -2, hi: int = 2):
    n = draw(st.integers(1, max_n))
    return QMatrix.of(draw(int_grids(n, n, lo, hi)))


@st.composite
def exact_pairs(draw, max_n: int = 3, max_m: int = 3, lo: int = -3, hi: int = 3):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    return QMatrix.of(draw(int_grids(n, m, lo, hi))), QMatrix.of(draw(int_grids(n, m, lo, hi)))
