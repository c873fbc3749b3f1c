"""
I-graph（相互作用图）模型
"""
from dataclasses import dataclass, field
from typing import NamedTuple
import networkx as nx
from app.core.exception import InputException


class IEdge(NamedTuple):
    """从 source 指向 target 的有符号有向边"""
    source: int
    target: int
    sign: int


@dataclass(frozen=True)
class IGraph:
    """
    n 个顶点上的有符号有向多重图

    每个有序顶点对之间至多一条正边和一条负边；允许自环
    """
    vertex_count: int
    edges: frozenset[IEdge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputException("顶点数不能为负")
        for e in self.edges:
            if not (0 <= e.source < self.vertex_count and 0 <= e.target < self.vertex_count):
                raise InputException(f"I-graph 边端点越界: {e}")
            if e.sign not in (1, -1):
                raise InputException(f"I-graph 边符号必须为 ±1: {e}")

    def sorted_edges(self) -> list[IEdge]:
        return sorted(self.edges)

    def signs_between(self, source: int, target: int) -> tuple[int, ...]:
        """source→target 上存在的边符号（升序）"""
        return tuple(sorted(e.sign for e in self.edges if e.source == source and e.target == target))

    def negated(self) -> "IGraph":
        return IGraph(self.vertex_count, frozenset(IEdge(e.source, e.target, -e.sign) for e in self.edges))

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for e in self.sorted_edges():
            graph.add_edge(e.source, e.target, key=e.sign, sign=e.sign)
        return graph


@dataclass(frozen=True)
class ICycle:
    """
    简单有向环

    vertices 为规范旋转（最小顶点在首位），signs[k] 是 vertices[k]→vertices[k+1] 的边符号
    """
    vertices: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def sign(self) -> int:
        result = 1
        for s in self.signs:
            result *= s
        return result

    @property
    def is_positive(self) -> bool:
        return self.sign == 1

    def edges(self) -> list[IEdge]:
        n = len(self.vertices)
        return [IEdge(self.vertices[k], self.vertices[(k + 1) % n], self.signs[k]) for k in range(n)]
