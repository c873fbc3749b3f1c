"""
DSR 图模型
二部有符号带标签多重图：S 顶点对应行，R 顶点对应列
"""
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction
from math import prod
from typing import NamedTuple
import networkx as nx
from app.core.exception import InputException
from app.models.matrix import IndexSet, QMatrix


class Direction(str, Enum):
    """边方向枚举"""
    S_TO_R = "S-to-R"
    R_TO_S = "R-to-S"


BOTH_DIRECTIONS = frozenset({Direction.S_TO_R, Direction.R_TO_S})


class Side(IntEnum):
    """顶点所属的一侧，S 排在 R 之前"""
    S = 0
    R = 1


class Vertex(NamedTuple):
    side: Side
    index: int

    def name(self) -> str:
        """从 1 开始编号的显示名，例如 S1、R2"""
        return f"{self.side.name}{self.index + 1}"


class EdgeKey(NamedTuple):
    """边的唯一标识：同一顶点对上的两条边符号必然相反"""
    s: int
    r: int
    sign: int


@dataclass(frozen=True)
class DsrEdge:
    """
    DSR 图的边

    label 为 None 表示 ∞；仅有 S-to-R 方向的边标签必须为 ∞；有限标签严格为正
    """
    s: int
    r: int
    sign: int
    directions: frozenset[Direction]
    label: Fraction | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputException(f"DSR 边符号必须为 ±1: {self.sign}")
        if not self.directions:
            raise InputException(f"DSR 边必须至少有一个方向: S{self.s + 1}-R{self.r + 1}")
        if self.label is not None and self.label <= 0:
            raise InputException(f"有限边标签必须为正: {self.label}")
        if self.directions == frozenset({Direction.S_TO_R}) and self.label is not None:
            raise InputException(f"仅有 S-to-R 方向的边标签必须为 ∞: S{self.s + 1}-R{self.r + 1}")

    @property
    def key(self) -> EdgeKey:
        return EdgeKey(self.s, self.r, self.sign)

    @property
    def is_undirected(self) -> bool:
        return self.directions == BOTH_DIRECTIONS

    @property
    def has_s_to_r(self) -> bool:
        return Direction.S_TO_R in self.directions

    @property
    def has_r_to_s(self) -> bool:
        return Direction.R_TO_S in self.directions

    @property
    def is_finite(self) -> bool:
        return self.label is not None

    @property
    def s_vertex(self) -> Vertex:
        return Vertex(Side.S, self.s)

    @property
    def r_vertex(self) -> Vertex:
        return Vertex(Side.R, self.r)

    def allows(self, direction: Direction) -> bool:
        return direction in self.directions

    def label_text(self) -> str:
        return "inf" if self.label is None else str(self.label)

    def directions_text(self) -> str:
        if self.is_undirected:
            return "undirected"
        return next(iter(self.directions)).value


@dataclass(frozen=True)
class DsrGraph:
    """
    n×m DSR 图

    forced_infinite 记录因集合中取值不一致而被置为 ∞ 的 R-to-S 边 (s, r, sign)
    """
    s_count: int
    r_count: int
    edges: tuple[DsrEdge, ...] = ()
    forced_infinite: frozenset[EdgeKey] = field(default_factory=frozenset, compare=False)

    def __post_init__(self):
        if self.s_count < 0 or self.r_count < 0:
            raise InputException("顶点数不能为负")
        ordered = tuple(sorted(self.edges, key=lambda e: e.key))
        object.__setattr__(self, "edges", ordered)
        seen: dict[tuple[int, int], list[int]] = {}
        for e in ordered:
            if not (0 <= e.s < self.s_count and 0 <= e.r < self.r_count):
                raise InputException(f"DSR 边端点越界: S{e.s + 1}-R{e.r + 1}")
            seen.setdefault((e.s, e.r), []).append(e.sign)
        for (s, r), signs in seen.items():
            # 同一对顶点之间至多两条边，且一正一负
            if len(signs) > 2 or len(set(signs)) != len(signs):
                raise InputException(f"S{s + 1}-R{r + 1} 之间的边不合法: 至多两条且符号相反")

    @property
    def is_square(self) -> bool:
        return self.s_count == self.r_count

    def edges_between(self, s: int, r: int) -> tuple[DsrEdge, ...]:
        return tuple(e for e in self.edges if e.s == s and e.r == r)

    def edge(self, key: EdgeKey) -> DsrEdge:
        for e in self.edges:
            if e.key == key:
                return e
        raise InputException(f"边不存在: {key}")

    def to_networkx(self) -> nx.MultiGraph:
        """二部多重图视图，边 key 为 EdgeKey"""
        graph = nx.MultiGraph()
        graph.add_nodes_from((Vertex(Side.S, i) for i in range(self.s_count)), bipartite=0)
        graph.add_nodes_from((Vertex(Side.R, j) for j in range(self.r_count)), bipartite=1)
        for e in self.edges:
            graph.add_edge(e.s_vertex, e.r_vertex, key=e.key, edge=e)
        return graph


@dataclass(frozen=True)
class FactorizationSet:
    """
    矩阵对 (A, B) 的列表，约定 Df = -A·Bᵀ 在每一点由某一对实现
    """
    pairs: tuple[tuple[QMatrix, QMatrix], ...]

    def __post_init__(self):
        if not self.pairs:
            raise InputException("分解列表不能为空")
        shape = self.pairs[0][0].shape
        for a, b in self.pairs:
            if a.shape != shape or b.shape != shape:
                raise InputException(f"分解列表中的矩阵维数不一致: 期望 {shape}，得到 {a.shape} 与 {b.shape}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.pairs[0][0].shape


@dataclass(frozen=True)
class DsrCycle:
    """
    DSR 图中的简单环

    edges[k] 连接 vertices[k] 与 vertices[k+1]；forward_ok / backward_ok 表示沿该顺序或反向遍历是否满足边方向
    """
    vertices: tuple[Vertex, ...]
    edges: tuple[DsrEdge, ...]
    forward_ok: bool
    backward_ok: bool

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def sign(self) -> int:
        return prod(e.sign for e in self.edges)

    @property
    def parity(self) -> int:
        return (-1) ** (self.length // 2) * self.sign

    @property
    def is_e_cycle(self) -> bool:
        return self.parity == 1

    @property
    def kind(self) -> str:
        return "e-cycle" if self.is_e_cycle else "o-cycle"

    @property
    def labels(self) -> tuple[Fraction | None, ...]:
        return tuple(e.label for e in self.edges)

    @property
    def is_s_cycle(self) -> bool:
        if any(e.label is None for e in self.edges):
            return False
        odd = prod(e.label for e in self.edges[0::2])
        even = prod(e.label for e in self.edges[1::2])
        return odd == even

    @property
    def edge_keys(self) -> frozenset[EdgeKey]:
        return frozenset(e.key for e in self.edges)

    @property
    def vertex_set(self) -> frozenset[Vertex]:
        return frozenset(self.vertices)

    def orientations(self) -> tuple[bool, ...]:
        """可用的遍历方向：True 为正向，False 为反向"""
        result = []
        if self.forward_ok:
            result.append(True)
        if self.backward_ok:
            result.append(False)
        return tuple(result)

    def traversal(self, forward: bool) -> dict[EdgeKey, Direction]:
        """
        给定遍历方向下每条边继承的 C-方向

        Args:
            forward: True 沿 vertices 顺序，False 反向

        Returns:
            边标识到方向的映射
        """
        result = {}
        for k, e in enumerate(self.edges):
            tail = self.vertices[k] if forward else self.vertices[(k + 1) % len(self.vertices)]
            result[e.key] = Direction.S_TO_R if tail.side == Side.S else Direction.R_TO_S
        return result

    def names(self) -> list[str]:
        return [v.name() for v in self.vertices]


@dataclass(frozen=True)
class TermSubgraph:
    """
    项子图：方形选择 (gamma, delta) 上的完美配对，所有配对边都具有给定方向
    """
    gamma: IndexSet
    delta: IndexSet
    pairing: tuple[tuple[int, int], ...]
    direction: Direction
