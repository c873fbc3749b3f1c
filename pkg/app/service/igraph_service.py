"""
I-graph 服务：构造、叠加、有符号环检测
"""
import logging
from itertools import product
from typing import Iterable, Iterator
import networkx as nx
from app.core.config import settings
from app.core.exception import InputException, ResourceLimitException
from app.models.igraph import ICycle, IEdge, IGraph
from app.models.matrix import QMatrix

logger = logging.getLogger(__name__)


class IGraphService:
    """
    I-graph 操作
    """

    # ==================== 构造 ====================

    def igraph_from_matrix(self, j: QMatrix) -> IGraph:
        """
        由方阵构造 I-graph：J_ij 非零时有一条 j→i 的边，符号取 J_ij 的符号

        Args:
            j: 方阵，允许符号元素

        Returns:
            IGraph

        Raises:
            InputException: 非方阵
        """
        if not j.is_square:
            raise InputException(f"I-graph 要求方阵，得到 {j.rows}×{j.cols}")
        pattern = j.sign_pattern()
        edges = frozenset(
            IEdge(col, row, pattern[row][col])
            for row in range(j.rows)
            for col in range(j.cols)
            if pattern[row][col] != 0
        )
        return IGraph(j.rows, edges)

    def igraph_superpose(self, graphs: Iterable[IGraph]) -> IGraph:
        """
        I-graph 叠加（边集并集）

        Raises:
            InputException: 列表为空或顶点数不一致
        """
        graphs = list(graphs)
        if not graphs:
            raise InputException("叠加至少需要一个 I-graph")
        n = graphs[0].vertex_count
        for h in graphs:
            if h.vertex_count != n:
                raise InputException(f"I-graph 顶点数不一致: {n} vs {h.vertex_count}")
        return IGraph(n, frozenset().union(*(h.edges for h in graphs)))

    def igraph_from_matrices(self, matrices: Iterable[QMatrix]) -> IGraph:
        return self.igraph_superpose(self.igraph_from_matrix(m) for m in matrices)

    # ==================== 环 ====================

    def _node_cycles(self, h: IGraph) -> Iterator[tuple[int, ...]]:
        """忽略符号的简单有向环，旋转到最小顶点在首位"""
        collapsed = nx.DiGraph()
        collapsed.add_nodes_from(range(h.vertex_count))
        collapsed.add_edges_from((e.source, e.target) for e in h.edges)
        for cycle in nx.simple_cycles(collapsed):
            start = cycle.index(min(cycle))
            yield tuple(cycle[start:] + cycle[:start])

    def _sign_choices(self, h: IGraph, vertices: tuple[int, ...]) -> list[tuple[int, ...]]:
        n = len(vertices)
        return [h.signs_between(vertices[k], vertices[(k + 1) % n]) for k in range(n)]

    def enumerate_icycles(self, h: IGraph, cap: int | None = None) -> list[ICycle]:
        """
        枚举全部简单有向环（含长度为 1 的自环），异号平行边产生不同的环

        Args:
            h: I-graph
            cap: 环数量上限，默认 ICYCLE_CAP

        Returns:
            list[ICycle]: 按 (顶点序列, 符号序列) 排序

        Raises:
            ResourceLimitException: 环数量超过上限
        """
        cap = settings.ICYCLE_CAP if cap is None else cap
        result = []
        for vertices in self._node_cycles(h):
            for signs in product(*self._sign_choices(h, vertices)):
                result.append(ICycle(vertices, signs))
                if len(result) > cap:
                    raise ResourceLimitException("ICYCLE_CAP", cap, "I-graph 环数量过多")
        result.sort(key=lambda c: (c.vertices, c.signs))
        logger.debug(f"I-graph cycles enumerated: {len(result)}")
        return result

    def find_cycle(self, h: IGraph, sign: int, min_length: int = 1, cap: int | None = None) -> ICycle | None:
        """
        找到一个给定符号的简单环，找到即停止

        Args:
            h: I-graph
            sign: +1 或 -1
            min_length: 只考虑长度不小于该值的环
            cap: 检查的顶点环数量上限

        Returns:
            ICycle | None: 找到的环
        """
        cap = settings.ICYCLE_CAP if cap is None else cap
        examined = 0
        for vertices in self._node_cycles(h):
            examined += 1
            if examined > cap:
                raise ResourceLimitException("ICYCLE_CAP", cap, "I-graph 环数量过多")
            if len(vertices) < min_length:
                continue
            choices = self._sign_choices(h, vertices)
            # 若某一步两种符号都有，则两种环符号都能取到
            flexible = next((k for k, c in enumerate(choices) if len(c) == 2), None)
            signs = [c[-1] for c in choices]
            total = 1
            for s in signs:
                total *= s
            if total != sign:
                if flexible is None:
                    continue
                signs[flexible] = -signs[flexible]
            return ICycle(vertices, tuple(signs))
        return None

    def has_positive_cycle(self, h: IGraph, min_length: int = 1, cap: int | None = None) -> bool:
        return self.find_cycle(h, 1, min_length, cap) is not None

    def has_negative_cycle(self, h: IGraph, min_length: int = 1, cap: int | None = None) -> bool:
        return self.find_cycle(h, -1, min_length, cap) is not None


igraph_service = IGraphService()
