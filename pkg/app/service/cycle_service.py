"""
DSR 图环分析：按方向可遍历的简单环枚举、奇偶性、s-cycle、相容定向、S-to-R 相交，以及两个图条件
"""
import logging
from itertools import combinations, product
import networkx as nx
from app.core.config import settings
from app.core.exception import ResourceLimitException
from app.models.dsr import Direction, DsrCycle, DsrEdge, DsrGraph, Side, Vertex
from app.models.report import ConditionKind, ConditionReport, CycleCensus

logger = logging.getLogger(__name__)


def _direction_from(tail: Vertex) -> Direction:
    return Direction.S_TO_R if tail.side == Side.S else Direction.R_TO_S


def _traversable(vertices: tuple[Vertex, ...], edges: tuple[DsrEdge, ...], forward: bool) -> bool:
    n = len(vertices)
    for k, e in enumerate(edges):
        tail = vertices[k] if forward else vertices[(k + 1) % n]
        if not e.allows(_direction_from(tail)):
            return False
    return True


def _canonical(vertices: list[Vertex], edges: list[DsrEdge]) -> DsrCycle:
    """旋转到最小顶点在首位，再取第二个顶点较小的遍历方向"""
    start = vertices.index(min(vertices))
    vertices = vertices[start:] + vertices[:start]
    edges = edges[start:] + edges[:start]
    if len(vertices) == 2:
        edges = sorted(edges, key=lambda e: e.key)
    elif vertices[-1] < vertices[1]:
        vertices = [vertices[0]] + vertices[:0:-1]
        edges = edges[::-1]
    vs, es = tuple(vertices), tuple(edges)
    return DsrCycle(vs, es, _traversable(vs, es, True), _traversable(vs, es, False))


class CycleService:
    """
    DSR 图环分析
    """

    # ==================== 枚举 ====================

    def _direction_digraph(self, g: DsrGraph) -> nx.DiGraph:
        """每条边按其允许的方向给出有向弧，弧上记录可用的边"""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(Vertex(Side.S, i) for i in range(g.s_count))
        digraph.add_nodes_from(Vertex(Side.R, j) for j in range(g.r_count))
        for e in g.edges:
            if e.has_s_to_r:
                digraph.add_edge(e.s_vertex, e.r_vertex)
                digraph[e.s_vertex][e.r_vertex].setdefault("edges", []).append(e)
            if e.has_r_to_s:
                digraph.add_edge(e.r_vertex, e.s_vertex)
                digraph[e.r_vertex][e.s_vertex].setdefault("edges", []).append(e)
        return digraph

    def enumerate_cycles(self, g: DsrGraph, cap: int | None = None) -> list[DsrCycle]:
        """
        枚举全部可遍历的简单环（含平行边构成的 2-环），每个环只出现一次

        一个环可遍历当且仅当存在一个遍历方向使每条边都具有相应方向

        Args:
            g: DSR 图
            cap: 环数量上限，默认 DSR_CYCLE_CAP

        Returns:
            list[DsrCycle]: 规范形式，按 (长度, 顶点序列, 边) 排序

        Raises:
            ResourceLimitException: 环数量超过上限
        """
        cap = settings.DSR_CYCLE_CAP if cap is None else cap
        digraph = self._direction_digraph(g)
        found: dict[frozenset, DsrCycle] = {}
        for walk in nx.simple_cycles(digraph):
            if len(walk) < 2:
                continue
            n = len(walk)
            steps = [digraph[walk[k]][walk[(k + 1) % n]]["edges"] for k in range(n)]
            for choice in product(*steps):
                if len({e.key for e in choice}) != n:
                    continue
                key = frozenset(e.key for e in choice)
                if key in found:
                    continue
                found[key] = _canonical(list(walk), list(choice))
                if len(found) > cap:
                    raise ResourceLimitException("DSR_CYCLE_CAP", cap, "DSR 图环数量过多")
        cycles = sorted(found.values(), key=lambda c: (c.length, c.vertices, [e.key for e in c.edges]))
        logger.debug(f"DSR cycles enumerated: {len(cycles)}")
        return cycles

    # ==================== 单个环 ====================

    def cycle_parity(self, c: DsrCycle) -> int:
        return c.parity

    def classify(self, c: DsrCycle) -> str:
        return c.kind

    def is_s_cycle(self, c: DsrCycle) -> bool:
        return c.is_s_cycle

    # ==================== 环对 ====================

    def compatible_orientation(self, c: DsrCycle, d: DsrCycle) -> bool:
        """
        两个不同的环是否存在在公共边上一致的定向；无公共边时为 True
        """
        shared = c.edge_keys & d.edge_keys
        if not shared:
            return True
        for oc, od in product(c.orientations(), d.orientations()):
            tc, td = c.traversal(oc), d.traversal(od)
            if all(tc[k] == td[k] for k in shared):
                return True
        return False

    def has_s_to_r_intersection(self, c: DsrCycle, d: DsrCycle) -> bool:
        """
        S-to-R 相交：定向相容，且公共边构成的每个连通分量都含奇数条边
        公共边为空时为 False
        """
        shared = c.edge_keys & d.edge_keys
        if not shared:
            return False
        if not self.compatible_orientation(c, d):
            return False
        overlap = nx.MultiGraph()
        for e in c.edges:
            if e.key in shared:
                overlap.add_edge(e.s_vertex, e.r_vertex, key=e.key)
        for component in nx.connected_components(overlap):
            if overlap.subgraph(component).number_of_edges() % 2 == 0:
                return False
        return True

    def has_vertex_only_overlap(self, c: DsrCycle, d: DsrCycle) -> bool:
        return not (c.edge_keys & d.edge_keys) and bool(c.vertex_set & d.vertex_set)

    # ==================== 条件 ====================

    def census(self, cycles: list[DsrCycle]) -> CycleCensus:
        e_count = sum(1 for c in cycles if c.is_e_cycle)
        return CycleCensus(
            total=len(cycles),
            e_cycles=e_count,
            o_cycles=len(cycles) - e_count,
            s_cycles=sum(1 for c in cycles if c.is_s_cycle),
        )

    def check_condition(self, g: DsrGraph, which: ConditionKind, cap: int | None = None) -> ConditionReport:
        """
        检查图条件

        STAR_STAR：不含 e-cycle
        STAR：所有 e-cycle 都是 s-cycle，且任意两个不同的 e-cycle 都没有 S-to-R 相交

        Args:
            g: DSR 图
            which: 条件
            cap: 环数量上限

        Returns:
            ConditionReport: 不成立时带见证
        """
        return self.condition_from_cycles(self.enumerate_cycles(g, cap), which)

    def check_conditions(self, g: DsrGraph, cap: int | None = None) -> tuple[ConditionReport, ConditionReport]:
        """一次枚举同时给出 (STAR, STAR_STAR) 两个报告"""
        cycles = self.enumerate_cycles(g, cap)
        return (
            self.condition_from_cycles(cycles, ConditionKind.STAR),
            self.condition_from_cycles(cycles, ConditionKind.STAR_STAR),
        )

    def condition_from_cycles(self, cycles: list[DsrCycle], which: ConditionKind) -> ConditionReport:
        census = self.census(cycles)
        e_cycles = [c for c in cycles if c.is_e_cycle]

        if which == ConditionKind.STAR_STAR:
            return ConditionReport(
                condition=which,
                holds=not e_cycles,
                census=census,
                witnesses=tuple(e_cycles),
            )

        not_s = tuple(c for c in e_cycles if not c.is_s_cycle)
        pairs = []
        vertex_only = []
        for c, d in combinations(e_cycles, 2):
            if self.has_s_to_r_intersection(c, d):
                pairs.append((c, d))
            elif self.has_vertex_only_overlap(c, d):
                vertex_only.append((c, d))
        if vertex_only:
            logger.info(f"E-cycle pairs sharing vertices but no edges: {len(vertex_only)}")
        return ConditionReport(
            condition=which,
            holds=not not_s and not pairs,
            census=census,
            witnesses=not_s,
            witness_pairs=tuple(pairs),
            vertex_only_overlaps=tuple(vertex_only),
        )


cycle_service = CycleService()
