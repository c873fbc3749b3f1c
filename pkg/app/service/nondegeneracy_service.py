"""
非退化服务：项子图检测，弱非退化与非退化判定
"""
import logging
from itertools import combinations
from typing import Sequence
import networkx as nx
from networkx.algorithms import bipartite
from app.core.config import settings
from app.core.exception import InputException, ResourceLimitException
from app.models.dsr import Direction, DsrGraph, Side, TermSubgraph, Vertex
from app.models.matrix import IndexSet, normalize_index_set
from app.models.report import GammaWitness, NondegeneracyReport

logger = logging.getLogger(__name__)


class NondegeneracyService:
    """
    项子图与非退化
    """

    def _adjacency(self, g: DsrGraph, direction: Direction) -> dict[int, set[int]]:
        """S 顶点到具有给定方向的边所连 R 顶点的邻接表"""
        adjacency: dict[int, set[int]] = {}
        for e in g.edges:
            if e.allows(direction):
                adjacency.setdefault(e.s, set()).add(e.r)
        return adjacency

    def _has_perfect_matching(self, adjacency: dict[int, set[int]], rows: Sequence[int], cols: Sequence[int]) -> bool:
        if len(rows) != len(cols):
            return False
        if not rows:
            return True
        col_set = set(cols)
        graph = nx.Graph()
        top = [Vertex(Side.S, s) for s in rows]
        graph.add_nodes_from(top, bipartite=0)
        graph.add_nodes_from((Vertex(Side.R, r) for r in cols), bipartite=1)
        for s in rows:
            for r in adjacency.get(s, ()):
                if r in col_set:
                    graph.add_edge(Vertex(Side.S, s), Vertex(Side.R, r))
        matching = bipartite.hopcroft_karp_matching(graph, top_nodes=top)
        return len(matching) // 2 == len(rows)

    def _least_matching(
        self, adjacency: dict[int, set[int]], rows: IndexSet, cols: IndexSet
    ) -> tuple[tuple[int, int], ...] | None:
        """字典序最小的完美配对：按行依次取仍能补全为完美配对的最小列"""
        if not self._has_perfect_matching(adjacency, rows, cols):
            return None
        pairing = []
        remaining = list(cols)
        for k, s in enumerate(rows):
            for r in sorted(adjacency.get(s, set()) & set(remaining)):
                rest = [c for c in remaining if c != r]
                if self._has_perfect_matching(adjacency, rows[k + 1:], rest):
                    pairing.append((s, r))
                    remaining = rest
                    break
        return tuple(pairing)

    # ==================== 项子图 ====================

    def find_term_subgraph(
        self,
        g: DsrGraph,
        gamma: Sequence[int],
        delta: Sequence[int],
        direction: Direction,
    ) -> TermSubgraph | None:
        """
        在 G(gamma|delta) 中找给定方向的项子图

        Args:
            g: DSR 图
            gamma: S 顶点下标（从 0 开始）
            delta: R 顶点下标（从 0 开始）
            direction: 所有配对边都必须具有的方向

        Returns:
            TermSubgraph | None: 字典序最小的项子图，不存在时为 None

        Raises:
            InputException: |gamma| != |delta| 或下标越界
        """
        rows = normalize_index_set(gamma, g.s_count, "S-vertex")
        cols = normalize_index_set(delta, g.r_count, "R-vertex")
        if len(rows) != len(cols):
            raise InputException(f"项子图要求方形选择: |gamma|={len(rows)}, |delta|={len(cols)}")
        pairing = self._least_matching(self._adjacency(g, direction), rows, cols)
        if pairing is None:
            return None
        return TermSubgraph(rows, cols, pairing, direction)

    def _admissible_delta(self, g: DsrGraph, gamma: IndexSet) -> GammaWitness:
        """为 gamma 找第一个同时含两种方向项子图的 delta"""
        s_to_r = self._adjacency(g, Direction.S_TO_R)
        r_to_s = self._adjacency(g, Direction.R_TO_S)
        neighbours = sorted(set().union(*(s_to_r.get(s, set()) | r_to_s.get(s, set()) for s in gamma)))
        for delta in combinations(neighbours, len(gamma)):
            forward = self._least_matching(s_to_r, gamma, delta)
            if forward is None:
                continue
            backward = self._least_matching(r_to_s, gamma, delta)
            if backward is None:
                continue
            return GammaWitness(
                gamma=gamma,
                delta=delta,
                s_to_r=TermSubgraph(gamma, delta, forward, Direction.S_TO_R),
                r_to_s=TermSubgraph(gamma, delta, backward, Direction.R_TO_S),
            )
        return GammaWitness(gamma=gamma, delta=None)

    # ==================== 非退化 ====================

    def weak_witness(self, g: DsrGraph) -> GammaWitness | None:
        """取 gamma 为全部 S 顶点时的见证；R 顶点少于 S 顶点时直接返回 None"""
        if g.s_count == 0 or g.r_count < g.s_count:
            return None
        witness = self._admissible_delta(g, tuple(range(g.s_count)))
        return witness if witness.admissible else None

    def is_weakly_nondegenerate(self, g: DsrGraph) -> bool:
        if g.s_count == 0:
            return True
        return self.weak_witness(g) is not None

    def nondegeneracy_report(self, g: DsrGraph, s_cap: int | None = None) -> NondegeneracyReport:
        """
        逐个检查所有非空 S 子集 gamma，按 (|gamma|, gamma) 排序给出见证

        Args:
            g: DSR 图
            s_cap: S 顶点数上限，默认 NONDEGENERACY_S_CAP

        Returns:
            NondegeneracyReport: 不成立时可以读出全部失败的 gamma

        Raises:
            ResourceLimitException: S 顶点数超过上限
        """
        s_cap = settings.NONDEGENERACY_S_CAP if s_cap is None else s_cap
        if g.s_count > s_cap:
            raise ResourceLimitException("NONDEGENERACY_S_CAP", s_cap, f"S 顶点数 {g.s_count}")
        entries = []
        for size in range(1, g.s_count + 1):
            for gamma in combinations(range(g.s_count), size):
                entries.append(self._admissible_delta(g, gamma))
        holds = all(w.admissible for w in entries)
        weakly = g.s_count == 0 or (bool(entries) and entries[-1].admissible)
        report = NondegeneracyReport(holds=holds, weakly=weakly, entries=tuple(entries))
        if not holds:
            logger.info(f"Nondegeneracy fails, witness gamma: {report.witness}")
        return report

    def is_nondegenerate(self, g: DsrGraph, s_cap: int | None = None) -> bool:
        return self.nondegeneracy_report(g, s_cap).holds


nondegeneracy_service = NondegeneracyService()
