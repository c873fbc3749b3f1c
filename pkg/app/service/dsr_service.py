"""
DSR 图服务：由矩阵对、矩阵集合对、分解列表构造 DSR 图，子图提取，JDSR 图
"""
import logging
from typing import Iterable, Sequence
from app.core.exception import InputException, QualitativeNotEvaluableException
from app.models.dsr import Direction, DsrEdge, DsrGraph, EdgeKey, FactorizationSet
from app.models.matrix import EntryKind, QMatrix, normalize_index_set

logger = logging.getLogger(__name__)


class DsrService:
    """
    DSR 图构造
    约定 Df = -A·Bᵀ：A 给出 R-to-S 方向及标签，B 给出 S-to-R 方向
    """

    def _superpose(self, pairs: Sequence[tuple[QMatrix, QMatrix]]) -> DsrGraph:
        """
        对矩阵（集合）对做叠加构造

        对每个位置 (i,j) 与符号 sigma：A 中出现 sigma 则有 R-to-S 方向，B 中出现 sigma 则有 S-to-R 方向；
        只有所有对的 A_ij 都是同一个精确值时才保留有限标签
        """
        n, m = pairs[0][0].shape
        edges = []
        forced = set()
        for i in range(n):
            for j in range(m):
                a_entries = [a.entry(i, j) for a, _ in pairs]
                b_signs = {b.entry(i, j).sign for _, b in pairs}
                a_signs = {e.sign for e in a_entries}
                for sigma in (-1, 1):
                    directions = set()
                    if sigma in a_signs:
                        directions.add(Direction.R_TO_S)
                    if sigma in b_signs:
                        directions.add(Direction.S_TO_R)
                    if not directions:
                        continue
                    label = None
                    if Direction.R_TO_S in directions:
                        values = {e.value if e.kind == EntryKind.FIXED else None for e in a_entries}
                        if len(values) == 1 and None not in values:
                            label = abs(values.pop())
                        elif any(e.kind == EntryKind.FIXED and e.sign == sigma for e in a_entries):
                            # 集合中取值不一致，标签被迫为 ∞
                            forced.add(EdgeKey(i, j, sigma))
                    edges.append(DsrEdge(i, j, sigma, frozenset(directions), label))
        if forced:
            logger.info(f"Labels forced to inf by set disagreement: {len(forced)}")
        return DsrGraph(n, m, tuple(edges), frozenset(forced))

    # ==================== 构造 ====================

    def dsr_from_pair(self, a: QMatrix, b: QMatrix) -> DsrGraph:
        """
        由精确矩阵对 (A, B) 构造 G_{A,B}

        Args:
            a: n×m 精确矩阵
            b: n×m 精确矩阵

        Returns:
            DsrGraph

        Raises:
            InputException: 维数不一致
            QualitativeNotEvaluableException: 含符号元素
        """
        if a.shape != b.shape:
            raise InputException(f"A 与 B 维数不一致: {a.shape} vs {b.shape}")
        if not (a.is_exact and b.is_exact):
            raise QualitativeNotEvaluableException(
                "qualitative matrix not evaluable: dsr_from_pair 要求精确矩阵，符号模式请使用集合构造"
            )
        return self._superpose([(a, b)])

    def dsr_from_sets(self, a_set: QMatrix, b_set: QMatrix) -> DsrGraph:
        """
        由定性矩阵集合对构造 G_{A,B}：符号元素表示该位置符号固定、数值任意

        Raises:
            InputException: 维数不一致
        """
        if a_set.shape != b_set.shape:
            raise InputException(f"A 与 B 维数不一致: {a_set.shape} vs {b_set.shape}")
        return self._superpose([(a_set, b_set)])

    def dsr_for_factorizations(self, factorizations: FactorizationSet) -> DsrGraph:
        """由分解列表叠加构造 DSR 图，与输入顺序无关"""
        return self._superpose(list(factorizations.pairs))

    def jdsr(self, m: QMatrix) -> DsrGraph:
        """Jacobian DSR 图 G_{M,-I}"""
        if not m.is_square:
            raise InputException(f"JDSR 图要求方阵，得到 {m.rows}×{m.cols}")
        return self.dsr_from_sets(m, QMatrix.identity(m.rows, scale=-1))

    def jdsr_dual(self, m: QMatrix) -> DsrGraph:
        """对偶 JDSR 图 G_{M,I}"""
        if not m.is_square:
            raise InputException(f"对偶 JDSR 图要求方阵，得到 {m.rows}×{m.cols}")
        return self.dsr_from_sets(m, QMatrix.identity(m.rows))

    # ==================== 变换 ====================

    def dsr_subgraph(self, g: DsrGraph, gamma: Sequence[int], delta: Sequence[int]) -> DsrGraph:
        """
        诱导子图 G(gamma|delta)，顶点按 gamma、delta 中的位置重新编号

        Raises:
            InputException: 下标为空或越界
        """
        rows = normalize_index_set(gamma, g.s_count, "S-vertex")
        cols = normalize_index_set(delta, g.r_count, "R-vertex")
        s_pos = {s: k for k, s in enumerate(rows)}
        r_pos = {r: k for k, r in enumerate(cols)}
        edges = tuple(
            DsrEdge(s_pos[e.s], r_pos[e.r], e.sign, e.directions, e.label)
            for e in g.edges
            if e.s in s_pos and e.r in r_pos
        )
        forced = frozenset(
            EdgeKey(s_pos[k.s], r_pos[k.r], k.sign)
            for k in g.forced_infinite
            if k.s in s_pos and k.r in r_pos
        )
        return DsrGraph(len(rows), len(cols), edges, forced)

    def negate_first_factor(self, g: DsrGraph) -> DsrGraph:
        """
        由 G_{A,B} 得到 G_{-A,B}

        每条边拆成 R-to-S 分量（带标签）与 S-to-R 分量，只翻转 R-to-S 分量的符号，再按符号重新合并
        """
        components: dict[tuple[int, int, int], dict] = {}
        for e in g.edges:
            if e.has_r_to_s:
                slot = components.setdefault((e.s, e.r, -e.sign), {})
                slot[Direction.R_TO_S] = e.label
            if e.has_s_to_r:
                slot = components.setdefault((e.s, e.r, e.sign), {})
                slot[Direction.S_TO_R] = None
        edges = tuple(
            DsrEdge(s, r, sign, frozenset(slot), slot.get(Direction.R_TO_S))
            for (s, r, sign), slot in components.items()
        )
        forced = frozenset(EdgeKey(k.s, k.r, -k.sign) for k in g.forced_infinite)
        return DsrGraph(g.s_count, g.r_count, edges, forced)

    def to_minus_abt(self, a: QMatrix, b: QMatrix) -> tuple[QMatrix, QMatrix]:
        """
        将 Df = A·B 形式的分解转换为 Df = -A'·B'ᵀ 的矩阵对 (A', B') = (-A, Bᵀ)

        Args:
            a: n×k 矩阵
            b: k×n 矩阵

        Returns:
            tuple[QMatrix, QMatrix]: 转换后的同型矩阵对

        Raises:
            InputException: A·B 不是方阵或维数不匹配
        """
        if a.cols != b.rows or a.rows != b.cols:
            raise InputException(
                f"Df = A·B 分解要求 A 为 n×k、B 为 k×n，得到 {a.rows}×{a.cols} 与 {b.rows}×{b.cols}"
            )
        return a.negated(), b.transposed()

    def factorization_set(self, pairs: Iterable[tuple[QMatrix, QMatrix]]) -> FactorizationSet:
        return FactorizationSet(tuple(pairs))


dsr_service = DsrService()
