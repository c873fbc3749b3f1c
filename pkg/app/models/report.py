"""
分析结果模型：条件检查、非退化、单射性结论、随机校验结果
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any
from app.models.dsr import DsrCycle, TermSubgraph
from app.models.igraph import ICycle
from app.models.matrix import IndexSet


class ConditionKind(str, Enum):
    """DSR 图条件枚举"""
    STAR = "star"  # 所有 e-cycle 都是 s-cycle，且任意两个 e-cycle 无 S-to-R 相交
    STAR_STAR = "star_star"  # 不含 e-cycle


@dataclass(frozen=True)
class CycleCensus:
    """环统计"""
    total: int
    e_cycles: int
    o_cycles: int
    s_cycles: int


@dataclass(frozen=True)
class ConditionReport:
    """
    条件检查结果

    holds 为 False 时 witnesses 或 witness_pairs 至少一个非空
    """
    condition: ConditionKind
    holds: bool
    census: CycleCensus
    witnesses: tuple[DsrCycle, ...] = ()
    witness_pairs: tuple[tuple[DsrCycle, DsrCycle], ...] = ()
    vertex_only_overlaps: tuple[tuple[DsrCycle, DsrCycle], ...] = ()


@dataclass(frozen=True)
class GammaWitness:
    """单个 S 子集 gamma 的非退化见证：delta 为 None 表示找不到"""
    gamma: IndexSet
    delta: IndexSet | None
    s_to_r: TermSubgraph | None = None
    r_to_s: TermSubgraph | None = None

    @property
    def admissible(self) -> bool:
        return self.delta is not None


@dataclass(frozen=True)
class NondegeneracyReport:
    """非退化检查结果，entries 按 (|gamma|, gamma) 排序"""
    holds: bool
    weakly: bool
    entries: tuple[GammaWitness, ...] = ()

    @property
    def failing_gammas(self) -> tuple[IndexSet, ...]:
        return tuple(w.gamma for w in self.entries if not w.admissible)

    @property
    def witness(self) -> IndexSet | None:
        """最大的失败子集（同样大小时取字典序最小）"""
        failing = self.failing_gammas
        if not failing:
            return None
        return min(failing, key=lambda g: (-len(g), g))


class ClaimKind(str, Enum):
    """单射性结论枚举"""
    F_MINUS = "F- injective"
    F_PLUS = "F+ injective"
    F = "F injective"


class Justification(str, Enum):
    """结论依据"""
    IGRAPH_NO_POSITIVE_CYCLE = "igraph:no-positive-cycle"
    IGRAPH_NEGATIVE_DIAGONAL = "igraph:no-positive-cycle+negative-diagonal"
    DSR_STAR = "dsr:condition-star"
    DSR_STAR_STAR_NONDEGENERATE = "dsr:condition-star-star+nondegenerate"
    DSR_STAR_STAR_WEAK_OPEN = "dsr:condition-star-star+weakly-nondegenerate+open-domain"
    DUAL_IGRAPH_NO_POSITIVE_CYCLE = "dual:igraph:no-positive-cycle"
    DUAL_IGRAPH_POSITIVE_DIAGONAL = "dual:igraph:no-positive-cycle+positive-diagonal"
    DUAL_DSR_STAR = "dual:dsr:condition-star"
    DUAL_DSR_STAR_STAR_NONDEGENERATE = "dual:dsr:condition-star-star+nondegenerate"
    DUAL_DSR_STAR_STAR_WEAK_OPEN = "dual:dsr:condition-star-star+weakly-nondegenerate+open-domain"


# 原问题结论 → 对偶结论
DUAL_JUSTIFICATION = {
    Justification.IGRAPH_NO_POSITIVE_CYCLE: Justification.DUAL_IGRAPH_NO_POSITIVE_CYCLE,
    Justification.IGRAPH_NEGATIVE_DIAGONAL: Justification.DUAL_IGRAPH_POSITIVE_DIAGONAL,
    Justification.DSR_STAR: Justification.DUAL_DSR_STAR,
    Justification.DSR_STAR_STAR_NONDEGENERATE: Justification.DUAL_DSR_STAR_STAR_NONDEGENERATE,
    Justification.DSR_STAR_STAR_WEAK_OPEN: Justification.DUAL_DSR_STAR_STAR_WEAK_OPEN,
}


@dataclass(frozen=True)
class Claim:
    """一条单射性结论，恰好对应一个依据"""
    kind: ClaimKind
    justification: Justification


@dataclass(frozen=True)
class InjectivityVerdict:
    """
    单射性判定

    只给出充分条件下的正面结论，从不断言非单射；没有结论时 inconclusive_reasons 说明原因
    """
    claims: tuple[Claim, ...] = ()
    inconclusive_reasons: tuple[str, ...] = ()
    condition_reports: tuple[ConditionReport, ...] = ()
    nondegeneracy: NondegeneracyReport | None = None
    positive_cycle: ICycle | None = None

    @property
    def claim_kinds(self) -> frozenset[ClaimKind]:
        return frozenset(c.kind for c in self.claims)

    @property
    def conclusive(self) -> bool:
        return bool(self.claims)


@dataclass(frozen=True)
class MainimpReport:
    """
    I-graph 与 JDSR 图环结构对应关系的交叉检查

    正环一侧计入长度为 1 的正自环（对应 JDSR 中的平行边 2-环）；
    负环一侧只计长度 ≥ 2 的环，若计入负自环会改变结论则置 length_one_flag
    """
    positive_cycle_in_h: bool
    e_cycle_in_g: bool
    negative_cycle_in_h: bool
    o_cycle_in_g: bool
    length_one_flag: bool
    h_positive_witness: ICycle | None = None
    h_negative_witness: ICycle | None = None
    g_e_witness: DsrCycle | None = None
    g_o_witness: DsrCycle | None = None

    @property
    def positive_agrees(self) -> bool:
        return self.positive_cycle_in_h == self.e_cycle_in_g

    @property
    def negative_agrees(self) -> bool:
        return self.negative_cycle_in_h == self.o_cycle_in_g

    @property
    def agrees(self) -> bool:
        return self.positive_agrees and self.negative_agrees


@dataclass(frozen=True)
class TrialOutcome:
    """
    单次随机试验结果

    失败时必须带可重放的 seed 与 witness
    """
    suite: str
    trial_id: int
    seed: int
    predicate: str
    passed: bool
    inputs: dict[str, Any] = field(default_factory=dict)
    witness: dict[str, Any] | None = None
    skipped: bool = False


@dataclass(frozen=True)
class OracleRun:
    """一个校验套件的运行结果，outcomes 按 trial_id 排序"""
    suite: str
    seed: int
    trials: int
    dims: tuple[int, int]
    outcomes: tuple[TrialOutcome, ...] = ()
    coverage: dict[str, int] = field(default_factory=dict)

    @property
    def failures(self) -> tuple[TrialOutcome, ...]:
        return tuple(o for o in self.outcomes if not o.passed)

    @property
    def checked(self) -> int:
        return sum(1 for o in self.outcomes if not o.skipped)
