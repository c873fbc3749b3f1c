"""
分析请求与分析结果模型
"""
from dataclasses import dataclass, field
from enum import Enum
from app.models.dsr import DsrGraph, EdgeKey, FactorizationSet
from app.models.igraph import IGraph
from app.models.matrix import QMatrix
from app.models.report import InjectivityVerdict, MainimpReport, NondegeneracyReport, ConditionReport


class DiagonalSign(str, Enum):
    """对角元符号声明"""
    NEGATIVE = "neg"
    POSITIVE = "pos"
    UNKNOWN = "unknown"

    def flipped(self) -> "DiagonalSign":
        if self == DiagonalSign.NEGATIVE:
            return DiagonalSign.POSITIVE
        if self == DiagonalSign.POSITIVE:
            return DiagonalSign.NEGATIVE
        return self


class CoverMode(str, Enum):
    """分解对全域的覆盖方式"""
    SET_VALUED = "set-valued"  # 单个集合值对象覆盖所有点
    FINITE_COVER = "finite-cover"  # 有限个分解，声明它们覆盖全域


@dataclass(frozen=True)
class NamedFactorization:
    """带编号的分解列表；converted_from 保存转换前的 Df = A·B 形式"""
    id: str
    factorizations: FactorizationSet
    converted_from: tuple[tuple[QMatrix, QMatrix], ...] = ()

    @property
    def mode(self) -> CoverMode:
        return CoverMode.SET_VALUED if len(self.factorizations.pairs) == 1 else CoverMode.FINITE_COVER


@dataclass(frozen=True)
class Subject:
    """
    分析对象：Jacobian 矩阵（或符号模式）、分解列表、或直接给出的 DSR 图 / I-graph
    """
    name: str = "subject"
    jacobian: QMatrix | None = None
    factorizations: tuple[NamedFactorization, ...] = ()
    dsr_graph: DsrGraph | None = None
    igraph: IGraph | None = None

    @property
    def is_empty(self) -> bool:
        return self.jacobian is None and not self.factorizations and self.dsr_graph is None and self.igraph is None


@dataclass(frozen=True)
class AnalysisRequest:
    """
    分析请求

    declarations 是用户声明的函数层面前提（矩形区域、可微等），原样写入报告
    """
    subject: Subject
    domain_open: bool = False
    diagonal_sign: DiagonalSign = DiagonalSign.UNKNOWN
    dual: bool = False
    declarations: tuple[str, ...] = ()


@dataclass(frozen=True)
class MatrixClassCertificate:
    """由 G_{A,I} 得到的矩阵类结论"""
    graph: DsrGraph
    star_star: ConditionReport
    nondegeneracy: NondegeneracyReport
    sign_nonsingular: bool
    qualitative_class_p: bool


@dataclass(frozen=True)
class IGraphSection:
    graph: IGraph
    verdict: InjectivityVerdict


@dataclass(frozen=True)
class DsrSection:
    """单个 DSR 图的分析；factorization_id 为空表示 JDSR 图或直接给出的图"""
    graph: DsrGraph
    verdict: InjectivityVerdict
    factorization_id: str | None = None
    mode: CoverMode | None = None
    converted_pairs: tuple[tuple[QMatrix, QMatrix], ...] = ()

    @property
    def forced_infinite(self) -> frozenset[EdgeKey]:
        return self.graph.forced_infinite


@dataclass(frozen=True)
class Hierarchy:
    """c1: I-graph 无正环；c2: JDSR 满足 STAR；c3: c2 或某个分解图满足 STAR"""
    c1: bool | None
    c2: bool | None
    c3: bool


@dataclass(frozen=True)
class AnalysisResult:
    """
    完整分析结果，各段顺序固定
    """
    request: AnalysisRequest
    igraph: IGraphSection | None = None
    jdsr: DsrSection | None = None
    dsr: tuple[DsrSection, ...] = ()
    mainimp: MainimpReport | None = None
    hierarchy: Hierarchy | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def sections(self) -> list[InjectivityVerdict]:
        result = []
        if self.igraph is not None:
            result.append(self.igraph.verdict)
        if self.jdsr is not None:
            result.append(self.jdsr.verdict)
        result.extend(s.verdict for s in self.dsr)
        return result
