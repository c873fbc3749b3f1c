from pydantic import BaseModel, Field
from app.schemas.response.cycle_response import ConditionInfo, CycleInfo, ICycleInfo
from app.schemas.response.graph_response import DsrGraphInfo, IGraphInfo
from app.schemas.response.nondegeneracy_response import NondegeneracyInfo
from app.schemas.response.verdict_response import VerdictInfo


class AssumptionsInfo(BaseModel):
    """分析前提：命令行开关与用户声明"""
    domain_open: bool = Field(..., description="区域是否为开集")
    diagonal: str = Field(..., description="对角元符号（neg / pos / unknown）")
    dual: bool = Field(..., description="是否为对偶分析")
    declarations: list[str] = Field(default_factory=list, description="用户声明的函数层面前提")


class IGraphSectionInfo(BaseModel):
    """I-graph 判定段"""
    graph: IGraphInfo = Field(..., description="I-graph")
    verdict: VerdictInfo = Field(..., description="判定结果")


class PairInfo(BaseModel):
    """矩阵对（-A·Bᵀ 约定）"""
    A: list[list[str]] = Field(..., description="矩阵 A")
    B: list[list[str]] = Field(..., description="矩阵 B")


class DsrSectionInfo(BaseModel):
    """
    DSR 图判定段
    """
    factorization_id: str | None = Field(None, description="分解编号，JDSR 图为 null")
    mode: str | None = Field(None, description="set-valued 或 finite-cover")
    converted_pairs: list[PairInfo] = Field(default_factory=list, description="由 Df = A·B 转换得到的矩阵对")
    graph: DsrGraphInfo = Field(..., description="DSR 图")
    verdict: VerdictInfo = Field(..., description="判定结果")


class MainimpInfo(BaseModel):
    """
    I-graph 与 JDSR 图环结构的交叉检查
    """
    positive_cycle_in_h: bool = Field(..., description="I-graph 有正环")
    e_cycle_in_g: bool = Field(..., description="JDSR 图有 e-cycle")
    negative_cycle_in_h: bool = Field(..., description="I-graph 有长度 ≥ 2 的负环")
    o_cycle_in_g: bool = Field(..., description="JDSR 图有 o-cycle")
    agrees: bool = Field(..., description="两组等价关系是否都成立")
    length_one_flag: bool = Field(..., description="I-graph 有负自环，在 JDSR 图中没有对应的环")
    h_positive_witness: ICycleInfo | None = Field(None, description="I-graph 正环见证")
    h_negative_witness: ICycleInfo | None = Field(None, description="I-graph 负环见证")
    g_e_witness: CycleInfo | None = Field(None, description="JDSR 图 e-cycle 见证")
    g_o_witness: CycleInfo | None = Field(None, description="JDSR 图 o-cycle 见证")


class HierarchyInfo(BaseModel):
    """c1: I-graph 无正环；c2: JDSR 满足 star；c3: c2 或某个分解图满足 star"""
    c1: bool | None = Field(None, description="I-graph 无正环")
    c2: bool | None = Field(None, description="JDSR 图满足 star")
    c3: bool = Field(..., description="某个 DSR 图满足 star")


class SummaryClaim(BaseModel):
    """汇总后的结论，section 指出来源"""
    claim: str = Field(..., description="结论")
    justification: str = Field(..., description="依据")
    section: str = Field(..., description="来源段：igraph / jdsr / dsr:<id>")


class AnalysisReport(BaseModel):
    """
    完整分析报告（dsr-report/1）
    """
    schema_version: str = Field(..., alias="schema", description="报告版本")
    subject: str = Field(..., description="对象名称")
    assumptions: AssumptionsInfo = Field(..., description="分析前提")
    igraph: IGraphSectionInfo | None = Field(None, description="I-graph 判定段")
    jdsr: DsrSectionInfo | None = Field(None, description="JDSR 图判定段")
    dsr: list[DsrSectionInfo] = Field(default_factory=list, description="各分解的 DSR 图判定段")
    mainimp_crosscheck: MainimpInfo | None = Field(None, description="环结构交叉检查")
    hierarchy: HierarchyInfo | None = Field(None, description="条件层级")
    claims: list[SummaryClaim] = Field(default_factory=list, description="全部结论")
    notes: list[str] = Field(default_factory=list, description="附注")

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "schema": "dsr-report/1",
                "subject": "partially-linear",
                "assumptions": {"domain_open": False, "diagonal": "neg", "dual": False, "declarations": []},
                "claims": [{"claim": "F- injective", "justification": "dsr:condition-star", "section": "jdsr"}],
                "notes": []
            }
        }


class MatrixClassInfo(BaseModel):
    """由 G_{A,I} 得到的矩阵类结论"""
    graph: DsrGraphInfo = Field(..., description="G_{A,I}")
    star_star: ConditionInfo = Field(..., description="star_star 检查")
    nondegeneracy: NondegeneracyInfo = Field(..., description="非退化检查")
    sign_nonsingular: bool = Field(..., description="A 符号非奇异")
    qualitative_class_p: bool = Field(..., description="Q(A) 中所有矩阵都是 P 矩阵")


class JdsrReport(BaseModel):
    """
    jdsr 命令报告
    """
    schema_version: str = Field(..., alias="schema", description="报告版本")
    subject: str = Field(..., description="对象名称")
    assumptions: AssumptionsInfo = Field(..., description="分析前提")
    jdsr: DsrSectionInfo = Field(..., description="JDSR 图判定段")
    mainimp_crosscheck: MainimpInfo = Field(..., description="环结构交叉检查")
    matrix_class: MatrixClassInfo | None = Field(None, description="矩阵类结论，只有直接给出 Jacobian 时计算")

    class Config:
        populate_by_name = True


class DsrReport(BaseModel):
    """dsr 命令报告：各分解及直接给出的 DSR 图"""
    schema_version: str = Field(..., alias="schema", description="报告版本")
    subject: str = Field(..., description="对象名称")
    assumptions: AssumptionsInfo = Field(..., description="分析前提")
    dsr: list[DsrSectionInfo] = Field(..., description="DSR 图判定段")
    cycles: dict[str, list[CycleInfo]] = Field(default_factory=dict, description="各段的全部环")

    class Config:
        populate_by_name = True


class IGraphReport(BaseModel):
    """igraph 命令报告"""
    schema_version: str = Field(..., alias="schema", description="报告版本")
    subject: str = Field(..., description="对象名称")
    assumptions: AssumptionsInfo = Field(..., description="分析前提")
    igraph: IGraphSectionInfo = Field(..., description="I-graph 判定段")
    cycles: list[ICycleInfo] = Field(default_factory=list, description="全部简单环")

    class Config:
        populate_by_name = True
