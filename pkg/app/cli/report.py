"""
分析结果 → 报告文档（pydantic）的转换
报告中的下标一律从 1 开始
"""
from app.core.config import settings
from app.models.analysis import AnalysisRequest, AnalysisResult, DsrSection, IGraphSection, MatrixClassCertificate
from app.models.dsr import DsrCycle, DsrGraph, TermSubgraph
from app.models.igraph import ICycle, IGraph
from app.models.report import ConditionReport, InjectivityVerdict, MainimpReport, NondegeneracyReport, OracleRun, TrialOutcome
from app.schemas.response import (
    AnalysisReport,
    AssumptionsInfo,
    CensusInfo,
    ClaimInfo,
    ConditionInfo,
    CycleInfo,
    DsrEdgeInfo,
    DsrGraphInfo,
    DsrSectionInfo,
    EdgeRef,
    GammaInfo,
    HierarchyInfo,
    ICycleInfo,
    IEdgeInfo,
    IGraphInfo,
    IGraphSectionInfo,
    MainimpInfo,
    MatrixClassInfo,
    NondegeneracyInfo,
    OracleReport,
    PairInfo,
    SummaryClaim,
    TermSubgraphInfo,
    TrialInfo,
    VerdictInfo,
)


def _one_based(indices) -> list[int]:
    return [i + 1 for i in indices]


# ==================== 图 ====================

def dsr_graph_info(g: DsrGraph) -> DsrGraphInfo:
    return DsrGraphInfo(
        s_count=g.s_count,
        r_count=g.r_count,
        edges=[
            DsrEdgeInfo(s=e.s + 1, r=e.r + 1, sign=e.sign, directions=e.directions_text(), label=e.label_text())
            for e in g.edges
        ],
        forced_infinite_labels=[EdgeRef(s=k.s + 1, r=k.r + 1, sign=k.sign) for k in sorted(g.forced_infinite)],
    )


def igraph_info(h: IGraph) -> IGraphInfo:
    return IGraphInfo(
        vertex_count=h.vertex_count,
        edges=[IEdgeInfo(source=e.source + 1, target=e.target + 1, sign=e.sign) for e in h.sorted_edges()],
    )


# ==================== 环与条件 ====================

def cycle_info(c: DsrCycle) -> CycleInfo:
    return CycleInfo(
        vertices=c.names(),
        length=c.length,
        sign=c.sign,
        parity=c.parity,
        kind=c.kind,
        s_cycle=c.is_s_cycle,
        labels=[e.label_text() for e in c.edges],
    )


def icycle_info(c: ICycle | None) -> ICycleInfo | None:
    if c is None:
        return None
    return ICycleInfo(vertices=_one_based(c.vertices), signs=list(c.signs), sign=c.sign)


def condition_info(report: ConditionReport) -> ConditionInfo:
    return ConditionInfo(
        condition=report.condition.value,
        holds=report.holds,
        census=CensusInfo(
            total=report.census.total,
            e_cycles=report.census.e_cycles,
            o_cycles=report.census.o_cycles,
            s_cycles=report.census.s_cycles,
        ),
        witnesses=[cycle_info(c) for c in report.witnesses],
        witness_pairs=[[cycle_info(c), cycle_info(d)] for c, d in report.witness_pairs],
        vertex_only_overlaps=[[cycle_info(c), cycle_info(d)] for c, d in report.vertex_only_overlaps],
    )


# ==================== 非退化 ====================

def _term_info(t: TermSubgraph) -> TermSubgraphInfo:
    return TermSubgraphInfo(
        direction=t.direction.value,
        pairing=[[f"S{s + 1}", f"R{r + 1}"] for s, r in t.pairing],
    )


def nondegeneracy_info(report: NondegeneracyReport | None) -> NondegeneracyInfo | None:
    if report is None:
        return None
    return NondegeneracyInfo(
        nondegenerate=report.holds,
        weakly_nondegenerate=report.weakly,
        witness_gamma=_one_based(report.witness) if report.witness is not None else None,
        failing_gammas=[_one_based(g) for g in report.failing_gammas],
        entries=[
            GammaInfo(
                gamma=_one_based(w.gamma),
                delta=_one_based(w.delta) if w.delta is not None else None,
                matchings=[_term_info(t) for t in (w.s_to_r, w.r_to_s) if t is not None],
            )
            for w in report.entries
        ],
    )


# ==================== 判定 ====================

def verdict_info(verdict: InjectivityVerdict) -> VerdictInfo:
    return VerdictInfo(
        claims=[ClaimInfo(claim=c.kind.value, justification=c.justification.value) for c in verdict.claims],
        inconclusive_reasons=list(verdict.inconclusive_reasons),
        conditions=[condition_info(r) for r in verdict.condition_reports],
        nondegeneracy=nondegeneracy_info(verdict.nondegeneracy),
        positive_cycle=icycle_info(verdict.positive_cycle),
    )


def igraph_section_info(section: IGraphSection) -> IGraphSectionInfo:
    return IGraphSectionInfo(graph=igraph_info(section.graph), verdict=verdict_info(section.verdict))


def dsr_section_info(section: DsrSection) -> DsrSectionInfo:
    return DsrSectionInfo(
        factorization_id=section.factorization_id,
        mode=section.mode.value if section.mode is not None else None,
        converted_pairs=[PairInfo(A=a.to_text(), B=b.to_text()) for a, b in section.converted_pairs],
        graph=dsr_graph_info(section.graph),
        verdict=verdict_info(section.verdict),
    )


def mainimp_info(report: MainimpReport) -> MainimpInfo:
    return MainimpInfo(
        positive_cycle_in_h=report.positive_cycle_in_h,
        e_cycle_in_g=report.e_cycle_in_g,
        negative_cycle_in_h=report.negative_cycle_in_h,
        o_cycle_in_g=report.o_cycle_in_g,
        agrees=report.agrees,
        length_one_flag=report.length_one_flag,
        h_positive_witness=icycle_info(report.h_positive_witness),
        h_negative_witness=icycle_info(report.h_negative_witness),
        g_e_witness=cycle_info(report.g_e_witness) if report.g_e_witness is not None else None,
        g_o_witness=cycle_info(report.g_o_witness) if report.g_o_witness is not None else None,
    )


def matrix_class_info(certificate: MatrixClassCertificate) -> MatrixClassInfo:
    return MatrixClassInfo(
        graph=dsr_graph_info(certificate.graph),
        star_star=condition_info(certificate.star_star),
        nondegeneracy=nondegeneracy_info(certificate.nondegeneracy),
        sign_nonsingular=certificate.sign_nonsingular,
        qualitative_class_p=certificate.qualitative_class_p,
    )


def assumptions_info(req: AnalysisRequest, declarations: list[str] | tuple[str, ...] = ()) -> AssumptionsInfo:
    return AssumptionsInfo(
        domain_open=req.domain_open,
        diagonal=req.diagonal_sign.value,
        dual=req.dual,
        declarations=list(declarations or req.declarations),
    )


def _section_name(section: DsrSection) -> str:
    return f"dsr:{section.factorization_id}"


def build_analysis_report(result: AnalysisResult) -> AnalysisReport:
    """
    组装完整分析报告：段顺序固定为 igraph、jdsr、各分解（按输入顺序）、直接给出的图
    """
    claims = []
    if result.igraph is not None:
        claims.extend(("igraph", c) for c in result.igraph.verdict.claims)
    if result.jdsr is not None:
        claims.extend(("jdsr", c) for c in result.jdsr.verdict.claims)
    for section in result.dsr:
        claims.extend((_section_name(section), c) for c in section.verdict.claims)
    hierarchy = result.hierarchy
    return AnalysisReport(
        schema=settings.REPORT_SCHEMA,
        subject=result.request.subject.name,
        assumptions=assumptions_info(result.request),
        igraph=igraph_section_info(result.igraph) if result.igraph is not None else None,
        jdsr=dsr_section_info(result.jdsr) if result.jdsr is not None else None,
        dsr=[dsr_section_info(s) for s in result.dsr],
        mainimp_crosscheck=mainimp_info(result.mainimp) if result.mainimp is not None else None,
        hierarchy=HierarchyInfo(c1=hierarchy.c1, c2=hierarchy.c2, c3=hierarchy.c3) if hierarchy is not None else None,
        claims=[
            SummaryClaim(claim=c.kind.value, justification=c.justification.value, section=name)
            for name, c in claims
        ],
        notes=list(result.notes),
    )


# ==================== 随机校验 ====================

def trial_info(outcome: TrialOutcome) -> TrialInfo:
    return TrialInfo(
        suite=outcome.suite,
        trial_id=outcome.trial_id,
        seed=outcome.seed,
        predicate=outcome.predicate,
        passed=outcome.passed,
        skipped=outcome.skipped,
        inputs=outcome.inputs,
        witness=outcome.witness,
    )


def build_oracle_report(run: OracleRun) -> OracleReport:
    return OracleReport(
        schema=settings.REPORT_SCHEMA,
        suite=run.suite,
        seed=run.seed,
        trials=run.trials,
        dims=list(run.dims),
        checked=run.checked,
        failures=len(run.failures),
        coverage=run.coverage,
        outcomes=[trial_info(o) for o in run.outcomes],
    )
