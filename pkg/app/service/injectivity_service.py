"""
单射性判定服务：把图条件转换为单射性结论，JDSR 对应关系交叉检查，对偶分析与总编排
"""
import logging
from dataclasses import replace
from app.core.config import Settings, settings
from app.core.exception import InputException, InvariantViolationException
from app.core.middleware import StageTimer
from app.models.analysis import (
    AnalysisRequest,
    AnalysisResult,
    DiagonalSign,
    DsrSection,
    Hierarchy,
    IGraphSection,
    MatrixClassCertificate,
    NamedFactorization,
    Subject,
)
from app.models.dsr import DsrGraph, FactorizationSet
from app.models.igraph import IGraph
from app.models.matrix import QMatrix
from app.models.report import (
    DUAL_JUSTIFICATION,
    Claim,
    ClaimKind,
    ConditionKind,
    InjectivityVerdict,
    Justification,
    MainimpReport,
)
from app.service.cycle_service import cycle_service
from app.service.dsr_service import dsr_service
from app.service.igraph_service import igraph_service
from app.service.matrix_service import matrix_service
from app.service.nondegeneracy_service import nondegeneracy_service

logger = logging.getLogger(__name__)

ALL_SECTIONS = frozenset({"igraph", "jdsr", "dsr"})

DUAL_CLAIM = {
    ClaimKind.F_MINUS: ClaimKind.F_PLUS,
    ClaimKind.F_PLUS: ClaimKind.F_MINUS,
    ClaimKind.F: ClaimKind.F,
}


class InjectivityService:
    """
    单射性判定
    所有结论都是充分条件下的正面结论，条件不满足时只给出 inconclusive 原因
    """

    # ==================== 对偶 ====================

    def _primal_request(self, req: AnalysisRequest) -> AnalysisRequest:
        """对偶请求对应的原问题请求：对象取负，对角元声明翻转"""
        return replace(
            req,
            subject=self.dual_subject(req.subject),
            dual=False,
            diagonal_sign=req.diagonal_sign.flipped(),
        )

    def dual_subject(self, subject: Subject) -> Subject:
        """
        取负后的分析对象：M → -M，(A, B) → (-A, B)，DSR 图只翻转 R-to-S 分量，I-graph 翻转全部边
        """
        factorizations = tuple(
            NamedFactorization(
                id=nf.id,
                factorizations=FactorizationSet(tuple((a.negated(), b) for a, b in nf.factorizations.pairs)),
                converted_from=nf.converted_from,
            )
            for nf in subject.factorizations
        )
        return Subject(
            name=subject.name,
            jacobian=subject.jacobian.negated() if subject.jacobian is not None else None,
            factorizations=factorizations,
            dsr_graph=dsr_service.negate_first_factor(subject.dsr_graph) if subject.dsr_graph is not None else None,
            igraph=subject.igraph.negated() if subject.igraph is not None else None,
        )

    def relabel_verdict(self, verdict: InjectivityVerdict) -> InjectivityVerdict:
        """原问题（取负对象）上的结论改写为对偶结论：F- → F+，依据加 dual: 前缀"""
        return replace(
            verdict,
            claims=tuple(Claim(DUAL_CLAIM[c.kind], DUAL_JUSTIFICATION[c.justification]) for c in verdict.claims),
            inconclusive_reasons=tuple(f"dual: {r}" for r in verdict.inconclusive_reasons),
        )

    def relabel_result(self, primal: AnalysisResult, req: AnalysisRequest) -> AnalysisResult:
        def section(s: DsrSection | None) -> DsrSection | None:
            return None if s is None else replace(s, verdict=self.relabel_verdict(s.verdict))

        return replace(
            primal,
            request=req,
            igraph=None if primal.igraph is None else replace(
                primal.igraph, verdict=self.relabel_verdict(primal.igraph.verdict)
            ),
            jdsr=section(primal.jdsr),
            dsr=tuple(section(s) for s in primal.dsr),
            notes=primal.notes + ("dual analysis: graphs and witnesses refer to the negated subject",),
        )

    # ==================== 判定 ====================

    def verdict_igraph(self, h: IGraph, req: AnalysisRequest, cap: int | None = None) -> InjectivityVerdict:
        """
        I-graph 判定

        无正环 → F- 单射；再加上对角元为负 → F 也单射。dual 请求在 -H 上判定并给出 F+ 结论

        Args:
            h: I-graph
            req: 分析请求（读取 diagonal_sign 与 dual）
            cap: 环数量上限

        Returns:
            InjectivityVerdict
        """
        if req.dual:
            primal = self._primal_request(req)
            return self.relabel_verdict(self.verdict_igraph(h.negated(), primal, cap))

        positive = igraph_service.find_cycle(h, 1, cap=cap)
        if positive is not None:
            return InjectivityVerdict(
                inconclusive_reasons=("I-graph contains a positive cycle and cannot be used directly",),
                positive_cycle=positive,
            )
        claims = [Claim(ClaimKind.F_MINUS, Justification.IGRAPH_NO_POSITIVE_CYCLE)]
        reasons = []
        if req.diagonal_sign == DiagonalSign.NEGATIVE:
            claims.append(Claim(ClaimKind.F, Justification.IGRAPH_NEGATIVE_DIAGONAL))
        else:
            reasons.append("diagonal not known to be negative: F injectivity not concluded from the I-graph")
        return InjectivityVerdict(claims=tuple(claims), inconclusive_reasons=tuple(reasons))

    def verdict_dsr(
        self,
        g: DsrGraph,
        req: AnalysisRequest,
        cap: int | None = None,
        s_cap: int | None = None,
    ) -> InjectivityVerdict:
        """
        DSR 图判定

        STAR → F- 单射；STAR_STAR 且非退化 → F 单射；STAR_STAR 且弱非退化且区域为开集 → F 单射。
        dual 请求在 G_{-A,B} 上判定并给出 F+ 结论

        Raises:
            ResourceLimitException: 环数量超过上限（S 顶点数超过上限时只记录非退化未检查）
        """
        if req.dual:
            primal = self._primal_request(req)
            return self.relabel_verdict(self.verdict_dsr(dsr_service.negate_first_factor(g), primal, cap, s_cap))

        star, star_star = cycle_service.check_conditions(g, cap)
        s_cap = settings.NONDEGENERACY_S_CAP if s_cap is None else s_cap
        nondegeneracy = None
        if g.s_count <= s_cap:
            nondegeneracy = nondegeneracy_service.nondegeneracy_report(g, s_cap)

        claims = []
        reasons = []
        if star.holds:
            claims.append(Claim(ClaimKind.F_MINUS, Justification.DSR_STAR))
        else:
            reasons.append(
                f"condition star fails: {len(star.witnesses)} e-cycle(s) that are not s-cycles, "
                f"{len(star.witness_pairs)} e-cycle pair(s) with S-to-R intersection"
            )
        if not star_star.holds:
            reasons.append(f"condition star-star fails: {star_star.census.e_cycles} e-cycle(s)")
        elif nondegeneracy is None:
            # 超过上限时只检查 gamma 为全部 S 顶点的弱非退化
            logger.warning(f"Nondegeneracy skipped: {g.s_count} S-vertices exceed NONDEGENERACY_S_CAP={s_cap}")
            weakly = nondegeneracy_service.is_weakly_nondegenerate(g)
            if weakly and req.domain_open:
                claims.append(Claim(ClaimKind.F, Justification.DSR_STAR_STAR_WEAK_OPEN))
            else:
                reasons.append(
                    f"nondegeneracy not checked: {g.s_count} S-vertices exceed NONDEGENERACY_S_CAP={s_cap}"
                    f" (weakly nondegenerate: {str(weakly).lower()})"
                )
        elif nondegeneracy.holds:
            claims.append(Claim(ClaimKind.F, Justification.DSR_STAR_STAR_NONDEGENERATE))
        elif nondegeneracy.weakly and req.domain_open:
            claims.append(Claim(ClaimKind.F, Justification.DSR_STAR_STAR_WEAK_OPEN))
        elif nondegeneracy.weakly:
            reasons.append(
                f"graph is weakly nondegenerate but not nondegenerate (gamma {_one_based(nondegeneracy.witness)}) "
                "and the domain is not declared open"
            )
        else:
            reasons.append("graph is not weakly nondegenerate")
        return InjectivityVerdict(
            claims=tuple(claims),
            inconclusive_reasons=tuple(reasons),
            condition_reports=(star, star_star),
            nondegeneracy=nondegeneracy,
        )

    # ==================== 交叉检查 ====================

    def check_mainimp(self, m: QMatrix, cap: int | None = None) -> MainimpReport:
        """
        I-graph H_M 与 JDSR 图 G_{M,-I} 的环结构对应关系

        Raises:
            InputException: 非方阵
        """
        return self.check_mainimp_graphs(igraph_service.igraph_from_matrix(m), dsr_service.jdsr(m), cap)

    def check_mainimp_graphs(self, h: IGraph, g: DsrGraph, cap: int | None = None) -> MainimpReport:
        """
        正环 ↔ e-cycle（含正自环 ↔ 平行边 2-环）；长度 ≥ 2 的负环 ↔ o-cycle
        """
        positive = igraph_service.find_cycle(h, 1, min_length=1, cap=cap)
        negative = igraph_service.find_cycle(h, -1, min_length=2, cap=cap)
        negative_loop = None if negative is not None else igraph_service.find_cycle(h, -1, min_length=1, cap=cap)
        cycles = cycle_service.enumerate_cycles(g, cap)
        e_cycle = next((c for c in cycles if c.is_e_cycle), None)
        o_cycle = next((c for c in cycles if not c.is_e_cycle), None)
        return MainimpReport(
            positive_cycle_in_h=positive is not None,
            e_cycle_in_g=e_cycle is not None,
            negative_cycle_in_h=negative is not None,
            o_cycle_in_g=o_cycle is not None,
            length_one_flag=negative_loop is not None,
            h_positive_witness=positive,
            h_negative_witness=negative if negative is not None else negative_loop,
            g_e_witness=e_cycle,
            g_o_witness=o_cycle,
        )

    def certify_matrix_class(self, a: QMatrix, cap: int | None = None, s_cap: int | None = None) -> MatrixClassCertificate:
        """
        由 G_{A,I} 判定矩阵类

        STAR_STAR 且弱非退化 → A 符号非奇异；STAR_STAR 且非退化 → Q(A) 中所有矩阵都是 P 矩阵
        """
        graph = dsr_service.jdsr_dual(a)
        star_star = cycle_service.check_condition(graph, ConditionKind.STAR_STAR, cap)
        nondegeneracy = nondegeneracy_service.nondegeneracy_report(graph, s_cap)
        return MatrixClassCertificate(
            graph=graph,
            star_star=star_star,
            nondegeneracy=nondegeneracy,
            sign_nonsingular=star_star.holds and nondegeneracy.weakly,
            qualitative_class_p=star_star.holds and nondegeneracy.holds,
        )

    # ==================== 编排 ====================

    def _effective_diagonal(self, req: AnalysisRequest) -> tuple[DiagonalSign, list[str]]:
        """声明优先；未声明时由 Jacobian 的对角元推出"""
        jacobian = req.subject.jacobian
        notes = []
        if jacobian is None or not jacobian.is_square:
            return req.diagonal_sign, notes
        diagonal = {jacobian.entry(i, i).sign for i in range(jacobian.rows)}
        if req.diagonal_sign == DiagonalSign.NEGATIVE and diagonal != {-1}:
            raise InputException("对角元声明为负，但 Jacobian 的对角元不全为负")
        if req.diagonal_sign == DiagonalSign.POSITIVE and diagonal != {1}:
            raise InputException("对角元声明为正，但 Jacobian 的对角元不全为正")
        if req.diagonal_sign == DiagonalSign.UNKNOWN and diagonal == {-1}:
            notes.append("diagonal sign derived from the Jacobian: negative")
            return DiagonalSign.NEGATIVE, notes
        if req.diagonal_sign == DiagonalSign.UNKNOWN and diagonal == {1}:
            notes.append("diagonal sign derived from the Jacobian: positive")
            return DiagonalSign.POSITIVE, notes
        return req.diagonal_sign, notes

    def _jacobians(self, subject: Subject) -> tuple[list[QMatrix], list[str]]:
        """给出的 Jacobian；没有时由全部精确分解对 -A·Bᵀ 推出"""
        if subject.jacobian is not None:
            return [subject.jacobian], []
        pairs = [pair for nf in subject.factorizations for pair in nf.factorizations.pairs]
        if not pairs or not all(a.is_exact and b.is_exact for a, b in pairs):
            return [], []
        result: list[QMatrix] = []
        for a, b in pairs:
            j = matrix_service.times_transpose(a, b).negated()
            if j not in result:
                result.append(j)
        return result, [f"Jacobian values derived from {len(pairs)} exact factorization pair(s)"]

    def dsr_sections(self, req: AnalysisRequest, config: Settings | None = None) -> tuple[DsrSection, ...]:
        """
        各分解（按输入顺序）以及直接给出的 DSR 图的判定段

        dual 请求在取负对象上计算后改写结论，图与见证都属于取负对象
        """
        config = config or settings
        if req.dual:
            primal = self.dsr_sections(self._primal_request(req), config)
            return tuple(replace(s, verdict=self.relabel_verdict(s.verdict)) for s in primal)

        dcap, scap = config.DSR_CYCLE_CAP, config.NONDEGENERACY_S_CAP
        sections = []
        for nf in req.subject.factorizations:
            with StageTimer(f"dsr:{nf.id}"):
                g = dsr_service.dsr_for_factorizations(nf.factorizations)
                sections.append(DsrSection(
                    graph=g,
                    verdict=self.verdict_dsr(g, req, dcap, scap),
                    factorization_id=nf.id,
                    mode=nf.mode,
                    converted_pairs=nf.factorizations.pairs if nf.converted_from else (),
                ))
        if req.subject.dsr_graph is not None:
            with StageTimer("dsr:graph"):
                sections.append(DsrSection(
                    graph=req.subject.dsr_graph,
                    verdict=self.verdict_dsr(req.subject.dsr_graph, req, dcap, scap),
                    factorization_id="graph",
                ))
        return tuple(sections)

    def analyze(
        self,
        req: AnalysisRequest,
        config: Settings | None = None,
        sections: frozenset[str] = ALL_SECTIONS,
    ) -> AnalysisResult:
        """
        完整分析：I-graph 判定、JDSR 判定、各分解的 DSR 判定，以及交叉检查

        Args:
            req: 分析请求
            config: 覆盖了资源上限的配置，默认全局配置
            sections: 需要计算的段（igraph / jdsr / dsr），I-graph 段在需要 JDSR 时总会计算

        Returns:
            AnalysisResult

        Raises:
            InputException: 对象为空或声明矛盾
            InvariantViolationException: 交叉检查不一致
        """
        config = config or settings
        if req.dual:
            return self.relabel_result(self.analyze(self._primal_request(req), config, sections), req)

        subject = req.subject
        if subject.is_empty:
            raise InputException("分析对象为空：至少需要 jacobian、factorizations、dsr_graph 或 igraph 之一")
        icap, dcap, scap = config.ICYCLE_CAP, config.DSR_CYCLE_CAP, config.NONDEGENERACY_S_CAP
        diagonal, notes = self._effective_diagonal(req)
        effective = replace(req, diagonal_sign=diagonal)
        jacobians, derived = self._jacobians(subject)
        notes.extend(derived)

        igraph_section = None
        jdsr_section = None
        mainimp = None

        if (subject.igraph is not None or jacobians) and sections & {"igraph", "jdsr"}:
            with StageTimer("igraph"):
                h = subject.igraph if subject.igraph is not None else igraph_service.igraph_from_matrices(jacobians)
                igraph_section = IGraphSection(h, self.verdict_igraph(h, effective, icap))

        if jacobians and "jdsr" in sections:
            with StageTimer("jdsr"):
                n = jacobians[0].rows
                if len(jacobians) == 1:
                    g = dsr_service.jdsr(jacobians[0])
                else:
                    minus_identity = QMatrix.identity(n, scale=-1)
                    g = dsr_service.dsr_for_factorizations(FactorizationSet(tuple((j, minus_identity) for j in jacobians)))
                jdsr_section = DsrSection(g, self.verdict_dsr(g, effective, dcap, scap))
            if subject.igraph is None:
                with StageTimer("mainimp"):
                    mainimp = self.check_mainimp_graphs(igraph_section.graph, g, min(icap, dcap))
                if not mainimp.agrees:
                    raise InvariantViolationException(
                        f"I-graph 与 JDSR 图环结构不一致: positive={mainimp.positive_cycle_in_h}/e={mainimp.e_cycle_in_g}, "
                        f"negative={mainimp.negative_cycle_in_h}/o={mainimp.o_cycle_in_g}"
                    )
                if mainimp.length_one_flag:
                    notes.append("negative self-loops in the I-graph have no counterpart cycle in the JDSR graph")

        dsr_sections = list(self.dsr_sections(effective, config)) if "dsr" in sections else []

        hierarchy = self._hierarchy(igraph_section if mainimp is not None else None, jdsr_section, dsr_sections)
        logger.info(f"Analysis done: {subject.name} - sections: {len(dsr_sections) + (jdsr_section is not None)}")
        return AnalysisResult(
            request=effective,
            igraph=igraph_section,
            jdsr=jdsr_section,
            dsr=tuple(dsr_sections),
            mainimp=mainimp,
            hierarchy=hierarchy,
            notes=tuple(notes),
        )

    def _hierarchy(
        self,
        igraph_section: IGraphSection | None,
        jdsr_section: DsrSection | None,
        dsr_sections: list[DsrSection],
    ) -> Hierarchy:
        """
        c1 ⇒ c2 ⇒ c3，并且 c1 ⇔ JDSR 满足 STAR_STAR

        Raises:
            InvariantViolationException: 包含关系被破坏
        """
        c1 = None if igraph_section is None else igraph_section.verdict.positive_cycle is None
        c2 = None
        if jdsr_section is not None:
            star, star_star = jdsr_section.verdict.condition_reports
            c2 = star.holds
            if c1 is not None and c1 != star_star.holds:
                raise InvariantViolationException(
                    f"I-graph 无正环 ({c1}) 与 JDSR 满足 star-star ({star_star.holds}) 不一致"
                )
        c3 = bool(c2) or any(s.verdict.condition_reports[0].holds for s in dsr_sections)
        if c1 and c2 is False:
            raise InvariantViolationException("I-graph 无正环但 JDSR 图不满足 star")
        return Hierarchy(c1=c1, c2=c2, c3=c3)


def _one_based(indices) -> list[int] | None:
    return None if indices is None else [i + 1 for i in indices]


injectivity_service = InjectivityService()
