from fractions import Fraction
import pytest
from hypothesis import given, settings as hsettings
from app.core.exception import InputException
from app.models.analysis import AnalysisRequest, DiagonalSign, Subject
from app.models.dsr import Direction, DsrEdge, DsrGraph
from app.models.matrix import QMatrix
from app.models.report import Claim, ClaimKind, Justification
from app.service.igraph_service import igraph_service
from app.service.injectivity_service import injectivity_service
from tests.strategies import square_int_matrices

R_TO_S = frozenset({Direction.R_TO_S})
S_TO_R = frozenset({Direction.S_TO_R})


def request_for(m, **kwargs) -> AnalysisRequest:
    return AnalysisRequest(subject=Subject(jacobian=QMatrix.of(m)), **kwargs)


def weak_only_graph() -> DsrGraph:
    """唯一的环是 o-cycle；全部 S 顶点可以配对，但单个 S 顶点不行"""
    return DsrGraph(2, 2, (
        DsrEdge(0, 0, 1, S_TO_R),
        DsrEdge(0, 1, 1, R_TO_S, Fraction(1)),
        DsrEdge(1, 0, 1, R_TO_S, Fraction(1)),
        DsrEdge(1, 1, -1, S_TO_R),
    ))


class TestVerdicts:

    def setup_class(self):
        self.result = injectivity_service.analyze(request_for([[-1, 1], [0, -1]]))

    def test_igraph_claims(self):
        assert self.result.igraph.verdict.claims == (
            Claim(ClaimKind.F_MINUS, Justification.IGRAPH_NO_POSITIVE_CYCLE),
            Claim(ClaimKind.F, Justification.IGRAPH_NEGATIVE_DIAGONAL),
        )

    def test_jdsr_claims(self):
        verdict = self.result.jdsr.verdict
        assert verdict.claims == (
            Claim(ClaimKind.F_MINUS, Justification.DSR_STAR),
            Claim(ClaimKind.F, Justification.DSR_STAR_STAR_NONDEGENERATE),
        )
        assert verdict.nondegeneracy.holds

    def test_derived_diagonal_and_self_loop_notes(self):
        assert self.result.request.diagonal_sign == DiagonalSign.NEGATIVE
        assert "diagonal sign derived from the Jacobian: negative" in self.result.notes
        assert self.result.mainimp.length_one_flag
        assert self.result.mainimp.agrees

    def test_hierarchy(self):
        h = self.result.hierarchy
        assert (h.c1, h.c2, h.c3) == (True, True, True)

    def test_diagonal_declaration_conflict(self):
        with pytest.raises(InputException):
            injectivity_service.analyze(request_for([[-1, 1], [0, -1]], diagonal_sign=DiagonalSign.POSITIVE))

    def test_unknown_diagonal_without_derivation(self):
        result = injectivity_service.analyze(request_for([[-1, 1], [0, 2]]))
        assert result.request.diagonal_sign == DiagonalSign.UNKNOWN
        assert result.igraph.verdict.positive_cycle is not None
        assert not result.igraph.verdict.conclusive

    def test_positive_self_loop_is_inconclusive(self):
        h = igraph_service.igraph_from_matrix(QMatrix.of([[1]]))
        verdict = injectivity_service.verdict_igraph(h, request_for([[1]]))
        assert verdict.claims == ()
        assert verdict.positive_cycle.length == 1

    def test_empty_subject(self):
        with pytest.raises(InputException):
            injectivity_service.analyze(AnalysisRequest(subject=Subject()))

    def test_section_filter(self):
        result = injectivity_service.analyze(request_for([[-1, 1], [0, -1]]), sections=frozenset({"dsr"}))
        assert result.igraph is None and result.jdsr is None and result.mainimp is None
        assert result.hierarchy.c3 is False


class TestWeakNondegeneracy:

    def test_open_domain_gives_f_claim(self):
        req = AnalysisRequest(subject=Subject(dsr_graph=weak_only_graph()), domain_open=True)
        verdict = injectivity_service.verdict_dsr(weak_only_graph(), req)
        assert verdict.claims == (
            Claim(ClaimKind.F_MINUS, Justification.DSR_STAR),
            Claim(ClaimKind.F, Justification.DSR_STAR_STAR_WEAK_OPEN),
        )

    def test_closed_domain_stops_at_f_minus(self):
        req = AnalysisRequest(subject=Subject(dsr_graph=weak_only_graph()))
        verdict = injectivity_service.verdict_dsr(weak_only_graph(), req)
        assert verdict.claim_kinds == frozenset({ClaimKind.F_MINUS})
        assert verdict.nondegeneracy.weakly and not verdict.nondegeneracy.holds
        assert any("weakly nondegenerate" in r for r in verdict.inconclusive_reasons)

    def test_s_cap_keeps_star_claim(self):
        req = AnalysisRequest(subject=Subject(dsr_graph=weak_only_graph()))
        verdict = injectivity_service.verdict_dsr(weak_only_graph(), req, s_cap=1)
        assert verdict.claims == (Claim(ClaimKind.F_MINUS, Justification.DSR_STAR),)
        assert verdict.nondegeneracy is None
        assert any("NONDEGENERACY_S_CAP=1" in r for r in verdict.inconclusive_reasons)

    def test_s_cap_with_open_domain_uses_weak_check(self):
        req = AnalysisRequest(subject=Subject(dsr_graph=weak_only_graph()), domain_open=True)
        verdict = injectivity_service.verdict_dsr(weak_only_graph(), req, s_cap=1)
        assert verdict.claims == (
            Claim(ClaimKind.F_MINUS, Justification.DSR_STAR),
            Claim(ClaimKind.F, Justification.DSR_STAR_STAR_WEAK_OPEN),
        )
        assert verdict.nondegeneracy is None

    def test_graph_section_in_analysis(self):
        result = injectivity_service.analyze(AnalysisRequest(subject=Subject(dsr_graph=weak_only_graph())))
        assert [s.factorization_id for s in result.dsr] == ["graph"]
        assert result.hierarchy.c1 is None and result.hierarchy.c3


class TestDual:

    def test_dual_igraph_claims(self):
        result = injectivity_service.analyze(request_for([[1, 1], [0, 1]], dual=True))
        assert result.igraph.verdict.claims == (
            Claim(ClaimKind.F_PLUS, Justification.DUAL_IGRAPH_NO_POSITIVE_CYCLE),
            Claim(ClaimKind.F, Justification.DUAL_IGRAPH_POSITIVE_DIAGONAL),
        )
        assert result.request.dual
        assert any(n.startswith("dual analysis") for n in result.notes)

    def test_dual_verdict_with_declared_diagonal(self):
        h = igraph_service.igraph_from_matrix(QMatrix.of([[1, 1], [0, 1]]))
        verdict = injectivity_service.verdict_igraph(
            h, request_for([[1, 1], [0, 1]], dual=True, diagonal_sign=DiagonalSign.POSITIVE)
        )
        assert verdict.claim_kinds == frozenset({ClaimKind.F_PLUS, ClaimKind.F})

    @hsettings(max_examples=60, deadline=None)
    @given(square_int_matrices())
    def test_dual_f_plus_tracks_negated_igraph(self, m):
        h = igraph_service.igraph_from_matrix(m)
        verdict = injectivity_service.verdict_igraph(h, AnalysisRequest(subject=Subject(jacobian=m), dual=True))
        assert (ClaimKind.F_PLUS in verdict.claim_kinds) == (not igraph_service.has_positive_cycle(h.negated()))
        assert ClaimKind.F_MINUS not in verdict.claim_kinds


class TestCrossChecks:

    def test_mainimp_on_unit_instance(self):
        report = injectivity_service.check_mainimp(QMatrix.of([[-1, -1, 0], [0, -1, 1], [1, 2, -2]]))
        assert report.positive_cycle_in_h and report.e_cycle_in_g
        assert report.negative_cycle_in_h and report.o_cycle_in_g
        assert report.agrees
        assert not report.length_one_flag

    def test_mainimp_requires_square_matrix(self):
        with pytest.raises(InputException):
            injectivity_service.check_mainimp(QMatrix.of([[1, 2]]))

    @hsettings(max_examples=60, deadline=None)
    @given(square_int_matrices())
    def test_analysis_hierarchy_is_consistent(self, m):
        result = injectivity_service.analyze(AnalysisRequest(subject=Subject(jacobian=m)))
        assert result.mainimp.agrees
        assert result.hierarchy.c1 == (result.igraph.verdict.positive_cycle is None)
        if result.hierarchy.c1:
            assert result.hierarchy.c2
            assert ClaimKind.F_MINUS in result.jdsr.verdict.claim_kinds


class TestMatrixClass:

    @pytest.mark.parametrize("pattern, sign_nonsingular, class_p", [
        ([["+", "0"], ["0", "+"]], True, True),
        ([["+", "+"], ["+", "+"]], False, False),
        ([["+", "-"], ["+", "+"]], True, True),
    ])
    def test_certify(self, pattern, sign_nonsingular, class_p):
        cert = injectivity_service.certify_matrix_class(QMatrix.of(pattern))
        assert cert.sign_nonsingular == sign_nonsingular
        assert cert.qualitative_class_p == class_p

    def test_failing_star_star_has_witness(self):
        cert = injectivity_service.certify_matrix_class(QMatrix.of([["+", "+"], ["+", "+"]]))
        assert not cert.star_star.holds
        assert cert.star_star.witnesses
