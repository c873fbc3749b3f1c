from app.schemas.response.graph_response import DsrEdgeInfo, DsrGraphInfo, EdgeRef, IEdgeInfo, IGraphInfo
from app.schemas.response.cycle_response import CensusInfo, ConditionInfo, CycleInfo, ICycleInfo
from app.schemas.response.nondegeneracy_response import GammaInfo, NondegeneracyInfo, TermSubgraphInfo
from app.schemas.response.verdict_response import ClaimInfo, VerdictInfo
from app.schemas.response.analysis_response import (
    AnalysisReport,
    AssumptionsInfo,
    DsrReport,
    DsrSectionInfo,
    HierarchyInfo,
    IGraphReport,
    IGraphSectionInfo,
    JdsrReport,
    MainimpInfo,
    MatrixClassInfo,
    PairInfo,
    SummaryClaim,
)
from app.schemas.response.oracle_response import OracleReport, TrialInfo

__all__ = [
    "DsrEdgeInfo",
    "DsrGraphInfo",
    "EdgeRef",
    "IEdgeInfo",
    "IGraphInfo",
    "CensusInfo",
    "ConditionInfo",
    "CycleInfo",
    "ICycleInfo",
    "GammaInfo",
    "NondegeneracyInfo",
    "TermSubgraphInfo",
    "ClaimInfo",
    "VerdictInfo",
    "AnalysisReport",
    "AssumptionsInfo",
    "DsrReport",
    "DsrSectionInfo",
    "HierarchyInfo",
    "IGraphReport",
    "IGraphSectionInfo",
    "JdsrReport",
    "MainimpInfo",
    "MatrixClassInfo",
    "PairInfo",
    "SummaryClaim",
    "OracleReport",
    "TrialInfo",
]
