# 导入所有模型，方便统一管理
from app.models.matrix import Entry, EntryKind, IndexSet, QMatrix, Rational, normalize_index_set
from app.models.igraph import ICycle, IEdge, IGraph
from app.models.dsr import (
    Direction,
    DsrCycle,
    DsrEdge,
    DsrGraph,
    EdgeKey,
    FactorizationSet,
    Side,
    TermSubgraph,
    Vertex,
)
from app.models.report import (
    Claim,
    ClaimKind,
    ConditionKind,
    ConditionReport,
    CycleCensus,
    GammaWitness,
    InjectivityVerdict,
    Justification,
    MainimpReport,
    NondegeneracyReport,
    OracleRun,
    TrialOutcome,
)
from app.models.analysis import (
    AnalysisRequest,
    AnalysisResult,
    CoverMode,
    DiagonalSign,
    DsrSection,
    Hierarchy,
    IGraphSection,
    MatrixClassCertificate,
    NamedFactorization,
    Subject,
)

__all__ = [
    "Entry", "EntryKind", "IndexSet", "QMatrix", "Rational", "normalize_index_set",
    "ICycle", "IEdge", "IGraph",
    "Direction", "DsrCycle", "DsrEdge", "DsrGraph", "EdgeKey", "FactorizationSet", "Side",
    "TermSubgraph", "Vertex",
    "Claim", "ClaimKind", "ConditionKind", "ConditionReport", "CycleCensus", "GammaWitness",
    "InjectivityVerdict", "Justification", "MainimpReport", "NondegeneracyReport", "OracleRun", "TrialOutcome",
    "AnalysisRequest", "AnalysisResult", "CoverMode", "DiagonalSign", "DsrSection", "Hierarchy",
    "IGraphSection", "MatrixClassCertificate", "NamedFactorization", "Subject",
]
