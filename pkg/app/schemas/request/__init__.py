from app.schemas.request.subject_request import (
    EdgeLiteral,
    FactorizationLiteral,
    GraphLiteral,
    IEdgeLiteral,
    IGraphLiteral,
    MatrixLiteral,
    PairLiteral,
    SubjectDocument,
)
from app.schemas.request.analysis_request import AnalysisOptions
from app.schemas.request.oracle_request import OracleOptions

__all__ = [
    "EdgeLiteral",
    "FactorizationLiteral",
    "GraphLiteral",
    "IEdgeLiteral",
    "IGraphLiteral",
    "MatrixLiteral",
    "PairLiteral",
    "SubjectDocument",
    "AnalysisOptions",
    "OracleOptions",
]
