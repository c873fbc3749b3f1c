"""
分析服务模块
"""
from app.service.matrix_service import MatrixService, matrix_service
from app.service.igraph_service import IGraphService, igraph_service
from app.service.dsr_service import DsrService, dsr_service
from app.service.cycle_service import CycleService, cycle_service
from app.service.nondegeneracy_service import NondegeneracyService, nondegeneracy_service
from app.service.injectivity_service import InjectivityService, injectivity_service
from app.service.oracle_service import SUITES, OracleService, oracle_service

__all__ = [
    "MatrixService",
    "matrix_service",
    "IGraphService",
    "igraph_service",
    "DsrService",
    "dsr_service",
    "CycleService",
    "cycle_service",
    "NondegeneracyService",
    "nondegeneracy_service",
    "InjectivityService",
    "injectivity_service",
    "SUITES",
    "OracleService",
    "oracle_service",
]
