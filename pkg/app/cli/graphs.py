"""
单图命令：dsr、igraph、jdsr、export-dot
"""
import argparse
import logging
from dataclasses import replace
from typing import TextIO
from app.cli.analyze import export_result_graphs
from app.cli.common import build_request, emit, render
from app.cli.report import (
    assumptions_info,
    cycle_info,
    dsr_section_info,
    icycle_info,
    igraph_section_info,
    mainimp_info,
    matrix_class_info,
)
from app.core.config import settings
from app.core.exception import InputException
from app.schemas.response import DsrReport, IGraphReport, JdsrReport
from app.service.cycle_service import cycle_service
from app.service.igraph_service import igraph_service
from app.service.injectivity_service import injectivity_service

logger = logging.getLogger(__name__)


def dsr_command(args: argparse.Namespace, stdout: TextIO | None = None) -> int:
    """dsr 命令：各分解与直接给出的 DSR 图，附带全部环"""
    request, config = build_request(args)
    subject = request.subject
    if not subject.factorizations and subject.dsr_graph is None:
        raise InputException(f"dsr 命令需要 factorizations 或 dsr_graph: {subject.name}")
    result = injectivity_service.analyze(request, config, frozenset({"dsr"}))
    report = DsrReport(
        schema=settings.REPORT_SCHEMA,
        subject=subject.name,
        assumptions=assumptions_info(result.request),
        dsr=[dsr_section_info(s) for s in result.dsr],
        cycles={
            s.factorization_id: [cycle_info(c) for c in cycle_service.enumerate_cycles(s.graph, config.DSR_CYCLE_CAP)]
            for s in result.dsr
        },
    )
    emit(render(report), args.output, stdout)
    if args.export_dot:
        export_result_graphs(result, args.export_dot)
    return 0


def igraph_command(args: argparse.Namespace, stdout: TextIO | None = None) -> int:
    """igraph 命令：I-graph 判定，附带全部简单环"""
    request, config = build_request(args)
    result = injectivity_service.analyze(request, config, frozenset({"igraph"}))
    if result.igraph is None:
        raise InputException(f"igraph 命令需要 jacobian、精确分解或 igraph: {request.subject.name}")
    report = IGraphReport(
        schema=settings.REPORT_SCHEMA,
        subject=request.subject.name,
        assumptions=assumptions_info(result.request),
        igraph=igraph_section_info(result.igraph),
        cycles=[icycle_info(c) for c in igraph_service.enumerate_icycles(result.igraph.graph, config.ICYCLE_CAP)],
    )
    emit(render(report), args.output, stdout)
    if args.export_dot:
        export_result_graphs(result, args.export_dot)
    return 0


def jdsr_command(args: argparse.Namespace, stdout: TextIO | None = None) -> int:
    """jdsr 命令：JDSR 图判定、环结构交叉检查与矩阵类结论"""
    request, config = build_request(args)
    result = injectivity_service.analyze(request, config, frozenset({"jdsr"}))
    if result.jdsr is None or result.mainimp is None:
        raise InputException(f"jdsr 命令需要 jacobian 或精确分解: {request.subject.name}")
    jacobian = request.subject.jacobian
    certificate = None
    if jacobian is not None:
        certificate = injectivity_service.certify_matrix_class(
            jacobian, config.DSR_CYCLE_CAP, config.NONDEGENERACY_S_CAP
        )
    report = JdsrReport(
        schema=settings.REPORT_SCHEMA,
        subject=request.subject.name,
        assumptions=assumptions_info(result.request),
        jdsr=dsr_section_info(result.jdsr),
        mainimp_crosscheck=mainimp_info(result.mainimp),
        matrix_class=matrix_class_info(certificate) if certificate is not None else None,
    )
    emit(render(report), args.output, stdout)
    if args.export_dot:
        # igraph 段只用于交叉检查，不导出
        export_result_graphs(replace(result, igraph=None, dsr=()), args.export_dot)
    return 0


def export_dot_command(args: argparse.Namespace, stdout: TextIO | None = None) -> int:
    """export-dot 命令：只写出 DOT 文件，标准输出列出文件路径"""
    request, config = build_request(args)
    result = injectivity_service.analyze(request, config)
    paths = export_result_graphs(result, args.export_dot or args.output or f"{request.subject.name}.dot")
    emit("".join(f"{p}\n" for p in paths), None, stdout)
    return 0
