import argparse
import logging
from typing import TextIO
from app.cli.common import build_request, emit, render
from app.cli.report import build_analysis_report
from app.models.analysis import AnalysisResult
from app.service.injectivity_service import injectivity_service
from app.utils.dot import dot_paths, dsr_to_dot, igraph_to_dot, write_dot

logger = logging.getLogger(__name__)


def export_result_graphs(result: AnalysisResult, base: str) -> list[str]:
    """
    写出分析结果中的全部图，每个图一个 DOT 文件

    Returns:
        list[str]: 写出的文件路径
    """
    graphs = []
    if result.igraph is not None:
        graphs.append(("igraph", igraph_to_dot(result.igraph.graph, "igraph")))
    if result.jdsr is not None:
        graphs.append(("jdsr", dsr_to_dot(result.jdsr.graph, "jdsr")))
    for section in result.dsr:
        name = f"dsr-{section.factorization_id}"
        graphs.append((name, dsr_to_dot(section.graph, name)))
    paths = dot_paths(base, [name for name, _ in graphs])
    return [str(write_dot(graph, path)) for (_, graph), path in zip(graphs, paths)]


def analyze_command(args: argparse.Namespace, stdout: TextIO | None = None) -> int:
    """
    analyze 命令：I-graph、JDSR 图与各分解的完整分析
    """
    request, config = build_request(args)
    logger.info(f"Analyzing subject: {request.subject.name}")
    result = injectivity_service.analyze(request, config)
    emit(render(build_analysis_report(result)), args.output, stdout)
    if args.export_dot:
        export_result_graphs(result, args.export_dot)
    return 0
