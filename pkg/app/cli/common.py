"""
命令共用的输入处理与输出
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import TextIO
from pydantic import BaseModel, ValidationError
from app.core.config import Settings, settings
from app.core.exception import InputException
from app.models.analysis import AnalysisRequest, DiagonalSign, Subject
from app.schemas.request import AnalysisOptions, SubjectDocument
from app.utils.parsing import build_subject, load_fixture, load_subject_document

logger = logging.getLogger(__name__)


def load_document(args: argparse.Namespace) -> SubjectDocument:
    """--input（路径或内联 JSON）或 --fixture（示例名称）"""
    if getattr(args, "fixture", None):
        return load_fixture(args.fixture)
    return load_subject_document(args.input)


def analysis_options(args: argparse.Namespace) -> AnalysisOptions:
    """
    由命令行参数构造分析选项

    Raises:
        InputException: 参数校验失败
    """
    try:
        return AnalysisOptions(
            domain_open=args.domain_open,
            diagonal=args.diagonal,
            dual=args.dual,
            convention=args.factorization_convention,
            icycle_cap=args.icycle_cap,
            cycle_cap=args.cycle_cap,
            s_cap=args.s_cap,
        )
    except ValidationError as e:
        raise InputException(f"参数校验失败: {e.errors()[0]['loc']} - {e.errors()[0]['msg']}")


def build_request(args: argparse.Namespace) -> tuple[AnalysisRequest, Settings]:
    """
    读取分析对象并构造分析请求与本次运行的配置

    Returns:
        tuple[AnalysisRequest, Settings]: 请求，以及覆盖了资源上限的配置副本
    """
    options = analysis_options(args)
    document = load_document(args)
    subject: Subject = build_subject(document, options.convention)
    request = AnalysisRequest(
        subject=subject,
        domain_open=options.domain_open,
        diagonal_sign=DiagonalSign(options.diagonal),
        dual=options.dual,
        declarations=tuple(document.declarations),
    )
    config = settings.with_caps(options.icycle_cap, options.cycle_cap, options.s_cap)
    return request, config


def render(report: BaseModel) -> str:
    """报告统一渲染为缩进 JSON，字段按声明顺序"""
    return report.model_dump_json(indent=2, by_alias=True) + "\n"


def emit(text: str, output: str | None, stdout: TextIO | None = None) -> None:
    """
    写出报告：指定 --output 时写文件，否则写标准输出
    """
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Report written to {output}")
        return
    (stdout or sys.stdout).write(text)
