import argparse
import csv
import io
import json
import logging
from typing import TextIO
from pydantic import ValidationError
from app.cli.common import emit, render
from app.cli.report import build_oracle_report
from app.core.exception import InputException
from app.models.report import OracleRun
from app.schemas.request import OracleOptions
from app.schemas.response import OracleReport
from app.service.oracle_service import oracle_service

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["suite", "trial_id", "seed", "predicate", "passed", "skipped", "inputs", "witness"]


def oracle_options(args: argparse.Namespace) -> OracleOptions:
    """
    由命令行参数构造校验选项

    Raises:
        InputException: 参数校验失败
    """
    try:
        return OracleOptions(
            suite=args.suite,
            trials=args.trials,
            dims=args.dims,
            seed=args.seed,
            workers=args.workers,
            format=args.format,
            replay=args.replay,
        )
    except ValidationError as e:
        raise InputException(f"参数校验失败: {e.errors()[0]['msg']}")


def render_csv(report: OracleReport) -> str:
    """每次试验一行，inputs 与 witness 以 JSON 文本写入"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for t in report.outcomes:
        writer.writerow([
            t.suite,
            t.trial_id,
            t.seed,
            t.predicate,
            t.passed,
            t.skipped,
            json.dumps(t.inputs, ensure_ascii=False),
            json.dumps(t.witness, ensure_ascii=False) if t.witness is not None else "",
        ])
    return buffer.getvalue()


def oracle_command(args: argparse.Namespace, stdout: TextIO | None = None) -> int:
    """
    oracle 命令：运行一个校验套件，或用 --replay SEED:TRIAL 重放单次试验
    有失败时退出码为 1
    """
    options = oracle_options(args)
    dims = tuple(options.dims) if options.dims is not None else None
    if options.replay is not None:
        seed, trial_id = options.replay
        dims = oracle_service.resolve_dims(options.suite, dims)
        outcome = oracle_service.replay(options.suite, seed, trial_id, dims)
        run = OracleRun(suite=options.suite, seed=seed, trials=1, dims=dims, outcomes=(outcome,))
    else:
        run = oracle_service.run_suite(options.suite, options.trials, dims, options.seed, options.workers)
    report = build_oracle_report(run)
    text = render_csv(report) if options.format == "csv" else render(report)
    emit(text, args.output, stdout)
    return 1 if run.failures else 0
