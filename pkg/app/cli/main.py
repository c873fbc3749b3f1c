"""
命令行入口：参数解析与子命令分发
"""
import argparse
import logging
from typing import Callable, Sequence, TextIO
from app.cli.analyze import analyze_command
from app.cli.graphs import dsr_command, export_dot_command, igraph_command, jdsr_command
from app.cli.oracle import oracle_command
from app.core.config import settings
from app.core.exception import EXIT_INPUT, handle_exception
from app.service.oracle_service import SUITES

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, TextIO | None], int]

COMMANDS: dict[str, Command] = {
    "analyze": analyze_command,
    "dsr": dsr_command,
    "igraph": igraph_command,
    "jdsr": jdsr_command,
    "export-dot": export_dot_command,
    "oracle": oracle_command,
}


# ==================== 参数类型 ====================

def parse_bool(value: str | bool) -> bool:
    """--domain-open=false 这类写法"""
    if isinstance(value, bool):
        return value
    lowered = value.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"无法解析的布尔值: {value}")


def parse_dims(value: str) -> tuple[int, int]:
    """N,M 形式的维数上界"""
    parts = value.split(",")
    try:
        if len(parts) == 1:
            n = int(parts[0])
            return n, n
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"维数格式应为 N 或 N,M: {value}")


def parse_replay(value: str) -> tuple[int, int]:
    """SEED:TRIAL 形式的重放坐标"""
    seed, sep, trial = value.partition(":")
    try:
        if sep:
            return int(seed), int(trial)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"重放格式应为 SEED:TRIAL: {value}")


# ==================== 解析器 ====================

def _add_subject_arguments(parser: argparse.ArgumentParser) -> None:
    """分析类命令共用的输入、前提与资源上限参数"""
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="分析对象 JSON 文件路径，或以 { 开头的内联 JSON")
    source.add_argument("--fixture", help="内置示例名称（app/fixtures 下的文件名，不含扩展名）")
    parser.add_argument("--output", help="报告输出文件，默认标准输出")
    parser.add_argument("--export-dot", dest="export_dot", help="DOT 文件路径；多个图时在扩展名前插入图名")
    parser.add_argument(
        "--domain-open", dest="domain_open", nargs="?", const=True, default=False, type=parse_bool,
        help="区域 X 为开集（可写作 --domain-open=false）",
    )
    parser.add_argument("--diagonal", choices=["neg", "pos"], default="unknown", help="对角元符号声明")
    parser.add_argument("--dual", action="store_true", help="对偶分析，给出 F+ 结论")
    parser.add_argument(
        "--factorization-convention", dest="factorization_convention",
        choices=["minus-abt", "df-ab"], default=None,
        help="分解约定，默认读取文档声明，文档未声明时为 df-ab",
    )
    parser.add_argument("--icycle-cap", dest="icycle_cap", type=int, help=f"I-graph 环数量上限（默认 {settings.ICYCLE_CAP}）")
    parser.add_argument("--cycle-cap", dest="cycle_cap", type=int, help=f"DSR 图环数量上限（默认 {settings.DSR_CYCLE_CAP}）")
    parser.add_argument("--s-cap", dest="s_cap", type=int, help=f"非退化检查 S 顶点数上限（默认 {settings.NONDEGENERACY_S_CAP}）")


def _add_oracle_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--suite", required=True, choices=list(SUITES), help="校验套件")
    runs = parser.add_mutually_exclusive_group()
    runs.add_argument("--trials", type=int, help=f"试验次数（默认 {settings.ORACLE_DEFAULT_TRIALS}）")
    runs.add_argument("--replay", type=parse_replay, help="重放单次试验 SEED:TRIAL")
    parser.add_argument("--seed", type=int, help=f"随机种子（默认 {settings.ORACLE_DEFAULT_SEED}）")
    parser.add_argument("--dims", type=parse_dims, help="维数上界 N 或 N,M")
    parser.add_argument("--workers", type=int, help="并发进程数")
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="试验日志格式")
    parser.add_argument("--output", help="试验日志输出文件，默认标准输出")


def build_parser() -> argparse.ArgumentParser:
    """
    构造命令行解析器

    Returns:
        argparse.ArgumentParser: 含全部子命令的解析器
    """
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="DSR 图与 I-graph 单射性分析（精确有理数运算）",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.PROJECT_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    descriptions = {
        "analyze": "I-graph、JDSR 图与全部分解的完整分析",
        "dsr": "各分解及直接给出的 DSR 图，附带全部环",
        "igraph": "I-graph 判定，附带全部简单环",
        "jdsr": "JDSR 图判定、环结构交叉检查与矩阵类结论",
        "export-dot": "只写出 DOT 文件",
    }
    for name, description in descriptions.items():
        sub = subparsers.add_parser(name, help=description, description=description)
        _add_subject_arguments(sub)

    oracle = subparsers.add_parser("oracle", help="随机校验套件", description="随机校验套件")
    _add_oracle_arguments(oracle)
    return parser


# ==================== 运行 ====================

def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """
    解析参数并执行子命令

    Args:
        argv: 命令行参数，默认取 sys.argv[1:]
        stdout: 报告输出流
        stderr: 错误 JSON 输出流

    Returns:
        int: 退出码（0 成功，1 校验失败，2 输入错误，3 超过资源上限，4 内部缺陷）
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 在用法错误时以 2 退出，--help/--version 以 0 退出
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    command = COMMANDS[args.command]
    logger.debug(f"Dispatching command: {args.command}")
    try:
        return command(args, stdout)
    except Exception as e:
        return handle_exception(e, stderr)
