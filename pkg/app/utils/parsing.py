"""
输入解析：分析对象文档、矩阵文本、图字面量、示例数据
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from pydantic import ValidationError
from app.core.config import settings
from app.core.exception import InputException
from app.models.analysis import NamedFactorization, Subject
from app.models.dsr import Direction, DsrEdge, DsrGraph, BOTH_DIRECTIONS
from app.models.igraph import IEdge, IGraph
from app.models.matrix import QMatrix
from app.schemas.request import (
    EdgeLiteral,
    GraphLiteral,
    IEdgeLiteral,
    IGraphLiteral,
    MatrixLiteral,
    SubjectDocument,
)
from app.service.dsr_service import dsr_service

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
DEFAULT_CONVENTION = "df-ab"


# ==================== 基本元素 ====================

def parse_sign(raw: int | str) -> int:
    if raw in (1, "+"):
        return 1
    if raw in (-1, "-"):
        return -1
    raise InputException(f"无法解析的符号: {raw!r}")


def parse_label(raw: str | int | None) -> Fraction | None:
    """
    解析边标签：None 或 "inf" 为无穷，其余必须是正有理数

    Raises:
        InputException: 无法解析或不为正
    """
    if raw is None or (isinstance(raw, str) and raw.strip().lower() in ("inf", "infinity", "∞")):
        return None
    try:
        value = Fraction(str(raw).strip())
    except (ValueError, ZeroDivisionError):
        raise InputException(f"无法解析的边标签: {raw!r}")
    if value <= 0:
        raise InputException(f"有限边标签必须为正: {raw!r}")
    return value


def parse_matrix(raw: MatrixLiteral | str, what: str = "matrix") -> QMatrix:
    """
    解析矩阵：嵌套列表，或其 JSON 文本

    Args:
        raw: 矩阵字面量或 JSON 文本，如 '[["-", 1], ["0", "1/2"]]'
        what: 出错时使用的名称

    Returns:
        QMatrix

    Raises:
        InputException: 格式错误
    """
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as e:
            raise InputException(f"{what} 不是合法的 JSON: {e.msg}")
    if not isinstance(raw, list) or not all(isinstance(row, list) for row in raw):
        raise InputException(f"{what} 必须是二维列表")
    try:
        return QMatrix.of(raw)
    except InputException as e:
        raise InputException(f"{what}: {e.message}")


# ==================== 图字面量 ====================

def _parse_directions(text: str) -> frozenset[Direction]:
    if text == "undirected":
        return BOTH_DIRECTIONS
    return frozenset({Direction(text)})


def parse_graph_literal(literal: GraphLiteral) -> DsrGraph:
    """由图字面量（从 1 开始编号）构造 DSR 图"""
    edges = tuple(
        DsrEdge(e.s - 1, e.r - 1, parse_sign(e.sign), _parse_directions(e.directions), parse_label(e.label))
        for e in literal.edges
    )
    return DsrGraph(literal.s_count, literal.r_count, edges)


def dump_graph_literal(g: DsrGraph) -> GraphLiteral:
    """DSR 图转为图字面量，与 parse_graph_literal 互逆"""
    return GraphLiteral(
        s_count=g.s_count,
        r_count=g.r_count,
        edges=[
            EdgeLiteral(
                s=e.s + 1,
                r=e.r + 1,
                sign=e.sign,
                directions=e.directions_text(),
                label=e.label_text(),
            )
            for e in g.edges
        ],
    )


def parse_igraph_literal(literal: IGraphLiteral) -> IGraph:
    """由 I-graph 字面量构造 I-graph，重复的边合并"""
    edges = frozenset(IEdge(e.source - 1, e.target - 1, parse_sign(e.sign)) for e in literal.edges)
    return IGraph(literal.vertex_count, edges)


def dump_igraph_literal(h: IGraph) -> IGraphLiteral:
    return IGraphLiteral(
        vertex_count=h.vertex_count,
        edges=[IEdgeLiteral(source=e.source + 1, target=e.target + 1, sign=e.sign) for e in h.sorted_edges()],
    )


# ==================== 分析对象文档 ====================

def load_subject_document(source: str | Path) -> SubjectDocument:
    """
    读取分析对象文档

    Args:
        source: 文件路径，或以 "{" 开头的内联 JSON

    Returns:
        SubjectDocument

    Raises:
        InputException: 文件不存在、JSON 非法、字段校验失败或版本不支持
    """
    text = str(source)
    if not text.lstrip().startswith("{"):
        path = Path(text)
        if not path.is_file():
            raise InputException(f"输入文件不存在: {text}")
        text = path.read_text(encoding="utf-8")
    try:
        document = SubjectDocument.model_validate_json(text)
    except ValidationError as e:
        raise InputException(f"分析对象文档校验失败: {e.errors()[0]['loc']} - {e.errors()[0]['msg']}")
    if document.schema_version != settings.SUBJECT_SCHEMA:
        raise InputException(f"不支持的文档版本: {document.schema_version}（期望 {settings.SUBJECT_SCHEMA}）")
    return document


def load_fixture(name: str) -> SubjectDocument:
    """按名称读取 app/fixtures 下的示例对象"""
    path = FIXTURE_DIR / f"{name}.json"
    if not path.is_file():
        available = ", ".join(sorted(p.stem for p in FIXTURE_DIR.glob("*.json")))
        raise InputException(f"示例不存在: {name}（可选 {available}）")
    return load_subject_document(path)


def resolve_convention(document: SubjectDocument, flag: str | None) -> str:
    """
    确定分解约定：命令行与文档都给出且不一致时报错，只给出一个时用给出的，都没有时默认 df-ab

    Raises:
        InputException: 命令行与文档声明冲突
    """
    if flag is not None and document.convention is not None and flag != document.convention:
        raise InputException(
            f"分解约定冲突: 命令行为 {flag}，文档 {document.name} 声明为 {document.convention}"
        )
    return flag or document.convention or DEFAULT_CONVENTION


def build_subject(document: SubjectDocument, convention: str | None = None) -> Subject:
    """
    由文档构造分析对象；df-ab 约定下的分解转换为 -A·Bᵀ 约定

    Args:
        document: 分析对象文档
        convention: 命令行指定的分解约定

    Returns:
        Subject

    Raises:
        InputException: 文档为空、矩阵非法或约定冲突
    """
    convention = resolve_convention(document, convention)
    factorizations = []
    for literal in document.factorizations:
        pairs = [
            (parse_matrix(p.A, f"{literal.id}[{k}].A"), parse_matrix(p.B, f"{literal.id}[{k}].B"))
            for k, p in enumerate(literal.pairs)
        ]
        if convention == "df-ab":
            converted = [dsr_service.to_minus_abt(a, b) for a, b in pairs]
            logger.info(f"Factorization {literal.id}: converted {len(pairs)} pair(s) from Df = A·B to Df = -A·Bᵀ")
            factorizations.append(NamedFactorization(
                id=literal.id,
                factorizations=dsr_service.factorization_set(converted),
                converted_from=tuple(pairs),
            ))
        else:
            factorizations.append(NamedFactorization(
                id=literal.id,
                factorizations=dsr_service.factorization_set(pairs),
            ))
    subject = Subject(
        name=document.name,
        jacobian=parse_matrix(document.jacobian, "jacobian") if document.jacobian is not None else None,
        factorizations=tuple(factorizations),
        dsr_graph=parse_graph_literal(document.dsr_graph) if document.dsr_graph is not None else None,
        igraph=parse_igraph_literal(document.igraph) if document.igraph is not None else None,
    )
    if subject.is_empty:
        raise InputException(f"分析对象 {document.name} 为空：至少需要 jacobian、factorizations、dsr_graph 或 igraph 之一")
    return subject
