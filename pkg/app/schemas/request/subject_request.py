from typing import Literal
from pydantic import BaseModel, Field

# 矩阵元素：整数，或文本 "3"、"-1/2"、"+"、"-"、"0"
MatrixLiteral = list[list[int | str]]


class EdgeLiteral(BaseModel):
    """
    DSR 图的一条边（顶点从 1 开始编号）
    """
    s: int = Field(..., ge=1, description="S 顶点编号")
    r: int = Field(..., ge=1, description="R 顶点编号")
    sign: Literal[1, -1, "+", "-"] = Field(..., description="边符号")
    directions: Literal["undirected", "S-to-R", "R-to-S"] = Field("undirected", description="边方向")
    label: str | int | None = Field(None, description="边标签，正有理数；省略或 \"inf\" 表示无穷")


class GraphLiteral(BaseModel):
    """
    直接给出的 DSR 图
    """
    s_count: int = Field(..., ge=0, description="S 顶点数")
    r_count: int = Field(..., ge=0, description="R 顶点数")
    edges: list[EdgeLiteral] = Field(default_factory=list, description="边列表")

    class Config:
        json_schema_extra = {
            "example": {
                "s_count": 1,
                "r_count": 1,
                "edges": [{"s": 1, "r": 1, "sign": "-", "directions": "undirected", "label": "1"}]
            }
        }


class IEdgeLiteral(BaseModel):
    """I-graph 的一条有向边 source → target（从 1 开始编号）"""
    source: int = Field(..., ge=1, description="起点")
    target: int = Field(..., ge=1, description="终点")
    sign: Literal[1, -1, "+", "-"] = Field(..., description="边符号")


class IGraphLiteral(BaseModel):
    """直接给出的 I-graph"""
    vertex_count: int = Field(..., ge=0, description="顶点数")
    edges: list[IEdgeLiteral] = Field(default_factory=list, description="边列表")


class PairLiteral(BaseModel):
    """一对分解矩阵"""
    A: MatrixLiteral = Field(..., description="矩阵 A")
    B: MatrixLiteral = Field(..., description="矩阵 B")


class FactorizationLiteral(BaseModel):
    """
    带编号的分解列表：只有一对时视为覆盖全域的集合值对象，多对时视为声明覆盖全域的有限分解
    """
    id: str = Field(..., min_length=1, description="分解编号")
    pairs: list[PairLiteral] = Field(..., min_length=1, description="矩阵对列表")


class SubjectDocument(BaseModel):
    """
    分析对象文档（dsr-subject/1）

    jacobian、factorizations、dsr_graph、igraph 至少给出一个
    """
    schema_version: str = Field("dsr-subject/1", alias="schema", description="文档版本")
    name: str = Field("subject", description="对象名称")
    jacobian: MatrixLiteral | None = Field(None, description="Jacobian 矩阵或符号模式")
    factorizations: list[FactorizationLiteral] = Field(default_factory=list, description="分解列表")
    convention: Literal["minus-abt", "df-ab"] | None = Field(
        None, description="分解约定：minus-abt 为 Df = -A·Bᵀ，df-ab 为 Df = A·B"
    )
    dsr_graph: GraphLiteral | None = Field(None, description="直接给出的 DSR 图")
    igraph: IGraphLiteral | None = Field(None, description="直接给出的 I-graph")
    declarations: list[str] = Field(default_factory=list, description="函数层面的前提声明，原样写入报告")

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "schema": "dsr-subject/1",
                "name": "partially-linear",
                "jacobian": [["-", "-", "0"], ["0", "-1", "1"], ["+", "2", "-2"]],
                "declarations": ["X is a rectangular domain", "f is C1 on X"]
            }
        }
