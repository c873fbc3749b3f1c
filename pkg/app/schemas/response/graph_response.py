from pydantic import BaseModel, Field


class DsrEdgeInfo(BaseModel):
    """
    DSR 图的边（顶点从 1 开始编号）
    """
    s: int = Field(..., description="S 顶点编号")
    r: int = Field(..., description="R 顶点编号")
    sign: int = Field(..., description="边符号 ±1")
    directions: str = Field(..., description="undirected / S-to-R / R-to-S")
    label: str = Field(..., description="边标签，无穷写作 inf")


class EdgeRef(BaseModel):
    """边标识"""
    s: int = Field(..., description="S 顶点编号")
    r: int = Field(..., description="R 顶点编号")
    sign: int = Field(..., description="边符号 ±1")


class DsrGraphInfo(BaseModel):
    """
    DSR 图
    """
    s_count: int = Field(..., description="S 顶点数")
    r_count: int = Field(..., description="R 顶点数")
    edges: list[DsrEdgeInfo] = Field(..., description="边列表，按 (s, r, sign) 排序")
    forced_infinite_labels: list[EdgeRef] = Field(
        default_factory=list, description="因分解间取值不一致而被置为 inf 的边"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "s_count": 1,
                "r_count": 1,
                "edges": [{"s": 1, "r": 1, "sign": -1, "directions": "undirected", "label": "1"}],
                "forced_infinite_labels": []
            }
        }


class IEdgeInfo(BaseModel):
    """I-graph 的有向边"""
    source: int = Field(..., description="起点（从 1 开始）")
    target: int = Field(..., description="终点（从 1 开始）")
    sign: int = Field(..., description="边符号 ±1")


class IGraphInfo(BaseModel):
    """I-graph"""
    vertex_count: int = Field(..., description="顶点数")
    edges: list[IEdgeInfo] = Field(..., description="边列表")
