from pydantic import BaseModel, Field


class CycleInfo(BaseModel):
    """
    DSR 图中的简单环（规范形式）
    """
    vertices: list[str] = Field(..., description="顶点序列，如 S1、R2")
    length: int = Field(..., description="边数")
    sign: int = Field(..., description="边符号之积")
    parity: int = Field(..., description="(-1)^(length/2) × sign")
    kind: str = Field(..., description="e-cycle 或 o-cycle")
    s_cycle: bool = Field(..., description="是否为 s-cycle")
    labels: list[str] = Field(..., description="沿环的边标签")


class ICycleInfo(BaseModel):
    """I-graph 中的简单有向环"""
    vertices: list[int] = Field(..., description="顶点序列（从 1 开始）")
    signs: list[int] = Field(..., description="沿环的边符号")
    sign: int = Field(..., description="环符号")


class CensusInfo(BaseModel):
    """环统计"""
    total: int = Field(..., description="环总数")
    e_cycles: int = Field(..., description="e-cycle 数")
    o_cycles: int = Field(..., description="o-cycle 数")
    s_cycles: int = Field(..., description="s-cycle 数")


class ConditionInfo(BaseModel):
    """
    条件检查结果
    """
    condition: str = Field(..., description="star 或 star_star")
    holds: bool = Field(..., description="条件是否成立")
    census: CensusInfo = Field(..., description="环统计")
    witnesses: list[CycleInfo] = Field(default_factory=list, description="违反条件的 e-cycle")
    witness_pairs: list[list[CycleInfo]] = Field(
        default_factory=list, description="具有 S-to-R 相交的 e-cycle 对"
    )
    vertex_only_overlaps: list[list[CycleInfo]] = Field(
        default_factory=list, description="只共享顶点、不共享边的 e-cycle 对，需人工复核"
    )
