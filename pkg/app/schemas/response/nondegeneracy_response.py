from pydantic import BaseModel, Field


class TermSubgraphInfo(BaseModel):
    """项子图：配对边都具有给定方向"""
    direction: str = Field(..., description="S-to-R 或 R-to-S")
    pairing: list[list[str]] = Field(..., description="配对，如 [[\"S1\", \"R2\"]]")


class GammaInfo(BaseModel):
    """单个 S 子集的非退化见证"""
    gamma: list[int] = Field(..., description="S 顶点子集（从 1 开始）")
    delta: list[int] | None = Field(None, description="可用的 R 顶点子集，null 表示不存在")
    matchings: list[TermSubgraphInfo] = Field(default_factory=list, description="两个方向的项子图")


class NondegeneracyInfo(BaseModel):
    """
    非退化检查结果
    """
    nondegenerate: bool = Field(..., description="是否非退化")
    weakly_nondegenerate: bool = Field(..., description="是否弱非退化")
    witness_gamma: list[int] | None = Field(None, description="找不到 delta 的最大 S 子集")
    failing_gammas: list[list[int]] = Field(default_factory=list, description="全部找不到 delta 的 S 子集")
    entries: list[GammaInfo] = Field(default_factory=list, description="各子集的见证，按 (|gamma|, gamma) 排序")
