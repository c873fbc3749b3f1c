from pydantic import BaseModel, Field
from app.schemas.response.cycle_response import ConditionInfo, ICycleInfo
from app.schemas.response.nondegeneracy_response import NondegeneracyInfo


class ClaimInfo(BaseModel):
    """单射性结论及其依据"""
    claim: str = Field(..., description="F- injective / F+ injective / F injective")
    justification: str = Field(..., description="结论依据")


class VerdictInfo(BaseModel):
    """
    单射性判定：只给出正面结论，条件不满足时列出原因
    """
    claims: list[ClaimInfo] = Field(default_factory=list, description="结论列表")
    inconclusive_reasons: list[str] = Field(default_factory=list, description="无法下结论的原因")
    conditions: list[ConditionInfo] = Field(default_factory=list, description="条件检查结果")
    nondegeneracy: NondegeneracyInfo | None = Field(None, description="非退化检查结果")
    positive_cycle: ICycleInfo | None = Field(None, description="I-graph 中的正环见证")
