from typing import Any
from pydantic import BaseModel, Field


class TrialInfo(BaseModel):
    """
    单次试验记录
    """
    suite: str = Field(..., description="套件名")
    trial_id: int = Field(..., description="试验编号")
    seed: int = Field(..., description="随机种子，与 trial_id 一起可重放")
    predicate: str = Field(..., description="检查的谓词")
    passed: bool = Field(..., description="是否通过")
    skipped: bool = Field(False, description="实例不满足前提，未实际检查")
    inputs: dict[str, Any] = Field(default_factory=dict, description="生成的输入")
    witness: dict[str, Any] | None = Field(None, description="失败时的见证（含缩小后的实例）")


class OracleReport(BaseModel):
    """
    随机校验报告
    """
    schema_version: str = Field(..., alias="schema", description="报告版本")
    suite: str = Field(..., description="套件名")
    seed: int = Field(..., description="随机种子")
    trials: int = Field(..., description="试验次数")
    dims: list[int] = Field(..., description="维数上界 (n, m)")
    checked: int = Field(..., description="实际检查的试验数")
    failures: int = Field(..., description="失败数")
    coverage: dict[str, int] = Field(default_factory=dict, description="边类型覆盖计数")
    outcomes: list[TrialInfo] = Field(default_factory=list, description="试验记录，按 trial_id 排序")

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "schema": "dsr-report/1",
                "suite": "mainimp",
                "seed": 1,
                "trials": 1,
                "dims": [5, 5],
                "checked": 1,
                "failures": 0,
                "coverage": {"infinite_label": 2, "undirected": 3, "parallel_pair": 1},
                "outcomes": []
            }
        }
