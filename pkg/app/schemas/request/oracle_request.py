from typing import Literal
from pydantic import BaseModel, Field, model_validator


class OracleOptions(BaseModel):
    """
    随机校验选项
    """
    suite: str = Field(..., description="校验套件名")
    trials: int | None = Field(None, ge=0, description="试验次数，默认使用配置")
    dims: tuple[int, int] | None = Field(None, description="每次试验的维数上界 (n, m)")
    seed: int | None = Field(None, description="随机种子")
    workers: int | None = Field(None, ge=1, description="并发进程数")
    format: Literal["json", "csv"] = Field("json", description="试验日志格式")
    replay: tuple[int, int] | None = Field(None, description="重放单次试验 (seed, trial_id)")

    @model_validator(mode="after")
    def check_replay(self) -> "OracleOptions":
        """重放时不能同时指定试验次数"""
        if self.replay is not None and self.trials is not None:
            raise ValueError("--replay 与 --trials 不能同时使用")
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "suite": "mainimp",
                "trials": 1000,
                "dims": [5, 5],
                "seed": 1,
                "format": "json"
            }
        }
