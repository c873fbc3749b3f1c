from typing import Literal
from pydantic import BaseModel, Field


class AnalysisOptions(BaseModel):
    """
    分析选项（由命令行参数构造）
    """
    domain_open: bool = Field(False, description="区域 X 是否为开集")
    diagonal: Literal["neg", "pos", "unknown"] = Field("unknown", description="对角元符号声明")
    dual: bool = Field(False, description="是否做对偶分析（F+ 结论）")
    convention: Literal["minus-abt", "df-ab"] | None = Field(None, description="分解约定，覆盖文档中的声明")
    icycle_cap: int | None = Field(None, ge=1, description="I-graph 环数量上限")
    cycle_cap: int | None = Field(None, ge=1, description="DSR 图环数量上限")
    s_cap: int | None = Field(None, ge=1, description="非退化检查 S 顶点数上限")

    class Config:
        json_schema_extra = {
            "example": {
                "domain_open": False,
                "diagonal": "neg",
                "dual": False,
                "convention": "df-ab",
                "cycle_cap": 100000
            }
        }
