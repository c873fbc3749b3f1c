from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """应用配置"""

    # 项目信息
    PROJECT_NAME: str = "dsr-injectivity"
    PROJECT_VERSION: str = "1.0.0"
    REPORT_SCHEMA: str = "dsr-report/1"
    SUBJECT_SCHEMA: str = "dsr-subject/1"

    # 应用配置
    DEBUG: bool = False

    # 日志配置
    LOG_LEVEL: str = "INFO"

    # 资源上限配置（环境变量只应覆盖这一组）
    ICYCLE_CAP: int = 1_000_000  # I-graph 简单环数量上限
    DSR_CYCLE_CAP: int = 1_000_000  # DSR 图简单环数量上限
    NONDEGENERACY_S_CAP: int = 16  # 非退化检查时 S 顶点数上限（2^n-1 个子集）
    SNS_MAX_ORDER: int = 9  # 符号非奇异检查的最大阶数（n! 项展开）
    PRINCIPAL_MINOR_MAX_ORDER: int = 16  # 主子式穷举的最大阶数
    ORACLE_MAX_DIM: int = 5  # 随机校验时矩阵的最大维数

    # 随机校验默认值
    ORACLE_DEFAULT_TRIALS: int = 1000
    ORACLE_DEFAULT_SEED: int = 1
    ORACLE_WORKERS: int = 1  # >1 时按进程并发执行试验

    def with_caps(
        self,
        icycle_cap: int | None = None,
        cycle_cap: int | None = None,
        s_cap: int | None = None,
    ) -> "Settings":
        """
        返回覆盖了资源上限的配置副本

        Args:
            icycle_cap: I-graph 环数量上限
            cycle_cap: DSR 图环数量上限
            s_cap: 非退化检查 S 顶点数上限

        Returns:
            新的 Settings 实例，原实例不变
        """
        update = {}
        if icycle_cap is not None:
            update["ICYCLE_CAP"] = icycle_cap
        if cycle_cap is not None:
            update["DSR_CYCLE_CAP"] = cycle_cap
        if s_cap is not None:
            update["NONDEGENERACY_S_CAP"] = s_cap
        return self.model_copy(update=update)

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        # 如果 .env 文件不存在，不会报错，使用默认值


# 创建全局配置实例
settings = Settings()
