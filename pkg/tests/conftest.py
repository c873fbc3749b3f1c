"""
测试公共夹具
"""
import io
import json
import pytest
from app.cli import run
from app.models.analysis import Subject
from app.models.dsr import DsrCycle, DsrGraph, EdgeKey
from app.service.cycle_service import cycle_service
from app.utils.parsing import build_subject, load_fixture


@pytest.fixture
def subject_of():
    """按示例名称构造分析对象"""
    def load(name: str, convention: str | None = None) -> Subject:
        return build_subject(load_fixture(name), convention)
    return load


@pytest.fixture
def cycle_by_edges():
    """按边集合（从 1 开始的 (s, r, sign)）在图中找环"""
    def find(g: DsrGraph, edges: list[tuple[int, int, int]]) -> DsrCycle:
        wanted = frozenset(EdgeKey(s - 1, r - 1, sign) for s, r, sign in edges)
        matches = [c for c in cycle_service.enumerate_cycles(g) if c.edge_keys == wanted]
        assert len(matches) == 1, f"cycle not found: {edges}"
        return matches[0]
    return find


@pytest.fixture
def cli():
    """执行命令行，返回 (退出码, 标准输出, 错误输出)"""
    def invoke(*argv: str) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()
    return invoke


@pytest.fixture
def cli_json(cli):
    """执行命令行并解析 JSON 报告，要求退出码为 0"""
    def invoke(*argv: str) -> dict:
        code, out, err = cli(*argv)
        assert code == 0, err
        return json.loads(out)
    return invoke
