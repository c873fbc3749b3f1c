"""
DOT 导出
DSR 图：S 顶点为圆、R 顶点为方框；负边虚线、正边实线；无向边不画箭头；标签无穷写作 inf
I-graph：顶点 x1..xn 为圆，有向边 j→i
"""
import logging
from pathlib import Path
import pydot
from app.models.dsr import DsrGraph, Side, Vertex
from app.models.igraph import IGraph

logger = logging.getLogger(__name__)


def _edge_style(sign: int) -> str:
    return "solid" if sign > 0 else "dashed"


def dsr_to_dot(g: DsrGraph, name: str = "dsr") -> pydot.Dot:
    """
    DSR 图转为 pydot 图

    单方向边画一个箭头，R-to-S 边从 R 顶点指向 S 顶点

    Args:
        g: DSR 图
        name: 图名称

    Returns:
        pydot.Dot
    """
    graph = pydot.Dot(name, graph_type="digraph")
    for i in range(g.s_count):
        graph.add_node(pydot.Node(Vertex(Side.S, i).name(), shape="circle"))
    for j in range(g.r_count):
        graph.add_node(pydot.Node(Vertex(Side.R, j).name(), shape="box"))
    for e in g.edges:
        s_name, r_name = e.s_vertex.name(), e.r_vertex.name()
        attrs = {"label": e.label_text(), "style": _edge_style(e.sign)}
        if e.is_undirected:
            graph.add_edge(pydot.Edge(s_name, r_name, dir="none", **attrs))
        elif e.has_s_to_r:
            graph.add_edge(pydot.Edge(s_name, r_name, **attrs))
        else:
            graph.add_edge(pydot.Edge(r_name, s_name, **attrs))
    return graph


def igraph_to_dot(h: IGraph, name: str = "igraph") -> pydot.Dot:
    """I-graph 转为 pydot 图"""
    graph = pydot.Dot(name, graph_type="digraph")
    for v in range(h.vertex_count):
        graph.add_node(pydot.Node(f"x{v + 1}", shape="circle"))
    for e in h.sorted_edges():
        graph.add_edge(pydot.Edge(f"x{e.source + 1}", f"x{e.target + 1}", style=_edge_style(e.sign)))
    return graph


def write_dot(graph: pydot.Dot, path: str | Path) -> Path:
    """
    写出 DOT 文本（不依赖 graphviz 可执行文件）

    Returns:
        Path: 写出的文件路径
    """
    path = Path(path)
    path.write_text(graph.to_string(), encoding="utf-8")
    logger.info(f"Exported graph to {path}")
    return path


def dot_paths(base: str | Path, names: list[str]) -> list[Path]:
    """
    一个图时直接使用 base，多个图时在文件名后加上图名称，如 out.jdsr.dot
    """
    base = Path(base)
    if len(names) == 1:
        return [base]
    suffix = base.suffix or ".dot"
    return [base.with_name(f"{base.stem}.{n}{suffix}") for n in names]
