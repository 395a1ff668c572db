import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from facebalance.complexes import Graph


def cycle_graph(n: int, prefix: str = "") -> Graph:
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(verts, [(verts[i], verts[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = "p") -> Graph:
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(verts, [(verts[i], verts[i + 1]) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for g in graphs:
        verts.extend(g.vertices)
        edges.extend(g.edge_labels())
    return Graph(verts, edges)
