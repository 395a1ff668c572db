"""Bundled sample graphs used by the golden suite and the docs."""

from __future__ import annotations

from .complexes import Graph

_PENTAGON_PAIR_EDGES = [
    ("A", "B"), ("B", "C"), ("A", "D"), ("D", "E"), ("E", "C"),
    ("F", "G"), ("G", "H"), ("F", "I"), ("I", "J"), ("J", "H"),
    ("E", "I"), ("H", "K"), ("K", "L"),
]


def pg_sample_graph() -> Graph:
    """A 12-vertex member of the pendant/cycle class.

    Two basic 5-cycles joined by a bridge, with a pendant path of two more
    vertices: girth 5, well-covered with independence number 5, and every
    induced cycle has length 5.
    """
    return Graph(list("ABCDEFGHIJKL"), _PENTAGON_PAIR_EDGES)


def overlinked_pentagon_graph() -> Graph:
    """The same two pentagons with a second bridge between them.

    The extra bridge puts two adjacent degree-3 vertices on the second
    pentagon, so it is no longer basic and the graph is not well-covered
    (maximal independent sets of sizes 4 and 5 both occur).
    """
    return Graph(list("ABCDEFGHIJKL"), _PENTAGON_PAIR_EDGES + [("B", "G")])


def flag_sphere_graph() -> Graph:
    """A 10-vertex graph whose clique complex is a flag 2-sphere.

    The clique complex has f-vector (1, 10, 24, 16) and h-vector (1, 7, 7, 1);
    the graph is not 3-colorable and no independent set meets every triangle.
    """
    edges = [(0, 1), (1, 2), (0, 2), (0, 9), (2, 9), (0, 3), (3, 9), (3, 4),
             (0, 4), (1, 4), (4, 5), (1, 5), (5, 6), (1, 6), (6, 7), (7, 8),
             (8, 9), (2, 7), (2, 8), (1, 7), (6, 8), (5, 8), (4, 8), (3, 8)]
    return Graph([str(i) for i in range(10)],
                 [(str(a), str(b)) for a, b in edges])


def sample_graph(name: str) -> Graph:
    table = {"PG12": pg_sample_graph, "S10": flag_sphere_graph}
    return table[name]()


SAMPLE_NAMES = ("PG12", "S10")
