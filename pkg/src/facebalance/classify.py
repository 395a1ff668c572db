"""Well-covered graph classification at girth five and related graph tools.

A 5-cycle is *basic* when no two adjacent vertices on it both have degree at
least three; a graph is in the pendant/cycle class when its pendant edges
perfectly match the vertices they touch and the basic 5-cycles partition the
rest.  Connected well-covered graphs of girth at least five are either in
that class, a single vertex, or one of five exceptional graphs.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .complexes import (ComplexError, Graph, SimplicialComplex,
                        independence_complex, maximal_independent_sets)

INFINITE = math.inf


# ---------------------------------------------------------------------------
# elementary invariants
# ---------------------------------------------------------------------------

def girth(g: Graph):
    """Length of a shortest cycle; ``math.inf`` for forests."""
    adj = g.adjacency()
    best = INFINITE
    for s in range(len(g.vertices)):
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


def beta(g: Graph) -> int:
    """Independence number."""
    if not g.vertices:
        return 0
    return max(len(s) for s in maximal_independent_sets(g))


def is_well_covered(g: Graph) -> bool:
    """True iff all maximal independent sets share one size."""
    sizes = {len(s) for s in maximal_independent_sets(g)}
    return len(sizes) == 1


def pendant_edges(g: Graph) -> list[tuple[str, str]]:
    """Edges incident to a degree-1 vertex, sorted."""
    deg = {i: g.degree(i) for i in range(len(g.vertices))}
    return sorted(g.labels(e) for e in g.edges if deg[e[0]] == 1 or deg[e[1]] == 1)


def pendant_perfect_matching(g: Graph) -> bool:
    """True iff every vertex lies in exactly one pendant edge."""
    count = {v: 0 for v in g.vertices}
    for u, w in pendant_edges(g):
        count[u] += 1
        count[w] += 1
    return all(c == 1 for c in count.values())


def basic_5_cycles(g: Graph) -> list[tuple[str, ...]]:
    """Induced 5-cycles with no adjacent pair of degree >= 3 vertices.

    Each cycle is returned in traversal order starting at its smallest
    vertex, toward its smaller neighbor; the list is sorted.
    """
    n = len(g.vertices)
    adj = g.adjacency()
    deg = {i: len(adj[i]) for i in range(n)}
    out = []
    for combo in itertools.combinations(range(n), 5):
        inside = {i: adj[i] & set(combo) for i in combo}
        if any(len(inside[i]) != 2 for i in combo):
            continue
        # 2-regular on 5 vertices is a single 5-cycle
        if any(deg[u] >= 3 and deg[w] >= 3 for u in combo for w in inside[u]):
            continue
        start = combo[0]
        prev, cur = start, min(inside[start])
        walk = [start]
        while cur != start:
            walk.append(cur)
            prev, cur = cur, next(x for x in inside[cur] if x != prev)
        out.append(g.labels(walk))
    return sorted(out)


def induced_cycle_lengths(g: Graph) -> set[int]:
    """Lengths of all chordless cycles (exhaustive over vertex subsets)."""
    n = len(g.vertices)
    adj = g.adjacency()
    lengths = set()
    for r in range(3, n + 1):
        for combo in itertools.combinations(range(n), r):
            cset = set(combo)
            inside = {i: adj[i] & cset for i in combo}
            if any(len(inside[i]) != 2 for i in combo):
                continue
            seen = {combo[0]}
            stack = [combo[0]]
            while stack:
                u = stack.pop()
                for w in inside[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == r:
                lengths.add(r)
    return lengths


# ---------------------------------------------------------------------------
# the pendant/cycle decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PGDecomposition:
    """Vertex split into pendant-matched vertices and basic 5-cycle vertices."""

    pendant_vertices: tuple[str, ...]
    cycle_vertices: tuple[str, ...]
    pendant_edges: tuple[tuple[str, str], ...]
    basic_cycles: tuple[tuple[str, ...], ...]

    @property
    def beta(self) -> int:
        return len(self.pendant_edges) + 2 * len(self.basic_cycles)

    def to_json_obj(self) -> dict:
        return {"pendant_edges": [list(e) for e in self.pendant_edges],
                "basic_cycles": [list(c) for c in self.basic_cycles],
                "beta": self.beta}


def pg_decomposition(g: Graph) -> Optional[PGDecomposition]:
    """The unique candidate decomposition, validated; None when it fails."""
    pend = pendant_edges(g)
    p_vertices = sorted({v for e in pend for v in e})
    count = {v: 0 for v in p_vertices}
    for u, w in pend:
        count[u] += 1
        count[w] += 1
    if any(c != 1 for c in count.values()):
        return None
    cycles = basic_5_cycles(g)
    cycle_vertices: list[str] = []
    seen: set[str] = set()
    for c in cycles:
        if seen & set(c) or set(c) & set(p_vertices):
            return None
        seen.update(c)
        cycle_vertices.extend(c)
    rest = set(g.vertices) - set(p_vertices)
    if seen != rest:
        return None
    return PGDecomposition(tuple(p_vertices), tuple(sorted(cycle_vertices)),
                           tuple(pend), tuple(cycles))


# ---------------------------------------------------------------------------
# exceptional graphs
# ---------------------------------------------------------------------------

def _cycle_graph(n: int) -> Graph:
    verts = [str(i) for i in range(1, n + 1)]
    return Graph(verts, [(str(i), str(i % n + 1)) for i in range(1, n + 1)])


def _graph_1n(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph([str(i) for i in range(1, n + 1)],
                 [(str(a), str(b)) for a, b in edges])


def exceptional_catalog() -> dict[str, Graph]:
    """The five connected well-covered girth >= 5 graphs outside the
    pendant/cycle class (besides the single vertex)."""
    p10 = _graph_1n(10, [(1, 2), (3, 2), (3, 4), (4, 5), (5, 1), (6, 3), (6, 7),
                         (7, 8), (4, 8), (9, 2), (9, 10), (8, 10)])
    p13 = _graph_1n(13, [(1, 7), (1, 8), (2, 4), (3, 2), (4, 5), (5, 6), (6, 3),
                         (4, 7), (6, 8), (5, 10), (7, 9), (9, 10), (10, 11),
                         (11, 8), (11, 13), (13, 12), (12, 9)])
    p14_raw = ["AB", "CB", "CD", "ED", "EF", "FG", "AG", "AH", "BI", "CJ", "DK",
               "EL", "FM", "GN", "IK", "KM", "MH", "HJ", "JL", "LN", "NI"]
    key = {c: i + 1 for i, c in enumerate("ABCDEFGHIJKLMN")}
    p14 = _graph_1n(14, [(key[a], key[b]) for a, b in p14_raw])
    q13_raw = ["AB", "AI", "KB", "AD", "CB", "CE", "DG", "EF", "FG", "EI", "GK",
               "FH", "HJ", "IJ", "JK", "IL", "KM", "LM"]
    key = {c: i + 1 for i, c in enumerate("ABCDEFGHIJKLM")}
    q13 = _graph_1n(13, [(key[a], key[b]) for a, b in q13_raw])
    return {"C7": _cycle_graph(7), "P10": p10, "P13": p13, "P14": p14, "Q13": q13}


CATALOG_ALIASES = {"Q14": "Q13"}


def catalog_graph(name: str) -> Graph:
    table = exceptional_catalog()
    return table[CATALOG_ALIASES.get(name, name)]


# ---------------------------------------------------------------------------
# graph isomorphism (small graphs)
# ---------------------------------------------------------------------------

def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact backtracking isomorphism test with degree-profile pruning."""
    n = len(g1.vertices)
    if n != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    a1, a2 = g1.adjacency(), g2.adjacency()

    def profile(adj):
        deg = {v: len(adj[v]) for v in adj}
        return {v: (deg[v], tuple(sorted(deg[w] for w in adj[v]))) for v in adj}

    p1, p2 = profile(a1), profile(a2)
    if sorted(p1.values()) != sorted(p2.values()):
        return False
    by_profile: dict = {}
    for v, key in p2.items():
        by_profile.setdefault(key, []).append(v)
    order = sorted(range(n), key=lambda v: (len(by_profile.get(p1[v], ())), -len(a1[v]), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in by_profile.get(p1[v], ()):
            if w in used:
                continue
            ok = True
            for u in mapping:
                if (u in a1[v]) != (mapping[u] in a2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(pos + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """Outcome of the girth >= 5 classification."""

    kind: str  # PG | K1 | Exceptional | NotWellCovered | GirthTooSmall
    name: Optional[str] = None
    decomposition: Optional[PGDecomposition] = None

    def to_json_obj(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.name is not None:
            out["name"] = self.name
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json_obj()
        return out


def classify_girth5(g: Graph) -> Verdict:
    """Classify a connected graph of girth at least five.

    Well-covered inputs land in exactly one of: single vertex, exceptional
    catalog member, or the pendant/cycle class.
    """
    if not g.is_connected():
        raise ComplexError("classification needs a connected graph")
    if girth(g) < 5:
        return Verdict("GirthTooSmall")
    if not is_well_covered(g):
        return Verdict("NotWellCovered")
    if len(g.vertices) == 1:
        return Verdict("K1")
    for name, h in sorted(exceptional_catalog().items()):
        if is_isomorphic(g, h):
            dec = pg_decomposition(g)
            assert dec is None, "catalog graph also decomposes"
            return Verdict("Exceptional", name=name)
    dec = pg_decomposition(g)
    if dec is None:
        raise AssertionError(
            "well-covered girth >= 5 graph is neither exceptional nor decomposable")
    assert dec.beta == beta(g), "decomposition size disagrees with beta"
    return Verdict("PG", decomposition=dec)


# ---------------------------------------------------------------------------
# the covering join
# ---------------------------------------------------------------------------

def embed_in_join(g: Graph) -> tuple[list[dict], dict]:
    """Cover of the independence complex by a join of admissible factors.

    Each component must classify as a single vertex or as pendant/cycle
    class; pendant edges become two-point factors and basic 5-cycles become
    pentagon edge-complex factors.  Returns (factor list, certificate).
    """
    factors: list[dict] = []
    per_component = []
    for comp in g.components():
        sub = g.subgraph(comp)
        verdict = classify_girth5(sub)
        if verdict.kind == "K1":
            factors.append({"type": "points", "vertices": list(comp),
                            "edges": [], "removed_edge": None})
            per_component.append({"vertices": list(comp), "pendant_edges": 0,
                                  "basic_cycles": 0, "kind": "K1"})
        elif verdict.kind == "PG":
            dec = verdict.decomposition
            for cyc in dec.basic_cycles:
                cyc_graph = g.subgraph(cyc)
                pentagon = independence_complex(cyc_graph).one_skeleton()
                factors.append({"type": "graph", "vertices": list(pentagon.vertices),
                                "edges": [list(e) for e in pentagon.edge_labels()],
                                "removed_edge": None})
            for edge in dec.pendant_edges:
                factors.append({"type": "points", "vertices": list(edge),
                                "edges": [], "removed_edge": None})
            per_component.append({"vertices": list(comp),
                                  "pendant_edges": len(dec.pendant_edges),
                                  "basic_cycles": len(dec.basic_cycles),
                                  "kind": "PG"})
        else:
            raise ComplexError(
                f"component {comp} does not admit the covering join "
                f"(classified {verdict.kind}"
                + (f": {verdict.name}" if verdict.name else "") + ")")
    expected_d = sum(2 * c["basic_cycles"] + c["pendant_edges"] + (c["kind"] == "K1")
                     for c in per_component)
    ind = independence_complex(g)
    certificate = {"components": per_component,
                   "expected_tail": expected_d,
                   "dim_matches": ind.dim + 1 == expected_d}
    return factors, certificate


def independent_facet_transversal(delta: SimplicialComplex
                                  ) -> Optional[tuple[str, ...]]:
    """An independent set of the 1-skeleton meeting every facet, or None."""
    if not delta.is_pure():
        raise ComplexError("facet transversals are defined for pure complexes")
    skel = delta.one_skeleton()
    facets = [set(f) for f in delta.facet_labels()]
    for candidate in maximal_independent_sets(skel):
        cset = set(candidate)
        if all(cset & f for f in facets):
            return candidate
    return None


# ---------------------------------------------------------------------------
# extremal checks
# ---------------------------------------------------------------------------

def turan_graph(n: int, r: int) -> Graph:
    """Complete multipartite graph with r classes as equal as possible."""
    if not 1 <= r <= n:
        raise ComplexError("need 1 <= r <= n")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    verts = [f"t{i + 1}" for i in range(n)]
    part = []
    pos = 0
    for s in sizes:
        part.append(verts[pos:pos + s])
        pos += s
    edges = [(u, w) for a, b in itertools.combinations(range(r), 2)
             for u in part[a] for w in part[b]]
    return Graph(verts, edges)


def count_triangles(g: Graph) -> int:
    adj = g.adjacency()
    return sum(1 for a, b, c in itertools.combinations(range(len(g.vertices)), 3)
               if b in adj[a] and c in adj[a] and c in adj[b])


def max_k4_free_edges(n: int) -> int:
    """Largest edge count of an n-vertex graph with no 4-clique."""
    return len(turan_graph(n, 3).edges)


def has_k4(g: Graph) -> bool:
    adj = g.adjacency()
    return any(all(b in adj[a] for a, b in itertools.combinations(q, 2))
               for q in itertools.combinations(range(len(g.vertices)), 4))
