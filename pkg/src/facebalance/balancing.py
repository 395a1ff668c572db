"""Balancing pairs and the verified d-colorable witness pipeline.

A balancing pair for a complex is a variable order together with an
invertible degree-1 twist whose standard-monomial basis (after quotienting
the parameter tail) is squarefree and has degree at most one in each block of
a partition of the non-tail variables.  Pairs are built for two base shapes,
point complexes and triangle-free graph complexes that are bipartite after
one edge removal, then composed along joins and inherited by full-dimensional
subcomplexes.  Nothing is trusted: every property the construction promises
is re-verified on the specialized rational data, and any failure triggers a
resample of the specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .complexes import (ComplexError, Graph, SimplicialComplex, h_from_f,
                        is_full_dimensional_subcomplex, is_proper)
from .homology import is_cohen_macaulay
from .linalg import bareiss_rank, invert
from .polynomials import (DEFAULT_SEED, LinearAutomorphism, Multicomplex,
                          Specialization, SpecializationError,
                          StandardBasisOverflow, TermOrder,
                          specialization_stream, standard_monomial_basis)


class CoverError(ComplexError):
    """The cover or the complex violates a pipeline hypothesis."""


class VerificationError(RuntimeError):
    """A witness check failed after exhausting specialization retries."""


@dataclass(frozen=True)
class BalancingPair:
    """Variable order, twist matrix, and a block partition of the free part."""

    order: TermOrder
    matrix: LinearAutomorphism
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.matrix.variables != self.order.variables:
            raise ValueError("matrix and order disagree on variables")
        flat = [v for b in self.blocks for v in b]
        if sorted(flat) != sorted(self.order.free()):
            raise ValueError("blocks must partition the non-tail variables")
        if len(self.blocks) != self.order.d:
            raise ValueError("need exactly one block per tail variable")

    @property
    def d(self) -> int:
        return self.order.d

    def inverse_matrix(self) -> LinearAutomorphism:
        return self.matrix.inverse()

    def block_index(self) -> dict[str, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def to_json_obj(self) -> dict:
        return {"order": list(self.order.variables), "tail": list(self.order.tail()),
                "blocks": [list(b) for b in self.blocks],
                "matrix": self.matrix.to_json_obj()}


EMPTY_PAIR = BalancingPair(TermOrder((), 0), LinearAutomorphism((), ()), ())


# ---------------------------------------------------------------------------
# the rank condition
# ---------------------------------------------------------------------------

def kind_kleinschmidt(delta: SimplicialComplex, pair: BalancingPair
                      ) -> tuple[bool, Optional[tuple[str, ...]]]:
    """Facet-wise full-rank test on the tail columns of the inverse twist.

    For every facet, the rows of the inverse matrix indexed by its vertices,
    restricted to the last ``d`` columns, must have rank equal to the facet
    size.  Returns the first failing facet in sorted order, if any.
    """
    ginv = pair.inverse_matrix()
    n, d = pair.order.n, pair.order.d
    for facet in sorted(delta.facets):
        labels = delta.labels(facet)
        rows = [ginv.matrix[pair.order.index(v)][n - d:] for v in labels]
        if bareiss_rank(rows) != len(labels):
            return False, labels
    return True, None


# ---------------------------------------------------------------------------
# base pairs
# ---------------------------------------------------------------------------

def base_pair_points(labels: Sequence[str]) -> BalancingPair:
    """Pair for the 0-dimensional complex on the given points.

    The twist is the identity except that the last variable maps to the sum
    of all variables; the single block holds everything but the last
    variable.
    """
    labels = tuple(labels)
    if not labels:
        raise CoverError("a point factor needs at least one vertex")
    n = len(labels)
    rows = [[Fraction(int(i == j or j == n - 1)) for j in range(n)]
            for i in range(n)]
    order = TermOrder(labels, 1)
    g = LinearAutomorphism(labels, tuple(tuple(r) for r in rows))
    return BalancingPair(order, g, (labels[:-1],))


def base_pair_near_bipartite(graph: Graph, removed_edge: Optional[Sequence[str]],
                             spec: Specialization) -> BalancingPair:
    """Pair for a triangle-free graph complex that one edge away from
    bipartite.

    The removed edge's endpoints become the parameter tail; their color class
    minus the endpoints is one block and the opposite class the other.  The
    twist sends each tail variable to a sum over a column of ones (all free
    variables for the first, the opposite class for the second) twisted by
    the inverse of the 2x2 parameter block.
    """
    if not graph.is_triangle_free():
        raise CoverError("graph factor contains a triangle")
    if graph.bipartition() is not None:
        raise CoverError("graph factor is bipartite: split it into two point factors")
    if removed_edge is None:
        removed_edge = _find_balancing_edge(graph)
    ends = tuple(str(v) for v in removed_edge)
    if len(ends) != 2 or set(ends) - set(graph.vertices) or not graph.has_edge(
            graph.vertices.index(ends[0]), graph.vertices.index(ends[1])):
        raise CoverError(f"removed edge {ends!r} is not an edge of the factor")
    y, z = sorted(ends, key=graph.vertices.index)
    trimmed = Graph(graph.vertices,
                    [e for e in graph.edge_labels() if set(e) != {y, z}])
    sides = trimmed.bipartition()
    if sides is None:
        raise CoverError("graph factor minus the chosen edge is still odd")
    same = next((s for s in sides if y in s), ())
    if z not in same:
        raise AssertionError("edge endpoints split across the 2-coloring")
    class_a = tuple(v for v in graph.vertices if v in set(same))
    class_b = tuple(v for v in graph.vertices if v not in set(same))
    ordered = class_b + tuple(v for v in class_a if v not in (y, z)) + (y, z)
    order = TermOrder(ordered, 2)
    n = len(ordered)
    zinv = invert(spec.z_matrix())
    rows = []
    for i in range(n - 2):
        row = [Fraction(int(i == j)) for j in range(n - 2)]
        row.append(Fraction(1))                      # ones column
        row.append(Fraction(int(i < len(class_b))))  # ones on the B-class rows
        rows.append(tuple(row))
    for i in range(2):
        rows.append(tuple([Fraction(0)] * (n - 2) + [zinv[i][0], zinv[i][1]]))
    g = LinearAutomorphism(ordered, tuple(rows))
    blocks = (tuple(v for v in class_a if v not in (y, z)), class_b)
    return BalancingPair(order, g, blocks)


def _find_balancing_edge(graph: Graph) -> tuple[str, str]:
    for e in graph.edge_labels():
        trimmed = Graph(graph.vertices,
                        [f for f in graph.edge_labels() if set(f) != set(e)])
        if trimmed.bipartition() is not None:
            return e
    raise CoverError("no single edge removal makes the factor bipartite")


# ---------------------------------------------------------------------------
# composition and inheritance
# ---------------------------------------------------------------------------

def compose_pairs(p1: BalancingPair, p2: BalancingPair) -> BalancingPair:
    """Pair for the join: free variables first, then the two tails.

    Both twists must vanish below their diagonal blocks (tail rows against
    free columns); the composite is the block sum arranged for the merged
    order.
    """
    if p1.order.n == 0:
        return p2
    if p2.order.n == 0:
        return p1
    if set(p1.order.variables) & set(p2.order.variables):
        raise CoverError("joined factors share vertex labels")
    for p in (p1, p2):
        if not p.matrix.is_block_upper_triangular(p.order.d):
            raise CoverError("twist matrix is not in the block shape")
    merged = (p1.order.free() + p2.order.free() + p1.order.tail() + p2.order.tail())
    order = TermOrder(merged, p1.order.d + p2.order.d)
    source = {}
    for p in (p1, p2):
        for v in p.order.variables:
            source[v] = p
    n = len(merged)
    rows = []
    for vi in merged:
        row = []
        for vj in merged:
            if source[vi] is source[vj]:
                p = source[vi]
                row.append(p.matrix.matrix[p.order.index(vi)][p.order.index(vj)])
            else:
                row.append(Fraction(0))
        rows.append(tuple(row))
    g = LinearAutomorphism(merged, tuple(rows))
    return BalancingPair(order, g, p1.blocks + p2.blocks)


def inherit_to_subcomplex(pair: BalancingPair, delta: SimplicialComplex,
                          gamma: SimplicialComplex) -> BalancingPair:
    """The same pair, revalidated for a full-dimensional subcomplex."""
    if not is_full_dimensional_subcomplex(delta, gamma):
        raise CoverError("not a full-dimensional subcomplex of the cover join")
    ok, facet = kind_kleinschmidt(delta, pair)
    if not ok:
        raise VerificationError(f"rank condition fails on facet {facet!r}")
    return pair


# ---------------------------------------------------------------------------
# covers
# ---------------------------------------------------------------------------

def parse_cover(obj) -> list[dict]:
    """Validate the JSON cover format: a list of factor objects."""
    if not isinstance(obj, list) or not obj:
        raise CoverError("cover must be a non-empty list of factors")
    out = []
    for k, factor in enumerate(obj):
        if not isinstance(factor, dict) or factor.get("type") not in ("points", "graph"):
            raise CoverError(f"factor {k}: type must be 'points' or 'graph'")
        vertices = [str(v) for v in factor.get("vertices", [])]
        if not vertices:
            raise CoverError(f"factor {k}: no vertices")
        edges = [tuple(map(str, e)) for e in factor.get("edges", [])]
        if factor["type"] == "points" and edges:
            raise CoverError(f"factor {k}: point factors have no edges")
        removed = factor.get("removed_edge")
        out.append({"type": factor["type"], "vertices": vertices,
                    "edges": edges,
                    "removed_edge": tuple(map(str, removed)) if removed else None})
    return out


def factor_complex(factor: dict) -> SimplicialComplex:
    """The simplicial complex of one cover factor."""
    vertices = factor["vertices"]
    if factor["type"] == "points" or not factor["edges"]:
        return SimplicialComplex([[v] for v in vertices])
    g = Graph(vertices, factor["edges"])
    lonely = [v for i, v in enumerate(g.vertices) if g.degree(i) == 0]
    return SimplicialComplex(list(g.edge_labels()) + [[v] for v in lonely],
                             vertices=g.vertices)


def join_of_factors(factors: Iterable[dict]) -> SimplicialComplex:
    out = None
    for factor in factors:
        cx = factor_complex(factor)
        out = cx if out is None else out.join(cx)
    if out is None:
        raise CoverError("empty cover")
    return out


def _base_pairs_for(factor: dict, spec: Specialization) -> list[BalancingPair]:
    """Base pairs for one factor; bipartite graph factors split into two
    point factors."""
    if factor["type"] == "points" or not factor["edges"]:
        return [base_pair_points(factor["vertices"])]
    g = Graph(factor["vertices"], factor["edges"])
    if not g.is_triangle_free():
        raise CoverError("graph factor contains a triangle")
    sides = g.bipartition()
    if sides is not None:
        return [base_pair_points(side) for side in sides if side]
    return [base_pair_near_bipartite(g, factor["removed_edge"], spec)]


# ---------------------------------------------------------------------------
# the witness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BalancedWitness:
    """A verified d-colorable multicomplex with face counts equal to h."""

    pair: BalancingPair
    basis: Multicomplex
    complex: SimplicialComplex
    coloring: dict[str, int]
    verified_h: tuple[int, ...]
    checks: dict[str, bool]
    specialization: Specialization
    seed: int

    def to_json_obj(self) -> dict:
        basis_obj = self.basis.to_json_obj()
        return {"h": list(self.verified_h),
                "F": basis_obj["F"],
                "basis": basis_obj["monomials"],
                "coloring": {v: self.coloring[v] for v in sorted(self.coloring)},
                "blocks": [list(b) for b in self.pair.blocks],
                "checks": {k: self.checks[k] for k in sorted(self.checks)},
                "seed": self.seed,
                "specialization": [f"{v.numerator}/{v.denominator}"
                                   for v in self.specialization.values],
                "order": list(self.pair.order.variables),
                "tail": list(self.pair.order.tail()),
                "twist": self.pair.matrix.to_json_obj()}


CHECK_NAMES = ("kind_kleinschmidt", "squarefree", "block_degree",
               "divisibility_closure", "f_matches_h")


def _padded(seq: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(seq) + (0,) * (length - len(seq))


def balanced_witness(delta: SimplicialComplex, cover: Sequence[dict],
                     seed: int = DEFAULT_SEED, retries: int = 8,
                     require_cm: bool = True) -> BalancedWitness:
    """Build and verify the witness for a full-dimensional CM subcomplex of a
    join of admissible factors.

    Hypothesis violations (bad factor, not a subcomplex, not CM) raise
    :class:`CoverError` naming the failed condition.  Check failures under a
    specialization trigger a resample, up to ``retries`` extra attempts, then
    raise :class:`VerificationError` naming the failed check.
    """
    cover = parse_cover(list(cover))
    gamma = join_of_factors(cover)
    if not is_full_dimensional_subcomplex(delta, gamma):
        raise CoverError("complex is not a full-dimensional subcomplex of the "
                         "cover join")
    if require_cm:
        cm, violation = is_cohen_macaulay(delta)
        if not cm:
            raise CoverError(
                f"complex is not Cohen-Macaulay: link of {list(violation.face)!r} "
                f"has homology in degree {violation.degree}")
    d = delta.dim + 1
    h = h_from_f(delta.f_vector())
    failures = []
    stream = specialization_stream(seed)
    for _ in range(retries + 1):
        spec = next(stream)
        try:
            pair = EMPTY_PAIR
            for factor in cover:
                for base in _base_pairs_for(factor, spec):
                    pair = compose_pairs(pair, base)
            if pair.order.d != d:
                raise CoverError(f"cover tail size {pair.order.d} does not match "
                                 f"the complex ({d})")
            pair = inherit_to_subcomplex(pair, delta, gamma)
            checks = {"kind_kleinschmidt": True}
            basis = standard_monomial_basis(delta, pair.matrix, pair.order)
            block_idx = [tuple(pair.order.index(v) for v in b) for b in pair.blocks]
            checks["squarefree"] = basis.is_squarefree()
            checks["block_degree"] = all(basis.max_degree_in(idx) <= 1
                                         for idx in block_idx)
            checks["divisibility_closure"] = basis.is_divisibility_closed()
            checks["f_matches_h"] = (_padded(basis.f_vector(), d + 1)
                                     == _padded(h, d + 1))
            if all(checks.values()):
                witness_complex = basis.to_complex()
                coloring = {v: i for i, b in enumerate(pair.blocks) for v in b}
                assert is_proper(witness_complex, coloring), \
                    "block coloring is not proper on the witness"
                return BalancedWitness(pair, basis, witness_complex, coloring,
                                       h, checks, spec, seed)
            failed = sorted(k for k, v in checks.items() if not v)
            failures.append(f"attempt {spec.attempt}: failed {', '.join(failed)}")
        except (VerificationError, StandardBasisOverflow, SpecializationError) as e:
            failures.append(f"attempt {spec.attempt}: {e}")
    raise VerificationError(
        "no specialization verified the witness: " + "; ".join(failures))
