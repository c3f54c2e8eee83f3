"""Pure simplicial complexes given by their facet lists.

A complex on vertex set {1, ..., n} is stored as the lexicographically
sorted tuple of its facets, all of one cardinality d.  Faces are strictly
increasing tuples of positive vertex labels.  Lower-dimensional faces are
implied (every subset of a facet is a face) and enumerated on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (ApexCollision, ContractionAnnihilates, EmptyFacetList,
                     FacetNotPresent, FaceTooLarge, InvalidFace, KOutOfRange,
                     MixedDimension, NotAnEdge, VertexOutOfRange)

Face = tuple


def as_face(vertices) -> Face:
    """Normalize an iterable of labels to a strictly increasing tuple."""
    vs = tuple(vertices)
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidFace("vertex labels must be positive ints, got %r" % (v,))
    if len(set(vs)) != len(vs):
        raise InvalidFace("repeated vertex in face %r" % (vs,))
    return tuple(sorted(vs))


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable pure complex; build through build_complex."""

    n: int
    d: int
    facets: tuple

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def vertices(self) -> tuple:
        """Labels that actually occur in a facet (isolated ones excluded)."""
        seen = set()
        for f in self.facets:
            seen.update(f)
        return tuple(sorted(seen))

    def __repr__(self):
        return "SimplicialComplex(n=%d, d=%d, %d facets)" % (
            self.n, self.d, len(self.facets))


def build_complex(n: int, facets) -> SimplicialComplex:
    """Validate, deduplicate, and sort a facet list into a complex."""
    if n < 1:
        raise VertexOutOfRange("need at least one vertex, got n=%d" % n)
    normalized = [as_face(f) for f in facets]
    if not normalized:
        raise EmptyFacetList("a complex needs at least one facet")
    d = len(normalized[0])
    for f in normalized:
        if len(f) != d:
            raise MixedDimension("facets %r and %r differ in cardinality"
                                 % (normalized[0], f))
        if f[-1] > n:
            raise VertexOutOfRange("facet %r uses a label above n=%d" % (f, n))
    return SimplicialComplex(n=n, d=d, facets=tuple(sorted(set(normalized))))


def k_faces(K: SimplicialComplex, k: int) -> list:
    """All k-dimensional faces (cardinality k+1), sorted lexicographically."""
    if k < 0 or k > K.d - 1:
        raise KOutOfRange("k=%d outside 0..%d" % (k, K.d - 1))
    out = set()
    for f in K.facets:
        out.update(combinations(f, k + 1))
    return sorted(out)


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Join with a fresh apex vertex (default n+1); facets gain the apex."""
    if apex is None:
        apex = K.n + 1
    if apex <= K.n:
        raise ApexCollision("apex %d collides with existing labels 1..%d"
                            % (apex, K.n))
    facets = [f + (apex,) for f in K.facets]
    return build_complex(apex, facets)


def union_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    if K.d != L.d:
        raise MixedDimension("cannot unite complexes of cardinality %d and %d"
                             % (K.d, L.d))
    facets = sorted(set(K.facets) | set(L.facets))
    n = max(f[-1] for f in facets)
    return build_complex(n, facets)


def facets_containing(K: SimplicialComplex, face) -> list:
    f = as_face(face)
    if len(f) > K.d:
        raise FaceTooLarge("face %r larger than facet cardinality %d" % (f, K.d))
    fset = set(f)
    return [s for s in K.facets if fset.issubset(s)]


def is_face(K: SimplicialComplex, face) -> bool:
    f = set(as_face(face))
    return any(f.issubset(s) for s in K.facets)


def contract_edge(K: SimplicialComplex, u: int, w: int) -> SimplicialComplex:
    """Identify the endpoints of edge {u, w}.

    The merged vertex keeps the smaller label, facets through the edge
    vanish, duplicates collapse, and labels above the dropped one shift
    down by one so the result lives on {1, ..., n-1}.
    """
    u, w = min(u, w), max(u, w)
    if u == w or not facets_containing(K, (u, w)):
        raise NotAnEdge("{%d, %d} is not an edge of the complex" % (u, w))
    survivors = set()
    for f in K.facets:
        if u in f and w in f:
            continue
        g = tuple(sorted(u if v == w else v for v in f))
        survivors.add(g)
    if not survivors:
        raise ContractionAnnihilates("every facet meets the edge {%d, %d}"
                                     % (u, w))
    relabeled = [tuple(v - 1 if v > w else v for v in f) for f in survivors]
    return build_complex(K.n - 1, relabeled)


def remove_facet(K: SimplicialComplex, face) -> SimplicialComplex | None:
    """Complex with one facet deleted; None when nothing would remain."""
    f = as_face(face)
    if f not in K.facets:
        raise FacetNotPresent("facet %r not in the complex" % (f,))
    rest = [s for s in K.facets if s != f]
    if not rest:
        return None
    return build_complex(K.n, rest)


def relabel(K: SimplicialComplex, perm: dict) -> SimplicialComplex:
    """Apply a bijection of {1, ..., n} to every vertex label."""
    if sorted(perm) != list(range(1, K.n + 1)) or \
            sorted(perm.values()) != list(range(1, K.n + 1)):
        raise VertexOutOfRange("perm must be a bijection on 1..%d" % K.n)
    facets = [tuple(sorted(perm[v] for v in f)) for f in K.facets]
    return build_complex(K.n, facets)


def complete_complex(n: int, d: int) -> SimplicialComplex:
    if d < 1 or d > n:
        raise MixedDimension("complete complex needs 1 <= d <= n")
    return build_complex(n, list(combinations(range(1, n + 1), d)))
