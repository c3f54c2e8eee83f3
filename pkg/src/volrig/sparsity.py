"""Hypergraph sparsity counts, tightness, and greedy basis completion.

A d-uniform facet set on n vertices is (a,b)-sparse when every vertex
subset A with |A| >= d spans at most a|A| - b facets, and tight when in
addition the whole vertex set attains the bound.  The regime matching
volume rigidity is a = d-1, b = d*d-d-1: tight complexes then have
exactly the facet count of a minimally rigid complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .complexes import SimplicialComplex, build_complex, cone
from .errors import BadParameters, InstanceTooLarge, NotSparse

BRUTE_FORCE_CAP = 22


@dataclass(frozen=True)
class SparsityParams:
    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0 or self.d < 1:
            raise BadParameters("need a >= 1, b >= 0, d >= 1")

    @classmethod
    def volume_regime(cls, d: int) -> "SparsityParams":
        return cls(a=d - 1, b=d * d - d - 1, d=d)

    def bound(self, m: int) -> int:
        return self.a * m - self.b


def spanned_count(K: SimplicialComplex, vertex_set) -> int:
    """Number of facets contained in the given vertex set."""
    a = set(vertex_set)
    return sum(1 for s in K.facets if a.issuperset(s))


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise InstanceTooLarge("n=%d exceeds brute-force cap %d" % (n, cap))


def _violation(n: int, d: int, facets, params: SparsityParams):
    """First violating vertex set, smallest cardinality then lex, or None."""
    masks = [sum(1 << (v - 1) for v in s) for s in facets]
    total = len(masks)
    for m in range(d, n + 1):
        bound = params.bound(m)
        if bound >= total or comb(m, d) <= bound:
            continue
        for a in combinations(range(1, n + 1), m):
            amask = sum(1 << (v - 1) for v in a)
            count = sum(1 for fm in masks if fm & ~amask == 0)
            if count > bound:
                return a
    return None


def is_sparse(K: SimplicialComplex, params: SparsityParams,
              cap: int = BRUTE_FORCE_CAP):
    """(verdict, witness): witness is a minimum-size violator or None."""
    if params.d != K.d:
        raise BadParameters("params.d=%d but complex has d=%d"
                            % (params.d, K.d))
    _check_cap(K.n, cap)
    w = _violation(K.n, K.d, K.facets, params)
    return (w is None, w)


def is_tight(K: SimplicialComplex, params: SparsityParams,
             cap: int = BRUTE_FORCE_CAP) -> bool:
    ok, _ = is_sparse(K, params, cap)
    return ok and K.num_facets == params.bound(K.n)


def _addition_keeps_sparse(n, facets_masks, new_mask, new_card,
                           params: SparsityParams) -> bool:
    """Only supersets of the new facet can newly violate the bound."""
    rest = [v for v in range(1, n + 1) if not (new_mask >> (v - 1)) & 1]
    allm = facets_masks + [new_mask]
    for extra in range(len(rest) + 1):
        for s in combinations(rest, extra):
            amask = new_mask | sum(1 << (v - 1) for v in s)
            m = new_card + extra
            count = sum(1 for fm in allm if fm & ~amask == 0)
            if count > params.bound(m):
                return False
    return True


def _greedy_complete(n: int, params: SparsityParams, start_facets):
    facets = sorted(set(start_facets))
    masks = [sum(1 << (v - 1) for v in s) for s in facets]
    have = set(facets)
    target = params.bound(n)
    for cand in combinations(range(1, n + 1), params.d):
        if len(have) >= target:
            break
        if cand in have:
            continue
        cmask = sum(1 << (v - 1) for v in cand)
        if _addition_keeps_sparse(n, masks, cmask, params.d, params):
            have.add(cand)
            masks.append(cmask)
    return sorted(have)


def complete_to_sparse_basis(K: SimplicialComplex, params: SparsityParams,
                             cap: int = BRUTE_FORCE_CAP) -> SimplicialComplex:
    """Greedily add lex-ordered candidate facets while sparsity survives.

    Stops at the tight count a n - b or when candidates run out; the
    input must itself be sparse.
    """
    ok, witness = is_sparse(K, params, cap)
    if not ok:
        raise NotSparse("input violates the bound on %r" % (witness,))
    return build_complex(K.n, _greedy_complete(K.n, params, K.facets))


def greedy_sparse_basis(n: int, params: SparsityParams,
                        cap: int = BRUTE_FORCE_CAP) -> SimplicialComplex:
    """Basis grown from the empty facet set (complexes cannot be empty,
    so the from-scratch variant gets its own entry point)."""
    _check_cap(n, cap)
    facets = _greedy_complete(n, params, [])
    if not facets:
        raise NotSparse("no facet at all satisfies the bound on n=%d" % n)
    return build_complex(n, facets)


def bipartite_complete_graph() -> SimplicialComplex:
    """The 3+3 complete bipartite graph as a 1-complex on labels 1..6."""
    edges = [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)]
    return build_complex(6, edges)


def build_counterexample(d: int) -> SimplicialComplex:
    """Tight but flexible complex: iterated cone over the 3+3 bipartite
    graph, completed to a sparsity basis in the volume regime."""
    if d < 3:
        raise BadParameters("construction needs d >= 3, got %d" % d)
    K = bipartite_complete_graph()
    for _ in range(d - 2):
        K = cone(K)
    return complete_to_sparse_basis(K, SparsityParams.volume_regime(d))
