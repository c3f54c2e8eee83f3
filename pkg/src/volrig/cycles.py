"""Boundary operators, minimal cycles, and the surface pipeline.

The top boundary operator sends a facet to the signed sum of its
cardinality d-1 subfaces, the sign of dropping the j-th vertex (1-based)
being (-1)^j.  A complex is a minimal cycle when its top cycle space is
one-dimensional with a generator touching every facet.  The module also
evaluates, coordinate by coordinate, the identity expressing the
rigidity matrix applied to a chain through the boundary of the chain,
and drives edge-contraction reduction of surface triangulations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complexes import (SimplicialComplex, as_face, build_complex,
                        contract_edge, facets_containing, k_faces,
                        remove_facet)
from .errors import BadParameters, ChainOutsideComplex
from .linalg import QQ, ExactMatrix, PrimeField, default_field
from .rigidity import (Placement, RigidityReport, generic_rank,
                       random_placement, rigidity_matrix, target_rank)
from .shifting import characteristic_membership

GF2 = PrimeField(2)


def boundary_operator(K: SimplicialComplex, card: int, field=QQ) -> ExactMatrix:
    """Matrix of the boundary from cardinality-card faces down one level.

    Rows are the cardinality card-1 faces of K in lex order, columns the
    cardinality-card faces; the entry for dropping the j-th vertex is
    (-1)^j with j counted from 1.
    """
    if card < 2 or card > K.d:
        raise BadParameters("cardinality %d outside 2..%d" % (card, K.d))
    rows = k_faces(K, card - 2)
    cols = k_faces(K, card - 1)
    row_index = {t: i for i, t in enumerate(rows)}
    m = ExactMatrix.zeros(len(rows), len(cols), field)
    minus_one = field.neg(field.one)
    for c, sigma in enumerate(cols):
        for j, v in enumerate(sigma, start=1):
            tau = tuple(u for u in sigma if u != v)
            m.data[row_index[tau]][c] = minus_one if j % 2 else field.one
    return m


def boundary_matrix(K: SimplicialComplex, field=QQ) -> ExactMatrix:
    """Top boundary operator, facets to their cardinality d-1 faces."""
    if K.d < 2:
        raise BadParameters("boundary needs facet cardinality at least 2")
    return boundary_operator(K, K.d, field)


def cycle_space(K: SimplicialComplex, field=QQ) -> ExactMatrix:
    """Kernel of the top boundary operator, one column per basis chain."""
    return boundary_matrix(K, field).right_kernel()


def is_minimal_cycle(K: SimplicialComplex, field=QQ) -> bool:
    """One-dimensional cycle space whose generator misses no facet.

    The default field is the rationals; pass GF2 for surfaces that only
    cycle with mod-2 coefficients.
    """
    space = cycle_space(K, field)
    if space.ncols != 1:
        return False
    return all(space.data[i][0] != 0 for i in range(space.nrows))


def chain_vector(K: SimplicialComplex, chain: dict, field):
    """Chain as a coefficient vector in K's facet order."""
    coeffs = {}
    for face, value in chain.items():
        f = as_face(face)
        if f not in K.facets:
            raise ChainOutsideComplex("chain touches %r, not a facet" % (f,))
        coeffs[f] = field.of(value)
    return [coeffs.get(s, field.zero) for s in K.facets]


def chain_boundary(K: SimplicialComplex, chain: dict, field) -> dict:
    """Boundary coefficients on cardinality d-1 faces, sparse."""
    vec = chain_vector(K, chain, field)
    out = {}
    for s, z in zip(K.facets, vec):
        if z == 0:
            continue
        for j, v in enumerate(s, start=1):
            tau = tuple(u for u in s if u != v)
            term = field.neg(z) if j % 2 else z
            out[tau] = field.add(out.get(tau, field.zero), term)
    return {t: c for t, c in out.items() if c != 0}


def rigidity_boundary_identity(K: SimplicialComplex, p: Placement,
                               chain: dict) -> bool:
    """Check, entry by entry, that the rigidity matrix applied to a chain
    equals the boundary-side expression.

    For vertex v and coordinate i the right side is (-1)^(d+i) times the
    sum, over cardinality d-1 faces tau containing v, of
    sign(tau minus v, tau) * det(N) * (boundary coefficient at tau),
    where N drops row i from the coordinate matrix of tau minus v.
    """
    d = K.d
    field = p.field
    lhs = rigidity_matrix(K, p).mul_vec(chain_vector(K, chain, field))
    dz = chain_boundary(K, chain, field)
    level = k_faces(K, d - 2)
    for v in range(1, K.n + 1):
        taus = [t for t in level if v in t]
        for i in range(1, d):
            acc = field.zero
            for tau in taus:
                coeff = dz.get(tau)
                if coeff is None:
                    continue
                rho = tuple(u for u in tau if u != v)
                j = tau.index(v) + 1
                cols = [p.vector(u) for u in rho]
                nmat = ExactMatrix(
                    [[cols[c][r] for c in range(d - 2)]
                     for r in range(d - 1) if r != i - 1],
                    field, _trusted=True)
                term = field.mul(nmat.det(), coeff)
                if j % 2:
                    term = field.neg(term)
                acc = field.add(acc, term)
            if (d + i) % 2:
                acc = field.neg(acc)
            if lhs[(v - 1) * (d - 1) + (i - 1)] != acc:
                return False
    return True


def remove_facet_rigidity(K: SimplicialComplex, face, trials: int = 3,
                          seed: int = 0, field=None) -> RigidityReport:
    """Rigidity report for the complex with one facet deleted."""
    rest = remove_facet(K, face)
    if rest is None:
        tgt = target_rank(K.n, K.d, 0)
        return RigidityReport(
            n=K.n, d=K.d, num_facets=0, generic_rank=0, target_rank=tgt,
            is_rigid=(tgt == 0), corank=tgt, trials=trials, seed=seed,
            trial_ranks=(0,) * trials,
            arithmetic=(field.describe() if field is not None
                        else PrimeField().describe()))
    return generic_rank(rest, trials=trials, seed=seed, field=field)


def _link_vertices(K: SimplicialComplex, v: int) -> set:
    out = set()
    for s in facets_containing(K, (v,)):
        out.update(u for u in s if u != v)
    return out


def _link_edges(K: SimplicialComplex, v: int) -> set:
    """Opposite edges of the facets at v; only meaningful for d=3."""
    out = set()
    for s in facets_containing(K, (v,)):
        out.add(tuple(u for u in s if u != v))
    return out


def surface_link_condition(K: SimplicialComplex, u: int, w: int) -> bool:
    """For d=3: the links of u and w meet exactly in the link of {u,w}.

    Equivalent to the classical contractibility criterion on closed
    surfaces: common link vertices are precisely the edge's apexes, and
    the links share no edge.
    """
    if K.d != 3:
        raise BadParameters("link condition implemented for d=3 only")
    apexes = {s for f in facets_containing(K, (u, w))
              for s in f if s not in (u, w)}
    if _link_vertices(K, u) & _link_vertices(K, w) != apexes:
        return False
    return not (_link_edges(K, u) & _link_edges(K, w))


def default_admissible(K: SimplicialComplex, u: int, w: int) -> bool:
    """Contract only edges in >= d-1 facets that pass the d=3 link
    condition and whose contraction leaves at least one facet."""
    through = facets_containing(K, (u, w))
    if len(through) < K.d - 1:
        return False
    if len(through) == K.num_facets:
        return False
    if K.d == 3 and not surface_link_condition(K, u, w):
        return False
    return True


def contraction_reduce(K: SimplicialComplex, admissible=None):
    """Contract admissible edges (first in lex order each round) until
    none remains; returns the fixed point and the contraction log.

    Terminates because every contraction loses one vertex.
    """
    if admissible is None:
        admissible = default_admissible
    log = []
    while True:
        found = None
        if K.d >= 2:
            for e in k_faces(K, 1):
                if admissible(K, e[0], e[1]):
                    found = e
                    break
        if found is None:
            return K, log
        K = contract_edge(K, found[0], found[1])
        log.append(found)


@dataclass(frozen=True)
class SurfaceDataset:
    name: str
    d: int
    complexes: tuple
    provenance: str


@dataclass(frozen=True)
class DatasetReport:
    name: str
    size: int
    rigid_count: int
    member_count: int
    irreducible_count: int
    entries: tuple
    trials: int
    seed: int
    arithmetic: str

    @property
    def all_rigid(self) -> bool:
        return self.rigid_count == self.size


def verify_dataset(ds: SurfaceDataset, trials: int = 3, seed: int = 0,
                   field=None) -> DatasetReport:
    """Per complex: rank report, shifting membership, irreducibility.

    Irreducibility here means only that no admissible contraction
    exists; no homeomorphism typing is attempted.
    """
    entries = []
    rigid = member = irreducible = 0
    arithmetic = None
    for idx, K in enumerate(ds.complexes):
        rep = generic_rank(K, trials=trials, seed=seed, field=field)
        arithmetic = rep.arithmetic
        mem = None
        if K.d >= 3 and K.n >= K.d + 1:
            mem = characteristic_membership(K, trials=trials, seed=seed,
                                            field=field).member
        fixed = not any(default_admissible(K, e[0], e[1])
                        for e in k_faces(K, 1))
        entries.append({
            "index": idx, "n": K.n, "d": K.d, "facets": K.num_facets,
            "rank": rep.generic_rank, "target": rep.target_rank,
            "rigid": rep.is_rigid, "member": mem, "irreducible": fixed,
        })
        rigid += rep.is_rigid
        member += bool(mem)
        irreducible += fixed
    return DatasetReport(
        name=ds.name, size=len(ds.complexes), rigid_count=rigid,
        member_count=member, irreducible_count=irreducible,
        entries=tuple(entries), trials=trials, seed=seed,
        arithmetic=arithmetic or "-")


def sample_chain(K: SimplicialComplex, seed: int, field=None) -> dict:
    """Random chain over K's facets for identity sweeps."""
    if field is None:
        field = default_field()
    rng = random.Random(seed)
    if field.mode == "prime":
        return {s: rng.randrange(field.q) for s in K.facets}
    return {s: field.of(rng.randrange(-99, 100)) for s in K.facets}


def random_identity_sweep(num_samples: int = 50, seed: int = 0,
                          field=None) -> int:
    """Sample (K, p, z) triples and count identity failures (expect 0)."""
    if field is None:
        field = default_field()
    rng = random.Random(seed)
    failures = 0
    for t in range(num_samples):
        d = rng.choice([3, 4])
        n = rng.randint(d + 1, 7)
        pool = list(combinations(range(1, n + 1), d))
        K = build_complex(n, rng.sample(pool, rng.randint(1, len(pool))))
        p = random_placement(n, d, seed + 7919 * t + 1, field=field)
        z = sample_chain(K, seed + 104729 * t + 2, field=field)
        if not rigidity_boundary_identity(K, p, z):
            failures += 1
    return failures
