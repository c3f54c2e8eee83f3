"""Volume rigidity of pure simplicial complexes in one dimension down.

A complex with facets of cardinality d is placed in (d-1)-space.  The
facet-volume map sends a placement to the tuple of lifted-simplex
determinants, one per facet; its Jacobian is the rigidity matrix built
here.  Motions of the form z_v = A p(v) + u with trace(A) = 0 always lie
in the left kernel, so the best possible rank is
(d-1) n - (d*d - d - 1), and a complex attaining it is called rigid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import SimplicialComplex, as_face
from .errors import (BadParameters, DimensionMismatch,
                     MissingVertexCoordinates, VertexOutOfRange)
from .linalg import QQ, ExactMatrix, default_field, sample_generic_matrix


@dataclass(frozen=True)
class Placement:
    """Coordinates for vertices 1..n in (d-1)-space, exact scalars."""

    d: int
    coords: dict
    field: object

    def vector(self, v: int):
        try:
            return self.coords[v]
        except KeyError:
            raise MissingVertexCoordinates("no coordinates for vertex %d" % v)


@dataclass(frozen=True)
class RigidityReport:
    n: int
    d: int
    num_facets: int
    generic_rank: int
    target_rank: int
    is_rigid: bool
    corank: int
    trials: int
    seed: int
    trial_ranks: tuple
    arithmetic: str


def random_placement(n: int, d: int, seed: int, field=None) -> Placement:
    """Placement with coordinates drawn uniformly from a prime field."""
    if d < 2:
        raise BadParameters("facet cardinality must be at least 2")
    if n < 1:
        raise BadParameters("need at least one vertex")
    if field is None:
        field = default_field()
    m = sample_generic_matrix(n, d - 1, seed, field=field)
    coords = {v: tuple(m.data[v - 1]) for v in range(1, n + 1)}
    return Placement(d=d, coords=coords, field=field)


def simplex_matrix(p: Placement, sigma) -> ExactMatrix:
    """Lifted d x d simplex matrix: column j is (p(v_j); 1).

    Vertices of sigma appear in increasing order; the bottom row is all
    ones, so the determinant is a signed volume (up to the constant
    (d-1)! which never matters for rank).
    """
    sigma = as_face(sigma)
    if len(sigma) != p.d:
        raise DimensionMismatch("face %r has %d vertices, placement wants %d"
                                % (sigma, len(sigma), p.d))
    f = p.field
    cols = [p.vector(v) for v in sigma]
    for c in cols:
        if len(c) != p.d - 1:
            raise MissingVertexCoordinates("coordinate vector of wrong length")
    data = [[cols[j][i] for j in range(p.d)] for i in range(p.d - 1)]
    data.append([f.one] * p.d)
    return ExactMatrix(data, f, _trusted=True)


def _volume_gradient_columns(p: Placement, n: int, faces) -> ExactMatrix:
    """Jacobian columns of the facet-volume map for the given faces.

    Rows come in vertex-major blocks of d-1 coordinate rows: row
    (v-1)(d-1) + (i-1) differentiates with respect to the i-th
    coordinate of vertex v.  The column for a face sigma holds the
    signed cofactors of its lifted simplex matrix: the derivative with
    respect to p(v_j)_i is the cofactor deleting row i and column j.
    """
    f = p.field
    d = p.d
    m = ExactMatrix.zeros((d - 1) * n, len(faces), f)
    for col, sigma in enumerate(faces):
        if sigma[-1] > n:
            raise VertexOutOfRange("face %r exceeds n=%d" % (sigma, n))
        lifted = simplex_matrix(p, sigma)
        for j, v in enumerate(sigma):
            base = (v - 1) * (d - 1)
            for i in range(d - 1):
                m.data[base + i][col] = lifted.cofactor(i, j)
    return m


def rigidity_matrix(K: SimplicialComplex, p: Placement) -> ExactMatrix:
    """The (d-1)n x f Jacobian of the facet-volume map at p."""
    if p.d != K.d:
        raise DimensionMismatch("placement has d=%d, complex has d=%d"
                                % (p.d, K.d))
    return _volume_gradient_columns(p, K.n, K.facets)


def trivial_motion_basis(p: Placement, n: int) -> ExactMatrix:
    """Rows spanning the always-present left kernel of the rigidity matrix.

    The motions are z_v = A p(v) + u over a basis of traceless A
    (elementary off-diagonal matrices plus consecutive diagonal
    differences) and the d-1 coordinate translations, giving
    d*d - d - 1 rows of length (d-1) n.
    """
    f = p.field
    d = p.d
    width = (d - 1) * n
    rows = []

    def blank():
        return [f.zero] * width

    def put(row, v, i, value):
        row[(v - 1) * (d - 1) + i] = value

    for a in range(d - 1):
        for b in range(d - 1):
            if a == b:
                continue
            row = blank()
            for v in range(1, n + 1):
                put(row, v, a, p.vector(v)[b])
            rows.append(row)
    for a in range(d - 2):
        row = blank()
        for v in range(1, n + 1):
            put(row, v, a, p.vector(v)[a])
            put(row, v, a + 1, f.neg(p.vector(v)[a + 1]))
        rows.append(row)
    for t in range(d - 1):
        row = blank()
        for v in range(1, n + 1):
            put(row, v, t, f.one)
        rows.append(row)
    return ExactMatrix(rows, f, _trusted=True)


def target_rank(n: int, d: int, num_facets: int) -> int:
    """Best achievable rank; degenerate n <= d instances cap at f <= 1."""
    t = (d - 1) * n - (d * d - d - 1)
    if n <= d:
        t = min(t, num_facets)
    return t


def generic_rank(K: SimplicialComplex, trials: int = 3, seed: int = 0,
                 field=None) -> RigidityReport:
    """Max rank of the rigidity matrix over seeded random placements.

    A special placement can only lower the rank, so the max over trials
    underestimates the generic rank with one-sided error roughly
    bounded by trials * (matrix size) / field size per trial.
    """
    if trials < 1:
        raise BadParameters("trials must be at least 1")
    if field is None:
        field = default_field()
    ranks = []
    for t in range(trials):
        p = random_placement(K.n, K.d, seed + t, field=field)
        ranks.append(rigidity_matrix(K, p).rank())
    best = max(ranks)
    tgt = target_rank(K.n, K.d, K.num_facets)
    return RigidityReport(
        n=K.n, d=K.d, num_facets=K.num_facets,
        generic_rank=best, target_rank=tgt,
        is_rigid=(best == tgt), corank=tgt - best,
        trials=trials, seed=seed, trial_ranks=tuple(ranks),
        arithmetic=field.describe())


def is_volume_rigid(K: SimplicialComplex, trials: int = 3, seed: int = 0,
                    field=None) -> bool:
    return generic_rank(K, trials=trials, seed=seed, field=field).is_rigid


def columns_independent(K_or_n, faces, trials: int = 3, seed: int = 0,
                        field=None) -> bool:
    """Whether the given facet columns are independent for generic p.

    The first argument fixes the vertex count; a complex or a plain n
    both work, since independence only depends on the selected faces.
    """
    if trials < 1:
        raise BadParameters("trials must be at least 1")
    n = K_or_n.n if isinstance(K_or_n, SimplicialComplex) else int(K_or_n)
    faces = [as_face(s) for s in faces]
    if not faces:
        return True
    d = len(faces[0])
    for s in faces:
        if len(s) != d:
            raise DimensionMismatch("faces of mixed cardinality")
        if s[-1] > n:
            raise VertexOutOfRange("face %r exceeds n=%d" % (s, n))
    if field is None:
        field = default_field()
    for t in range(trials):
        p = random_placement(n, d, seed + t, field=field)
        m = _volume_gradient_columns(p, n, faces)
        if m.rank() == len(faces):
            return True
    return False


def rational_rank(K: SimplicialComplex, seed: int = 0) -> int:
    """Rank over the rationals at one random integer placement.

    Provided for cross-checks on small instances; entries are sampled
    in a fixed small integer box so determinants stay readable.
    """
    rng = random.Random(seed)
    coords = {v: tuple(QQ.of(rng.randrange(-999, 1000))
                       for _ in range(K.d - 1))
              for v in range(1, K.n + 1)}
    p = Placement(d=K.d, coords=coords, field=QQ)
    return rigidity_matrix(K, p).rank()
