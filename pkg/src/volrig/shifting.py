"""Exterior shifting through compound coordinates of a generic basis.

Fix a basis f_1, ..., f_n of n-space with f_1 the all-ones vector and
the other entries random field elements.  For a size-k label set sigma,
the wedge f_sigma = f_{sigma_1} ^ ... ^ f_{sigma_k} has one coordinate
per size-k subset tau of the labels, namely the minor det A[tau, sigma].
Working inside a complex K means keeping only the coordinates at K's
own size-k faces (the quotient by missing faces).  A set sigma belongs
to the shifted family when its quotient vector escapes the span of the
vectors of all strictly smaller sets, in the chosen order on sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex, as_face, k_faces
from .errors import (BadParameters, DimensionMismatch, SingularBasis,
                     SizeExceedsDimension, VertexOutOfRange)
from .linalg import ExactMatrix, default_field, sample_generic_matrix
from .rigidity import Placement

# Failed nonsingularity draws retry with seed + (attempt << 32), keeping
# distinct attempts and distinct base seeds from colliding.
_RESEED_SHIFT = 32
_MAX_ATTEMPTS = 16


@dataclass(frozen=True)
class GenericBasis:
    """Nonsingular n x n matrix whose first column is all ones.

    Column j holds the basis vector f_{j+1}; the all-ones first column
    pins down the one non-random basis vector the theory requires.
    """

    n: int
    seed: int
    matrix: ExactMatrix

    @property
    def field(self):
        return self.matrix.field


def generic_basis(n: int, seed: int = 0, field=None) -> GenericBasis:
    if n < 1:
        raise BadParameters("need at least one vertex")
    if field is None:
        field = default_field()
    for attempt in range(_MAX_ATTEMPTS):
        m = sample_generic_matrix(n, n, seed + (attempt << _RESEED_SHIFT),
                                  first_column_ones=True, field=field)
        if m.rank() == n:
            return GenericBasis(n=n, seed=seed, matrix=m)
    raise SingularBasis("no nonsingular sample in %d attempts (n=%d, seed=%d)"
                        % (_MAX_ATTEMPTS, n, seed))


def componentwise_leq(sigma, tau) -> bool:
    """Partial order on equal-size label sets: each slot no larger."""
    s, t = as_face(sigma), as_face(tau)
    return len(s) == len(t) and all(a <= b for a, b in zip(s, t))


def characteristic_face(d: int, n: int):
    """The size-d set {1, 3, 4, ..., d, n} whose membership in the
    shifted family decides volume rigidity."""
    if d < 3 or n < d + 1:
        raise BadParameters("need d >= 3 and n >= d+1, got d=%d n=%d" % (d, n))
    return (1,) + tuple(range(3, d + 1)) + (n,)


def characteristic_prefix(d: int, n: int) -> list:
    """All size-d sets componentwise below the characteristic face.

    Explicitly: [d] itself plus [d] minus {i} plus {v} for 2 <= i <= d
    and d+1 <= v <= n, so 1 + (n-d)(d-1) sets in total.
    """
    if d < 3 or n < d + 1:
        raise BadParameters("need d >= 3 and n >= d+1, got d=%d n=%d" % (d, n))
    out = [tuple(range(1, d + 1))]
    for i in range(2, d + 1):
        base = [x for x in range(1, d + 1) if x != i]
        for v in range(d + 1, n + 1):
            out.append(tuple(sorted(base + [v])))
    return sorted(out)


def compound_vector(basis: GenericBasis, K: SimplicialComplex, sigma) -> list:
    """Coordinates of the wedge of basis vectors sigma against K's faces.

    Entry order follows k_faces(K, len(sigma)-1), i.e. lex on the faces;
    entries at faces missing from K are simply not represented.
    """
    sigma = as_face(sigma)
    k = len(sigma)
    if k > K.d:
        raise SizeExceedsDimension("|sigma|=%d exceeds facet cardinality %d"
                                   % (k, K.d))
    if sigma[-1] > basis.n:
        raise VertexOutOfRange("sigma %r exceeds basis size n=%d"
                               % (sigma, basis.n))
    if K.n != basis.n:
        raise DimensionMismatch("complex has n=%d, basis has n=%d"
                                % (K.n, basis.n))
    a = basis.matrix
    cols = [s - 1 for s in sigma]
    return [a.submatrix([t - 1 for t in tau], cols).det()
            for tau in k_faces(K, k - 1)]


def _predecessors(sigma, n: int, order: str) -> list:
    k = len(sigma)
    if order == "p":
        return [t for t in combinations(range(1, n + 1), k)
                if t != sigma and componentwise_leq(t, sigma)]
    if order == "lex":
        return [t for t in combinations(range(1, n + 1), k) if t < sigma]
    raise BadParameters("order must be 'p' or 'lex', got %r" % (order,))


def in_shifted_family(K: SimplicialComplex, sigma, basis: GenericBasis,
                      order: str = "p") -> bool:
    """Definitional membership test: does the compound vector of sigma
    escape the span of the vectors of all its order-predecessors?"""
    sigma = as_face(sigma)
    vec = compound_vector(basis, K, sigma)
    if all(x == 0 for x in vec):
        return False
    preds = _predecessors(sigma, basis.n, order)
    if not preds:
        return True
    cols = [compound_vector(basis, K, t) for t in preds]
    m = ExactMatrix([[c[i] for c in cols] for i in range(len(vec))],
                    basis.field, _trusted=True)
    return not m.in_column_span(vec)


def shifted_level_ordered(K: SimplicialComplex, k: int, basis: GenericBasis,
                          face_order) -> list:
    """Members at size k under an explicit total order on size-k sets.

    face_order must list every size-k subset of the label range exactly
    once.  A greedy streaming test suffices for total orders: the span
    of all earlier vectors equals the span of the earlier members.
    """
    _check_level(K, k)
    expected = set(combinations(range(1, basis.n + 1), k))
    order_list = [as_face(t) for t in face_order]
    if len(order_list) != len(expected) or set(order_list) != expected:
        raise BadParameters("face_order must enumerate all size-%d subsets" % k)
    members = []
    span = None
    for sigma in order_list:
        vec = compound_vector(basis, K, sigma)
        if all(x == 0 for x in vec):
            continue
        if span is None or not span.in_column_span(vec):
            members.append(sigma)
            col = ExactMatrix.column(vec, basis.field)
            span = col if span is None else span.hstack(col)
    return sorted(members)


def shifted_level(K: SimplicialComplex, k: int, basis: GenericBasis,
                  order: str = "p") -> list:
    """All size-k members of the shifted family, sorted lex.

    For the partial order, each set is tested against the members among
    its predecessors only; the span of all predecessors coincides with
    the span of the member predecessors (induction along the order), so
    this is the definitional test, just cheaper.
    """
    _check_level(K, k)
    if order == "lex":
        return shifted_level_ordered(
            K, k, basis, combinations(range(1, basis.n + 1), k))
    if order != "p":
        raise BadParameters("order must be 'p' or 'lex', got %r" % (order,))
    members = []
    member_cols = []
    for sigma in combinations(range(1, basis.n + 1), k):
        vec = compound_vector(basis, K, sigma)
        if all(x == 0 for x in vec):
            continue
        cols = [c for m, c in zip(members, member_cols)
                if componentwise_leq(m, sigma)]
        if cols:
            mat = ExactMatrix([[c[i] for c in cols] for i in range(len(vec))],
                              basis.field, _trusted=True)
            if mat.in_column_span(vec):
                continue
        members.append(sigma)
        member_cols.append(vec)
    return sorted(members)


def shifted_level_stable(K: SimplicialComplex, k: int, order: str = "p",
                         trials: int = 3, seed: int = 0, field=None) -> list:
    """shifted_level over several independent bases, demanding agreement.

    Disagreement means at least one basis was degenerate; one round of
    fresh seeds is tried before giving up.
    """
    from .errors import GenericityFailure

    if trials < 1:
        raise BadParameters("trials must be at least 1")
    for round_base in (seed, seed + (1 << 48)):
        results = [shifted_level(K, k, generic_basis(K.n, round_base + t,
                                                     field=field), order)
                   for t in range(trials)]
        if all(r == results[0] for r in results):
            return results[0]
    raise GenericityFailure("shifted level disagreed across %d bases" % trials)


def _check_level(K: SimplicialComplex, k: int) -> None:
    if k < 1 or k > K.d:
        raise BadParameters("level k=%d outside 1..%d" % (k, K.d))


@dataclass(frozen=True)
class MembershipReport:
    n: int
    d: int
    face: tuple
    member: bool
    trials: int
    seed: int
    per_trial: tuple
    arithmetic: str


def characteristic_membership(K: SimplicialComplex, trials: int = 3,
                              seed: int = 0, field=None) -> MembershipReport:
    """Does the characteristic face sit in the shifted family of K?

    Membership is ORed over independently seeded bases: a degenerate
    basis can only create a spurious linear dependence, never break one,
    so false negatives are the only sampling failure.
    """
    if trials < 1:
        raise BadParameters("trials must be at least 1")
    if field is None:
        field = default_field()
    face = characteristic_face(K.d, K.n)
    votes = []
    for t in range(trials):
        basis = generic_basis(K.n, seed + t, field=field)
        votes.append(in_shifted_family(K, face, basis, order="p"))
    return MembershipReport(
        n=K.n, d=K.d, face=face, member=any(votes),
        trials=trials, seed=seed, per_trial=tuple(votes),
        arithmetic=field.describe())


def wedge_map_matrix(basis: GenericBasis, d: int, faces=None) -> ExactMatrix:
    """Matrix of the map (m_2, ..., m_d) -> sum_i f_{[d] minus i} ^ m_i.

    Rows are indexed by size-d label sets (all of them in lex order, or
    the given faces); columns come in d-1 blocks i = 2..d of n unit
    vectors e_v each, so column (i, v) sits at (i-2) n + (v-1).  The
    entry at row sigma is zero unless v is in sigma, in which case it is
    the minor det A[sigma minus v, [d] minus i] with sign (-1)^(d-t),
    t the position of v in sigma.
    """
    n = basis.n
    if d < 2 or d > n:
        raise BadParameters("need 2 <= d <= n, got d=%d n=%d" % (d, n))
    if faces is None:
        rows = list(combinations(range(1, n + 1), d))
    else:
        rows = [as_face(s) for s in faces]
        for s in rows:
            if len(s) != d:
                raise DimensionMismatch("row face %r is not size %d" % (s, d))
            if s[-1] > n:
                raise VertexOutOfRange("row face %r exceeds n=%d" % (s, n))
    a = basis.matrix
    f = basis.field
    out = ExactMatrix.zeros(len(rows), (d - 1) * n, f)
    for r, sigma in enumerate(rows):
        for t, v in enumerate(sigma, start=1):
            sub_rows = [u - 1 for u in sigma if u != v]
            for i in range(2, d + 1):
                sub_cols = [c - 1 for c in range(1, d + 1) if c != i]
                val = a.submatrix(sub_rows, sub_cols).det()
                if (d - t) % 2:
                    val = f.neg(val)
                out.data[r][(i - 2) * n + (v - 1)] = val
    return out


def placement_from_basis(basis: GenericBasis, d: int) -> Placement:
    """Read a placement off basis columns 2..d: vertex v gets row v."""
    if d < 2 or d > basis.n:
        raise BadParameters("need 2 <= d <= n, got d=%d n=%d" % (d, basis.n))
    coords = {v: tuple(basis.matrix.data[v - 1][1:d])
              for v in range(1, basis.n + 1)}
    return Placement(d=d, coords=coords, field=basis.field)
