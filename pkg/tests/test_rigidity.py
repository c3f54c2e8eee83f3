"""Rigidity matrix structure, trivial motions, and generic ranks."""

import pytest

from helpers import fresh_rng, octahedron, random_complex, single_triangle, tetra
from volrig import (Placement, build_complex, columns_independent, cone,
                    generic_rank, is_volume_rigid, random_placement,
                    rigidity_matrix, simplex_matrix, trivial_motion_basis)
from volrig.errors import (DimensionMismatch, MissingVertexCoordinates)
from volrig.linalg import QQ
from volrig.rigidity import target_rank
from volrig.sparsity import bipartite_complete_graph


def unit_placement():
    coords = {1: (QQ.of(0), QQ.of(0)), 2: (QQ.of(1), QQ.of(0)),
              3: (QQ.of(0), QQ.of(1))}
    return Placement(d=3, coords=coords, field=QQ)


def test_simplex_matrix_unit_triangle():
    m = simplex_matrix(unit_placement(), (1, 2, 3))
    assert m.det() == 1


def test_simplex_matrix_collinear():
    coords = {v: (QQ.of(v), QQ.of(2 * v)) for v in (1, 2, 3)}
    p = Placement(d=3, coords=coords, field=QQ)
    assert simplex_matrix(p, (1, 2, 3)).det() == 0


def test_simplex_matrix_translation_invariant():
    p = unit_placement()
    shifted = Placement(d=3, coords={
        v: (c[0] + 7, c[1] - 3) for v, c in p.coords.items()}, field=QQ)
    assert simplex_matrix(p, (1, 2, 3)).det() == \
        simplex_matrix(shifted, (1, 2, 3)).det()


def test_simplex_matrix_errors():
    p = unit_placement()
    with pytest.raises(DimensionMismatch):
        simplex_matrix(p, (1, 2))
    with pytest.raises(MissingVertexCoordinates):
        simplex_matrix(p, (1, 2, 4))


def test_rigidity_matrix_shape_and_support():
    rng = fresh_rng(3)
    for _ in range(10):
        d = rng.choice([3, 4])
        K = random_complex(rng, 7, d)
        p = random_placement(7, d, seed=rng.randrange(10 ** 6))
        m = rigidity_matrix(K, p)
        assert m.nrows == (d - 1) * 7
        assert m.ncols == K.num_facets
        for c, sigma in enumerate(K.facets):
            support = {i // (d - 1) + 1 for i in range(m.nrows)
                       if m.data[i][c] != 0}
            assert support <= set(sigma)
            assert sum(1 for i in range(m.nrows) if m.data[i][c] != 0) \
                <= d * (d - 1)


def test_rigidity_matrix_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rigidity_matrix(tetra(), random_placement(4, 4, seed=0))


def test_single_triangle_rank_one():
    rep = generic_rank(single_triangle())
    assert rep.generic_rank == 1
    assert rep.target_rank == 1
    assert rep.is_rigid


def test_tetra_rank_three():
    rep = generic_rank(tetra())
    assert rep.generic_rank == 3
    assert rep.target_rank == 3
    assert rep.is_rigid
    assert rep.corank == 0
    assert rep.trial_ranks == (3, 3, 3)


def test_trivial_motions_annihilate_exactly():
    rng = fresh_rng(9)
    for _ in range(20):
        d = rng.choice([3, 4])
        n = rng.randint(d, 7)
        K = random_complex(rng, n, d)
        p = random_placement(n, d, seed=rng.randrange(10 ** 6))
        motions = trivial_motion_basis(p, n)
        assert motions.nrows == d * d - d - 1
        assert motions.rank() == d * d - d - 1
        product = motions.matmul(rigidity_matrix(K, p))
        assert all(x == 0 for row in product.data for x in row)


def test_trivial_motions_pure_translation():
    # The translation row lies in the left kernel for the one-facet case.
    p = unit_placement()
    motions = trivial_motion_basis(p, 3)
    m = rigidity_matrix(single_triangle(), p)
    for i in range(motions.nrows):
        row = motions.data[i]
        acc = [sum(row[r] * m.data[r][c] for r in range(m.nrows))
               for c in range(m.ncols)]
        assert all(x == 0 for x in acc)


def test_rank_bounded_by_trivial_kernel():
    rng = fresh_rng(13)
    for _ in range(15):
        d = rng.choice([3, 4])
        n = rng.randint(d + 1, 7)
        K = random_complex(rng, n, d)
        rep = generic_rank(K, trials=2, seed=rng.randrange(10 ** 6))
        assert rep.generic_rank <= min(K.num_facets, rep.target_rank)
        assert rep.corank >= 0


def test_rank_monotone_in_facets():
    rng = fresh_rng(21)
    for _ in range(12):
        K = random_complex(rng, 6, 3)
        if K.num_facets < 2:
            continue
        smaller = build_complex(6, K.facets[:-1])
        assert generic_rank(smaller, trials=2).generic_rank <= \
            generic_rank(K, trials=2).generic_rank


def test_target_rank_degenerate_cases():
    assert target_rank(4, 3, 4) == 3
    assert target_rank(3, 3, 1) == 1
    assert target_rank(2, 2, 1) == 1
    assert target_rank(4, 4, 1) == 1


def test_octahedron_rigid():
    rep = generic_rank(octahedron())
    assert rep.generic_rank == 7
    assert rep.is_rigid


def test_cone_of_bipartite_not_rigid():
    K = cone(bipartite_complete_graph())
    rep = generic_rank(K)
    assert not rep.is_rigid
    assert rep.generic_rank == 8
    assert rep.target_rank == 9


def test_spanning_tree_rank_for_graphs():
    # d=2 reduces to a classical count: rank = n-1 for connected graphs.
    path = build_complex(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    rep = generic_rank(path)
    assert rep.generic_rank == 4
    assert rep.target_rank == 4


def test_columns_independent():
    K = tetra()
    assert columns_independent(K, [(1, 2, 3)])
    assert columns_independent(K, list(K.facets[:3]))
    assert not columns_independent(K, list(K.facets))
    assert columns_independent(4, [])


def test_columns_independent_duplicate_is_dependent():
    assert not columns_independent(4, [(1, 2, 3), (1, 2, 3)])


def test_rigid_decision_stable_across_seeds():
    for seed in (0, 17, 4711):
        assert is_volume_rigid(tetra(), seed=seed)
        assert not is_volume_rigid(cone(bipartite_complete_graph()),
                                   seed=seed)
