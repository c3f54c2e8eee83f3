"""Boundary operators, minimal cycles, facet removal, contraction."""

from itertools import combinations

import pytest

from helpers import (csaszar_torus, fresh_rng, octahedron,
                     projective_plane_six, random_complex, single_triangle,
                     tetra)
from volrig import (build_complex, contract_edge, is_volume_rigid, k_faces,
                    union_complex)
from volrig.cycles import (GF2, SurfaceDataset, boundary_matrix,
                           boundary_operator, chain_boundary, chain_vector,
                           contraction_reduce, cycle_space,
                           default_admissible, is_minimal_cycle,
                           random_identity_sweep, remove_facet_rigidity,
                           rigidity_boundary_identity, sample_chain,
                           surface_link_condition, verify_dataset)
from volrig.errors import BadParameters, ChainOutsideComplex
from volrig.linalg import QQ
from volrig.rigidity import Placement, generic_rank, random_placement


def test_boundary_of_boundary_vanishes():
    K = tetra()
    composed = boundary_operator(K, 2).matmul(boundary_operator(K, 3))
    assert all(x == 0 for row in composed.data for x in row)


def test_single_triangle_boundary_signs():
    m = boundary_matrix(single_triangle())
    assert (m.nrows, m.ncols) == (3, 1)
    # Edge rows in lex order (1,2), (1,3), (2,3); dropping the j-th
    # vertex contributes (-1)^j.
    assert [m.data[i][0] for i in range(3)] == [QQ.of(-1), QQ.of(1),
                                                QQ.of(-1)]


def test_tetra_boundary_rank_and_cycle():
    K = tetra()
    assert boundary_matrix(K).rank() == 3
    space = cycle_space(K)
    assert space.ncols == 1
    assert all(space.data[i][0] != 0 for i in range(4))
    assert is_minimal_cycle(K)


def test_triangle_has_no_cycles():
    assert cycle_space(single_triangle()).ncols == 0
    assert not is_minimal_cycle(single_triangle())


def test_disjoint_spheres_are_not_minimal():
    far = build_complex(8, [tuple(v + 4 for v in s) for s in tetra().facets])
    K = union_complex(build_complex(8, tetra().facets), far)
    assert cycle_space(K).ncols == 2
    assert not is_minimal_cycle(K)


def test_surface_examples_minimal_cycles():
    assert is_minimal_cycle(octahedron())
    assert is_minimal_cycle(csaszar_torus())
    # The six-vertex projective plane only cycles mod 2.
    assert not is_minimal_cycle(projective_plane_six())
    assert is_minimal_cycle(projective_plane_six(), field=GF2)


def test_chain_vector_and_boundary():
    K = tetra()
    space = cycle_space(K)
    cyc = {s: space.data[i][0] for i, s in enumerate(K.facets)}
    assert chain_boundary(K, cyc, QQ) == {}
    single = chain_boundary(K, {(1, 2, 3): 1}, QQ)
    assert set(single) == {(1, 2), (1, 3), (2, 3)}
    with pytest.raises(ChainOutsideComplex):
        chain_vector(K, {(1, 2, 5): 1}, QQ)


def test_identity_on_zero_chain():
    K = tetra()
    p = random_placement(4, 3, seed=5)
    assert rigidity_boundary_identity(K, p, {})


def test_identity_on_fundamental_cycle_over_rationals():
    K = tetra()
    space = cycle_space(K)
    cyc = {s: space.data[i][0] for i, s in enumerate(K.facets)}
    rng = fresh_rng(9)
    coords = {v: (QQ.of(rng.randrange(-99, 100)), QQ.of(rng.randrange(-99,
                                                                      100)))
              for v in range(1, 5)}
    p = Placement(d=3, coords=coords, field=QQ)
    assert rigidity_boundary_identity(K, p, cyc)


def test_identity_random_sweep():
    assert random_identity_sweep(num_samples=20, seed=3) == 0


def test_identity_rejects_outside_chain():
    K = tetra()
    p = random_placement(4, 3, seed=1)
    with pytest.raises(ChainOutsideComplex):
        rigidity_boundary_identity(K, p, {(1, 2, 5): 1})


def test_sample_chain_covers_facets():
    K = octahedron()
    z = sample_chain(K, seed=2)
    assert set(z) == set(K.facets)


def test_tetra_stays_rigid_without_any_single_facet():
    K = tetra()
    for face in K.facets:
        rep = remove_facet_rigidity(K, face)
        assert rep.num_facets == 3
        assert rep.generic_rank == 3
        assert rep.is_rigid


def test_octahedron_stays_rigid_without_any_single_facet():
    K = octahedron()
    assert generic_rank(K).is_rigid
    for face in K.facets:
        rep = remove_facet_rigidity(K, face)
        assert rep.num_facets == 7
        assert rep.generic_rank == 7
        assert rep.is_rigid


def test_csaszar_stays_rigid_without_any_single_facet():
    K = csaszar_torus()
    assert is_minimal_cycle(K)
    assert generic_rank(K).is_rigid
    for face in K.facets:
        assert remove_facet_rigidity(K, face).is_rigid


def test_remove_last_facet_gives_empty_report():
    rep = remove_facet_rigidity(single_triangle(), (1, 2, 3))
    assert rep.num_facets == 0
    assert rep.generic_rank == 0
    assert rep.target_rank == 0
    assert rep.is_rigid


def test_link_condition_on_octahedron():
    K = octahedron()
    for e in k_faces(K, 1):
        assert surface_link_condition(K, e[0], e[1])
    # Antipodal pairs share their whole link.
    assert not surface_link_condition(K, 1, 6)
    with pytest.raises(BadParameters):
        surface_link_condition(build_complex(3, [(1, 2)]), 1, 2)


def test_tetra_edges_not_admissible():
    K = tetra()
    for e in k_faces(K, 1):
        assert not default_admissible(K, e[0], e[1])


def test_default_admissible_on_octahedron():
    K = octahedron()
    assert default_admissible(K, 1, 2)
    assert not default_admissible(K, 1, 6)


def test_contraction_reduce_octahedron_to_tetra():
    fixed, log = contraction_reduce(octahedron())
    assert fixed == tetra()
    assert log == [(1, 2), (1, 2)]


def test_contraction_reduce_fixed_points():
    for K in (tetra(), csaszar_torus(), projective_plane_six()):
        fixed, log = contraction_reduce(K)
        assert fixed == K
        assert log == []


def test_contraction_rigidity_implication():
    # Whenever an admissible contraction is rigid, so is the original.
    rng = fresh_rng(7)
    checked = 0
    while checked < 15:
        K = random_complex(rng, 6, 3)
        edges = [e for e in k_faces(K, 1) if default_admissible(K, *e)]
        if not edges:
            continue
        e = edges[rng.randrange(len(edges))]
        small = contract_edge(K, e[0], e[1])
        if generic_rank(small).is_rigid:
            assert generic_rank(K).is_rigid
        checked += 1


def test_gluing_along_shared_vertices():
    # Unions of rigid pieces sharing at least d vertices stay rigid.
    t1 = tetra()
    t2 = build_complex(5, [tuple(v + 1 for v in s) for s in tetra().facets])
    glued = union_complex(build_complex(5, t1.facets), t2)
    assert generic_rank(glued).is_rigid
    rng = fresh_rng(15)
    checked = 0
    while checked < 8:
        K1 = random_complex(rng, 5, 3)
        K2 = random_complex(rng, 5, 3)
        if not (is_volume_rigid(K1) and is_volume_rigid(K2)):
            continue
        shifted = build_complex(7, [tuple(v + 2 for v in s)
                                    for s in K2.facets])
        glued = union_complex(build_complex(7, K1.facets), shifted)
        assert generic_rank(glued).is_rigid
        checked += 1


def test_new_vertex_on_spanning_subset_keeps_rigidity():
    # Joining a fresh vertex to every (d-1)-subset of d old vertices
    # adds d columns and d-1 rows worth of rank.
    rng = fresh_rng(25)
    checked = 0
    while checked < 8:
        K = random_complex(rng, 5, 3)
        if not is_volume_rigid(K):
            continue
        S = sorted(rng.sample(range(1, 6), 3))
        extra = [tuple(sorted(s + (6,))) for s in combinations(S, 2)]
        grown = build_complex(6, list(K.facets) + extra)
        assert generic_rank(grown).is_rigid
        checked += 1


def test_verify_dataset_counts():
    ds = SurfaceDataset(name="toy", d=3,
                        complexes=(tetra(), octahedron()),
                        provenance="handmade")
    rep = verify_dataset(ds)
    assert rep.size == 2
    assert rep.rigid_count == 2
    assert rep.all_rigid
    assert rep.member_count == 2
    # The octahedron still contracts, the tetrahedron does not.
    assert rep.irreducible_count == 1
    assert rep.entries[0]["irreducible"]
    assert not rep.entries[1]["irreducible"]
    assert rep.entries[1]["rank"] == 7
