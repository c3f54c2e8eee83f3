"""Shared fixtures: small named complexes and random generators."""

import random
from itertools import combinations

from volrig import build_complex, cone, relabel
from volrig.shifting import componentwise_leq
from volrig.sparsity import bipartite_complete_graph


def tetra():
    """Boundary of the 3-simplex: the smallest 2-sphere."""
    return build_complex(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def octahedron():
    return build_complex(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5),
                             (2, 3, 6), (3, 4, 6), (4, 5, 6), (2, 5, 6)])


def single_triangle(n=3):
    return build_complex(n, [(1, 2, 3)])


def bipartite33():
    return bipartite_complete_graph()


def csaszar_torus():
    """7-vertex torus: orbits {i,i+1,i+3} and {i,i+2,i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted(((i % 7) + 1, ((i + 1) % 7) + 1,
                                    ((i + 3) % 7) + 1))))
        facets.append(tuple(sorted(((i % 7) + 1, ((i + 2) % 7) + 1,
                                    ((i + 3) % 7) + 1))))
    return build_complex(7, facets)


def projective_plane_six():
    """The 6-vertex projective plane (10 triangles, every edge doubled)."""
    return build_complex(6, [(1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6),
                             (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 6),
                             (3, 5, 6), (4, 5, 6)])


def random_complex(rng, n, d, f=None):
    pool = list(combinations(range(1, n + 1), d))
    if f is None:
        f = rng.randint(1, len(pool))
    return build_complex(n, rng.sample(pool, f))


def random_shifted_complex(rng, n, d, seeds=2):
    """Down-closure of a few random d-sets in the componentwise order."""
    pool = list(combinations(range(1, n + 1), d))
    tops = rng.sample(pool, seeds)
    family = {t for t in pool
              if any(componentwise_leq(t, top) for top in tops)}
    return build_complex(n, sorted(family))


def cone_with_smallest_apex(L):
    """Cone whose apex gets label 1, pushing old labels up by one."""
    m = L.n
    perm = {m + 1: 1}
    perm.update({v: v + 1 for v in range(1, m + 1)})
    return relabel(cone(L), perm)


def random_linear_extension(rng, n, k):
    """Total order on size-k sets refining the componentwise order."""
    remaining = set(combinations(range(1, n + 1), k))
    out = []
    while remaining:
        minimal = sorted(s for s in remaining
                         if not any(t != s and componentwise_leq(t, s)
                                    for t in remaining))
        pick = rng.choice(minimal)
        out.append(pick)
        remaining.discard(pick)
    return out


def fresh_rng(seed):
    return random.Random(seed)
