"""Standard triangulation fixtures.

Small classical complexes used throughout the test suites: simplex
boundaries (spheres), the 7-vertex torus, the 6-vertex projective plane
(the orientability negative control), and the 9-vertex triangulation of
the complex projective plane.

The 9-vertex facet list was produced by ``scripts/gen_cp2_fixture.py``,
which searches the 4-orbit unions of 5-subsets of a 3x3 vertex grid under
the translation action and keeps the unique (up to relabeling) closed
orientable complex with Betti numbers (1, 0, 1, 0, 1). The orientation
signs shipped here are normalized so the cup-product signature is +1.
"""

from __future__ import annotations

import itertools

from .simplicial import SimplicialComplex


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex: the standard (n-1)-sphere on n+1 vertices."""
    facets = list(itertools.combinations(range(n + 1), n))
    return SimplicialComplex.from_facets(n - 1, facets)


def sphere2() -> SimplicialComplex:
    return simplex_boundary(3)


def sphere3() -> SimplicialComplex:
    return simplex_boundary(4)


def sphere4() -> SimplicialComplex:
    return simplex_boundary(5)


def circle(n: int = 3) -> SimplicialComplex:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    facets = [(i, (i + 1) % n) for i in range(n)]
    return SimplicialComplex.from_facets(1, facets)


def torus7() -> SimplicialComplex:
    """The 7-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    facets += [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return SimplicialComplex.from_facets(2, facets)


def projective_plane6() -> SimplicialComplex:
    """The 6-vertex projective plane (antipodal icosahedron quotient)."""
    facets = [
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
        (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
    ]
    return SimplicialComplex.from_facets(2, facets)


# 36 facets, four translation orbits of 5-subsets of Z_3 x Z_3 (vertex v = 3a + b).
_CP2_FACETS = (
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5), (0, 1, 3, 4, 6),
    (0, 1, 3, 5, 7), (0, 1, 3, 6, 7), (0, 1, 4, 5, 6), (0, 1, 5, 6, 8),
    (0, 1, 5, 7, 8), (0, 1, 6, 7, 8), (0, 2, 3, 4, 8), (0, 2, 3, 5, 8),
    (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 2, 4, 7, 8), (0, 2, 5, 6, 8),
    (0, 2, 6, 7, 8), (0, 3, 4, 6, 7), (0, 3, 4, 7, 8), (0, 3, 5, 7, 8),
    (1, 2, 3, 4, 8), (1, 2, 3, 5, 7), (1, 2, 3, 6, 7), (1, 2, 3, 6, 8),
    (1, 2, 4, 5, 7), (1, 2, 4, 7, 8), (1, 2, 6, 7, 8), (1, 3, 4, 6, 8),
    (1, 4, 5, 6, 8), (1, 4, 5, 7, 8), (2, 3, 5, 6, 7), (2, 3, 5, 6, 8),
    (2, 4, 5, 6, 7), (3, 4, 5, 6, 7), (3, 4, 5, 6, 8), (3, 4, 5, 7, 8),
)

# Signs of the reference orientation (signature +1), in facet-list order.
_CP2_SIGNS = (
    -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, -1, -1, 1, 1, 1, 1, -1,
    1, -1, 1, -1, 1, 1, -1, -1, -1, 1, -1, 1, 1, -1, 1, -1,
)


def cp2_9() -> SimplicialComplex:
    """The 9-vertex complex projective plane with its reference orientation."""
    return SimplicialComplex.from_facets(4, _CP2_FACETS, _CP2_SIGNS)


FIXTURES = {
    "sphere2": sphere2,
    "sphere3": sphere3,
    "sphere4": sphere4,
    "circle": circle,
    "torus7": torus7,
    "projective_plane6": projective_plane6,
    "cp2_9": cp2_9,
}
