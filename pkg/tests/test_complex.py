import random
from itertools import combinations

import pytest

from glindex.complex import (
    Q,
    SimplicialComplex,
    is_connected,
    order_complex,
    parse_field,
    reduced_homology,
    reduced_homology_dims,
    stanley_reisner_complex,
)
from glindex.monomial import MonomialIdeal

from oracles import random_complex, snf_reduced_homology


def closure(facets):
    faces = {()}
    for F in facets:
        F = tuple(sorted(F))
        for k in range(len(F) + 1):
            faces.update(combinations(F, k))
    return faces


RP2 = [(1, 2, 4), (2, 3, 4), (1, 3, 5), (1, 4, 5), (4, 5, 6), (2, 5, 6), (2, 3, 5), (3, 4, 6), (1, 3, 6), (1, 2, 6)]


def test_parse_field():
    assert parse_field("q") == Q
    assert parse_field("2") == 2
    assert parse_field(None) == Q
    with pytest.raises(ValueError):
        parse_field("4")


def test_conventions_for_tiny_complexes():
    assert reduced_homology_dims(SimplicialComplex.void()) == [0]
    # only the empty face: H~_{-1} = 1
    assert reduced_homology(SimplicialComplex.empty_face_only(), -1) == 1
    point = SimplicialComplex.from_facets([[1]])
    assert reduced_homology_dims(point) == [0, 0]


def test_sphere_and_projective_plane():
    S2 = SimplicialComplex.from_facets(combinations(range(1, 5), 3))
    assert reduced_homology_dims(S2) == [0, 0, 0, 1]
    X = SimplicialComplex.from_facets(RP2)
    assert reduced_homology_dims(X, Q) == [0, 0, 0, 0]
    assert reduced_homology_dims(X, 2) == [0, 0, 1, 1]
    assert reduced_homology_dims(X, 3) == [0, 0, 0, 0]


def test_missing_boundary_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex(frozenset({(), (1,), (1, 2)}))


def test_order_complex_of_chain_is_simplex():
    X = order_complex([1, 2, 3], less=lambda a, b: a < b)
    assert X.facets() == [(1, 2, 3)]
    assert order_complex([]).faces == frozenset({()})


def test_stanley_reisner_of_square_cycle():
    # I = (x1x3, x2x4): the complex is the 4-cycle, H~_1 = 1
    I = MonomialIdeal.from_exponents(4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    X = stanley_reisner_complex(I)
    assert reduced_homology_dims(X) == [0, 0, 1]


def test_connectivity():
    X = SimplicialComplex.from_facets([[1, 2], [3]])
    assert not is_connected(X)
    with pytest.raises(ValueError):
        is_connected(SimplicialComplex.void())


@pytest.mark.parametrize("p", [Q, 2, 3])
def test_homology_matches_snf_oracle(p):
    rng = random.Random(100 + p)
    for _ in range(40):
        faces = random_complex(rng, 9)
        X = SimplicialComplex(frozenset(faces))
        assert reduced_homology_dims(X, p) == snf_reduced_homology(faces, p)


def test_snf_oracle_known_factors():
    from oracles import smith_diagonal
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    # RP2's top boundary has a single factor 2
    faces = closure(RP2)
    by2 = sorted(f for f in faces if len(f) == 3)
    by1 = sorted(f for f in faces if len(f) == 2)
    from oracles import _boundary_matrix
    assert sorted(smith_diagonal(_boundary_matrix(by2, by1))) == [1] * 9 + [2]
