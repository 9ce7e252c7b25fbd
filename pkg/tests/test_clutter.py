import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from glindex.clutter import (
    Clutter,
    FamilyMatcher,
    all_masks,
    canonical_form,
    canonical_form_bruteforce,
    catalog,
    construct_Cd,
    family_C,
    family_C_matcher,
    find_induced_embedding,
    find_induced_embedding_bruteforce,
    is_family_free,
)

from oracles import iso_bruteforce, random_clutter_sets


@st.composite
def clutters(draw, n_min=3, n_max=6, d=3):
    n = draw(st.integers(n_min, n_max))
    masks = all_masks(n, d)
    chosen = draw(st.lists(st.sampled_from(masks), unique=True, max_size=len(masks)))
    return Clutter(n, d, tuple(chosen))


def test_construction_and_views():
    C = Clutter.from_string(5, "123 124 345")
    assert len(C) == 3 and (1, 2, 4) in C and (1, 3, 5) not in C
    assert C.used_vertices() == (1, 2, 3, 4, 5) and C.is_spanning()
    assert C.degrees() == [2, 2, 2, 2, 1]
    assert Clutter.from_json(C.to_json()) == C


@pytest.mark.parametrize("bad", [
    {"n": 3, "d": 3, "circuits": [[1, 2, 4]]},
    {"n": 3, "d": 3, "circuits": [[1, 1, 2]]},
    {"n": 3, "circuits": []},
    {"n": 4, "d": 3, "circuits": [[1, 2]]},
])
def test_malformed_json(bad):
    with pytest.raises(ValueError):
        Clutter.from_json(bad)


def test_complement_and_induced():
    C = Clutter.from_string(4, "123 124")
    assert C.complement().sets() == [(1, 3, 4), (2, 3, 4)]
    assert C.induced([1, 2, 4]).sets() == [(1, 2, 3)]
    assert C.complement().complement() == C


def test_clique_complex_faces():
    # two triangles glued into a tetrahedron boundary minus one face
    C = Clutter.from_string(4, "12 13 14 23 24 34")
    X = C.clique_complex()
    assert (1, 2, 3, 4) in X.faces
    C3 = Clutter.from_string(4, "123 124 134")
    assert (1, 2, 3, 4) not in C3.clique_complex().faces


def test_edge_ideal():
    I = Clutter.from_string(4, "12 34").edge_ideal()
    assert sorted(I.exponent_rows()) == [(0, 0, 1, 1), (1, 1, 0, 0)]


@given(clutters(), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(C, rnd):
    perm = list(range(C.n))
    rnd.shuffle(perm)
    assert canonical_form(C.relabel(perm)) == canonical_form(C)


def test_canonical_form_agrees_with_bruteforce():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(3, 7)
        C = Clutter.from_sets(n, random_clutter_sets(rng, n), 3)
        D = Clutter.from_sets(n, random_clutter_sets(rng, n, density=len(C) / max(1, len(all_masks(n, 3)))), 3)
        same = canonical_form(C) == canonical_form(D)
        assert same == (canonical_form_bruteforce(C) == canonical_form_bruteforce(D))
        if n <= 6 and len(C) == len(D):
            assert same == iso_bruteforce(C.sets(), D.sets(), n)


def test_canonical_form_on_regular_pairs():
    # colour refinement alone cannot split these vertex-transitive clutters
    cyc6 = Clutter.from_string(6, "12 23 34 45 56 16")
    two_triangles = Clutter.from_string(6, "12 23 13 45 56 46")
    assert canonical_form(cyc6) != canonical_form(two_triangles)
    assert canonical_form(cyc6) == canonical_form_bruteforce(cyc6)


def test_embedding_matches_bruteforce():
    rng = random.Random(11)
    pats = family_C()
    for _ in range(150):
        n = rng.randint(5, 7)
        host = Clutter.from_sets(n, random_clutter_sets(rng, n), 3)
        for P in pats:
            a = find_induced_embedding(host, P)
            b = find_induced_embedding_bruteforce(host, P)
            assert (a is None) == (b is None)
            if a is not None:
                W = sorted(a.values())
                sub = host.induced(W)
                assert len(sub) == len(P)


def test_matcher_agrees_with_embedding_search():
    rng = random.Random(12)
    m = family_C_matcher()
    for _ in range(300):
        n = rng.randint(5, 7)
        C = Clutter.from_sets(n, random_clutter_sets(rng, n), 3)
        direct = any(find_induced_embedding(C, P) is not None for P in family_C())
        assert m.contains(C) == direct
        r = m.check(C)
        assert bool(r) == (not direct)
        if not r:
            P = dict(zip(("B", "B1", "B2", "Bprime"), family_C()))[r.pattern]
            for F in combinations(range(1, P.n + 1), 3):
                image = tuple(sorted(r.embedding[v] for v in F))
                assert (F in P) == (image in C)


def test_is_family_free_with_list_and_matcher():
    C = catalog()["B"]
    assert not is_family_free(C, family_C())
    assert not is_family_free(C, family_C_matcher())
    assert is_family_free(Clutter.from_string(5, "123"), family_C())
    assert is_family_free(C, [])


def test_matcher_rejects_mixed_uniformity():
    with pytest.raises(ValueError):
        FamilyMatcher([Clutter.from_string(3, "12"), Clutter.from_string(3, "123")])
    with pytest.raises(ValueError):
        FamilyMatcher([])


def test_catalog_shapes():
    cat = catalog()
    assert [len(cat[k]) for k in ("B", "B1", "B2", "Bprime")] == [6, 7, 8, 18]
    assert cat["D1_6"].n == 6 and cat["D1_8"].n == 8
    # the four small obstructions are pairwise non-isomorphic
    forms = {canonical_form(C) for C in family_C()}
    assert len(forms) == 4


def test_construct_Cd():
    # direct evaluation of the defining set formula
    assert construct_Cd(2).sets() == [(1, 2), (1, 3), (2, 4), (3, 4)]
    C3 = construct_Cd(3)
    assert len(C3) == 6 and C3.n == 5
    assert canonical_form(C3) == canonical_form(catalog()["B"])
    for d in (2, 3, 4):
        assert len(construct_Cd(d)) == 2 * d
    with pytest.raises(ValueError):
        construct_Cd(0)
