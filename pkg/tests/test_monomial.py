import random
import warnings

import pytest
from hypothesis import given, strategies as st

from glindex.monomial import (
    DimensionError,
    GeneratorError,
    Monomial,
    MonomialIdeal,
    ideal_from_json,
    minimalize,
    power_generators,
)

from oracles import power_oracle

exps = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)


def M(*e):
    return Monomial(tuple(e))


def test_lcm_gcd_degree():
    a, b = M(2, 1, 0), M(1, 0, 3)
    assert a.lcm(b) == M(2, 1, 3)
    assert a.gcd(b) == M(1, 0, 0)
    assert a.lcm(b).degree == 6
    assert M(1, 0, 0).divides(a)
    assert not a.divides(b)


def test_support_and_squarefree():
    m = Monomial.from_support(5, [1, 3])
    assert m.exponents == (1, 0, 1, 0, 0)
    assert m.support == frozenset({1, 3})
    assert m.is_squarefree()
    assert not M(2, 0, 0).is_squarefree()


def test_errors():
    with pytest.raises(DimensionError):
        M(1, 0).lcm(M(1, 0, 0))
    with pytest.raises(ValueError):
        M(-1, 0)
    with pytest.raises(GeneratorError):
        MonomialIdeal.from_exponents(2, [(0, 0)])
    with pytest.raises(DimensionError):
        ideal_from_json({"vars": 2, "generators": [[1, 0, 0]]})
    with pytest.raises(ValueError):
        ideal_from_json({"vars": 2})


def test_non_minimal_json_warns_and_minimalizes():
    with pytest.warns(UserWarning):
        I = ideal_from_json({"vars": 2, "generators": [[1, 0], [2, 0], [0, 1]]})
    assert sorted(I.exponent_rows()) == [(0, 1), (1, 0)]


def test_minimal_json_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ideal_from_json({"vars": 2, "generators": [[1, 0], [0, 1]]})


@given(exps, exps)
def test_lcm_is_least_common_multiple(a, b):
    A, B = Monomial(a), Monomial(b)
    L = A.lcm(B)
    assert A.divides(L) and B.divides(L)
    assert all(x == max(y, z) for x, y, z in zip(L.exponents, a, b))
    assert A.gcd(B).degree + L.degree == A.degree + B.degree


@given(st.lists(exps, min_size=1, max_size=6))
def test_minimalize_antichain(rows):
    ms = [Monomial(r) for r in rows if any(r)]
    if not ms:
        return
    mins = minimalize(ms)
    for a in mins:
        assert not any(b != a and b.divides(a) for b in mins)
    for m in ms:
        assert any(g.divides(m) for g in mins)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_power_matches_multiset_oracle(k):
    rng = random.Random(k)
    for _ in range(30):
        rows = {tuple(rng.randint(0, 2) for _ in range(4)) for _ in range(rng.randint(1, 5))}
        rows = [r for r in rows if any(r)]
        if not rows:
            continue
        I = MonomialIdeal.from_exponents(4, rows)
        assert set(power_generators(I, k).exponent_rows()) == power_oracle(I.exponent_rows(), k)


def test_equigenerated():
    I = MonomialIdeal.from_exponents(3, [(1, 1, 0), (0, 1, 1)])
    assert I.is_equigenerated() and I.generating_degree == 2
    J = MonomialIdeal.from_exponents(3, [(1, 0, 0), (0, 1, 1)])
    assert not J.is_equigenerated()
    with pytest.raises(ValueError):
        J.generating_degree
