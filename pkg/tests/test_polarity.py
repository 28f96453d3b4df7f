import pytest
from hypothesis import given, settings, strategies as st

from regsat.checkers import is_free, is_oversaturated, regularity
from regsat.graph import diameter
from regsat.patterns import clique
from regsat.polarity import (IRREDUCIBLE, FieldError, GF2m, clmul, edge_density_ratio, expected_absolute_points,
                             normalize, oversaturated_family, poly_mod, polarity_graph, projective_points,
                             twin_augmented, twin_augmented_polarity)


@pytest.mark.parametrize("p", sorted(IRREDUCIBLE))
def test_moduli_are_irreducible(p):
    m = IRREDUCIBLE[p]
    assert m.bit_length() - 1 == p
    # no factor of degree <= p/2
    for d in range(1, p // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            assert poly_mod(m, f) != 0, (p, bin(f))


field_elems = st.integers(1, 8).flatmap(lambda p: st.tuples(st.just(p), *(st.integers(0, (1 << p) - 1),) * 3))


@settings(max_examples=300, deadline=None)
@given(field_elems)
def test_field_axioms(args):
    p, x, y, z = args
    f = GF2m(p)
    assert f.add(x, y) == f.add(y, x)
    assert f.mul(x, y) == f.mul(y, x)
    assert f.mul(x, f.mul(y, z)) == f.mul(f.mul(x, y), z)
    assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    assert f.mul(x, 1) == x and f.add(x, x) == 0
    if x:
        assert f.mul(x, f.inv(x)) == 1


def test_field_errors():
    with pytest.raises(FieldError):
        GF2m(0)
    with pytest.raises(FieldError):
        GF2m(3).mul(8, 1)
    with pytest.raises(FieldError):
        GF2m(3).inv(0)


def test_mul_table_matches_mul():
    f = GF2m(4)
    t = f.mul_table()
    assert all(t[x, y] == f.mul(x, y) for x in range(16) for y in range(16))
    assert clmul(0b11, 0b11) == 0b101


def test_points_and_normalize():
    for p in (1, 2, 3):
        q = 1 << p
        pts = projective_points(p)
        assert len(pts) == q * q + q + 1 == len(set(pts))
    assert normalize(2, 2, 2, 0) == (1, 1, 0)
    with pytest.raises(FieldError):
        normalize(2, 0, 0, 0)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_polarity_graph(p):
    q = 1 << p
    pg = polarity_graph(p)
    g = pg.graph
    assert g.n == q * q + q + 1
    assert {pg.points[i] for i in pg.absolute} == expected_absolute_points(p)
    for v in range(g.n):
        assert g.degrees[v] == (q if v in pg.absolute else q + 1)
    assert diameter(g) == 2


@pytest.mark.parametrize("p", [2, 3, 4])
def test_twin_augmented(p):
    q = 1 << p
    g = twin_augmented_polarity(p)
    assert g.n == q * q + q + 2
    assert regularity(g).passed and g.degrees[0] == q + 1
    assert diameter(g) == 2
    assert is_oversaturated(g, clique(3)).passed
    assert not is_free(g, clique(3)).passed


def test_density_ratios():
    ratios = [edge_density_ratio(twin_augmented_polarity(p), 3) for p in (2, 3, 4)]
    assert ratios == [0.533, 0.523, 0.514]


def test_label_lines():
    lines = twin_augmented(2).label_lines()
    assert lines[0] == "0 1 0 0" and lines[-1] == "21 twin"


def test_oversaturated_family():
    g = oversaturated_family(2, 2)
    assert g.n == 44 and set(g.degrees) == {11}
    assert is_oversaturated(g, clique(4)).passed
    d, n, t = 11, 44, 2
    assert d * (d - 1) >= t * (n - d - 1)
    assert oversaturated_family(2, 1) == twin_augmented_polarity(2)
    with pytest.raises(FieldError):
        polarity_graph(9)
