import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from griddom import (GridDims, Vertex, boundary, closed_neighborhood,
                     neighbors, residue_class, subgrid_vertices)

D16 = GridDims(16, 16)


def test_dims_validation():
    with pytest.raises(ValueError):
        GridDims(0, 5)
    with pytest.raises(ValueError):
        GridDims(5, -1)
    d = GridDims(17, 23)
    assert (d.row_blocks, d.col_blocks) == (3, 4)
    assert d.transposed == GridDims(23, 17)


def test_neighbors_corner_edge_interior():
    assert neighbors((1, 1), D16) == {(1, 2), (2, 1)}
    assert neighbors((8, 8), D16) == {(7, 8), (9, 8), (8, 7), (8, 9)}
    assert neighbors((1, 5), D16) == {(1, 4), (1, 6), (2, 5)}


def test_neighbors_out_of_bounds():
    with pytest.raises(ValueError, match=r"\(0, 3\)"):
        neighbors((0, 3), D16)
    with pytest.raises(ValueError):
        closed_neighborhood((17, 1), D16)


def test_closed_neighborhood():
    assert closed_neighborhood((1, 1), D16) == {(1, 1), (1, 2), (2, 1)}
    assert len(closed_neighborhood((8, 8), D16)) == 5
    assert closed_neighborhood((16, 8), D16) == {(16, 8), (16, 7), (16, 9), (15, 8)}


def test_boundary_16x16_matches_degree_count():
    b = boundary(D16)
    assert len(b) == 2 * 16 + 2 * 16 - 4 == 60
    # independent oracle: enumerate vertices of degree < 4
    expected = {v for v in D16.vertices() if len(neighbors(v, D16)) < 4}
    assert b == expected


def test_boundary_degenerate_grids():
    assert boundary(GridDims(2, 2)) == set(GridDims(2, 2).vertices())
    assert boundary(GridDims(1, 5)) == set(GridDims(1, 5).vertices())


def test_subgrid_16x16():
    s = subgrid_vertices(D16)
    assert len(s) == 14 * 14 - 4 == 192
    assert (2, 2) not in s
    assert (2, 3) in s
    # enumeration oracle
    expected = {
        v for v in D16.vertices()
        if 2 <= v.row <= 15 and 2 <= v.col <= 15
        and v not in {(2, 2), (2, 15), (15, 2), (15, 15)}
    }
    assert s == expected


def test_subgrid_small_grids():
    assert subgrid_vertices(GridDims(4, 4)) == set()
    with pytest.raises(ValueError):
        subgrid_vertices(GridDims(3, 5))


def test_residue_class_examples():
    assert residue_class(4, 1, 3) == [9, 14, 19]
    assert residue_class(0, 1, 1) == [5]
    assert residue_class(2, 0, 2) == [2, 7, 12]
    assert residue_class(3, 1, 0) == []
    with pytest.raises(ValueError):
        residue_class(5, 0, 1)


dims_strategy = st.builds(GridDims, st.integers(2, 24), st.integers(2, 24))


@given(dims_strategy, st.data())
@settings(max_examples=60, deadline=None)
def test_neighbor_symmetry_and_degree(dims, data):
    v = Vertex(data.draw(st.integers(1, dims.m)), data.draw(st.integers(1, dims.n)))
    nb = neighbors(v, dims)
    assert v not in nb
    assert 1 <= len(nb) <= 4
    if min(dims.m, dims.n) >= 2:
        assert 2 <= len(nb)
        assert (len(nb) == 4) == (v not in boundary(dims))
    for u in nb:
        assert v in neighbors(u, dims)


@given(st.builds(GridDims, st.integers(4, 24), st.integers(4, 24)))
@settings(max_examples=40, deadline=None)
def test_subgrid_disjoint_from_boundary(dims):
    assert not subgrid_vertices(dims) & boundary(dims)


@given(st.integers(0, 4), st.integers(-3, 8), st.integers(-3, 8))
@settings(max_examples=80, deadline=None)
def test_residue_class_properties(k, i, j):
    out = residue_class(k, i, j)
    if i > j:
        assert out == []
    else:
        assert len(out) == j - i + 1
        assert all(x % 5 == k for x in out)
        assert out == sorted(out)
