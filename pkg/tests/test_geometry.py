import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfflab.errors import DomainError
from gfflab.geometry import (
    Annulus,
    BoxSpec,
    SiteIndex,
    boundary_sets,
    enumerate_edges,
    lattice_graph,
    nearest_neighbors,
    star_neighbors,
)


@pytest.mark.parametrize("N, expected", [(0, 12), (1, 40), (16, 2380)])
def test_edge_counts(N, expected):
    assert len(enumerate_edges(BoxSpec(N))) == expected


def test_edges_match_grid_graph():
    box = BoxSpec(3)
    index = SiteIndex(box)
    edges = enumerate_edges(box)
    ours = {frozenset(map(tuple, index.site(pair).tolist())) for pair in edges}
    r = box.radius
    grid = nx.grid_2d_graph(range(-r, r + 1), range(-r, r + 1))
    assert ours == {frozenset(edge) for edge in grid.edges}
    assert len(ours) == len(edges)


def test_edge_order_is_fixed():
    box = BoxSpec(2)
    assert np.array_equal(enumerate_edges(box), enumerate_edges(BoxSpec(2)))
    first = SiteIndex(box).site(enumerate_edges(box)[0])
    assert first.tolist() == [[-3, -3], [-3, -2]]


SYMMETRIES = [
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (y, x),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-y, -x),
]


@pytest.mark.parametrize("N", [0, 2, 5])
@pytest.mark.parametrize("symmetry", SYMMETRIES)
def test_edges_invariant_under_box_symmetries(N, symmetry):
    box = BoxSpec(N)
    index = SiteIndex(box)
    edges = {frozenset(map(tuple, index.site(pair).tolist())) for pair in enumerate_edges(box)}
    image = {frozenset(symmetry(*site) for site in edge) for edge in edges}
    assert image == edges


@pytest.mark.parametrize("N", [0, 1, 5])
def test_box_partition(N):
    box = BoxSpec(N)
    assert box.n_sites == (2 * N + 3) ** 2
    ring = box.shell(N + 1)
    assert not (ring & box.interior_mask).any()
    assert (ring | box.interior_mask).all()
    assert box.interior_mask.sum() == (2 * N + 1) ** 2


def test_negative_box_rejected():
    with pytest.raises(DomainError):
        BoxSpec(-1)


def test_boundary_sets_small_k():
    box = BoxSpec(4)
    assert len(boundary_sets(box, 1).inner) == 8
    assert boundary_sets(box, 0).inner.tolist() == [[0, 0]]
    assert len(boundary_sets(box, 2).outer) == 20


def test_boundary_sets_outer_has_no_corners():
    outer = boundary_sets(BoxSpec(4), 2).outer
    assert not any(abs(x) == abs(y) == 3 for x, y in outer.tolist())
    assert all(max(abs(x), abs(y)) == 3 for x, y in outer.tolist())


def test_boundary_sets_range():
    with pytest.raises(DomainError):
        boundary_sets(BoxSpec(2), 4)


@pytest.mark.parametrize("k", [0, 1, 3])
def test_outer_boundary_mask_size(k):
    box = BoxSpec(4)
    assert box.outer_boundary(k).sum() == 8 * (k + 1) - 4


def test_outer_boundary_outside_box():
    with pytest.raises(DomainError):
        BoxSpec(2).outer_boundary(3)


def test_star_neighbors():
    assert len(star_neighbors((0, 0))) == 8
    box = BoxSpec(2)
    assert sorted(star_neighbors((3, 3), box)) == [(2, 2), (2, 3), (3, 2)]
    assert set(star_neighbors((1, 1))) == {
        (0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)
    }


def test_nearest_neighbors_filtered():
    box = BoxSpec(1)
    assert sorted(nearest_neighbors((2, 0), box)) == [(1, 0), (2, -1), (2, 1)]


def test_annulus_mask_size():
    box = BoxSpec(8)
    assert Annulus(2, 4).mask(box).sum() == 9 * 9 - 5 * 5
    with pytest.raises(DomainError):
        Annulus(3, 3)
    with pytest.raises(DomainError):
        Annulus(2, 10).mask(box)


def test_mask_of_rejects_outside_sites():
    with pytest.raises(DomainError):
        BoxSpec(1).mask_of([(3, 0)])


@given(st.integers(0, 6), st.data())
def test_site_index_offsets_cover_box(N, data):
    box = BoxSpec(N)
    index = SiteIndex(box)
    x = data.draw(st.integers(-box.radius, box.radius))
    y = data.draw(st.integers(-box.radius, box.radius))
    offset = int(index.offset((x, y)))
    assert 0 <= offset < box.n_sites
    assert box.mask_of([(x, y)]).ravel()[offset]


def test_lattice_graph_degrees():
    box = BoxSpec(2)
    graph = lattice_graph(box)
    degrees = np.asarray(graph.sum(axis=1)).ravel().reshape(box.shape)
    assert (degrees[box.interior_mask] == 4).all()
    assert degrees[0, 0] == 2
    assert (graph != graph.T).nnz == 0
