import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfflab.errors import DomainError
from gfflab.geometry import BoxSpec, enumerate_edges
from gfflab.metric import CLOSED, build_overlay, crossing_probability, draw_edge_uniforms, metric_connects
from gfflab.percolation import label_clusters
from gfflab.sampling import FieldSample


def _edge_count(N):
    return len(enumerate_edges(BoxSpec(N)))


def test_crossing_probability_closed_form():
    p = crossing_probability(np.array([1.5]), np.array([1.5]), 0.5, 2.0)
    assert p[0] == pytest.approx(1 - math.exp(-1))


def test_crossing_probability_needs_both_endpoints():
    p = crossing_probability(np.array([2.0, -0.1, 0.5]), np.array([-0.1, 2.0, 3.0]), 0.0, 4.0)
    assert p[0] == 0.0 and p[1] == 0.0
    assert 0 < p[2] < 1


def test_endpoint_at_level_closes_edge(make_field):
    sample = make_field(1, fill=-1.0, overrides={(0, 0): 0.5, (1, 0): 2.0})
    uniforms = np.full(_edge_count(1), 0.999999)
    overlay = build_overlay(sample, 0.5, uniforms=uniforms)
    assert not metric_connects(overlay, sample.box.mask_of([(0, 0)]), sample.box.mask_of([(1, 0)]))


def test_very_low_level_opens_everything(random_field):
    sample = random_field(4, seed=1)
    overlay = build_overlay(sample, -50.0, rng=np.random.default_rng(0))
    assert overlay.open_edges.all()
    assert (overlay.component_labels == 0).all()


def test_two_vertex_chain(make_field):
    sample = make_field(1, fill=-1.0, overrides={(0, 0): 1.0, (1, 0): 1.0})
    uniforms = np.full(_edge_count(1), 0.999999)
    overlay = build_overlay(sample, 0.0, uniforms=uniforms)
    box = sample.box
    assert metric_connects(overlay, box.mask_of([(0, 0)]), box.mask_of([(1, 0)]))


def test_same_source_and_target(make_field):
    sample = make_field(2, fill=1.0)
    overlay = build_overlay(sample, 0.5, uniforms=np.zeros(_edge_count(2)))
    site = sample.box.mask_of([(1, 1)])
    assert metric_connects(overlay, site, site)


def test_all_edges_closed(make_field):
    sample = make_field(2, fill=1.0)
    overlay = build_overlay(sample, 0.5, uniforms=np.zeros(_edge_count(2)))
    assert not overlay.open_edges.any()
    box = sample.box
    assert not metric_connects(overlay, box.mask_of([(0, 0)]), box.mask_of([(1, 0)]))


def test_ring_segments_pinned(make_field):
    sample = make_field(1, fill=-1.0)
    uniforms = np.full(_edge_count(1), 0.5)
    box = sample.box
    corner, side = box.mask_of([(2, 2)]), box.mask_of([(2, -2)])
    assert metric_connects(build_overlay(sample, 0.0, uniforms=uniforms), corner, side)
    assert not metric_connects(build_overlay(sample, 0.1, uniforms=uniforms), corner, side)


def test_closed_sites_get_sentinel(make_field):
    sample = make_field(1, fill=-1.0, overrides={(0, 0): 1.0})
    overlay = build_overlay(sample, 0.5, uniforms=np.zeros(_edge_count(1)))
    labels = overlay.component_labels
    assert labels[sample.box.mask_of([(0, 0)])].item() == 0
    assert (labels[~sample.box.mask_of([(0, 0)])] == CLOSED).all()


def test_overlay_input_checks(make_field):
    sample = make_field(1)
    with pytest.raises(DomainError):
        build_overlay(sample, 0.0, kappa=0.0, uniforms=np.zeros(_edge_count(1)))
    with pytest.raises(ValueError):
        build_overlay(sample, 0.0)
    with pytest.raises(ValueError):
        build_overlay(sample, 0.0, uniforms=np.zeros(3))


def test_edge_open_frequency(make_field):
    sample = make_field(1, fill=1.0, overrides={(0, 0): 1.4, (1, 0): 0.9})
    edges = enumerate_edges(sample.box)
    box = sample.box
    target = np.flatnonzero(box.mask_of([(0, 0)]).ravel())[0], np.flatnonzero(box.mask_of([(1, 0)]).ravel())[0]
    index = int(np.flatnonzero((edges[:, 0] == min(target)) & (edges[:, 1] == max(target)))[0])
    generator = np.random.default_rng(21)
    trials = 4000
    opened = sum(
        build_overlay(sample, 0.2, uniforms=draw_edge_uniforms(box, generator)).open_edges[index]
        for _ in range(trials)
    )
    p = crossing_probability(np.array([1.4]), np.array([0.9]), 0.2, 4.0)[0]
    assert abs(opened / trials - p) <= 4 * math.sqrt(p * (1 - p) / trials)


@given(st.floats(-2.0, 2.0), st.floats(0.0, 2.0))
def test_open_edges_monotone_in_level(h, delta):
    sample = FieldSample(box=BoxSpec(3), values=np.random.default_rng(5).standard_normal((7, 7)))
    uniforms = draw_edge_uniforms(sample.box, np.random.default_rng(6))
    low = build_overlay(sample, h, uniforms=uniforms)
    high = build_overlay(sample, h + delta, uniforms=uniforms)
    assert not (high.open_edges & ~low.open_edges).any()


def test_metric_clusters_refine_discrete(random_field):
    sample = random_field(8, seed=3)
    overlay = build_overlay(sample, 0.0, rng=np.random.default_rng(4))
    metric = label_clusters(sample, 0.0, "metric", overlay)
    discrete = label_clusters(sample, 0.0, "discrete")
    assert np.array_equal(metric.open_mask, discrete.open_mask)
    for cluster in range(metric.n_clusters):
        assert len(np.unique(discrete.labels[metric.labels == cluster])) == 1
