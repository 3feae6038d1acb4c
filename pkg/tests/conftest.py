import numpy as np
import pytest
from hypothesis import settings as hypothesis_settings

from gfflab.config import settings
from gfflab.geometry import BoxSpec
from gfflab.sampling import FieldSample, sample_field

hypothesis_settings.register_profile("gfflab", max_examples=30, deadline=None)
hypothesis_settings.load_profile("gfflab")


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Keep tests independent of a developer's .env."""
    monkeypatch.setattr(settings, "workers", None)
    monkeypatch.setattr(settings, "green_cache_dir", None)
    monkeypatch.setattr(settings, "dense_site_cap", 17_000)
    return settings


@pytest.fixture
def make_field():
    """Field on B_N filled with ``fill`` and ``overrides`` {site: value}."""

    def build(N, fill=1.0, overrides=None):
        box = BoxSpec(N)
        values = np.full(box.interior_shape, float(fill))
        for (x, y), value in (overrides or {}).items():
            values[x + N, y + N] = value
        return FieldSample(box=box, values=values)

    return build


@pytest.fixture
def random_field():
    def build(N, seed=0):
        return sample_field(BoxSpec(N), np.random.default_rng(seed))

    return build
