"""Cluster labels of the level set {phi >= h} in discrete or metric mode."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.ndimage import label

from gfflab.geometry import NEAREST_STRUCTURE, BoxSpec
from gfflab.metric import CLOSED, EdgeOverlay
from gfflab.sampling import FieldSample

Mode = Literal["discrete", "metric"]
MODES: tuple[Mode, ...] = ("discrete", "metric")


@dataclass(frozen=True, eq=False)
class ClusterLabels:
    """Component id per open site of B_{N+1}; closed sites carry ``CLOSED``.

    Ids are compact (0 .. n_clusters - 1). Ring sites carry the value 0, so they
    are open exactly when h <= 0, and clusters of B_N that touch ∂_i B_N then
    share one id through the ring. Ids and ``n_clusters`` count components on
    B_{N+1}, not on B_N. Arm and circuit events do not see the difference since
    a path into the ring crosses ∂_i B_N first; ``chemical_distance`` uses B_N only.
    """

    box: BoxSpec
    h: float
    mode: Mode
    labels: np.ndarray = field(repr=False)

    @property
    def open_mask(self) -> np.ndarray:
        return self.labels != CLOSED

    @property
    def n_clusters(self) -> int:
        return int(self.labels.max()) + 1 if self.open_mask.any() else 0

    def ids_on(self, mask: np.ndarray) -> np.ndarray:
        """Distinct cluster ids met by the open sites of ``mask``."""
        ids = self.labels[mask & self.open_mask]
        return np.unique(ids)

    def connects(self, source: np.ndarray, target: np.ndarray) -> bool:
        """Whether an open cluster meets both ``source`` and ``target``."""
        return bool(np.intersect1d(self.ids_on(source), self.ids_on(target)).size)


def _check_mode(h: float, mode: Mode, overlay: EdgeOverlay | None) -> None:
    if mode not in MODES:
        raise ValueError(f"Unknown connectivity mode: {mode}")
    if mode == "metric" and overlay is None:
        raise ValueError("Metric mode needs an EdgeOverlay")
    if mode == "discrete" and overlay is not None:
        raise ValueError("Discrete mode takes no EdgeOverlay")
    if overlay is not None and overlay.h != h:
        raise ValueError(f"Overlay was built at h={overlay.h}, queried at h={h}")


def label_clusters(
    sample: FieldSample,
    h: float,
    mode: Mode = "discrete",
    overlay: EdgeOverlay | None = None,
) -> ClusterLabels:
    """Label the open clusters at level h.

    Discrete mode joins open nearest neighbours; metric mode joins them only
    through edges the overlay marks open, so its partition refines the
    discrete one on a coupled sample.
    """
    _check_mode(h, mode, overlay)
    if mode == "metric":
        labels = overlay.component_labels
    else:
        open_mask = sample.open_mask(h)
        raw, _ = label(open_mask, structure=NEAREST_STRUCTURE)
        labels = raw.astype(np.int64) - 1
    return ClusterLabels(box=sample.box, h=h, mode=mode, labels=labels)
