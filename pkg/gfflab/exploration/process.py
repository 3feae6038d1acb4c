"""Step-indexed exploration of the discrete level set from a source set.

V_0 = S, A_0 = S ∩ E, B_0 = S \\ E, and for k >= 1 the open frontier A_k and
closed frontier B_k are the not-yet-revealed neighbours of A_{k-1} in and
out of E = {x in B_N : phi_x >= h}; V_k = V_{k-1} ∪ A_{k-1} ∪ B_{k-1}. Ring
sites of B_{N+1} are never in E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.ndimage import binary_dilation

from gfflab.errors import DomainError
from gfflab.geometry import NEAREST_STRUCTURE, BoxSpec
from gfflab.sampling import FieldSample

UNSEEN = -1


@dataclass(frozen=True, eq=False)
class ExplorationTrace:
    """A finished exploration run.

    ``found[x]`` is the step k with x in A_k ∪ B_k, or ``UNSEEN``. Steps run
    from 0 to ``n_steps``; V_{n_steps} is the final explored set.
    """

    box: BoxSpec
    h: float
    values: np.ndarray = field(repr=False)
    source: np.ndarray = field(repr=False)
    level_set: np.ndarray = field(repr=False)
    found: np.ndarray = field(repr=False)
    n_steps: int
    stop_radius: int | None = None
    stopped: bool = False

    @property
    def frozen(self) -> bool:
        """True when the run ended because the open frontier emptied."""
        return not self.stopped

    def _check_step(self, k: int) -> None:
        if not 0 <= k <= self.n_steps:
            raise DomainError(f"Step {k} outside the trace [0, {self.n_steps}]")

    def explored(self, k: int) -> np.ndarray:
        """V_k."""
        self._check_step(k)
        return self.source | ((self.found >= 0) & (self.found <= k - 1))

    def frontier(self, k: int) -> np.ndarray:
        self._check_step(k)
        return self.found == k

    def open_frontier(self, k: int) -> np.ndarray:
        """A_k."""
        return self.frontier(k) & self.level_set

    def closed_frontier(self, k: int) -> np.ndarray:
        """B_k."""
        return self.frontier(k) & ~self.level_set

    @property
    def entry_step(self) -> np.ndarray:
        """First k with x in V_k, ``UNSEEN`` if never within the trace."""
        entry = np.where(self.found >= 0, self.found + 1, UNSEEN)
        entry = np.where(entry > self.n_steps, UNSEEN, entry)
        return np.where(self.source, 0, entry)

    def sizes(self) -> list[dict[str, int]]:
        """Per-step set sizes, one record per step."""
        return [
            {
                "step": k,
                "explored": int(self.explored(k).sum()),
                "open_frontier": int(self.open_frontier(k).sum()),
                "closed_frontier": int(self.closed_frontier(k).sum()),
            }
            for k in range(self.n_steps + 1)
        ]


def _meets(box: BoxSpec, mask: np.ndarray, radius: int | None) -> bool:
    return radius is not None and bool((mask & box.outer_boundary(radius)).any())


def explore(
    sample: FieldSample,
    h: float,
    source: np.ndarray,
    stop_radius: int | None = None,
) -> ExplorationTrace:
    """Run the exploration until A_k is empty or V_k meets ∂B_{stop_radius}.

    Once A_k = ∅ one more step absorbs B_k and the trace freezes, so a run
    ending that way has n_steps = k + 1.
    """
    box = sample.box
    if not source.any():
        raise DomainError("Exploration needs a non-empty source set")
    if (source & ~box.interior_mask).any():
        raise DomainError(f"Source set must lie in B_{box.N}")
    if stop_radius is not None and not 0 <= stop_radius <= box.N:
        raise DomainError(f"Stop radius must lie in [0, {box.N}], got {stop_radius}")

    level_set = box.interior_mask & sample.open_mask(h)
    found = np.full(box.shape, UNSEEN, dtype=np.int64)
    found[source] = 0
    revealed = source.copy()
    open_frontier = source & level_set

    k = 0
    stopped = _meets(box, revealed, stop_radius)
    while not stopped:
        # revealed is V_{k+1}, open_frontier is A_k
        if not open_frontier.any():
            k += 1
            break
        k += 1
        if _meets(box, revealed, stop_radius):
            stopped = True
            break
        candidates = binary_dilation(open_frontier, structure=NEAREST_STRUCTURE) & ~revealed
        found[candidates] = k
        revealed |= candidates
        open_frontier = candidates & level_set

    return ExplorationTrace(
        box=box,
        h=h,
        values=sample.full(),
        source=source.copy(),
        level_set=level_set,
        found=found,
        n_steps=k,
        stop_radius=stop_radius,
        stopped=stopped,
    )


def stopping_times(trace: ExplorationTrace, radii: list[int]) -> dict[int, float]:
    """tau_j = first step whose explored set meets ∂B_j; ``inf`` if never."""
    entry = trace.entry_step
    times: dict[int, float] = {}
    for radius in radii:
        if not 0 <= radius <= trace.box.N:
            raise DomainError(f"Stopping radius must lie in [0, {trace.box.N}], got {radius}")
        hits = entry[trace.box.outer_boundary(radius) & (entry >= 0)]
        times[radius] = int(hits.min()) if hits.size else math.inf
    return times
