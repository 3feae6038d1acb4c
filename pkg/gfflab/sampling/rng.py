"""Reproducible random substreams.

Streams are ``numpy.random.PCG64DXSM`` generators seeded from a
``SeedSequence`` whose spawn key is the stream lineage, so a substream depends
only on (base seed, lineage) and never on which worker draws it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    """A named substream: base seed plus the chain of stream indices leading to it."""

    seed: int
    index: int = 0
    lineage: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.index < 0 or any(i < 0 for i in self.lineage):
            raise ValueError(f"Stream indices must be non-negative: {self.lineage + (self.index,)}")

    @property
    def spawn_key(self) -> tuple[int, ...]:
        return self.lineage + (self.index,)

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(self.seed & _SEED_MASK, spawn_key=self.spawn_key)
        return np.random.Generator(np.random.PCG64DXSM(sequence))


def spawn_replica_stream(base: RngStream, replica: int) -> RngStream:
    """Deterministic child stream for one replica of ``base``."""
    return RngStream(seed=base.seed, index=replica, lineage=base.spawn_key)
