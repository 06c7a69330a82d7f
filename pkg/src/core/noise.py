"""
Counter-based random streams.

Every draw is addressed by a path (stream, replication, t, r) under a master
seed. The path is hashed by numpy's SeedSequence into a Philox key, so draws
never depend on call order and replications share no generator state.
"""

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import InvalidInputError


class Stream(IntEnum):
    GRADIENT_NOISE = 0
    STEP_ORDER = 1
    START_POINT = 2
    CAMPAIGN = 3


@dataclass(frozen=True)
class RngKey:
    master_seed: int
    path: tuple

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(entropy=self.master_seed, spawn_key=self.path)
        return np.random.Generator(np.random.Philox(seq))

    def standard_normal(self, size: int) -> np.ndarray:
        return self.generator().standard_normal(size)


@dataclass(frozen=True)
class NoiseStream:
    master_seed: int

    def __post_init__(self):
        if not 0 <= int(self.master_seed) < 2 ** 64:
            raise InvalidInputError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")

    def key(self, replication_id: int, t: int = 0, r: int = 0, stream: Stream = Stream.GRADIENT_NOISE) -> RngKey:
        if min(replication_id, t, r) < 0:
            raise InvalidInputError(f"Stream path entries must be nonnegative: ({replication_id}, {t}, {r})")
        return RngKey(int(self.master_seed), (int(stream), int(replication_id), int(t), int(r)))

    def gradient_key(self, replication_id: int, t: int, r: int) -> RngKey:
        return self.key(replication_id, t, r, Stream.GRADIENT_NOISE)

    def order_key(self, replication_id: int, t: int) -> RngKey:
        return self.key(replication_id, t, 0, Stream.STEP_ORDER)

    def start_key(self, replication_id: int) -> RngKey:
        return self.key(replication_id, 0, 0, Stream.START_POINT)
