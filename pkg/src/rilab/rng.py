"""Reproducible random streams.

Two layers:

* ``RngStream`` wraps a ``(seed, stream)`` pair.  Plumbing draws
  (Poisson counts, labels, categorical entry points) go through a
  numpy ``Philox`` generator keyed by the pair, so any stream is fully
  reproducible and independent streams do not interact.

* Walk kernels consume *counter-based* randomness: each walk gets a
  64-bit key, and step ``t`` of that walk reads
  ``splitmix64(key + t * GOLDEN)``.  Randomness is a pure function of
  ``(key, t)``, which makes results independent of batching order and
  identical between the numba and numpy backends.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = np.uint64


def mix64(z):
    """SplitMix64 finalizer, vectorized over uint64 arrays (wraps mod 2^64)."""
    z = np.asarray(z, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> _U64(30))) * _MIX1
        z = (z ^ (z >> _U64(27))) * _MIX2
        return z ^ (z >> _U64(31))


def counter_outputs(key: int, t0: int, t1: int) -> np.ndarray:
    """Outputs for steps t0..t1-1 of the stream with the given key."""
    with np.errstate(over="ignore"):
        ctr = _U64(key) + GOLDEN * (np.arange(t0, t1, dtype=np.uint64) + _U64(1))
    return mix64(ctr)


@dataclass(frozen=True)
class RngStream:
    """A named, reproducible randomness source.

    Identical ``(seed, stream)`` pairs reproduce identical draw
    sequences.  ``child(k)`` derives a decorrelated sub-stream; parallel
    consumers must use distinct children.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not (0 <= int(self.seed) < 2 ** 64):
            raise ValueError("seed must fit in 64 bits")

    @property
    def key(self) -> int:
        """64-bit key combining seed and stream."""
        with np.errstate(over="ignore"):
            k = mix64(np.uint64(self.seed)) ^ mix64(
                np.uint64(self.stream % (2 ** 64)) + GOLDEN
            )
        return int(mix64(k))

    def child(self, k: int) -> "RngStream":
        """Derive sub-stream ``k``; children with distinct ``k`` are decorrelated."""
        with np.errstate(over="ignore"):
            sub = int(mix64(np.uint64(self.key) + GOLDEN * np.uint64(k + 1)))
        return RngStream(self.seed, sub)

    def generator(self) -> np.random.Generator:
        """Philox generator for plumbing draws (counts, labels, choices)."""
        return np.random.Generator(
            np.random.Philox(key=np.array([self.seed % 2 ** 64, self.stream % 2 ** 64],
                                          dtype=np.uint64))
        )

    def walk_keys(self, n: int) -> np.ndarray:
        """``n`` per-walk kernel keys (uint64)."""
        with np.errstate(over="ignore"):
            base = np.uint64(self.key)
            return mix64(base + GOLDEN * (np.arange(n, dtype=np.uint64) + _U64(1)))


def directions_for(key: int, n_steps: int, d: int, t0: int = 0) -> np.ndarray:
    """Direction codes (0..2d-1) for steps t0..t0+n_steps-1 of walk ``key``.

    Shared by both backends when whole legs are generated at once.
    """
    out = counter_outputs(key, t0, t0 + n_steps)
    return (out % np.uint64(2 * d)).astype(np.uint8)


def steps_from_directions(dirs: np.ndarray, d: int) -> np.ndarray:
    """(n, d) array of unit increments for a direction-code sequence."""
    n = dirs.shape[0]
    steps = np.zeros((n, d), dtype=np.int64)
    axes = dirs >> 1
    signs = 1 - 2 * (dirs & 1).astype(np.int64)
    steps[np.arange(n), axes] = signs
    return steps
