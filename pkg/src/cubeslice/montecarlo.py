"""
Monte Carlo estimate of the hexagon probability.

Random stream layout
--------------------
Sample ``i`` lives in block ``i // BLOCK_SIZE``.  Each block draws its
normals from its own PCG64 generator keyed by
``SeedSequence(entropy=seed, spawn_key=(block, 0))``; the rare draw whose
norm is too small to normalize is replaced from a second generator keyed
by ``(block, 1)``.  Sample values therefore depend only on ``(seed, i)``.
Chunks are contiguous ranges of sample indices, so the hit count is the
same for any chunk count, thread count or completion order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import InvalidConfigError, SymmetryViolationError
from .geometry import DEFAULT_TOLERANCE, HEX, Normal, Tolerance, classify_many

BLOCK_SIZE = 1 << 16
MIN_NORM = 1e-6
MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class RunConfig:
    samples: int
    seed: int = 42
    chunks: int = 1
    tolerance: Tolerance = field(default=DEFAULT_TOLERANCE)

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidConfigError(f"samples must be >= 1, got {self.samples}")
        if self.chunks < 1:
            raise InvalidConfigError(f"chunks must be >= 1, got {self.chunks}")
        if self.chunks > self.samples:
            raise InvalidConfigError(
                f"chunks ({self.chunks}) must not exceed samples ({self.samples})")
        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class Estimate:
    samples: int
    hits: int
    p_hat: float
    std_err: float
    seed: int
    chunks: int

    @classmethod
    def from_counts(cls, samples: int, hits: int, seed: int, chunks: int) -> "Estimate":
        p = hits / samples
        return cls(samples, hits, p, math.sqrt(p * (1.0 - p) / samples), seed, chunks)


# =============================================================================
# SAMPLING
# =============================================================================

def sample_unit_vector(rng: np.random.Generator) -> Normal:
    """One direction uniform on the unit sphere (normalized Gaussian triple)."""
    while True:
        g = rng.standard_normal(3)
        r = math.sqrt(float(g @ g))
        if r >= MIN_NORM:
            return Normal(*(float(x) / r for x in g))


def sample_unit_vectors(rng: np.random.Generator, size: int,
                        redraw: Optional[np.random.Generator] = None) -> np.ndarray:
    """``size`` directions uniform on the sphere, as a (size, 3) array.

    Rows too short to normalize are replaced from ``redraw`` (defaults to
    ``rng``) in row order.
    """
    g = rng.standard_normal((size, 3))
    _replace_short_rows(g, rng if redraw is None else redraw)
    return g / np.linalg.norm(g, axis=1)[:, None]


def _replace_short_rows(g: np.ndarray, rng: np.random.Generator) -> None:
    short = np.flatnonzero(np.linalg.norm(g, axis=1) < MIN_NORM)
    for k in short:
        row = rng.standard_normal(3)
        while np.linalg.norm(row) < MIN_NORM:
            row = rng.standard_normal(3)
        g[k] = row


def block_generator(seed: int, block: int, stream: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(block, stream))
    return np.random.Generator(np.random.PCG64(ss))


def _block_normals(seed: int, block: int) -> np.ndarray:
    return sample_unit_vectors(block_generator(seed, block, 0), BLOCK_SIZE,
                               redraw=block_generator(seed, block, 1))


def draw_normals(seed: int, start: int, stop: int) -> np.ndarray:
    """Unit normals for sample indices ``start <= i < stop``."""
    if stop <= start:
        return np.empty((0, 3))
    parts = []
    for block in range(start // BLOCK_SIZE, (stop - 1) // BLOCK_SIZE + 1):
        lo = max(start, block * BLOCK_SIZE) - block * BLOCK_SIZE
        hi = min(stop, (block + 1) * BLOCK_SIZE) - block * BLOCK_SIZE
        parts.append(_block_normals(seed, block)[lo:hi])
    return np.concatenate(parts)


def chunk_bounds(samples: int, chunks: int) -> list:
    """Split ``range(samples)`` into ``chunks`` contiguous, near-equal ranges."""
    return [(k * samples // chunks, (k + 1) * samples // chunks) for k in range(chunks)]


def iter_chunks(cfg: RunConfig):
    """Yield ``(start, normals)`` for each chunk, in chunk order."""
    for start, stop in chunk_bounds(cfg.samples, cfg.chunks):
        yield start, draw_normals(cfg.seed, start, stop)


# =============================================================================
# ESTIMATION
# =============================================================================

def _run(cfg: RunConfig, count_chunk: Callable[[int, int], int],
         workers: Optional[int]) -> Estimate:
    bounds = chunk_bounds(cfg.samples, cfg.chunks)
    if workers is None:
        workers = min(cfg.chunks, os.cpu_count() or 1)
    if workers <= 1:
        counts = [count_chunk(lo, hi) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # map preserves chunk order regardless of completion order
            counts = list(pool.map(lambda b: count_chunk(*b), bounds))
    return Estimate.from_counts(cfg.samples, int(sum(counts)), cfg.seed, cfg.chunks)


def estimate(cfg: RunConfig, workers: Optional[int] = None) -> Estimate:
    """Fraction of sampled normals whose section is a hexagon.

    Boundary cases count as misses.  ``workers`` only affects wall time.
    """
    def count_chunk(lo: int, hi: int) -> int:
        codes = classify_many(draw_normals(cfg.seed, lo, hi), cfg.tolerance)
        return int(np.count_nonzero(codes == HEX))

    return _run(cfg, count_chunk, workers)


def estimate_with_negation_antithetic(cfg: RunConfig,
                                      workers: Optional[int] = None) -> Estimate:
    """Same estimate as ``estimate``, also classifying every ``-n``.

    Raises SymmetryViolationError if any ``n`` and ``-n`` disagree.
    """
    def count_chunk(lo: int, hi: int) -> int:
        normals = draw_normals(cfg.seed, lo, hi)
        codes = classify_many(normals, cfg.tolerance)
        flipped = classify_many(-normals, cfg.tolerance)
        bad = np.flatnonzero(codes != flipped)
        if bad.size:
            raise SymmetryViolationError(
                f"{bad.size} sign-flip disagreements, first at sample {lo + int(bad[0])}")
        return int(np.count_nonzero(codes == HEX))

    return _run(cfg, count_chunk, workers)
