"""Seed handling.

All randomness goes through numpy's PCG64 bit generator. Per-cell seeds are
derived from ``(master_seed, *keys)`` with :class:`numpy.random.SeedSequence`
so results never depend on the order in which cells are scheduled.
"""

import math
import zlib
from fractions import Fraction

import numpy as np


def _key_to_int(key):
    if isinstance(key, (int, np.integer)):
        if key < 0:
            raise ValueError("seed keys must be nonnegative")
        return int(key)
    return zlib.crc32(str(key).encode("utf-8"))


def derive_seed(master_seed, *keys):
    """Return a SeedSequence determined by ``master_seed`` and ``keys``.

    String keys are hashed with CRC-32, which is stable across processes
    (unlike :func:`hash`).
    """
    if master_seed is None:
        raise ValueError("a master seed is required")
    return np.random.SeedSequence(
        entropy=_key_to_int(master_seed),
        spawn_key=tuple(_key_to_int(k) for k in keys),
    )


def make_rng(seed):
    """Coerce ``seed`` (int, SeedSequence, Generator) into a PCG64 Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        raise ValueError("an explicit seed is required for reproducibility")
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(_key_to_int(seed)))


def round_half_up(x):
    """Round a nonnegative Fraction/float to the nearest int, ties upward."""
    f = as_fraction(x)
    return math.floor(f + Fraction(1, 2))


def as_fraction(x):
    """Exact rational for ``x``; floats are read through their shortest repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    return Fraction(repr(float(x)))
