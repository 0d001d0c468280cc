"""Deterministic, splittable random streams for verification trials.

Every trial draws from its own counter-based generator keyed by hashing
(seed, suite, property, trial), so results do not depend on the order in
which trials run and any single trial can be replayed in isolation.
"""

from __future__ import annotations

import hashlib

import numpy as np


def stream_key(seed: int, suite: str, prop: str, trial: int) -> int:
    material = f"{int(seed)}|{suite}|{prop}|{int(trial)}".encode()
    digest = hashlib.sha256(material).digest()
    return int.from_bytes(digest[:16], "little")


def trial_rng(seed: int, suite: str, prop: str, trial: int) -> np.random.Generator:
    """Independent generator for one (suite, property, trial) cell."""
    return np.random.Generator(np.random.Philox(key=stream_key(seed, suite, prop, trial)))
