"""Deterministic sub-seed derivation shared by all experiment pipelines.

Instance i of a run derives its generator from subseed(seed, ..., i), so one
instance's retries can never shift another instance's draws, and merged
results are identical for any worker count.
"""

from __future__ import annotations

import hashlib


def subseed(seed: int, *indices: int) -> int:
    """SHA-256 of 'seed:i:j:...' truncated to 64 bits."""
    text = ":".join(str(x) for x in (seed, *indices))
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")
