"""Named random substreams derived from one root seed."""

from __future__ import annotations

import hashlib

import numpy as np


def stream_key(name: str) -> int:
    return int.from_bytes(hashlib.sha256(name.encode("utf-8")).digest()[:4], "little")


def substream(seed: int, name: str) -> np.random.Generator:
    """Independent generator for the named stream of ``seed``.

    The same ``(seed, name)`` always yields the same sequence, whatever else
    was drawn before.
    """
    return np.random.default_rng(np.random.SeedSequence([seed, stream_key(name)]))
