"""Enumeration caps and working orders.

Cost model: enumerating all partitions of {1..n} visits Bell(n) objects
(Bell(12) = 4 213 597, Bell(13) = 27 644 437), non-crossing enumeration
visits Catalan(n) objects (Catalan(14) = 2 674 440) and pair partitions
of {1..n} number (n-1)!! (13!! = 135 135).  Each visited object
costs O(n) Python work, so the defaults keep every single enumeration
under roughly a minute on a laptop.

The caps can be overridden through the environment variables
``FREEMEIXNER_PARTITION_CAP``, ``FREEMEIXNER_NC_CAP``,
``FREEMEIXNER_PAIRING_CAP`` and ``FREEMEIXNER_ORDER``, or at run time by mutating :data:`CAPS`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


@dataclass
class Caps:
    partitions: int = 12
    noncrossing: int = 14
    pairings: int = 14
    order: int = 14

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            partitions=_env_int("FREEMEIXNER_PARTITION_CAP", 12),
            noncrossing=_env_int("FREEMEIXNER_NC_CAP", 14),
            pairings=_env_int("FREEMEIXNER_PAIRING_CAP", 14),
            order=_env_int("FREEMEIXNER_ORDER", 14),
        )


CAPS = Caps.from_env()
