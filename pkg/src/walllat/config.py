"""Resource caps and run configuration.

All enumeration entry points take an optional :class:`Caps`; the default is
read once per call from the environment so CLI users can override limits with
``WALLLAT_ORDER_CAP``, ``WALLLAT_INTERVAL_CAP``, ``WALLLAT_RADO_CAP`` and
``WALLLAT_PAIR_CAP``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    order_cap: int = 2048  # largest group order that may be constructed
    interval_cap: int = 1024  # largest order for full interval enumeration
    rado_cap: int = 20  # largest family size for the subset-rank sweep
    pair_cap: int = 4096  # largest (N1, H1) pair count in coideal enumeration
    fusion_cap: int = 24  # largest simple-object count for subset enumeration
    assoc_cap: int = 512  # orders up to this get the exhaustive associativity check
    assoc_samples: int = 2000  # random triples checked above assoc_cap
    seed: int = 0  # seed for the sampled associativity check

    def __post_init__(self) -> None:
        for field in ("order_cap", "interval_cap", "rado_cap", "pair_cap", "fusion_cap"):
            if getattr(self, field) <= 0:
                raise ValueError(f"{field} must be positive")


_ENV_FIELDS = {
    "WALLLAT_ORDER_CAP": "order_cap",
    "WALLLAT_INTERVAL_CAP": "interval_cap",
    "WALLLAT_RADO_CAP": "rado_cap",
    "WALLLAT_PAIR_CAP": "pair_cap",
    "WALLLAT_FUSION_CAP": "fusion_cap",
}


def default_caps() -> Caps:
    """Default caps with environment overrides applied."""
    caps = Caps()
    overrides = {}
    for var, field in _ENV_FIELDS.items():
        raw = os.environ.get(var)
        if raw:
            overrides[field] = int(raw)
    return replace(caps, **overrides) if overrides else caps
