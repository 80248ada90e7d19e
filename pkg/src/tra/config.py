"""Operator policy: band tables, tolerable bands, divisor and FR pinning.

A config file is a JSON object; every key is optional::

    {
      "tolerable_risk": 4,
      "tolerable_bands": ["green", "yellow"],
      "pinned_frs": {"DC": 1, "RA": 1},
      "strict_motivation": false,
      "bands": {"sample": {"1": "green", ...}, "iso27005": {...}},
      "compare": {"likelihood_to_res": [2, 2, 3, 3, 4],
                  "impact_to_kno": [2, 2, 3, 3, 4],
                  "pot_max_impact": 2}
    }
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .method_dke import SCORES
from .method_iec import TOLERABLE_RISK
from .ordinal import Band
from .slvector import FR, RAILWAY_PINNED

_KEYS = {"tolerable_risk", "tolerable_bands", "pinned_frs", "strict_motivation", "bands", "compare"}


@dataclass(frozen=True)
class CompareMapping:
    """How a 5x5 matrix cell is read as an attacker for the side-by-side table.

    Likelihood order n selects resources ``likelihood_to_res[n-1]``, impact
    order n selects know-how ``impact_to_kno[n-1]``; POT is set when the
    impact order is at most ``pot_max_impact``.
    """

    likelihood_to_res: tuple[int, ...] = (2, 2, 3, 3, 4)
    impact_to_kno: tuple[int, ...] = (2, 2, 3, 3, 4)
    pot_max_impact: int = 2

    def __post_init__(self) -> None:
        for name in ("likelihood_to_res", "impact_to_kno"):
            seq = tuple(getattr(self, name))
            if len(seq) != 5 or any(s not in SCORES for s in seq):
                raise ValueError(f"{name} needs five scores from {SCORES}")
            object.__setattr__(self, name, seq)


@dataclass(frozen=True)
class Config:
    tolerable_risk: int = TOLERABLE_RISK
    tolerable_bands: frozenset[Band] = frozenset({Band.GREEN, Band.YELLOW})
    pinned_frs: Mapping[FR, int] = field(default_factory=lambda: dict(RAILWAY_PINNED))
    strict_motivation: bool = False
    bands: Mapping[str, Mapping[str, Band]] = field(default_factory=dict)
    compare: CompareMapping = field(default_factory=CompareMapping)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> Config:
        unknown = set(data) - _KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kw: dict[str, Any] = {}
        if "tolerable_risk" in data:
            kw["tolerable_risk"] = int(data["tolerable_risk"])
        if "tolerable_bands" in data:
            kw["tolerable_bands"] = frozenset(Band(b) for b in data["tolerable_bands"])
        if "pinned_frs" in data:
            kw["pinned_frs"] = {FR(k): int(v) for k, v in data["pinned_frs"].items()}
        if "strict_motivation" in data:
            kw["strict_motivation"] = bool(data["strict_motivation"])
        if "bands" in data:
            kw["bands"] = {
                name: {str(k): Band(v) for k, v in table.items()} for name, table in data["bands"].items()
            }
        if "compare" in data:
            kw["compare"] = CompareMapping(**data["compare"])
        return cls(**kw)


def load_config(path: str | Path | None) -> Config:
    if path is None:
        return Config()
    with open(path, encoding="utf-8") as fh:
        return Config.from_dict(json.load(fh))
