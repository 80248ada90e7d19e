"""Ordinal scales and lookup-only risk matrices.

Ordinal values support ordering, predecessor/successor and order-number
extraction. They deliberately define no arithmetic: a risk matrix maps an
(impact, likelihood) pair to an opaque criticality label by table lookup,
and a band table maps that label to a traffic-light color.
"""

from __future__ import annotations

import functools
import json
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from .errors import MonotonicityError, ScaleMismatchError, UnknownLabelError

MIN_LEVELS = 2
MAX_LEVELS = 10


class Band(str, Enum):
    GREEN = "green"
    YELLOW = "yellow"
    ORANGE = "orange"
    RED = "red"

    @property
    def severity(self) -> int:
        return _BAND_ORDER.index(self)


_BAND_ORDER = (Band.GREEN, Band.YELLOW, Band.ORANGE, Band.RED)


@dataclass(frozen=True)
class OrdinalScale:
    name: str
    levels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        if not MIN_LEVELS <= len(self.levels) <= MAX_LEVELS:
            raise ValueError(
                f"scale {self.name!r} needs {MIN_LEVELS}-{MAX_LEVELS} levels, got {len(self.levels)}"
            )
        if len(set(self.levels)) != len(self.levels):
            raise ValueError(f"scale {self.name!r} has duplicate level labels")

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[OrdinalValue]:
        return (OrdinalValue(self, i) for i in range(len(self.levels)))

    def __getitem__(self, key: int | str) -> OrdinalValue:
        return self.value(key)

    def value(self, key: int | str) -> OrdinalValue:
        """Resolve a level label or a 0-based index to a value of this scale."""
        if isinstance(key, str):
            try:
                return OrdinalValue(self, self.levels.index(key))
            except ValueError:
                raise UnknownLabelError(f"{key!r} is not a level of scale {self.name!r}") from None
        return OrdinalValue(self, key)

    def from_order(self, order: int) -> OrdinalValue:
        """Resolve a 1-based order number (``Ord`` in Pascal terms)."""
        return OrdinalValue(self, order - 1)

    def resolve(self, token: int | str) -> OrdinalValue:
        """Accept a label, or a 1-based order number as int or digit string."""
        if isinstance(token, bool):
            raise TypeError("booleans are not ordinal levels")
        if isinstance(token, int):
            return self.from_order(token)
        if token in self.levels:
            return self.value(token)
        if token.strip().isdigit():
            return self.from_order(int(token))
        lowered = {lvl.lower(): i for i, lvl in enumerate(self.levels)}
        if token.strip().lower() in lowered:
            return OrdinalValue(self, lowered[token.strip().lower()])
        raise UnknownLabelError(f"{token!r} is not a level of scale {self.name!r}")


@functools.total_ordering
@dataclass(frozen=True)
class OrdinalValue:
    scale: OrdinalScale
    index: int

    def __post_init__(self) -> None:
        if isinstance(self.index, bool) or not isinstance(self.index, int):
            raise TypeError("ordinal index must be an int")
        if not 0 <= self.index < len(self.scale):
            raise IndexError(f"index {self.index} outside scale {self.scale.name!r}")

    @property
    def label(self) -> str:
        return self.scale.levels[self.index]

    @property
    def order(self) -> int:
        """1-based order number within the scale."""
        return self.index + 1

    def _check(self, other: object) -> OrdinalValue:
        if not isinstance(other, OrdinalValue):
            return NotImplemented
        if other.scale != self.scale:
            raise ScaleMismatchError(
                f"cannot compare {self.scale.name!r} with {other.scale.name!r}"
            )
        return other

    def __lt__(self, other: object) -> bool:
        checked = self._check(other)
        if checked is NotImplemented:
            return NotImplemented
        return self.index < checked.index

    def succ(self) -> OrdinalValue:
        return OrdinalValue(self.scale, self.index + 1)

    def pred(self) -> OrdinalValue:
        return OrdinalValue(self.scale, self.index - 1)

    def is_first(self) -> bool:
        return self.index == 0

    def is_last(self) -> bool:
        return self.index == len(self.scale) - 1

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, eq=True)
class RiskMatrix:
    """Criticality table indexed by ``cells[impact.index][likelihood.index]``."""

    name: str
    likelihood_scale: OrdinalScale
    impact_scale: OrdinalScale
    cells: tuple[tuple[str, ...], ...]
    bands: Mapping[str, Band] = field(hash=False)

    def __post_init__(self) -> None:
        cells = tuple(tuple(str(c) for c in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "bands", {str(k): Band(v) for k, v in self.bands.items()})
        if len(cells) != len(self.impact_scale):
            raise ValueError(
                f"matrix {self.name!r}: {len(cells)} rows for {len(self.impact_scale)} impact levels"
            )
        for row in cells:
            if len(row) != len(self.likelihood_scale):
                raise ValueError(
                    f"matrix {self.name!r}: row of {len(row)} cells for "
                    f"{len(self.likelihood_scale)} likelihood levels"
                )
        missing = sorted({c for row in cells for c in row} - set(self.bands))
        if missing:
            raise UnknownLabelError(f"matrix {self.name!r}: labels without band: {missing}")
        bad = monotonicity_violations(self)
        if bad:
            (i, l), (i2, l2) = bad[0]
            raise MonotonicityError(
                f"matrix {self.name!r}: band drops from cell ({i},{l}) to ({i2},{l2})"
            )

    def lookup(self, impact: OrdinalValue, likelihood: OrdinalValue) -> str:
        return lookup(self, impact, likelihood)

    def band_of(self, criticality: str) -> Band:
        return band_of(self, criticality)

    def band_at(self, impact: OrdinalValue, likelihood: OrdinalValue) -> Band:
        return band_of(self, lookup(self, impact, likelihood))

    def with_bands(self, bands: Mapping[str, Band | str]) -> RiskMatrix:
        return RiskMatrix(self.name, self.likelihood_scale, self.impact_scale, self.cells, bands)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "likelihood_levels": list(self.likelihood_scale.levels),
            "impact_levels": list(self.impact_scale.levels),
            "cells": [list(row) for row in self.cells],
            "bands": {k: v.value for k, v in self.bands.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> RiskMatrix:
        name = data.get("name", "custom")
        return cls(
            name=name,
            likelihood_scale=OrdinalScale(f"{name}:likelihood", tuple(data["likelihood_levels"])),
            impact_scale=OrdinalScale(f"{name}:impact", tuple(data["impact_levels"])),
            cells=tuple(tuple(row) for row in data["cells"]),
            bands=dict(data["bands"]),
        )


def monotonicity_violations(
    matrix: RiskMatrix,
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Adjacent cell pairs where moving up one impact or likelihood level lowers the band."""
    sev = [[matrix.bands[c].severity for c in row] for row in matrix.cells]
    out = []
    for i, row in enumerate(sev):
        for l, s in enumerate(row):
            if i + 1 < len(sev) and sev[i + 1][l] < s:
                out.append(((i, l), (i + 1, l)))
            if l + 1 < len(row) and row[l + 1] < s:
                out.append(((i, l), (i, l + 1)))
    return out


def lookup(matrix: RiskMatrix, impact: OrdinalValue, likelihood: OrdinalValue) -> str:
    if impact.scale != matrix.impact_scale:
        raise ScaleMismatchError(
            f"impact value from {impact.scale.name!r}, matrix expects {matrix.impact_scale.name!r}"
        )
    if likelihood.scale != matrix.likelihood_scale:
        raise ScaleMismatchError(
            f"likelihood value from {likelihood.scale.name!r}, "
            f"matrix expects {matrix.likelihood_scale.name!r}"
        )
    return matrix.cells[impact.index][likelihood.index]


def band_of(matrix: RiskMatrix, criticality: str) -> Band:
    try:
        return matrix.bands[criticality]
    except KeyError:
        raise UnknownLabelError(
            f"criticality {criticality!r} has no band in matrix {matrix.name!r}"
        ) from None


ISO27005_LIKELIHOOD = OrdinalScale(
    "iso27005:likelihood", ("Very Low", "Low", "Medium", "High", "Very High")
)
ISO27005_IMPACT = OrdinalScale(
    "iso27005:impact", ("Very Low", "Low", "Medium", "High", "Very High")
)
SAMPLE_LIKELIHOOD = OrdinalScale(
    "sample:likelihood", ("Remote", "Unlikely", "Possible", "Likely", "Certain")
)
SAMPLE_IMPACT = OrdinalScale(
    "sample:impact", ("Trivial", "Minor", "Moderate", "Major", "Critical")
)


def _bands(spec: Mapping[Band, Sequence[int]]) -> dict[str, Band]:
    return {str(v): band for band, values in spec.items() for v in values}


# Overridable through a config file; see tra.config.
ISO27005_DEFAULT_BANDS = _bands(
    {
        Band.GREEN: range(0, 3),
        Band.YELLOW: range(3, 5),
        Band.ORANGE: range(5, 7),
        Band.RED: range(7, 9),
    }
)
SAMPLE_DEFAULT_BANDS = _bands(
    {
        Band.GREEN: range(1, 5),
        Band.YELLOW: range(5, 9),
        Band.ORANGE: range(9, 13),
        Band.RED: range(15, 26),
    }
)


def iso27005_matrix(bands: Mapping[str, Band | str] | None = None) -> RiskMatrix:
    """The additive 5x5 matrix: criticality is impact index plus likelihood index."""
    cells = tuple(tuple(str(i + l) for l in range(5)) for i in range(5))
    return RiskMatrix(
        "iso27005", ISO27005_LIKELIHOOD, ISO27005_IMPACT, cells, bands or ISO27005_DEFAULT_BANDS
    )


def sample_matrix(bands: Mapping[str, Band | str] | None = None) -> RiskMatrix:
    """The multiplicative 5x5 matrix with criticalities 1..25."""
    cells = tuple(tuple(str((i + 1) * (l + 1)) for l in range(5)) for i in range(5))
    return RiskMatrix(
        "sample", SAMPLE_LIKELIHOOD, SAMPLE_IMPACT, cells, bands or SAMPLE_DEFAULT_BANDS
    )


def builtin_matrices() -> list[RiskMatrix]:
    return [iso27005_matrix(), sample_matrix()]


BUILTIN_NAMES = ("iso27005", "sample")


def builtin_matrix(name: str, bands: Mapping[str, Band | str] | None = None) -> RiskMatrix:
    if name == "iso27005":
        return iso27005_matrix(bands)
    if name == "sample":
        return sample_matrix(bands)
    raise UnknownLabelError(f"no built-in matrix named {name!r}; choose from {BUILTIN_NAMES}")


def load_matrix(path: str | Path) -> RiskMatrix:
    with open(path, encoding="utf-8") as fh:
        return RiskMatrix.from_dict(json.load(fh))
