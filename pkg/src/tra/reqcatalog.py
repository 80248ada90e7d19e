"""Requirement catalogs keyed by foundational requirement and minimum SL.

The bundled catalog is illustrative: ids follow the IEC 62443-3-3 numbering
style but titles are paraphrases and the coverage tags are placeholders.
Licensees of the standard can load the real entries in the same format.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import ModelError, OutOfRangeError
from .slvector import FR, SLVector

SCHEMA_VERSION = 1


class Coverage(str, Enum):
    COVERED_BY_SAFETY_STANDARD = "CoveredBySafetyStandard"
    GOOD_PRACTICE_IN_RAILWAY = "GoodPracticeInRailway"
    NOT_ADDRESSED_BY_SAFETY = "NotAddressedBySafety"


COVERAGE_ORDER = tuple(Coverage)


@dataclass(frozen=True)
class RequirementEntry:
    id: str
    fr: FR
    min_sl: int
    title: str
    coverage: Coverage

    def __post_init__(self) -> None:
        object.__setattr__(self, "fr", FR(self.fr))
        object.__setattr__(self, "coverage", Coverage(self.coverage))
        if isinstance(self.min_sl, bool) or self.min_sl not in (1, 2, 3, 4):
            raise OutOfRangeError(f"requirement {self.id!r}: min_sl {self.min_sl!r} not in 1..4")

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.fr.position, self.id)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "fr": self.fr.value,
            "min_sl": self.min_sl,
            "title": self.title,
            "coverage": self.coverage.value,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> RequirementEntry:
        return cls(data["id"], data["fr"], data["min_sl"], data["title"], data["coverage"])


@dataclass(frozen=True)
class Catalog:
    name: str
    entries: tuple[RequirementEntry, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        seen: set[str] = set()
        for e in self.entries:
            if e.id in seen:
                raise ModelError(f"catalog {self.name!r}: duplicate requirement id {e.id!r}")
            seen.add(e.id)

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> Catalog:
        try:
            return cls(data["name"], tuple(RequirementEntry.from_dict(e) for e in data["entries"]))
        except KeyError as exc:
            raise ModelError(f"catalog misses field {exc.args[0]!r}") from None


def load_catalog(path: str | Path) -> Catalog:
    with open(path, encoding="utf-8") as fh:
        return Catalog.from_dict(json.load(fh))


def sample_catalog() -> Catalog:
    text = resources.files("tra.data").joinpath("sample_catalog.json").read_text(encoding="utf-8")
    return Catalog.from_dict(json.loads(text))


def tailor(catalog: Catalog, sl: SLVector) -> list[RequirementEntry]:
    """Entries whose FR level in ``sl`` reaches the entry's minimum SL, ordered by (FR, id)."""
    return sorted((e for e in catalog.entries if sl[e.fr] >= e.min_sl), key=lambda e: e.sort_key)


def coverage_summary(entries: Iterable[RequirementEntry]) -> dict[Coverage, int]:
    counts = {c: 0 for c in COVERAGE_ORDER}
    for e in entries:
        counts[e.coverage] += 1
    return counts


def safety_spec_export(catalog: Catalog) -> list[RequirementEntry]:
    """SL1 entries for the safety requirements specification, grouped by coverage."""
    sl1 = [e for e in catalog.entries if e.min_sl == 1]
    return sorted(sl1, key=lambda e: (COVERAGE_ORDER.index(e.coverage), *e.sort_key))


def export_document(catalog: Catalog) -> dict[str, Any]:
    """Requirement-management import document for ``safety_spec_export``."""
    entries = safety_spec_export(catalog)
    groups: dict[str, list[dict[str, Any]]] = {c.value: [] for c in COVERAGE_ORDER}
    for e in entries:
        groups[e.coverage.value].append(
            {"id": e.id, "fr": e.fr.value, "title": e.title, "include_in_safety_spec": True}
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "catalog": catalog.name,
        "count": len(entries),
        "groups": groups,
    }
