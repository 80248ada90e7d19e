"""System models: objects partitioned into zones and conduits.

Security levels are attached to zones and conduits only, never to single
objects, so every object inside a zone shares that zone's requirements.
"""

from __future__ import annotations

import json
from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from .errors import ModelError, UnknownObjectError
from .slvector import SLKind, SLVector

ENVIRONMENT = "ENVIRONMENT"


class ObjectKind(str, Enum):
    HARDWARE = "hardware"
    SOFTWARE = "software"


class Rule(str, Enum):
    R1 = "R1"  # every object allocated to exactly one zone or conduit
    R2 = "R2"  # every member references a declared object
    R3 = "R3"  # at least one conduit reaches the environment
    R4 = "R4"  # conduit endpoints are declared zones or ENVIRONMENT


@dataclass(frozen=True)
class SystemObject:
    id: str
    kind: ObjectKind
    description: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ObjectKind(self.kind))


def _sl_map(raw: Mapping[Any, Any] | None) -> dict[SLKind, SLVector]:
    return {SLKind(k): SLVector.coerce(v) for k, v in (raw or {}).items()}


@dataclass(frozen=True)
class Zone:
    id: str
    members: frozenset[str]
    assigned_sl: Mapping[SLKind, SLVector] = field(default_factory=dict, hash=False)
    assessment: Mapping[str, Any] | None = field(default=None, hash=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        object.__setattr__(self, "assigned_sl", _sl_map(self.assigned_sl))
        if not self.members:
            raise ModelError(f"zone {self.id!r} has no members")


@dataclass(frozen=True)
class Conduit:
    id: str
    members: frozenset[str]
    endpoints: tuple[str, str]
    assigned_sl: Mapping[SLKind, SLVector] = field(default_factory=dict, hash=False)
    assessment: Mapping[str, Any] | None = field(default=None, hash=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        object.__setattr__(self, "endpoints", tuple(self.endpoints))
        object.__setattr__(self, "assigned_sl", _sl_map(self.assigned_sl))
        if len(self.endpoints) != 2:
            raise ModelError(
                f"conduit {self.id!r} must have exactly two endpoints, got {len(self.endpoints)}"
            )
        if self.endpoints[0] == self.endpoints[1]:
            raise ModelError(f"conduit {self.id!r} connects {self.endpoints[0]!r} to itself")

    @property
    def endpoint_a(self) -> str:
        return self.endpoints[0]

    @property
    def endpoint_b(self) -> str:
        return self.endpoints[1]

    def reaches_environment(self) -> bool:
        return ENVIRONMENT in self.endpoints


@dataclass(frozen=True)
class SystemModel:
    objects: tuple[SystemObject, ...]
    zones: tuple[Zone, ...]
    conduits: tuple[Conduit, ...] = ()
    name: str = "model"

    def __post_init__(self) -> None:
        for attr in ("objects", "zones", "conduits"):
            object.__setattr__(self, attr, tuple(getattr(self, attr)))
        _no_duplicates("object", [o.id for o in self.objects])
        _no_duplicates("zone/conduit", [c.id for c in self.containers])
        if ENVIRONMENT in {z.id for z in self.zones}:
            raise ModelError(f"{ENVIRONMENT} is reserved and cannot name a zone")

    @property
    def containers(self) -> tuple[Zone | Conduit, ...]:
        return self.zones + self.conduits

    @property
    def object_ids(self) -> set[str]:
        return {o.id for o in self.objects}

    def container(self, container_id: str) -> Zone | Conduit:
        for c in self.containers:
            if c.id == container_id:
                return c
        raise UnknownObjectError(f"no zone or conduit named {container_id!r}")

    def to_dict(self) -> dict[str, Any]:
        def sl(c: Zone | Conduit) -> dict[str, Any]:
            return {k.value: v.to_dict() for k, v in c.assigned_sl.items()}

        def extra(c: Zone | Conduit) -> dict[str, Any]:
            out: dict[str, Any] = {}
            if c.assigned_sl:
                out["assigned_sl"] = sl(c)
            if c.assessment is not None:
                out["assessment"] = dict(c.assessment)
            return out

        return {
            "name": self.name,
            "objects": [
                {"id": o.id, "kind": o.kind.value, "description": o.description}
                for o in self.objects
            ],
            "zones": [{"id": z.id, "members": sorted(z.members), **extra(z)} for z in self.zones],
            "conduits": [
                {"id": c.id, "members": sorted(c.members), "endpoints": list(c.endpoints), **extra(c)}
                for c in self.conduits
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> SystemModel:
        try:
            return cls(
                objects=tuple(
                    SystemObject(o["id"], o["kind"], o.get("description", ""))
                    for o in data["objects"]
                ),
                zones=tuple(
                    Zone(z["id"], z["members"], z.get("assigned_sl"), z.get("assessment"))
                    for z in data["zones"]
                ),
                conduits=tuple(
                    Conduit(
                        c["id"], c["members"], c["endpoints"], c.get("assigned_sl"), c.get("assessment")
                    )
                    for c in data.get("conduits", [])
                ),
                name=data.get("name", "model"),
            )
        except KeyError as exc:
            raise ModelError(f"model file misses field {exc.args[0]!r}") from None


def _no_duplicates(what: str, ids: list[str]) -> None:
    seen: set[str] = set()
    for i in ids:
        if i in seen:
            raise ModelError(f"duplicate {what} id {i!r}")
        seen.add(i)


def load_model(path: str | Path) -> SystemModel:
    with open(path, encoding="utf-8") as fh:
        return SystemModel.from_dict(json.load(fh))


@dataclass(frozen=True)
class Violation:
    rule: Rule
    id: str
    message: str

    def __str__(self) -> str:
        return f"{self.rule.value} {self.id}: {self.message}"


def validate(model: SystemModel) -> list[Violation]:
    """Check the decomposition rules R1..R4 in that order; an empty list means valid."""
    holders: dict[str, list[str]] = defaultdict(list)
    for c in model.containers:
        for m in sorted(c.members):
            holders[m].append(c.id)

    out: list[Violation] = []
    for obj in model.objects:
        where = holders.get(obj.id, [])
        if not where:
            out.append(Violation(Rule.R1, obj.id, "object is not allocated to any zone or conduit"))
        elif len(where) > 1:
            out.append(
                Violation(Rule.R1, obj.id, "object is allocated to several containers: " + ", ".join(where))
            )

    declared = model.object_ids
    for c in model.containers:
        for m in sorted(c.members - declared):
            out.append(Violation(Rule.R2, m, f"member of {c.id} is not a declared object"))

    if not any(c.reaches_environment() for c in model.conduits):
        out.append(Violation(Rule.R3, ENVIRONMENT, "no conduit connects the system to the environment"))

    zone_ids = {z.id for z in model.zones}
    for c in model.conduits:
        for ep in c.endpoints:
            if ep != ENVIRONMENT and ep not in zone_ids:
                out.append(Violation(Rule.R4, c.id, f"endpoint {ep!r} is neither a zone nor {ENVIRONMENT}"))
    return out


def zone_of(model: SystemModel, object_id: str) -> str:
    """Id of the zone or conduit holding ``object_id``."""
    if object_id not in model.object_ids:
        raise UnknownObjectError(f"unknown object {object_id!r}")
    where = [c.id for c in model.containers if object_id in c.members]
    if len(where) != 1:
        raise ModelError(f"object {object_id!r} is held by {len(where)} containers; validate the model first")
    return where[0]
