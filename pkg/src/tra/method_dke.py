"""Attacker-capability SL assignment with railway modifiers (DKE 0831-104).

Steps: exposure gate, preliminary SL (PSL) from resources and know-how,
maximum over attacker types, then at most one level of reduction when any
railway modifier applies. The scalar result maps onto a railway SL class.
"""

from __future__ import annotations

import warnings
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any

from .errors import ModelError, OutOfRangeError
from .slvector import FR, RAILWAY_PINNED, SLVector, railway_class

SCORES = (2, 3, 4)


class Resources(IntEnum):
    LOW = 2
    MEDIUM = 3
    EXTENDED = 4


class Knowhow(IntEnum):
    COMMON = 2
    SYSTEM_SPECIFIC = 3
    EXTENDED = 4


class Motivation(IntEnum):
    LOW = 2
    LIMITED = 3
    HIGH = 4


# (knowhow, resources) -> PSL
PSL_TABLE: Mapping[tuple[int, int], int] = {
    (2, 2): 2, (2, 3): 3, (2, 4): 4,
    (3, 2): 3, (3, 3): 3, (3, 4): 4,
    (4, 2): 3, (4, 3): 4, (4, 4): 4,
}  # fmt: skip

MODIFIER_QUESTIONS = {
    "ort": "Does the attacker need access to the site, i.e. can the attack not be launched remotely?",
    "nac": "Is it possible to trace the attacker and collect sufficient evidence to identify them?",
    "pot": "Does the attack have no or only limited safety implication?",
}


class InconsistentProfileWarning(UserWarning):
    pass


def _score(what: str, value: Any) -> int:
    if isinstance(value, bool) or value not in SCORES:
        raise OutOfRangeError(f"{what} score must be one of {SCORES}, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class AttackerProfile:
    name: str
    resources: int
    knowhow: int
    motivation: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "resources", _score("RES", self.resources))
        object.__setattr__(self, "knowhow", _score("KNO", self.knowhow))
        object.__setattr__(self, "motivation", _score("MOT", self.motivation))

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "res": self.resources, "kno": self.knowhow, "mot": self.motivation}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> AttackerProfile:
        return cls(data["name"], data["res"], data["kno"], data["mot"])


@dataclass(frozen=True)
class RailwayModifiers:
    """Binary answers to ``MODIFIER_QUESTIONS``; 1 means YES."""

    ort: int = 0
    nac: int = 0
    pot: int = 0

    def __post_init__(self) -> None:
        for name in ("ort", "nac", "pot"):
            v = getattr(self, name)
            if v not in (0, 1):
                raise OutOfRangeError(f"modifier {name.upper()} must be 0 or 1, got {v!r}")
            object.__setattr__(self, name, int(v))

    @property
    def reduction(self) -> int:
        return max(self.ort, self.nac, self.pot)

    def to_dict(self) -> dict[str, int]:
        return {"ort": self.ort, "nac": self.nac, "pot": self.pot}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> RailwayModifiers:
        unknown = set(data) - {"ort", "nac", "pot"}
        if unknown:
            raise ModelError(f"unknown modifiers: {sorted(unknown)}")
        return cls(**{k: int(v) for k, v in data.items()})


@dataclass(frozen=True)
class DkeAssessmentInput:
    exposed: bool
    attackers: tuple[AttackerProfile, ...] = ()
    modifiers: RailwayModifiers = field(default_factory=RailwayModifiers)

    def __post_init__(self) -> None:
        object.__setattr__(self, "attackers", tuple(self.attackers))
        if self.exposed and not self.attackers:
            raise ModelError("an exposed zone or conduit needs at least one attacker profile")
        if not self.exposed and self.attackers:
            raise ModelError("attacker profiles given for a zone or conduit marked as not exposed")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> DkeAssessmentInput:
        """Parse a per-zone assessment block."""
        try:
            return cls(
                exposed=bool(data["exposed"]),
                attackers=tuple(AttackerProfile.from_dict(a) for a in data.get("attackers", [])),
                modifiers=RailwayModifiers.from_dict(data.get("modifiers", {})),
            )
        except KeyError as exc:
            raise ModelError(f"assessment block misses field {exc.args[0]!r}") from None

    def to_dict(self) -> dict[str, Any]:
        return {
            "exposed": self.exposed,
            "attackers": [a.to_dict() for a in self.attackers],
            "modifiers": self.modifiers.to_dict(),
        }


@dataclass(frozen=True)
class DkeAssessmentResult:
    psl_per_attacker: tuple[tuple[str, int], ...]
    psl: int | None
    reduction: int
    sl_scalar: int
    sl_vector: SLVector
    floored: bool = False
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": "dke",
            "psl_per_attacker": [{"name": n, "psl": p} for n, p in self.psl_per_attacker],
            "psl": self.psl,
            "reduction": self.reduction,
            "sl": self.sl_scalar,
            "sl_vector": str(self.sl_vector),
            "floored": self.floored,
            "warnings": list(self.warnings),
        }


def psl(resources: int, knowhow: int) -> int:
    """Preliminary SL for an attacker with the given RES and KNO scores."""
    return PSL_TABLE[_score("KNO", knowhow), _score("RES", resources)]


def sl_from_psl(preliminary: int, modifiers: RailwayModifiers) -> tuple[int, bool]:
    """Apply the railway reduction; returns ``(sl, floored)``."""
    raw = preliminary - modifiers.reduction
    return max(1, raw), raw < 1


def dke_assess(
    inp: DkeAssessmentInput,
    pinned: Mapping[FR, int] = RAILWAY_PINNED,
    strict: bool = False,
) -> DkeAssessmentResult:
    if not inp.exposed:
        return DkeAssessmentResult((), None, 0, 1, railway_class(1, pinned))

    notes: list[str] = []
    if strict:
        for a in inp.attackers:
            if a.motivation > max(a.resources, a.knowhow):
                msg = (
                    f"attacker {a.name!r}: motivation {a.motivation} exceeds resources "
                    f"{a.resources} and know-how {a.knowhow}"
                )
                warnings.warn(msg, InconsistentProfileWarning, stacklevel=2)
                notes.append(msg)

    per = tuple((a.name, psl(a.resources, a.knowhow)) for a in inp.attackers)
    top = max(p for _, p in per)
    sl, floored = sl_from_psl(top, inp.modifiers)
    return DkeAssessmentResult(
        psl_per_attacker=per,
        psl=top,
        reduction=inp.modifiers.reduction,
        sl_scalar=sl,
        sl_vector=railway_class(sl, pinned),
        floored=floored,
        warnings=tuple(notes),
    )


@dataclass(frozen=True)
class SweepRow:
    resources: int
    knowhow: int
    modifier_max: int
    psl: int
    sl: int


def dke_sweep(scores: Sequence[int] = SCORES) -> list[SweepRow]:
    rows = []
    for res in scores:
        for kno in scores:
            p = psl(res, kno)
            for mmax in (0, 1):
                sl, _ = sl_from_psl(p, RailwayModifiers(ort=mmax))
                rows.append(SweepRow(res, kno, mmax, p, sl))
    return rows

