"""Foundational requirements and security-level vectors over them."""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum

from .errors import OutOfRangeError

MIN_SL = 0
MAX_SL = 4


class FR(str, Enum):
    """The seven foundational requirement groups, in vector order."""

    IAC = "IAC"
    UC = "UC"
    SI = "SI"
    DC = "DC"
    RDF = "RDF"
    TRE = "TRE"
    RA = "RA"

    @property
    def long_name(self) -> str:
        return FR_TITLES[self]

    @property
    def position(self) -> int:
        return FR_ORDER.index(self)


FoundationalRequirement = FR
FR_ORDER: tuple[FR, ...] = tuple(FR)
FR_TITLES = {
    FR.IAC: "Identification and authentication control",
    FR.UC: "Use control",
    FR.SI: "System integrity",
    FR.DC: "Data confidentiality",
    FR.RDF: "Restricted data flow",
    FR.TRE: "Timely response to events",
    FR.RA: "Resource availability",
}


class SLKind(str, Enum):
    TARGET = "target"
    DESIGN = "design"
    ACHIEVED = "achieved"


_VECTOR_RE = re.compile(r"^\(?\s*(\d)\s*(?:,\s*(\d)\s*){6}\)?$")


@dataclass(frozen=True)
class SLVector:
    components: tuple[int, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if len(comps) != len(FR_ORDER):
            raise ValueError(f"an SL vector has {len(FR_ORDER)} components, got {len(comps)}")
        for fr, c in zip(FR_ORDER, comps):
            if isinstance(c, bool) or not isinstance(c, int) or not MIN_SL <= c <= MAX_SL:
                raise OutOfRangeError(f"{fr.value} component {c!r} not in {MIN_SL}..{MAX_SL}")
        object.__setattr__(self, "components", comps)

    def __getitem__(self, key: FR | int) -> int:
        if isinstance(key, FR):
            return self.components[key.position]
        return self.components[key]

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def items(self) -> Iterator[tuple[FR, int]]:
        return zip(FR_ORDER, self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"

    def replace(self, **levels: int) -> SLVector:
        comps = list(self.components)
        for name, level in levels.items():
            comps[FR[name].position] = level
        return SLVector(tuple(comps))

    @classmethod
    def uniform(cls, level: int) -> SLVector:
        return cls((level,) * len(FR_ORDER))

    @classmethod
    def parse(cls, text: str) -> SLVector:
        """Parse the printed form ``(a,b,c,d,e,f,g)``; parentheses are optional."""
        if not _VECTOR_RE.match(text.strip()):
            raise ValueError(f"not an SL vector: {text!r}")
        return cls(tuple(int(d) for d in re.findall(r"\d", text)))

    def to_dict(self) -> dict[str, int]:
        return {fr.value: c for fr, c in self.items()}

    @classmethod
    def from_dict(cls, data: Mapping[str, int]) -> SLVector:
        unknown = set(data) - {fr.value for fr in FR_ORDER}
        if unknown:
            raise ValueError(f"unknown foundational requirements: {sorted(unknown)}")
        missing = [fr.value for fr in FR_ORDER if fr.value not in data]
        if missing:
            raise ValueError(f"SL vector misses {missing}")
        return cls(tuple(data[fr.value] for fr in FR_ORDER))

    @classmethod
    def coerce(cls, value: SLVector | str | Mapping[str, int] | Iterable[int]) -> SLVector:
        if isinstance(value, SLVector):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, Mapping):
            return cls.from_dict(value)
        return cls(tuple(value))


# Railway default: DC and RA are pinned to SL1.
RAILWAY_PINNED: Mapping[FR, int] = {FR.DC: 1, FR.RA: 1}


def railway_class(scalar_sl: int, pinned: Mapping[FR, int] = RAILWAY_PINNED) -> SLVector:
    """Broadcast a scalar SL 1..4 to the five unpinned FRs."""
    if isinstance(scalar_sl, bool) or scalar_sl not in (1, 2, 3, 4):
        raise OutOfRangeError(f"railway SL class must be 1..4, got {scalar_sl!r}")
    return SLVector(tuple(pinned.get(fr, scalar_sl) for fr in FR_ORDER))


def railway_classes(pinned: Mapping[FR, int] = RAILWAY_PINNED) -> list[SLVector]:
    return [railway_class(n, pinned) for n in (1, 2, 3, 4)]


def is_railway_class(vector: SLVector, pinned: Mapping[FR, int] = RAILWAY_PINNED) -> bool:
    return vector in railway_classes(pinned)


def dominates(a: SLVector, b: SLVector) -> bool:
    """Componentwise ``a >= b``."""
    return all(x >= y for x, y in zip(a, b))


def assignment_space_size() -> int:
    return (MAX_SL - MIN_SL + 1) ** len(FR_ORDER)


def all_vectors() -> Iterator[SLVector]:
    for comps in itertools.product(range(MIN_SL, MAX_SL + 1), repeat=len(FR_ORDER)):
        yield SLVector(comps)


def gap(target: SLVector, achieved: SLVector) -> list[tuple[FR, int]]:
    """Per-FR deficits where the achieved level falls short of the target."""
    return [(fr, t - a) for fr, t, a in zip(FR_ORDER, target, achieved) if a < t]
