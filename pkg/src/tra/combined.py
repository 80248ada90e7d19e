"""Threat and risk analysis as a consistency check on an SL chosen upstream.

Each scenario is placed in the risk matrix and judged only by its band
color. The assumed SL vector is context: it does not enter the lookup.
"""

from __future__ import annotations

import json
import warnings
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any

from .errors import MissingSLError, ModelError, OutOfRangeError, UnknownLabelError
from .ordinal import Band, OrdinalValue, RiskMatrix
from .slvector import FR, RAILWAY_PINNED, SLVector, is_railway_class

DEFAULT_TOLERABLE = frozenset({Band.GREEN, Band.YELLOW})


class Verdict(str, Enum):
    TOLERABLE = "Tolerable"
    SL_MISJUDGED = "SLMisjudged"
    ADDITIONAL_NON_SAFETY_REQUIREMENT = "AdditionalNonSafetyRequirement"


class NonRailwaySLWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ThreatScenario:
    id: str
    description: str
    safety_related: bool
    likelihood: OrdinalValue
    impact: OrdinalValue
    target: str


@dataclass(frozen=True)
class TraFinding:
    scenario_id: str
    target: str
    criticality: str
    band: Band
    verdict: Verdict
    safety_related: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "scenario": self.scenario_id,
            "target": self.target,
            "criticality": self.criticality,
            "band": self.band.value,
            "safety_related": self.safety_related,
            "verdict": self.verdict.value,
        }


def verdict_for(
    band: Band, safety_related: bool, tolerable: frozenset[Band] = DEFAULT_TOLERABLE
) -> Verdict:
    if band in tolerable:
        return Verdict.TOLERABLE
    if safety_related:
        return Verdict.SL_MISJUDGED
    return Verdict.ADDITIONAL_NON_SAFETY_REQUIREMENT


def classify(
    scenario: ThreatScenario,
    matrix: RiskMatrix,
    assumed_sl: SLVector,
    tolerable: frozenset[Band] = DEFAULT_TOLERABLE,
    pinned: Mapping[FR, int] = RAILWAY_PINNED,
) -> TraFinding:
    if not is_railway_class(assumed_sl, pinned):
        warnings.warn(
            f"scenario {scenario.id!r}: assumed SL {assumed_sl} is not a railway class",
            NonRailwaySLWarning,
            stacklevel=2,
        )
    label = matrix.lookup(scenario.impact, scenario.likelihood)
    band = matrix.band_of(label)
    return TraFinding(
        scenario.id, scenario.target, label, band, verdict_for(band, scenario.safety_related, tolerable),
        scenario.safety_related,
    )


@dataclass(frozen=True)
class TraRun:
    findings: tuple[TraFinding, ...]

    @property
    def summary(self) -> dict[Verdict, int]:
        counts = Counter(f.verdict for f in self.findings)
        return {v: counts.get(v, 0) for v in Verdict}

    @property
    def revision_required(self) -> bool:
        return any(f.verdict is Verdict.SL_MISJUDGED for f in self.findings)

    @property
    def status(self) -> str:
        return "SL revision required" if self.revision_required else "pass"

    def to_dict(self) -> dict[str, Any]:
        return {
            "findings": [f.to_dict() for f in self.findings],
            "summary": {v.value: n for v, n in self.summary.items()},
            "status": self.status,
        }


def tra_run(
    scenarios: Sequence[ThreatScenario],
    matrix: RiskMatrix,
    per_zone_sl: Mapping[str, SLVector],
    tolerable: frozenset[Band] = DEFAULT_TOLERABLE,
    pinned: Mapping[FR, int] = RAILWAY_PINNED,
) -> TraRun:
    for s in scenarios:
        if s.target not in per_zone_sl:
            raise MissingSLError(f"zone or conduit {s.target!r} (scenario {s.id!r}) has no assigned SL")
    return TraRun(tuple(classify(s, matrix, per_zone_sl[s.target], tolerable, pinned) for s in scenarios))


def scenarios_from_dict(data: Mapping[str, Any], matrix: RiskMatrix) -> list[ThreatScenario]:
    """Parse a scenario document; levels may be labels or 1-based order numbers."""
    out = []
    try:
        for raw in data["scenarios"]:
            out.append(
                ThreatScenario(
                    id=raw["id"],
                    description=raw.get("description", ""),
                    safety_related=bool(raw["safety_related"]),
                    likelihood=matrix.likelihood_scale.resolve(raw["likelihood"]),
                    impact=matrix.impact_scale.resolve(raw["impact"]),
                    target=raw["target"],
                )
            )
    except UnknownLabelError:
        raise
    except KeyError as exc:
        raise ModelError(f"scenario file misses field {exc.args[0]!r}") from None
    except IndexError as exc:
        raise OutOfRangeError(str(exc)) from None
    ids = [s.id for s in out]
    if len(set(ids)) != len(ids):
        raise ModelError("scenario ids are not unique")
    return out


def scenarios_to_dict(scenarios: Iterable[ThreatScenario]) -> dict[str, Any]:
    return {
        "scenarios": [
            {
                "id": s.id,
                "description": s.description,
                "safety_related": s.safety_related,
                "likelihood": s.likelihood.label,
                "impact": s.impact.label,
                "target": s.target,
            }
            for s in scenarios
        ]
    }


def load_scenarios(path: str | Path, matrix: RiskMatrix) -> list[ThreatScenario]:
    with open(path, encoding="utf-8") as fh:
        return scenarios_from_dict(json.load(fh), matrix)
