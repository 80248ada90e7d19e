"""Assessment pipeline, comparison mode and deterministic report rendering."""

from __future__ import annotations

import hashlib
import itertools
import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .combined import TraRun, load_scenarios, tra_run
from .config import Config
from .errors import TraError
from .method_dke import DkeAssessmentInput, RailwayModifiers, dke_assess, psl, sl_from_psl
from .method_iec import ORDINAL_PRODUCT_NOTE, IecAssessmentInput, iec_risk, sl_target_from_risk
from .ordinal import BUILTIN_NAMES, Band, RiskMatrix, builtin_matrix, load_matrix, sample_matrix
from .reqcatalog import Catalog, load_catalog, tailor
from .slvector import SLKind, SLVector
from .sysmodel import Conduit, SystemModel, Violation, Zone, load_model, validate

SCHEMA_VERSION = 1


class ValidationFailed(TraError):
    def __init__(self, violations: Sequence[Violation]):
        super().__init__(f"model has {len(violations)} rule violation(s)")
        self.violations = list(violations)


class MissingInputError(TraError):
    pass


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def resolve_matrix(spec: str, config: Config) -> RiskMatrix:
    """A built-in matrix name or a path to a matrix JSON file."""
    if spec in BUILTIN_NAMES:
        return builtin_matrix(spec, config.bands.get(spec))
    return load_matrix(spec)


@dataclass(frozen=True)
class TargetResult:
    id: str
    kind: str  # "zone" | "conduit"
    method: str  # "dke" | "assigned" | "none"
    sl_vector: SLVector | None
    detail: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "type": self.kind,
            "method": self.method,
            "sl_vector": None if self.sl_vector is None else str(self.sl_vector),
            "sl_vector_by_fr": None if self.sl_vector is None else self.sl_vector.to_dict(),
            **self.detail,
        }


@dataclass(frozen=True)
class AssessmentReport:
    model_name: str
    method: str
    results: tuple[TargetResult, ...]
    inputs: tuple[tuple[str, str, str], ...]  # (role, file name, sha256)
    tra: TraRun | None = None
    matrix_name: str | None = None
    tailoring: Mapping[str, Sequence[str]] | None = None
    catalog_name: str | None = None
    tool_version: str = __version__

    @property
    def sl_by_target(self) -> dict[str, SLVector]:
        return {r.id: r.sl_vector for r in self.results if r.sl_vector is not None}

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "tool": "tra",
            "tool_version": self.tool_version,
            "model": self.model_name,
            "method": self.method,
            "inputs": [{"role": r, "file": f, "sha256": d} for r, f, d in self.inputs],
            "results": [r.to_dict() for r in self.results],
            "tra": None,
            "tailoring": None,
        }
        if self.tra is not None:
            out["tra"] = {"matrix": self.matrix_name, **self.tra.to_dict()}
        if self.tailoring is not None:
            out["tailoring"] = {
                "catalog": self.catalog_name,
                "per_target": {
                    k: {"count": len(v), "requirements": list(v)} for k, v in self.tailoring.items()
                },
            }
        return out

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_text(self) -> str:
        lines = [f"Assessment of model '{self.model_name}' (method: {self.method})", ""]
        for r in self.results:
            head = f"{r.kind} {r.id}: "
            if r.method == "dke":
                d = r.detail
                if not d["exposed"]:
                    lines.append(head + f"not exposed -> SL 1, vector {r.sl_vector}")
                    continue
                lines.append(head + f"exposed, modifiers {_mods(d['modifiers'])}")
                for a in d["psl_per_attacker"]:
                    lines.append(f"    attacker {a['name']}: PSL {a['psl']}")
                floored = " (floored)" if d["floored"] else ""
                lines.append(
                    f"    PSL {d['psl']} - {d['reduction']} -> SL {d['sl']}{floored}, vector {r.sl_vector}"
                )
                for w in d["warnings"]:
                    lines.append(f"    warning: {w}")
            elif r.method == "assigned":
                lines.append(head + f"assigned target SL {r.sl_vector}")
            else:
                lines.append(head + "no SL assessment")
        if self.tra is not None:
            lines += ["", f"Threat and risk analysis (matrix: {self.matrix_name})"]
            for f in self.tra.findings:
                tag = "safety" if f.safety_related else "non-safety"
                lines.append(
                    f"    {f.scenario_id} -> {f.target}: criticality {f.criticality}, "
                    f"{f.band.value}, {tag}: {f.verdict.value}"
                )
            counts = ", ".join(f"{v.value}={n}" for v, n in self.tra.summary.items())
            lines.append(f"    summary: {counts}")
            lines.append(f"    status: {self.tra.status}")
        if self.tailoring is not None:
            lines += ["", f"Requirement tailoring (catalog: {self.catalog_name})"]
            for k, ids in self.tailoring.items():
                lines.append(f"    {k}: {len(ids)} requirements")
        return "\n".join(lines) + "\n"


def _mods(m: Mapping[str, int]) -> str:
    return ", ".join(f"{k.upper()}={v}" for k, v in m.items())


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def assess_target(container: Zone | Conduit, config: Config) -> TargetResult:
    kind = "zone" if isinstance(container, Zone) else "conduit"
    if container.assessment is not None:
        inp = DkeAssessmentInput.from_dict(container.assessment)
        res = dke_assess(inp, pinned=config.pinned_frs, strict=config.strict_motivation)
        return TargetResult(container.id, kind, "dke", res.sl_vector, {**inp.to_dict(), **res.to_dict()})
    target = container.assigned_sl.get(SLKind.TARGET)
    if target is not None:
        return TargetResult(container.id, kind, "assigned", target)
    return TargetResult(container.id, kind, "none", None)


def assess_model(model: SystemModel, config: Config) -> list[TargetResult]:
    violations = validate(model)
    if violations:
        raise ValidationFailed(violations)
    return [assess_target(c, config) for c in model.containers]


def run_assess(
    model_path: str | Path,
    method: str = "dke",
    *,
    zone: str | None = None,
    scenarios_path: str | Path | None = None,
    matrix: str = "sample",
    catalog_path: str | Path | None = None,
    config: Config | None = None,
    version: str = __version__,
) -> AssessmentReport:
    """Validate, assign SLs per zone and conduit, optionally run the TRA check and tailoring."""
    config = config or Config()
    if method not in ("dke", "combined"):
        raise MissingInputError(f"method {method!r} needs no model; use 'dke' or 'combined'")
    if method == "combined" and scenarios_path is None:
        raise MissingInputError("the combined method needs --scenarios")

    model = load_model(model_path)
    inputs = [("model", Path(model_path).name, file_digest(model_path))]
    results = assess_model(model, config)
    if zone is not None and zone not in {r.id for r in results}:
        raise MissingInputError(f"model has no zone or conduit {zone!r}")

    tra = None
    matrix_name = None
    if method == "combined":
        risk_matrix = resolve_matrix(matrix, config)
        matrix_name = risk_matrix.name
        if matrix not in BUILTIN_NAMES:
            inputs.append(("matrix", Path(matrix).name, file_digest(matrix)))
        scenarios = load_scenarios(scenarios_path, risk_matrix)
        inputs.append(("scenarios", Path(scenarios_path).name, file_digest(scenarios_path)))
        sl_map = {r.id: r.sl_vector for r in results if r.sl_vector is not None}
        tra = tra_run(scenarios, risk_matrix, sl_map, config.tolerable_bands, config.pinned_frs)

    shown = tuple(r for r in results if zone is None or r.id == zone)
    tailoring = None
    catalog_name = None
    if catalog_path is not None:
        catalog: Catalog = load_catalog(catalog_path)
        catalog_name = catalog.name
        inputs.append(("catalog", Path(catalog_path).name, file_digest(catalog_path)))
        tailoring = {
            r.id: [e.id for e in tailor(catalog, r.sl_vector)] for r in shown if r.sl_vector is not None
        }

    return AssessmentReport(
        model_name=model.name,
        method=method,
        results=shown,
        inputs=tuple(inputs),
        tra=tra,
        matrix_name=matrix_name,
        tailoring=tailoring,
        catalog_name=catalog_name,
        tool_version=version,
    )


@dataclass(frozen=True)
class CompareRow:
    likelihood: int
    impact: int
    likelihood_label: str
    impact_label: str
    risk_r: int
    band: Band
    iec_sl_target: int
    dke_psl: int
    dke_sl: int

    @property
    def diverges(self) -> bool:
        return self.iec_sl_target != self.dke_sl

    def to_dict(self) -> dict[str, Any]:
        return {
            "likelihood": self.likelihood,
            "impact": self.impact,
            "likelihood_label": self.likelihood_label,
            "impact_label": self.impact_label,
            "risk_r": self.risk_r,
            "band": self.band.value,
            "iec_sl_target": self.iec_sl_target,
            "dke_psl": self.dke_psl,
            "dke_sl": self.dke_sl,
            "diverges": self.diverges,
        }


@dataclass(frozen=True)
class Witness:
    """Two risk values in the same band that receive different SL-T."""

    band: Band
    risk_a: int
    sl_target_a: int
    risk_b: int
    sl_target_b: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "band": self.band.value,
            "risk_a": self.risk_a,
            "sl_target_a": self.sl_target_a,
            "risk_b": self.risk_b,
            "sl_target_b": self.sl_target_b,
        }


DKE_MAPPING_NOTE = "DKE column reads likelihood as RES and impact as KNO (modelling assumption)"


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple[CompareRow, ...]
    witnesses: tuple[Witness, ...]
    witness_cell_pairs: int
    tolerable_risk: int

    @property
    def zero_sl_cells(self) -> list[CompareRow]:
        return [r for r in self.rows if r.iec_sl_target == 0]

    @property
    def divergences(self) -> list[CompareRow]:
        return [r for r in self.rows if r.diverges]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "tolerable_risk": self.tolerable_risk,
            "note": ORDINAL_PRODUCT_NOTE,
            "dke_mapping_note": DKE_MAPPING_NOTE,
            "rows": [r.to_dict() for r in self.rows],
            "divergences": [[r.likelihood, r.impact] for r in self.divergences],
            "pathology_witnesses": [w.to_dict() for w in self.witnesses],
            "witness_cell_pairs": self.witness_cell_pairs,
            "zero_sl_target_cells": [[r.likelihood, r.impact] for r in self.zero_sl_cells],
            "zero_sl_target_count": len(self.zero_sl_cells),
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_text(self) -> str:
        lines = [
            f"{'I':>2} {'L':>2} {'impact':<9} {'likelihood':<10} {'R':>3} {'band':<7} "
            f"{'SL-T':>4} {'PSL':>3} {'DKE':>3}"
        ]
        for r in self.rows:
            mark = "  *" if r.diverges else ""
            lines.append(
                f"{r.impact:>2} {r.likelihood:>2} {r.impact_label:<9} {r.likelihood_label:<10} "
                f"{r.risk_r:>3} {r.band.value:<7} {r.iec_sl_target:>4} {r.dke_psl:>3} {r.dke_sl:>3}{mark}"
            )
        lines.append("")
        lines.append(f"R is an {ORDINAL_PRODUCT_NOTE}; * marks cells where the two methods differ")
        lines.append(DKE_MAPPING_NOTE)
        lines.append(f"cells with SL-T = 0: {len(self.zero_sl_cells)}")
        lines.append(f"same-band cell pairs with different SL-T: {self.witness_cell_pairs}")
        for w in self.witnesses:
            lines.append(
                f"    {w.band.value}: R={w.risk_a} -> SL-T {w.sl_target_a}, "
                f"R={w.risk_b} -> SL-T {w.sl_target_b}"
            )
        return "\n".join(lines) + "\n"


def run_compare(config: Config | None = None, bands: Mapping[str, Band | str] | None = None) -> ComparisonReport:
    """Evaluate both methods over the 25 cells of the multiplicative sample matrix."""
    config = config or Config()
    matrix = sample_matrix(bands or config.bands.get("sample"))
    mapping = config.compare
    rows = []
    for impact in matrix.impact_scale:
        for likelihood in matrix.likelihood_scale:
            r = iec_risk(IecAssessmentInput(likelihood, impact))
            p = psl(mapping.likelihood_to_res[likelihood.index], mapping.impact_to_kno[impact.index])
            mods = RailwayModifiers(pot=int(impact.order <= mapping.pot_max_impact))
            rows.append(
                CompareRow(
                    likelihood=likelihood.order,
                    impact=impact.order,
                    likelihood_label=likelihood.label,
                    impact_label=impact.label,
                    risk_r=r,
                    band=matrix.band_at(impact, likelihood),
                    iec_sl_target=sl_target_from_risk(r, config.tolerable_risk),
                    dke_psl=p,
                    dke_sl=sl_from_psl(p, mods)[0],
                )
            )
    rows.sort(key=lambda row: (row.impact, row.likelihood))

    cell_pairs = sum(
        1
        for a, b in itertools.combinations(rows, 2)
        if a.band == b.band and a.iec_sl_target != b.iec_sl_target
    )
    by_risk = sorted({(row.band, row.risk_r, row.iec_sl_target) for row in rows}, key=lambda t: (t[0].severity, t[1]))
    witnesses = tuple(
        Witness(ba, ra, sa, rb, sb)
        for (ba, ra, sa), (bb, rb, sb) in itertools.combinations(by_risk, 2)
        if ba == bb and sa != sb
    )
    return ComparisonReport(tuple(rows), witnesses, cell_pairs, config.tolerable_risk)
