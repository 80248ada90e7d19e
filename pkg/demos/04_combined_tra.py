"""Checking assigned levels with a threat and risk analysis.

Each scenario is placed on the risk matrix. A scenario outside the tolerable
bands means the assigned level was too low if the scenario threatens safety,
or that an extra non-safety requirement is needed otherwise.
"""

from tra import SLVector, ThreatScenario, builtin_matrices, railway_class, tra_run

_, matrix = builtin_matrices()
L, I = matrix.likelihood_scale, matrix.impact_scale

scenarios = [
    ThreatScenario("X", "tampered route request", True, L["Remote"], I["Moderate"], "zone-interlocking"),
    ThreatScenario("Y", "spoofed point status", True, L["Unlikely"], I["Moderate"], "zone-field"),
    ThreatScenario("Z", "remote command injection", True, L["Likely"], I["Major"], "conduit-ops"),
    ThreatScenario("D", "maintenance log leak", False, L["Likely"], I["Major"], "conduit-ops"),
]
assigned: dict[str, SLVector] = {
    "zone-interlocking": railway_class(2),
    "zone-field": railway_class(1),
    "conduit-ops": railway_class(2),
}

run = tra_run(scenarios, matrix, assigned)
for f in run.findings:
    print(f"{f.scenario_id}  {f.target:<18} {f.criticality:>3} {f.band.value:<7} {f.verdict.value}")
print(f"status: {run.status}")

# The data leak alone never blocks the run; only safety-related misjudgements do.
rerun = tra_run([s for s in scenarios if s.id != "Z"], matrix, assigned)
print(f"without Z: {rerun.status}")
