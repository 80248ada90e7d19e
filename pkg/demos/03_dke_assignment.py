"""Attacker-based assignment for railway zones.

Each attacker gets a preliminary level from resources and know-how. The
strongest attacker wins, then one level may be taken off if the attacker
needs site access, network access is constrained, or the potential impact
is limited. The result is expanded to a railway class with DC and RA at 1.
"""

import json
from importlib import resources

from tra import AttackerProfile, DkeAssessmentInput, RailwayModifiers, dke_assess, psl
from tra.sysmodel import SystemModel, validate

print("PSL      RES=2 RES=3 RES=4")
for kno in (2, 3, 4):
    print(f"KNO={kno}  " + "".join(f"{psl(res, kno):>6}" for res in (2, 3, 4)))

inp = DkeAssessmentInput(
    exposed=True,
    attackers=(AttackerProfile("hacktivist", 2, 3, 4), AttackerProfile("organised-crime", 3, 3, 3)),
    modifiers=RailwayModifiers(nac=1),
)
result = dke_assess(inp)
print(f"\nper attacker: {dict(result.psl_per_attacker)}")
print(f"PSL {result.psl} - {result.reduction} -> SL {result.sl_scalar}, vector {result.sl_vector}")
print(f"unexposed zone: {dke_assess(DkeAssessmentInput(exposed=False)).sl_vector}")

text = resources.files("tra.data").joinpath("interlocking_model.json").read_text()
model = SystemModel.from_dict(json.loads(text))
print(f"\nbundled model {model.name!r}: {len(validate(model))} rule violations")
for container in model.containers:
    if container.assessment is not None:
        print(f"  {container.id:<18} {dke_assess(DkeAssessmentInput.from_dict(container.assessment)).sl_vector}")
