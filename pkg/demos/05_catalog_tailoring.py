"""From a level vector to a requirement list.

Tailoring keeps every catalog entry whose minimum level is reached on its
foundational requirement. The SL1 baseline is split by how far safety
practice already covers it, which is what goes into the safety spec.
"""

from tra import coverage_summary, railway_class, safety_spec_export, tailor
from tra.reqcatalog import sample_catalog

catalog = sample_catalog()
print(f"catalog {catalog.name}: {len(catalog)} entries")

for n in (1, 2, 3, 4):
    sl = railway_class(n)
    print(f"  {sl}: {len(tailor(catalog, sl))} requirements")

baseline = safety_spec_export(catalog)
print(f"\nSL1 baseline: {len(baseline)} entries")
for coverage, count in coverage_summary(baseline).items():
    print(f"  {coverage.value:<24} {count}")

extra = set(tailor(catalog, railway_class(2))) - set(tailor(catalog, railway_class(1)))
print("\nadded by moving from class 1 to class 2:")
for entry in sorted(extra, key=lambda e: e.sort_key):
    print(f"  {entry.fr.value:<4} {entry.id:<12} {entry.title}")
