"""Risk matrices are lookup tables over ordinal scales.

Levels can be compared but not multiplied; the criticality label of a cell
comes from the table, and its color band from a separate mapping.
"""

from tra import builtin_matrices
from tra.errors import MonotonicityError, ScaleMismatchError
from tra.ordinal import Band

iso, sample = builtin_matrices()

for matrix in (iso, sample):
    print(f"{matrix.name}: rows are impact, columns likelihood")
    for impact in matrix.impact_scale:
        cells = [matrix.lookup(impact, lik) for lik in matrix.likelihood_scale]
        print(f"  {impact.label:<10}" + "".join(f"{c:>4}" for c in cells))
    print()

likely = sample.likelihood_scale["Likely"]
major = sample.impact_scale["Major"]
print(f"{likely.label} x {major.label} -> {sample.lookup(major, likely)} ({sample.band_at(major, likely).value})")
print(f"Likely > Possible: {likely > likely.pred()}")

try:
    likely < iso.likelihood_scale[0]
except ScaleMismatchError as exc:
    print(f"cross-scale comparison refused: {exc}")

# A band mapping that turns red before it turns yellow is rejected.
bad = {label: Band.GREEN for label in sample.bands}
bad["2"] = Band.RED
try:
    sample.with_bands(bad)
except MonotonicityError as exc:
    print(f"non-monotone bands refused: {exc}")
