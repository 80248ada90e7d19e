"""The risk-to-target conversion and where it behaves oddly.

R is the ordinal product of likelihood and impact, CRRF = R / tolerable risk,
and the target level is the floor of CRRF minus a quarter, capped at 4.
Exact fractions keep the R = 16 / R = 17 boundary honest.
"""

from tra import iec_border_case_table, iec_sl_target
from tra.method_iec import BROADCAST_NOTE, broadcast
from tra.report import run_compare

print(" R   CRRF  SL-T  reachable as L*I")
for row in iec_border_case_table():
    print(f"{row.risk_r:>2} {str(row.crrf):>6} {row.sl_target:>5}  {'yes' if row.is_product else ''}")

r16, r17 = iec_sl_target(16), iec_sl_target(17)
print(f"\nR=16: CRRF {r16.crrf_text} -> SL-T {r16.sl_target}")
print(f"R=17: CRRF {r17.crrf_text} -> SL-T {r17.sl_target}")
print(f"broadcast of SL-T {r16.sl_target}: {broadcast(r16.sl_target)}  [{BROADCAST_NOTE}]")

report = run_compare()
print(f"\ncells of the sample matrix with SL-T = 0: {len(report.zero_sl_cells)}")
print("same band, different SL-T:")
for w in report.witnesses:
    print(f"  R={w.risk_a} (SL-T {w.sl_target_a}) and R={w.risk_b} (SL-T {w.sl_target_b}) are both {w.band.value}")
