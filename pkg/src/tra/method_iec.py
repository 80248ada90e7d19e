"""Reference implementation of the withdrawn draft IEC 62443-3-2 SL-T formula.

    R     = L * I
    CRRF  = R / 4
    SL-T  = min(4, floor(CRRF - 1/4))

The product of two ordinal order numbers is methodologically disputed; this
module is the only place in the package where ordinal values are multiplied,
and it exists so the flaws of the formula can be demonstrated, not fixed.
All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRangeError
from .ordinal import OrdinalValue
from .slvector import MAX_SL, MIN_SL, SLVector

TOLERABLE_RISK = 4
CORRECTION = Fraction(1, 4)
LEVELS = 5

ORDINAL_PRODUCT_NOTE = "ordinal-product (methodologically disputed)"
BROADCAST_NOTE = "uniform broadcast (assumption criticized: over-constrains DC)"


@dataclass(frozen=True)
class IecAssessmentInput:
    likelihood: OrdinalValue
    impact: OrdinalValue

    def __post_init__(self) -> None:
        for what, v in (("likelihood", self.likelihood), ("impact", self.impact)):
            if len(v.scale) != LEVELS:
                raise OutOfRangeError(
                    f"{what} scale {v.scale.name!r} has {len(v.scale)} levels, expected {LEVELS}"
                )


@dataclass(frozen=True)
class IecAssessmentResult:
    risk_r: int
    crrf: Fraction
    sl_target: int
    tolerable_risk: int = TOLERABLE_RISK
    note: str = ORDINAL_PRODUCT_NOTE

    @property
    def crrf_text(self) -> str:
        return str(self.crrf)

    def to_dict(self) -> dict[str, object]:
        return {
            "method": "iec",
            "risk_r": self.risk_r,
            "crrf": self.crrf_text,
            "sl_target": self.sl_target,
            "tolerable_risk": self.tolerable_risk,
            "note": self.note,
        }


def iec_risk(inp: IecAssessmentInput) -> int:
    return inp.likelihood.order * inp.impact.order


def crrf(risk_r: int, tolerable_risk: int = TOLERABLE_RISK) -> Fraction:
    return Fraction(risk_r, tolerable_risk)


def sl_target_from_risk(risk_r: int, tolerable_risk: int = TOLERABLE_RISK) -> int:
    if isinstance(risk_r, bool) or not isinstance(risk_r, int) or risk_r < 1:
        raise OutOfRangeError(f"risk value must be a positive integer, got {risk_r!r}")
    if tolerable_risk < 1:
        raise OutOfRangeError(f"tolerable risk must be positive, got {tolerable_risk!r}")
    raw = math.floor(crrf(risk_r, tolerable_risk) - CORRECTION)
    # Only reachable below 0 with a non-default divisor.
    return max(MIN_SL, min(MAX_SL, raw))


def iec_sl_target(
    inp: IecAssessmentInput | int, tolerable_risk: int = TOLERABLE_RISK
) -> IecAssessmentResult:
    """Evaluate the formula for an (L, I) input or directly for a raw risk value."""
    r = inp if isinstance(inp, int) else iec_risk(inp)
    return IecAssessmentResult(
        risk_r=r,
        crrf=crrf(r, tolerable_risk),
        sl_target=sl_target_from_risk(r, tolerable_risk),
        tolerable_risk=tolerable_risk,
    )


def broadcast(sl_target: int) -> SLVector:
    """Copy the scalar SL-T into all seven FRs; see ``BROADCAST_NOTE``."""
    return SLVector.uniform(sl_target)


@dataclass(frozen=True)
class BorderRow:
    risk_r: int
    crrf: Fraction
    sl_target: int
    is_product: bool  # reachable as L*I with L, I in 1..5


_PRODUCTS = frozenset(l * i for l in range(1, LEVELS + 1) for i in range(1, LEVELS + 1))


def iec_border_case_table(tolerable_risk: int = TOLERABLE_RISK) -> list[BorderRow]:
    return [
        BorderRow(r, crrf(r, tolerable_risk), sl_target_from_risk(r, tolerable_risk), r in _PRODUCTS)
        for r in range(1, LEVELS * LEVELS + 1)
    ]
