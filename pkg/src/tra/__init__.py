"""IT security risk assessment for zoned safety-critical control systems."""

__version__ = "0.1.0"

from .combined import ThreatScenario, TraFinding, TraRun, Verdict, classify, tra_run
from .errors import (
    MissingSLError,
    ModelError,
    MonotonicityError,
    OutOfRangeError,
    ScaleMismatchError,
    TraError,
    UnknownLabelError,
    UnknownObjectError,
)
from .method_dke import (
    AttackerProfile,
    DkeAssessmentInput,
    DkeAssessmentResult,
    RailwayModifiers,
    dke_assess,
    dke_sweep,
    psl,
)
from .method_iec import (
    IecAssessmentInput,
    IecAssessmentResult,
    broadcast,
    iec_border_case_table,
    iec_risk,
    iec_sl_target,
)
from .ordinal import Band, OrdinalScale, OrdinalValue, RiskMatrix, band_of, builtin_matrices, lookup
from .reqcatalog import Catalog, Coverage, RequirementEntry, coverage_summary, safety_spec_export, tailor
from .slvector import (
    FR,
    FoundationalRequirement,
    SLKind,
    SLVector,
    assignment_space_size,
    dominates,
    gap,
    railway_class,
)
from .sysmodel import ENVIRONMENT, Conduit, SystemModel, SystemObject, Zone, validate, zone_of
