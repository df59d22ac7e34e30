"""Exact invariants of time-t maps of suspension flows over Cantor minimal systems."""

from .algebra import (
    QQ,
    FieldElement,
    IntMatrix,
    NumberField,
    check_primitive,
    fe_arith,
    fe_sign,
    field_from_poly,
    hermite_normal_form,
    perron_data,
    smith_normal_form,
)
from .comparison import (
    ComparisonReport,
    IsoCertificate,
    Verdict,
    compare_invariants,
    rotation_isomorphic,
    trace_range_equal,
    verify_iso_certificate,
)
from .dimgroup import (
    DimensionGroup,
    GroupElement,
    Positivity,
    dg_equal,
    dg_from_diagram,
    dg_order_unit,
    dg_positive,
    dg_trace,
    telescope,
)
from .entropy import (
    ExactEntropy,
    SuspensionPoint,
    estimate_suspension_entropy,
    sft_entropy,
    substitution_entropy,
    suspension_entropy,
    suspension_measure,
    time_t_minimality_status,
)
from .errors import *  # noqa: F401,F403
from .invariant import (
    ElliottInvariant,
    InvElement,
    TimeParam,
    TraceRangeModule,
    inv_positive,
    inv_trace,
    suspension_invariant,
    trace_range,
)
from .systems import (
    FIBONACCI,
    SFT,
    THUE_MORSE,
    Odometer,
    PointSystem,
    StationaryBVDiagram,
    Substitution,
    factor_complexity,
    odometer_to_bv,
    substitution_to_bv,
)

__version__ = "0.1.0"
