"""Trust-perception calculus for international relations.

Relation algebra over hostile/neutral/friendly property masses, plus the
Dempster-Shafer, subjective-logic and Bayesian tools it sits beside.
"""

from .algebra import (
    MassVector,
    RelationStance,
    ScaleBounds,
    SeptupleConfig,
    SeptupleInterval,
    SignConfig,
    TrustPerception,
    WeightConfig,
    aggregate_mass,
    classify,
    default_septuple,
    interpret,
    perceive,
    scale_bounds,
    septuple_label,
    trust_mass,
    trust_strength,
    validate_weights,
)
from .catalog import (
    Assessment,
    Dossier,
    PropertyCatalog,
    PropertyDef,
    Status,
    assemble_masses,
    default_catalog,
    effective_value,
    evaluate_dossier,
)
from .evidence import Frame, MassFunction, belief, combine_dempster, ds_table, make_mass, plausibility
from .opinion import Opinion, classify_opinion, complement, make_opinion, opinion_from_mass, projection

__version__ = "0.1.0"
