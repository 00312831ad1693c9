"""Property catalogs, observer dossiers and end-to-end evaluation."""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from typing import Iterable

from . import algebra
from .algebra import (
    DEFAULT_SIGNS,
    NOTE_REFLEXIVE,
    NOTE_UNDEFINED,
    STANCES,
    MassVector,
    RelationStance,
    SeptupleConfig,
    SignConfig,
    TrustPerception,
    WeightConfig,
)
from .errors import OutOfRange, UnknownProperty, ValidationError

TOL = 1e-9
_NATION_RE = re.compile(r"^[A-Z0-9]+$")


class Status(str, enum.Enum):
    ENABLED = "enabled"
    DISABLED = "disabled"
    TOGGLED = "toggled"


@dataclass(frozen=True)
class PropertyDef:
    id: str
    stance: RelationStance
    value: float
    description: str = ""

    def __post_init__(self) -> None:
        value = float(self.value)
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            raise OutOfRange(f"property {self.stance.label} {self.id} value must lie in [0, 1], got {value!r}")
        object.__setattr__(self, "value", value)


@dataclass(frozen=True)
class PropertyCatalog:
    properties: tuple[PropertyDef, ...]

    def __post_init__(self) -> None:
        props = tuple(self.properties)
        object.__setattr__(self, "properties", props)
        seen = set()
        for p in props:
            key = (p.stance, p.id)
            if key in seen:
                raise ValidationError(f"duplicate property {p.stance.label} {p.id}")
            seen.add(key)
        for stance in STANCES:
            total = math.fsum(p.value for p in self.by_stance(stance))
            if total > 1.0 + TOL:
                raise ValidationError(f"{stance.label.lower()} property values sum to {total!r} > 1")

    def by_stance(self, stance: RelationStance) -> list[PropertyDef]:
        return [p for p in self.properties if p.stance is stance]

    def get(self, stance: RelationStance, property_id: str) -> PropertyDef:
        for p in self.properties:
            if p.stance is stance and p.id == property_id:
                return p
        raise UnknownProperty(f"no {stance.label.lower()} property {property_id!r} in catalog")


@dataclass(frozen=True)
class Assessment:
    stance: RelationStance
    property_id: str
    status: Status = Status.ENABLED
    override_value: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "status", Status(self.status))
        if self.override_value is not None:
            v = float(self.override_value)
            if not math.isfinite(v) or not 0.0 <= v <= 1.0:
                raise OutOfRange(f"override value must lie in [0, 1], got {v!r}")
            object.__setattr__(self, "override_value", v)

    @property
    def active(self) -> bool:
        return self.status is not Status.DISABLED


def check_nation(code: str) -> str:
    if not isinstance(code, str) or not _NATION_RE.match(code):
        raise ValidationError(f"nation code must be non-empty uppercase alphanumeric, got {code!r}")
    return code


@dataclass(frozen=True)
class Dossier:
    """One observer's assessments of a nation pair over a period."""

    observer: str
    subject: str
    object: str
    assessments: tuple[Assessment, ...]
    period: tuple[int, int] | None = None
    evidence_notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        check_nation(self.subject)
        check_nation(self.object)
        object.__setattr__(self, "assessments", tuple(self.assessments))
        object.__setattr__(self, "evidence_notes", tuple(self.evidence_notes))
        if self.period is not None:
            lo, hi = self.period
            if lo > hi:
                raise ValidationError(f"period start {lo} is after its end {hi}")
            object.__setattr__(self, "period", (int(lo), int(hi)))
        seen = set()
        for a in self.assessments:
            key = (a.stance, a.property_id)
            if key in seen:
                raise ValidationError(f"more than one assessment for {a.stance.label.lower()} {a.property_id}")
            seen.add(key)

    def check_against(self, c: PropertyCatalog) -> None:
        for a in self.assessments:
            c.get(a.stance, a.property_id)

    def swapped(self) -> "Dossier":
        return Dossier(self.observer, self.object, self.subject, self.assessments, self.period, self.evidence_notes)


_FRIENDLY = [
    ("P1", 0.5, "War ally and mutual defense pact during war."),
    ("P2", 0.2, "Share/trade nuclear technologies and materials (e.g. uranium) or mass destruction "
                "weapon for warfare. Arm collaboration in R&D for warfare. Financial aid for warfare."),
    ("P3", 0.1, "Head of the state political sentiment and relationships."),
    ("P4", 0.1, "Loan or share strategic technologies and equipment. Civil nuclear trade and agreement. "
                "Defense pact that enable during peace."),
    ("P5", 0.075, "Share military intelligence. Large scale of joint military drills."),
    ("P6", 0.025, "Global War on Terrorism (GWOT)."),
]
_NEUTRAL = [
    ("P1", 0.25, "Member of UN or nation state recognized by UN."),
    ("P2", 0.35, "Economic cooperation. E.g. bilateral trade, multilateral open market, free trade."),
    ("P3", 0.40, "Diplomatic mission (embassy or representative). Disaster aid and peacekeeping."),
]
_HOSTILE = [
    ("P1", 0.5, "War enemy."),
    ("P2", 0.2, "Strong disapproval of share/trade/usage nuclear technologies and materials, or mass "
                "destruction weapon. E.g. nuclear testing, ICBM development and testing, and arms races."),
    ("P3", 0.075, "Economy blockage or sanction. Embargo or boycott (e.g. large scale product boycott, ban visa)."),
    ("P4", 0.125, "Closed border military aggression or hostility, including land, air, maritime trespassing "
                  "and terrorism. Peaceful dispute through international law is not included."),
    ("P5", 0.05, "Political sentiments and threat by the head of state."),
    ("P6", 0.05, "Kill or arrest another nation's diplomats. Espionage (e.g. spying and hacking)."),
]


def default_catalog() -> PropertyCatalog:
    props = []
    for stance, rows in (
        (RelationStance.HOSTILE, _HOSTILE),
        (RelationStance.NEUTRAL, _NEUTRAL),
        (RelationStance.FRIENDLY, _FRIENDLY),
    ):
        props += [PropertyDef(pid, stance, value, desc) for pid, value, desc in rows]
    return PropertyCatalog(tuple(props))


def effective_value(p: PropertyDef, a: Assessment | None) -> float:
    """Nominal (or overridden) value after applying the assessment status.

    A toggled property, one whose events both held and lapsed within the
    observation period, counts for half.
    """
    if a is None or a.status is Status.DISABLED:
        return 0.0
    v = p.value if a.override_value is None else a.override_value
    return v / 2.0 if a.status is Status.TOGGLED else v


@dataclass(frozen=True)
class Contribution:
    stance: RelationStance
    property_id: str
    effective_value: float
    contribution: float


def _assessed(d: Dossier, c: PropertyCatalog) -> list[tuple[PropertyDef, Assessment]]:
    return [(c.get(a.stance, a.property_id), a) for a in d.assessments]


def assemble_masses(d: Dossier, c: PropertyCatalog) -> MassVector:
    values: dict[RelationStance, list[float]] = {s: [] for s in STANCES}
    for p, a in _assessed(d, c):
        values[p.stance].append(effective_value(p, a))
    return algebra.aggregate_mass(*(values[s] for s in STANCES))


def contributions(
    d: Dossier, c: PropertyCatalog, w: WeightConfig, s: SignConfig = DEFAULT_SIGNS
) -> list[Contribution]:
    """Signed weighted share of t_mass per assessed property, in canonical stance order."""
    if is_reflexive(d):
        # reflexive pairs are evaluated as fully saturated neutral and friendly stances
        return [
            Contribution(st, "*", 1.0, algebra.weighted_contributions([1.0], st, w, s)[0])
            for st in (RelationStance.NEUTRAL, RelationStance.FRIENDLY)
        ]
    rows = []
    assessed = _assessed(d, c)
    for stance in STANCES:
        for p, a in assessed:
            if p.stance is stance:
                v = effective_value(p, a)
                rows.append(Contribution(stance, p.id, v, algebra.weighted_contributions([v], stance, w, s)[0]))
    return rows


def is_reflexive(d: Dossier) -> bool:
    return d.subject == d.object


def evaluate_dossier(
    d: Dossier,
    c: PropertyCatalog,
    w: WeightConfig,
    s: SignConfig = DEFAULT_SIGNS,
    septuple: SeptupleConfig | None = None,
    epsilon: float = 0.1,
) -> TrustPerception:
    d.check_against(c)
    if is_reflexive(d):
        # a nation always trusts itself: pin to the top of the scale
        full = MassVector(0.0, 1.0, 1.0)
        p = algebra.perceive(full, w, s, septuple, epsilon)
        return TrustPerception(
            p.t_mass, p.strength, RelationStance.FRIENDLY, p.septuple_label, False, full, p.bounds,
            (NOTE_REFLEXIVE,),
        )
    masses = assemble_masses(d, c)
    if not any(a.active for a in d.assessments):
        b = algebra.scale_bounds(w, s)
        algebra.interpret(0.0, 0.0, masses, b, epsilon)  # validates epsilon
        return TrustPerception(0.0, 0.0, None, "Undefined", False, masses, b, (NOTE_UNDEFINED,))
    return algebra.perceive(masses, w, s, septuple, epsilon)


def evaluate_many(
    dossiers: Iterable[Dossier], c: PropertyCatalog, w: WeightConfig, s: SignConfig = DEFAULT_SIGNS,
    septuple: SeptupleConfig | None = None, epsilon: float = 0.1,
) -> list[TrustPerception]:
    return [evaluate_dossier(d, c, w, s, septuple, epsilon) for d in dossiers]
