"""Relation algebra: weights, scale bounds, stance masses and trust perception.

Every vector in this module is ordered (hostile, neutral, friendly).  With the
default signs (-1, +1, +1) the trust perception of a pair of nations is

    t_mass   = -W_h*h + W_n*n + W_f*f
    strength =  W_h*h + W_n*n + W_f*f

and is classified against the closed neutral band
``[lower + W_h, upper - W_f]`` of the interval scale ``[lower, upper]``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidScale, MassOverflow, OutOfRange, OutOfScale, SumNotOne

TOL = 1e-9


class RelationStance(enum.IntEnum):
    HOSTILE = 1
    NEUTRAL = 2
    FRIENDLY = 3

    @property
    def label(self) -> str:
        return self.name.capitalize()

    @classmethod
    def parse(cls, text: str) -> "RelationStance":
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown stance {text!r}") from None


STANCES = (RelationStance.HOSTILE, RelationStance.NEUTRAL, RelationStance.FRIENDLY)


def _check_unit(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0 or value > 1.0:
        raise OutOfRange(f"{name} must be a finite value in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class WeightConfig:
    """Per-stance weightage; the three weights sum to one."""

    hostile: float
    neutral: float
    friendly: float

    def __post_init__(self) -> None:
        for name in ("hostile", "neutral", "friendly"):
            object.__setattr__(self, name, _check_unit(getattr(self, name), f"{name} weight"))
        total = self.hostile + self.neutral + self.friendly
        if abs(total - 1.0) > TOL:
            raise SumNotOne(f"weights must sum to 1, got {total!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.hostile, self.neutral, self.friendly)


@dataclass(frozen=True)
class SignConfig:
    hostile: int = -1
    neutral: int = 1
    friendly: int = 1

    def __post_init__(self) -> None:
        for name in ("hostile", "neutral", "friendly"):
            value = getattr(self, name)
            if isinstance(value, bool) or value not in (-1, 1):
                raise OutOfRange(f"{name} sign must be -1 or +1, got {value!r}")
            object.__setattr__(self, name, int(value))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.hostile, self.neutral, self.friendly)


DEFAULT_WEIGHTS = (0.40, 0.20, 0.40)
DEFAULT_SIGNS = SignConfig()


def validate_weights(hostile: float, neutral: float, friendly: float) -> WeightConfig:
    return WeightConfig(hostile, neutral, friendly)


@dataclass(frozen=True)
class ScaleBounds:
    lower: float
    upper: float
    middle_lo: float
    middle_hi: float

    @property
    def band_width(self) -> float:
        return self.middle_hi - self.middle_lo

    def contains(self, t_mass: float) -> bool:
        return self.lower - TOL <= t_mass <= self.upper + TOL


def scale_bounds(w: WeightConfig, s: SignConfig = DEFAULT_SIGNS) -> ScaleBounds:
    """Lower, upper and neutral-band edges of the interval scale.

    Raises InvalidScale when a sign choice yields an unordered scale
    (lower <= middle_lo <= middle_hi <= upper must hold).
    """
    s_mass = math.fsum(abs(sx * wx) for sx, wx in zip(s.as_tuple(), w.as_tuple()))
    assert abs(s_mass - 1.0) <= TOL, s_mass

    lower = s.hostile * w.hostile
    upper = s.neutral * w.neutral + s.friendly * w.friendly
    middle_lo = lower + w.hostile
    middle_hi = upper - s.friendly * w.friendly
    if not (lower - TOL <= middle_lo <= middle_hi + TOL and middle_hi <= upper + TOL):
        raise InvalidScale(
            f"signs {s.as_tuple()} give an unordered scale "
            f"lower={lower}, middle=[{middle_lo}, {middle_hi}], upper={upper}"
        )
    return ScaleBounds(lower, upper, middle_lo, middle_hi)


@dataclass(frozen=True)
class MassVector:
    hostile: float
    neutral: float
    friendly: float

    def __post_init__(self) -> None:
        for name in ("hostile", "neutral", "friendly"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0.0:
                raise OutOfRange(f"{name} mass must be finite and >= 0, got {value!r}")
            if value > 1.0 + TOL:
                raise MassOverflow(f"{name} mass {value!r} exceeds 1")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.hostile, self.neutral, self.friendly)


def stance_mass(values: Iterable[float], stance: str = "stance") -> float:
    values = [_check_unit(v, f"{stance} property value") for v in values]
    total = math.fsum(values)
    if total > 1.0 + TOL:
        raise MassOverflow(f"{stance} mass {total!r} exceeds 1")
    return total


def aggregate_mass(
    hostile: Iterable[float], neutral: Iterable[float], friendly: Iterable[float]
) -> MassVector:
    """Sum the effective property values of each stance."""
    return MassVector(
        stance_mass(hostile, "hostile"),
        stance_mass(neutral, "neutral"),
        stance_mass(friendly, "friendly"),
    )


def trust_mass(m: MassVector, w: WeightConfig, s: SignConfig = DEFAULT_SIGNS) -> float:
    return math.fsum(
        sx * wx * mx for sx, wx, mx in zip(s.as_tuple(), w.as_tuple(), m.as_tuple())
    )


def trust_strength(m: MassVector, w: WeightConfig) -> float:
    return math.fsum(wx * mx for wx, mx in zip(w.as_tuple(), m.as_tuple()))


def _check_on_scale(t_mass: float, b: ScaleBounds) -> None:
    if not b.contains(t_mass):
        raise OutOfScale(f"t_mass {t_mass!r} outside the scale [{b.lower}, {b.upper}]")


def classify(t_mass: float, b: ScaleBounds) -> RelationStance:
    """Hostile below the neutral band, Friendly above it; band edges are Neutral."""
    _check_on_scale(t_mass, b)
    if t_mass < b.middle_lo - TOL:
        return RelationStance.HOSTILE
    if t_mass <= b.middle_hi + TOL:
        return RelationStance.NEUTRAL
    return RelationStance.FRIENDLY


# -- septuple relabeling -----------------------------------------------------

@dataclass(frozen=True)
class SeptupleInterval:
    """One interval of a finer scale, ending at ``upper``.

    The interval starts where the previous one ends.  ``closed`` decides
    whether ``upper`` itself belongs to this interval or to the next one.
    """

    upper: float
    label: str
    closed: bool = False


@dataclass(frozen=True)
class SeptupleConfig:
    intervals: tuple[SeptupleInterval, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if not self.intervals:
            raise InvalidScale("septuple config needs at least one interval")

    def check_covers(self, b: ScaleBounds) -> None:
        prev = b.lower
        for i, iv in enumerate(self.intervals):
            width = iv.upper - prev
            # zero-width intervals are only meaningful as closed points
            if width < -TOL or (width <= TOL and not iv.closed and i < len(self.intervals) - 1):
                raise InvalidScale(
                    f"septuple breakpoint {iv.upper!r} ({iv.label}) does not increase past {prev!r}"
                )
            prev = iv.upper
        if abs(prev - b.upper) > TOL:
            raise InvalidScale(f"last septuple breakpoint {prev!r} must equal upper bound {b.upper!r}")


SEPTUPLE_LABELS = (
    "Hostile", "Near-Hostile", "Near-Neutral", "Neutral", "Near-Neutral", "Near-Friendly", "Friendly",
)


def default_septuple(b: ScaleBounds) -> SeptupleConfig:
    """Split the hostile and friendly zones into three equal-width intervals each."""
    intervals: list[SeptupleInterval] = []
    h_width = (b.middle_lo - b.lower) / 3.0
    if h_width > TOL:
        intervals += [
            SeptupleInterval(b.lower + h_width, "Hostile"),
            SeptupleInterval(b.lower + 2 * h_width, "Near-Hostile"),
            SeptupleInterval(b.middle_lo, "Near-Neutral"),
        ]
    intervals.append(SeptupleInterval(b.middle_hi, "Neutral", closed=True))
    f_width = (b.upper - b.middle_hi) / 3.0
    if f_width > TOL:
        intervals += [
            SeptupleInterval(b.middle_hi + f_width, "Near-Neutral"),
            SeptupleInterval(b.middle_hi + 2 * f_width, "Near-Friendly"),
            SeptupleInterval(b.upper, "Friendly", closed=True),
        ]
    return SeptupleConfig(tuple(intervals))


def septuple_label(t_mass: float, b: ScaleBounds, cfg: SeptupleConfig | None = None) -> str:
    _check_on_scale(t_mass, b)
    cfg = cfg or default_septuple(b)
    cfg.check_covers(b)
    for iv in cfg.intervals[:-1]:
        if t_mass < iv.upper - TOL or (iv.closed and t_mass <= iv.upper + TOL):
            return iv.label
    return cfg.intervals[-1].label


# -- interpretation ------------------------------------------------------------

NOTE_NO_HOSTILE = "NOTE_NO_HOSTILE"
NOTE_CONTRADICTORY = "NOTE_CONTRADICTORY"
NOTE_CONSISTENT = "NOTE_CONSISTENT"
NOTE_NEUTRAL_BIAS = "NOTE_NEUTRAL_BIAS"
NOTE_REFLEXIVE = "NOTE_REFLEXIVE"
NOTE_UNDEFINED = "NOTE_UNDEFINED"


def interpret(
    t_mass: float, strength: float, m: MassVector, b: ScaleBounds, epsilon: float = 0.1
) -> tuple[bool, list[str]]:
    """Return ``(fragile, notes)`` for a computed perception."""
    if not 0.0 < epsilon < 0.5:
        raise OutOfRange(f"epsilon must lie in (0, 0.5), got {epsilon!r}")
    notes = []
    if m.hostile == 0.0:
        notes.append(NOTE_NO_HOSTILE)
    if strength >= 1.0 - epsilon - TOL:
        notes.append(NOTE_CONTRADICTORY)
    if abs(strength - 0.5) <= epsilon + TOL:
        notes.append(NOTE_CONSISTENT)
    # strength is weight-scaled while n_mass is not; compared as-is on purpose
    if abs(strength - m.neutral) <= epsilon + TOL and t_mass > TOL:
        notes.append(NOTE_NEUTRAL_BIAS)
    fragile = (strength - t_mass) > b.band_width + TOL
    return fragile, notes


@dataclass(frozen=True)
class TrustPerception:
    t_mass: float
    strength: float
    stance: RelationStance | None  # None: relation undefined
    septuple_label: str
    fragile: bool
    masses: MassVector
    bounds: ScaleBounds
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def stance_label(self) -> str:
        return self.stance.label if self.stance is not None else "Undefined"


def perceive(
    m: MassVector,
    w: WeightConfig,
    s: SignConfig = DEFAULT_SIGNS,
    septuple: SeptupleConfig | None = None,
    epsilon: float = 0.1,
) -> TrustPerception:
    b = scale_bounds(w, s)
    t = trust_mass(m, w, s)
    strength = trust_strength(m, w)
    stance = classify(t, b)
    label = septuple_label(t, b, septuple)
    fragile, notes = interpret(t, strength, m, b, epsilon)
    return TrustPerception(t, strength, stance, label, fragile, m, b, tuple(notes))


def weighted_contributions(
    values: Sequence[float], stance: RelationStance, w: WeightConfig, s: SignConfig = DEFAULT_SIGNS
) -> list[float]:
    """Signed weighted share of t_mass for each property value of one stance."""
    idx = STANCES.index(stance)
    factor = s.as_tuple()[idx] * w.as_tuple()[idx]
    return [factor * v for v in values]
