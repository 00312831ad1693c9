"""Dempster-Shafer mass functions over a small finite frame.

Subsets of the frame are stored as bit-sets following the frame ordering, so
a frame of ``n`` hypotheses has subsets ``1 .. 2**n - 1`` (the empty set never
carries mass).  Public functions accept subsets as any iterable of labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    EmptySetMass,
    FrameMismatch,
    NegativeMass,
    NotNormalized,
    TotalConflict,
    UnknownHypothesis,
    ValidationError,
)

TOL = 1e-9
MAX_FRAME = 16


@dataclass(frozen=True)
class Frame:
    hypotheses: tuple[str, ...]

    def __post_init__(self) -> None:
        hyps = tuple(self.hypotheses)
        object.__setattr__(self, "hypotheses", hyps)
        if not hyps:
            raise ValidationError("frame must contain at least one hypothesis")
        if len(set(hyps)) != len(hyps):
            raise ValidationError(f"frame labels must be unique, got {list(hyps)}")
        if len(hyps) > MAX_FRAME:
            raise ValidationError(f"frames are limited to {MAX_FRAME} hypotheses")

    def __len__(self) -> int:
        return len(self.hypotheses)

    @property
    def full(self) -> int:
        return (1 << len(self.hypotheses)) - 1

    def encode(self, subset: Iterable[str] | str) -> int:
        if isinstance(subset, str):
            subset = [subset]
        bits = 0
        for label in subset:
            try:
                bits |= 1 << self.hypotheses.index(label)
            except ValueError:
                raise UnknownHypothesis(f"{label!r} is not in frame {list(self.hypotheses)}") from None
        return bits

    def decode(self, bits: int) -> tuple[str, ...]:
        return tuple(h for i, h in enumerate(self.hypotheses) if bits >> i & 1)

    def singletons(self) -> list[int]:
        return [1 << i for i in range(len(self.hypotheses))]


@dataclass(frozen=True)
class MassFunction:
    frame: Frame
    masses: Mapping[int, float]

    def __getitem__(self, subset: Iterable[str] | str) -> float:
        return self.masses.get(self.frame.encode(subset), 0.0)

    def focal(self) -> list[tuple[tuple[str, ...], float]]:
        """Focal elements as (labels, mass), in bit-set order."""
        return [(self.frame.decode(k), v) for k, v in sorted(self.masses.items())]


def _validated(frame: Frame, masses: dict[int, float]) -> MassFunction:
    total = math.fsum(masses.values())
    if abs(total - 1.0) > TOL:
        raise NotNormalized(f"masses must sum to 1, got {total!r}")
    return MassFunction(frame, {k: v for k, v in sorted(masses.items()) if v != 0.0})


def make_mass(frame: Frame, entries: Iterable[tuple[Iterable[str] | str, float]] | Mapping) -> MassFunction:
    """Build a normalized mass function; repeated subsets are added together."""
    if isinstance(entries, Mapping):
        entries = entries.items()
    masses: dict[int, float] = {}
    for subset, value in entries:
        bits = frame.encode(subset)
        value = float(value)
        if bits == 0:
            raise EmptySetMass("the empty set cannot carry mass")
        if not math.isfinite(value) or value < 0.0:
            raise NegativeMass(f"mass of {frame.decode(bits)} must be finite and >= 0, got {value!r}")
        masses[bits] = masses.get(bits, 0.0) + value
    return _validated(frame, masses)


def vacuous(frame: Frame) -> MassFunction:
    return MassFunction(frame, {frame.full: 1.0})


def belief(m: MassFunction, subset: Iterable[str] | str) -> float:
    a = m.frame.encode(subset)
    return math.fsum(v for b, v in m.masses.items() if b & ~a == 0)


def plausibility(m: MassFunction, subset: Iterable[str] | str) -> float:
    a = m.frame.encode(subset)
    return math.fsum(v for b, v in m.masses.items() if b & a)


def conflict(m1: MassFunction, m2: MassFunction) -> float:
    """Total mass the two sources put on disjoint focal elements."""
    _same_frame(m1, m2)
    return math.fsum(v1 * v2 for b, v1 in m1.masses.items() for c, v2 in m2.masses.items() if not b & c)


def _same_frame(m1: MassFunction, m2: MassFunction) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatch(
            f"cannot combine frames {list(m1.frame.hypotheses)} and {list(m2.frame.hypotheses)}"
        )


def combine_dempster(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Dempster's normalized rule of combination."""
    _same_frame(m1, m2)
    joint: dict[int, list[float]] = {}
    clash = []
    for b, v1 in m1.masses.items():
        for c, v2 in m2.masses.items():
            a = b & c
            (joint.setdefault(a, []) if a else clash).append(v1 * v2)
    k = math.fsum(clash)
    if k >= 1.0 - TOL:
        raise TotalConflict(f"sources are in total conflict (K = {k!r})")
    norm = 1.0 - k
    return MassFunction(m1.frame, {a: math.fsum(vs) / norm for a, vs in sorted(joint.items())})


@dataclass(frozen=True)
class BeliefRow:
    subset: tuple[str, ...]
    mass: float
    belief: float
    plausibility: float

    @property
    def uncertainty(self) -> float:
        return self.plausibility - self.belief


@dataclass(frozen=True)
class BeliefSummary:
    frame: Frame
    rows: tuple[BeliefRow, ...]

    def row(self, subset: Iterable[str] | str) -> BeliefRow:
        key = self.frame.decode(self.frame.encode(subset))
        for r in self.rows:
            if r.subset == key:
                return r
        raise KeyError(key)


def ds_table(m: MassFunction) -> BeliefSummary:
    """Mass, belief and plausibility per singleton and for the whole frame."""
    keys = m.frame.singletons()
    if m.frame.full not in keys:
        keys.append(m.frame.full)
    rows = []
    for bits in keys:
        labels = m.frame.decode(bits)
        rows.append(BeliefRow(labels, m.masses.get(bits, 0.0), belief(m, labels), plausibility(m, labels)))
    return BeliefSummary(m.frame, tuple(rows))
