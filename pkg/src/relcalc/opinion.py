"""Subjective-logic binomial opinions ``(b, d, u, a)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import NotAdditive, OutOfRange, UnknownHypothesis, WholeFrame
from .evidence import MassFunction, belief, plausibility

TOL = 1e-9

TRUE = "TRUE"
FALSE = "FALSE"
DOGMATIC = "DOGMATIC"
UNCERTAIN = "UNCERTAIN"
VACUOUS = "VACUOUS"


def _unit(value: float, name: str) -> float:
    if isinstance(value, bool):
        raise OutOfRange(f"{name} must be a number, got bool")
    value = float(value)
    if not math.isfinite(value) or value < -TOL or value > 1.0 + TOL:
        raise OutOfRange(f"{name} must lie in [0, 1], got {value!r}")
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class Opinion:
    """Belief, disbelief and uncertainty mass plus a base rate.

    b + d + u must equal 1 (within 1e-9).
    """

    b: float
    d: float
    u: float
    a: float = 0.5

    def __post_init__(self) -> None:
        for name in ("b", "d", "u", "a"):
            object.__setattr__(self, name, _unit(getattr(self, name), name))
        total = self.b + self.d + self.u
        if abs(total - 1.0) > TOL:
            raise NotAdditive(f"b + d + u must equal 1, got {total!r}")

    def to_json(self) -> dict:
        return {"b": self.b, "d": self.d, "u": self.u, "a": self.a}

    @classmethod
    def from_json(cls, obj: dict) -> "Opinion":
        return cls(obj["b"], obj["d"], obj["u"], obj["a"])


def make_opinion(b: float, d: float, u: float, a: float = 0.5) -> Opinion:
    return Opinion(b, d, u, a)


def classify_opinion(o: Opinion) -> set[str]:
    flags = set()
    if abs(o.b - 1.0) <= TOL:
        flags.add(TRUE)
    if abs(o.d - 1.0) <= TOL:
        flags.add(FALSE)
    bd = o.b + o.d
    if abs(bd - 1.0) <= TOL:
        flags.add(DOGMATIC)
    else:
        flags.add(UNCERTAIN)
        if bd <= TOL:
            flags.add(VACUOUS)
    return flags


def projection(o: Opinion) -> float:
    """Projected probability ``b + a*u``."""
    return o.b + o.a * o.u


def complement(o: Opinion) -> Opinion:
    return Opinion(o.d, o.b, o.u, 1.0 - o.a)


def opinion_from_mass(m: MassFunction, hypothesis: Iterable[str] | str, a: float | None = None) -> Opinion:
    """Opinion about ``hypothesis`` from a mass function.

    b = Bel(h), d = Bel(not h), u = Pl(h) - Bel(h).  The base rate defaults to
    ``1/|frame|`` (0.5 on a binary frame).
    """
    bits = m.frame.encode(hypothesis)
    if bits == 0:
        raise UnknownHypothesis("opinion needs a non-empty hypothesis")
    if bits == m.frame.full:
        raise WholeFrame("an opinion about the whole frame is undefined")
    if a is None:
        a = 1.0 / len(m.frame)
    labels = m.frame.decode(bits)
    bel = belief(m, labels)
    pl = plausibility(m, labels)
    return Opinion(bel, 1.0 - pl, pl - bel, a)
