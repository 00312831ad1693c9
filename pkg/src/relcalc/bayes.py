"""Bayes' rule and sequential revision over a hypothesis partition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadPartition, ImpossiblePosterior, OutOfRange, ZeroMarginal

TOL = 1e-9


def _prob(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0 or value > 1.0:
        raise OutOfRange(f"{name} must be a probability in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class BayesUpdate:
    """P(H), P(D|H) and P(D) for a single hypothesis."""

    prior: float
    likelihood: float
    marginal: float

    def __post_init__(self) -> None:
        for name in ("prior", "likelihood", "marginal"):
            object.__setattr__(self, name, _prob(getattr(self, name), name))


def posterior(u: BayesUpdate) -> float:
    """P(H|D) = P(D|H) P(H) / P(D)."""
    if u.marginal <= 0.0:
        raise ZeroMarginal("P(D) must be positive")
    joint = u.likelihood * u.prior
    if joint > u.marginal + TOL:
        raise ImpossiblePosterior(
            f"P(D|H)P(H) = {joint!r} exceeds P(D) = {u.marginal!r}; posterior would exceed 1"
        )
    return min(joint / u.marginal, 1.0)


def posterior_over_partition(priors: Sequence[float], likelihoods: Sequence[float]) -> list[float]:
    """Posteriors for a partition, with P(D) taken from total probability."""
    if len(priors) != len(likelihoods) or not priors:
        raise BadPartition(
            f"need equally sized, non-empty priors and likelihoods, got {len(priors)} and {len(likelihoods)}"
        )
    priors = [_prob(p, "prior") for p in priors]
    likelihoods = [_prob(x, "likelihood") for x in likelihoods]
    if abs(math.fsum(priors) - 1.0) > TOL:
        raise BadPartition(f"priors must sum to 1, got {math.fsum(priors)!r}")
    joint = [p * x for p, x in zip(priors, likelihoods)]
    marginal = math.fsum(joint)
    if marginal <= 0.0:
        raise ZeroMarginal("evidence has zero probability under every hypothesis")
    return [j / marginal for j in joint]


def sequential_update(priors: Sequence[float], evidence: Iterable[Sequence[float]]) -> list[float]:
    """Fold ``posterior_over_partition`` over an evidence stream.

    Retracting a piece of evidence means re-running on the amended stream.
    """
    current = list(priors)
    if abs(math.fsum(current) - 1.0) > TOL:
        raise BadPartition(f"priors must sum to 1, got {math.fsum(current)!r}")
    for likelihoods in evidence:
        current = posterior_over_partition(current, likelihoods)
    return current
