"""Authorship ranking by RMS distance and re-election prediction.

Attribution ranks known author profiles by ascending RMS deviation from
the unknown profile. Prediction compares an address profile against the
column-mean centroids of past re-election winners and losers and picks
the nearer one.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DegenerateProfileError, InsufficientCandidatesError
from .finders import STRATEGIES
from .profiles import StrategyProfile, normalized_rms, rms, similarity

_TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RankedMatch:
    """One candidate author in a ranking, smallest RMS first."""

    label: str
    rms: float
    similarity_percent: float | None


@dataclass(frozen=True)
class CentroidPair:
    """Mean profiles of the re-election winner and loser tables."""

    winners_avg: StrategyProfile
    losers_avg: StrategyProfile


class Outcome(Enum):
    WIN = "win"
    LOSE = "lose"
    TIE = "tie"


@dataclass(frozen=True)
class PredictionReport:
    """Predicted outcome plus the margin diagnostics behind it.

    The standard deviation of the two RMS errors is reported under both
    the population (divide by n) and sample (divide by n-1) conventions,
    since a two-point spread statistic is ambiguous without a label.
    """

    outcome: Outcome
    rms_to_winners: float
    rms_to_losers: float
    rms_std_population: float
    rms_std_sample: float


def identify(
    unknown: StrategyProfile, known: Sequence[StrategyProfile]
) -> list[RankedMatch]:
    """Rank known profiles by ascending RMS to the unknown profile.

    Ties are broken by ascending label. Similarity percents (100 minus
    normalized RMS) are attached when there are at least two candidates;
    with a single candidate normalization is undefined and similarity is
    omitted.
    """
    if not known:
        raise InsufficientCandidatesError("no known profiles to rank against")
    if unknown.degenerate:
        raise DegenerateProfileError("no strategies detected in query text")
    errors = {c.label: rms(unknown, c) for c in known}
    if len(known) >= 2:
        normalized = normalized_rms(unknown, known)
        sims = {label: similarity(v) for label, v in normalized.items()}
    else:
        sims = {}
    ranked = sorted(errors.items(), key=lambda item: (item[1], item[0]))
    return [RankedMatch(label, err, sims.get(label)) for label, err in ranked]


def build_centroids(
    winners: Sequence[StrategyProfile], losers: Sequence[StrategyProfile]
) -> CentroidPair:
    """Per-strategy arithmetic means of the two profile sets."""
    return CentroidPair(
        winners_avg=_mean_profile("winners_average", winners),
        losers_avg=_mean_profile("losers_average", losers),
    )


def _mean_profile(label: str, profiles: Sequence[StrategyProfile]) -> StrategyProfile:
    if not profiles:
        raise InsufficientCandidatesError(f"cannot average an empty set for {label}")
    values = tuple(
        math.fsum(p.values[i] for p in profiles) / len(profiles)
        for i in range(len(STRATEGIES))
    )
    return StrategyProfile(label, values)


def predict_reelection(
    address: StrategyProfile, centroids: CentroidPair
) -> PredictionReport:
    """Predict Win/Lose/Tie for an inaugural-address profile.

    Win when the address is strictly nearer (RMS) to the winners'
    centroid, Lose when nearer the losers', Tie when the two distances
    agree within 1e-12.
    """
    if address.degenerate:
        raise DegenerateProfileError("no strategies detected in query text")
    to_winners = rms(address, centroids.winners_avg)
    to_losers = rms(address, centroids.losers_avg)
    if abs(to_winners - to_losers) <= _TIE_TOLERANCE:
        outcome = Outcome.TIE
    elif to_winners < to_losers:
        outcome = Outcome.WIN
    else:
        outcome = Outcome.LOSE
    pair = [to_winners, to_losers]
    return PredictionReport(
        outcome=outcome,
        rms_to_winners=to_winners,
        rms_to_losers=to_losers,
        rms_std_population=statistics.pstdev(pair),
        rms_std_sample=statistics.stdev(pair),
    )


def centroid_spread_stats(centroids: CentroidPair) -> dict[str, float]:
    """Average over strategies of the two-point std dev between centroids.

    For each strategy the winners' and losers' centroid values form a
    two-element sample; both std-dev conventions are reported.
    """
    population = []
    sample = []
    for i in range(len(STRATEGIES)):
        pair = [centroids.winners_avg.values[i], centroids.losers_avg.values[i]]
        population.append(statistics.pstdev(pair))
        sample.append(statistics.stdev(pair))
    n = len(STRATEGIES)
    return {
        "population": math.fsum(population) / n,
        "sample": math.fsum(sample) / n,
    }
