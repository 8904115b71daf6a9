"""Strategy probability profiles, RMS distances, and the profile store.

A profile holds, per strategy, the percentage of all detected strategy
instances that belong to that strategy (0..100, summing to 100 unless the
text contained no strategies at all, in which case the profile is flagged
degenerate). Distances between profiles are root-mean-square deviations
over the six percentages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import InsufficientCandidatesError, StoreError
from .finders import STRATEGIES, StrategyCounts, StrategyKind

PROFILE_COLUMNS = ("pDash", "pSemi", "pAllit", "pAna", "pEpi", "pPara")

_STORE_HEADER = ("label",) + PROFILE_COLUMNS
_COUNTS_HEADER = ("label",) + tuple(k.value for k in STRATEGIES) + ("sources",)


@dataclass(frozen=True)
class StrategyProfile:
    """Labeled vector of six strategy percentages."""

    label: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(STRATEGIES):
            raise ValueError(f"expected {len(STRATEGIES)} values, got {len(self.values)}")

    def __getitem__(self, kind: StrategyKind) -> float:
        return self.values[STRATEGIES.index(kind)]

    @property
    def degenerate(self) -> bool:
        """True when the source text contained no strategies at all."""
        return all(v == 0.0 for v in self.values)

    def relabeled(self, label: str) -> "StrategyProfile":
        return StrategyProfile(label, self.values)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(PROFILE_COLUMNS, self.values))


@dataclass(frozen=True)
class ProfileStoreRecord:
    """A stored profile plus the raw counts and source files behind it.

    Counts are optional: profiles imported from published percentage
    tables have no recoverable counts.
    """

    profile: StrategyProfile
    counts: StrategyCounts | None = None
    source_files: tuple[str, ...] = ()


def to_profile(label: str, counts: StrategyCounts) -> StrategyProfile:
    """Percentage profile of the counts: 100 * count / total per strategy.

    A zero total yields the all-zero profile, which reports itself as
    degenerate instead of raising.
    """
    total = counts.total
    if total == 0:
        return StrategyProfile(label, (0.0,) * 6)
    return StrategyProfile(
        label, tuple(100.0 * counts[k] / total for k in STRATEGIES)
    )


def rms(a: StrategyProfile, b: StrategyProfile) -> float:
    """Root-mean-square deviation between two profiles over six strategies."""
    return math.sqrt(
        sum((x - y) ** 2 for x, y in zip(a.values, b.values)) / len(STRATEGIES)
    )


def normalized_rms(
    target: StrategyProfile, candidates: Sequence[StrategyProfile]
) -> dict[str, float]:
    """Per-candidate RMS to the target, scaled by the candidate spread.

    Each candidate's RMS is divided by (max RMS - min RMS) over the set
    and expressed as a percent. The value is not bounded by 100. When all
    candidates are equidistant the spread is zero and every normalized
    value is defined as 0.
    """
    if len(candidates) < 2:
        raise InsufficientCandidatesError("insufficient candidates for normalization")
    errors = {c.label: rms(target, c) for c in candidates}
    spread = max(errors.values()) - min(errors.values())
    if spread == 0.0:
        return {label: 0.0 for label in errors}
    return {label: 100.0 * e / spread for label, e in errors.items()}


def similarity(normalized_rms_percent: float) -> float:
    """Similarity percent: 100 minus the normalized RMS error.

    May be negative, since normalized RMS is unbounded above.
    """
    return 100.0 - normalized_rms_percent


def _counts_sidecar_path(path: Path) -> Path:
    if path.suffix:
        return path.with_name(path.stem + ".counts" + path.suffix)
    return path.with_name(path.name + ".counts")


def store_save(records: Sequence[ProfileStoreRecord], path: str | Path) -> None:
    """Write records as a TSV profile table plus an optional counts sidecar.

    Percentages are serialized with full round-trip precision. Raises
    StoreError on duplicate labels.
    """
    path = Path(path)
    seen: set[str] = set()
    for record in records:
        if record.profile.label in seen:
            raise StoreError(f"duplicate profile label {record.profile.label!r}")
        seen.add(record.profile.label)

    lines = ["\t".join(_STORE_HEADER)]
    for record in records:
        lines.append(
            "\t".join([record.profile.label] + [repr(v) for v in record.profile.values])
        )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    with_extras = [r for r in records if r.counts is not None or r.source_files]
    sidecar = _counts_sidecar_path(path)
    if not with_extras:
        if sidecar.exists():
            sidecar.unlink()
        return
    lines = ["\t".join(_COUNTS_HEADER)]
    for record in with_extras:
        counts = record.counts
        cells = [record.profile.label]
        cells += ["" if counts is None else str(counts[k]) for k in STRATEGIES]
        cells.append(",".join(record.source_files))
        lines.append("\t".join(cells))
    sidecar.write_text("\n".join(lines) + "\n", encoding="utf-8")


def store_load(path: str | Path) -> list[ProfileStoreRecord]:
    """Load a profile store written by store_save (sidecar optional)."""
    path = Path(path)
    profiles = _load_profile_table(path)
    extras = _load_counts_sidecar(_counts_sidecar_path(path))
    records = []
    for label, values in profiles:
        counts, sources = extras.get(label, (None, ()))
        profile = StrategyProfile(label, values)
        if counts is not None:
            recomputed = to_profile(label, counts)
            if any(
                abs(a - b) > 1e-9 for a, b in zip(recomputed.values, profile.values)
            ):
                raise StoreError(
                    f"{path}: stored profile for {label!r} does not match its counts"
                )
        records.append(
            ProfileStoreRecord(profile=profile, counts=counts, source_files=sources)
        )
    return records


def _load_profile_table(path: Path) -> list[tuple[str, tuple[float, ...]]]:
    rows: list[tuple[str, tuple[float, ...]]] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            cells = line.split("\t")
            if lineno == 1:
                if tuple(cells) != _STORE_HEADER:
                    raise StoreError(
                        f"{path}:1: bad header, expected {' '.join(_STORE_HEADER)}"
                    )
                continue
            if len(cells) != len(_STORE_HEADER):
                raise StoreError(
                    f"{path}:{lineno}: expected {len(_STORE_HEADER)} columns, "
                    f"got {len(cells)}"
                )
            label = cells[0]
            if label in seen:
                raise StoreError(f"{path}:{lineno}: duplicate profile label {label!r}")
            seen.add(label)
            try:
                values = tuple(float(cell) for cell in cells[1:])
            except ValueError as exc:
                raise StoreError(f"{path}:{lineno}: {exc}") from None
            rows.append((label, values))
    return rows


def _load_counts_sidecar(
    sidecar: Path,
) -> dict[str, tuple[StrategyCounts | None, tuple[str, ...]]]:
    if not sidecar.exists():
        return {}
    extras: dict[str, tuple[StrategyCounts | None, tuple[str, ...]]] = {}
    with open(sidecar, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            cells = line.split("\t")
            if lineno == 1:
                if tuple(cells) != _COUNTS_HEADER:
                    raise StoreError(f"{sidecar}:1: bad counts header")
                continue
            if len(cells) != len(_COUNTS_HEADER):
                raise StoreError(f"{sidecar}:{lineno}: wrong column count")
            label = cells[0]
            count_cells = cells[1:7]
            if all(cell == "" for cell in count_cells):
                counts = None
            else:
                try:
                    counts = StrategyCounts(*(int(cell) for cell in count_cells))
                except ValueError as exc:
                    raise StoreError(f"{sidecar}:{lineno}: {exc}") from None
            sources = tuple(s for s in cells[7].split(",") if s)
            extras[label] = (counts, sources)
    return extras
