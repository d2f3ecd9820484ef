"""Frequency and interaction scoring over an occurrence index.

Frequency is plain occurrence counting; interaction sums a proximity
kernel over every couple of occurrences of two names within the same
unit.  Both are max-normalized per analysis scope, so the strongest
name and the strongest pair always score exactly 1.0.
"""

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .cast import OccurrenceIndex

KERNEL_KINDS = ("rectangular", "exponential")

DEFAULT_WINDOW = 60
DEFAULT_DECAY = 40.0


@dataclass(frozen=True)
class ProximityKernel:
    """Maps the token distance between two occurrences to a weight in [0,1]."""

    kind: str = "rectangular"
    window: int = DEFAULT_WINDOW
    decay_length: float = DEFAULT_DECAY

    def __post_init__(self):
        if self.kind not in KERNEL_KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.kind == "rectangular" and self.window < 1:
            raise ValueError("window must be >= 1")
        if self.kind == "exponential" and not self.decay_length > 0:
            raise ValueError("decay_length must be > 0")

    def describe(self) -> str:
        if self.kind == "rectangular":
            return f"rect(window={self.window})"
        return f"exp(decay={self.decay_length:g})"


@dataclass(frozen=True)
class AnalysisScope:
    """The units an analysis covers: all of them, or a single act."""

    unit_indices: frozenset[int]

    def __post_init__(self):
        if not self.unit_indices:
            raise ValueError("scope must contain at least one unit")

    @classmethod
    def whole(cls, unit_indices) -> "AnalysisScope":
        return cls(unit_indices=frozenset(unit_indices))

    @classmethod
    def single(cls, unit_index: int) -> "AnalysisScope":
        return cls(unit_indices=frozenset({unit_index}))


@dataclass(frozen=True)
class FrequencyTable:
    scores: dict[str, float]
    raw_counts: dict[str, int]

    def score(self, name: str) -> float:
        return self.scores.get(name, 0.0)


@dataclass(frozen=True)
class InteractionMatrix:
    """Symmetric pair scores; pairs with zero raw weight are simply absent."""

    scores: dict[tuple[str, str], float]
    raw_weights: dict[tuple[str, str], float]

    def score(self, a: str, b: str) -> float:
        return self.scores.get(_pair(a, b), 0.0)

    def raw(self, a: str, b: str) -> float:
        return self.raw_weights.get(_pair(a, b), 0.0)


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def proximity(delta: int, kernel: ProximityKernel) -> float:
    """Kernel weight for a token distance; the window boundary is inclusive."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    if kernel.kind == "rectangular":
        return 1.0 if delta <= kernel.window else 0.0
    return math.exp(-delta / kernel.decay_length)


def _check_scope(index: OccurrenceIndex, scope: AnalysisScope) -> list[int]:
    known = set(index.unit_indices)
    unknown = scope.unit_indices - known
    if unknown:
        raise ValueError(f"scope refers to unknown unit indices: {sorted(unknown)}")
    return sorted(scope.unit_indices)


def compute_frequency(index: OccurrenceIndex, scope: AnalysisScope) -> FrequencyTable:
    """Occurrence counts within scope, normalized to the maximum count."""
    units = _check_scope(index, scope)
    raw = {name: index.count(name, units) for name in index.names}
    top = max(raw.values(), default=0)
    if top == 0:
        scores = {name: 0.0 for name in raw}
    else:
        scores = {name: count / top for name, count in raw.items()}
    return FrequencyTable(scores=scores, raw_counts=raw)


def _rect_pair_weight(pos_a: list[int], pos_b: list[int], window: int) -> float:
    # Count couples within the window via bisection on the sorted lists.
    total = 0
    for p in pos_a:
        total += bisect_right(pos_b, p + window) - bisect_left(pos_b, p - window)
    return float(total)


def _exp_pair_weight(pos_a: list[int], pos_b: list[int], decay: float) -> float:
    # Merge both position lists in order, carrying exponentially decayed
    # running sums; each occurrence adds the other name's decayed mass.
    # Equivalent to summing exp(-|pa-pb|/decay) over all couples.
    events = sorted([(p, 0) for p in pos_a] + [(p, 1) for p in pos_b])
    sums = [0.0, 0.0]
    prev = None
    total = 0.0
    for pos, side in events:
        if prev is not None and pos != prev:
            d = math.exp(-(pos - prev) / decay)
            sums[0] *= d
            sums[1] *= d
        total += sums[1 - side]
        sums[side] += 1.0
        prev = pos
    return total


def compute_interaction(
    index: OccurrenceIndex, scope: AnalysisScope, kernel: ProximityKernel
) -> InteractionMatrix:
    """Sum kernel weights over occurrence couples of each name pair.

    Couples never cross unit boundaries; multi-token occurrences count
    from their first token.  Scores are the raw sums normalized to the
    maximum pair; untouched pairs are omitted (their score reads 0.0).
    """
    units = _check_scope(index, scope)
    names = index.names
    raw: dict[tuple[str, str], float] = {}
    for u in units:
        unit_occs = index.per_unit.get(u, {})
        present = [n for n in names if unit_occs.get(n)]
        positions = {n: [o.position for o in unit_occs[n]] for n in present}
        for i, a in enumerate(present):
            for b in present[i + 1 :]:
                if kernel.kind == "rectangular":
                    w = _rect_pair_weight(positions[a], positions[b], kernel.window)
                else:
                    w = _exp_pair_weight(positions[a], positions[b], kernel.decay_length)
                if w > 0.0:
                    key = _pair(a, b)
                    raw[key] = raw.get(key, 0.0) + w

    top = max(raw.values(), default=0.0)
    scores = {key: w / top for key, w in raw.items()} if top > 0 else {}
    return InteractionMatrix(scores=scores, raw_weights=raw)
