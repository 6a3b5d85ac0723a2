"""Aggregation of acts described on per-criterion utility scales.

An act gives one entry per criterion: either a named level on that
criterion's scale or a raw number. Scales must pin the two reference
levels, "neutral" at 0 and "good" at 1, which is what ties the utilities
to the capacity: the capacity value of a subset A is by construction the
aggregate of the binary act that is good on A and neutral elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import subsets
from .errors import (
    CapacitiesError,
    DimensionMismatch,
    InvalidFormat,
    NonPositiveSingleton,
    UnknownLevel,
)
from .integrals import EXTENSION_NAMES, make_extension
from .set_function import DEFAULT_TOL, Capacity, as_capacity, capacity_from_dict

__all__ = [
    "NEUTRAL",
    "GOOD",
    "UtilityScale",
    "default_scale",
    "Act",
    "AggregationModel",
    "RankedAct",
    "capacity_from_binary_acts",
    "evaluate_act",
    "rank_acts",
    "model_from_dict",
    "acts_from_obj",
]

NEUTRAL = "neutral"
GOOD = "good"


@dataclass(frozen=True)
class UtilityScale:
    """Named utility levels for one criterion.

    The reference levels are mandatory and pinned: neutral at exactly 0
    and good at exactly 1. Anything else (including levels above good or
    below neutral) is free.
    """

    criterion: int
    levels: dict

    def __post_init__(self):
        if not isinstance(self.criterion, int) or self.criterion < 1:
            raise InvalidFormat("criterion must be a 1-based index, got %r" % (self.criterion,))
        levels = dict(self.levels)
        for name, value in levels.items():
            if not isinstance(name, str):
                raise InvalidFormat("level names must be strings, got %r" % (name,))
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidFormat("level %r must map to a number, got %r" % (name, value))
            levels[name] = float(value)
        if levels.get(NEUTRAL) != 0.0:
            raise InvalidFormat(
                'scale for criterion %d must map "%s" to 0' % (self.criterion, NEUTRAL)
            )
        if levels.get(GOOD) != 1.0:
            raise InvalidFormat(
                'scale for criterion %d must map "%s" to 1' % (self.criterion, GOOD)
            )
        object.__setattr__(self, "levels", levels)

    def utility(self, level: str) -> float:
        try:
            return self.levels[level]
        except KeyError:
            raise UnknownLevel(self.criterion, level) from None


def default_scale(criterion: int) -> UtilityScale:
    return UtilityScale(criterion, {NEUTRAL: 0.0, GOOD: 1.0})


@dataclass(frozen=True)
class Act:
    """One entry per criterion: a level name or a raw utility number."""

    entries: tuple
    label: str = ""

    def __post_init__(self):
        entries = tuple(self.entries)
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, (str, int, float)):
                raise InvalidFormat("act entries must be level names or numbers, got %r" % (e,))
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True, eq=False)
class AggregationModel:
    """A capacity, an extension selector, and the per-criterion scales.

    The capacity must give every singleton strictly positive weight,
    otherwise differences on that criterion could never matter and the
    scale construction loses its meaning. Missing scales default to the
    minimal neutral/good scale. The cpt extension takes the loss-side
    capacity in ``capacity_losses``; every other extension must leave it
    unset.
    """

    capacity: Capacity
    extension: str
    scales: tuple = ()
    capacity_losses: Capacity | None = None

    def __post_init__(self):
        if self.extension not in EXTENSION_NAMES:
            raise InvalidFormat(
                "unknown extension %r, expected one of %s"
                % (self.extension, ", ".join(EXTENSION_NAMES))
            )
        n = self.capacity.n
        for i in range(n):
            w = float(self.capacity.values[1 << i])
            if not w > 0.0:
                raise NonPositiveSingleton(i + 1, w)
        by_criterion = {}
        for scale in self.scales:
            if not isinstance(scale, UtilityScale):
                raise InvalidFormat("scales must be UtilityScale objects, got %r" % (scale,))
            if scale.criterion > n:
                raise DimensionMismatch(
                    "scale for criterion %d but the capacity has n = %d" % (scale.criterion, n)
                )
            if scale.criterion in by_criterion:
                raise InvalidFormat("duplicate scale for criterion %d" % scale.criterion)
            by_criterion[scale.criterion] = scale
        full = tuple(
            by_criterion.get(i, default_scale(i)) for i in range(1, n + 1)
        )
        object.__setattr__(self, "scales", full)
        evaluator = make_extension(
            self.extension,
            self.capacity,
            self.capacity_losses if self.extension == "cpt" else None,
        )
        if self.extension != "cpt" and self.capacity_losses is not None:
            raise CapacitiesError("only the cpt extension takes capacity_losses")
        object.__setattr__(self, "_evaluator", evaluator)

    @property
    def n(self) -> int:
        return self.capacity.n


def capacity_from_binary_acts(n: int, attractiveness) -> Capacity:
    """Build the capacity from the aggregates of the good-on-A binary acts.

    ``attractiveness`` maps every subset of N (as a mask, an iterable of
    indices, or a canonical comma key) to a real value; the empty set must
    map to 0 and N to 1, the map must be monotone, and every singleton
    strictly positive. Raises the matching validation error otherwise.
    """
    subsets.check_n(n)
    size = 1 << n
    vals = np.empty(size)
    seen = np.zeros(size, dtype=bool)
    for key, value in attractiveness.items():
        if isinstance(key, str):
            mask = subsets.parse_subset_key(key, n)
        elif isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < size:
                raise InvalidFormat("subset mask %d out of range for n = %d" % (key, n))
            mask = key
        else:
            mask = subsets.mask_of(key, n)
        if seen[mask]:
            raise InvalidFormat("duplicate entry for subset {%s}" % subsets.subset_key(mask))
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidFormat(
                "attractiveness of {%s} must be a number, got %r"
                % (subsets.subset_key(mask), value)
            )
        seen[mask] = True
        vals[mask] = float(value)
    if not seen.all():
        missing = int(np.argmin(seen))
        raise InvalidFormat(
            "missing attractiveness for subset {%s} (all %d subsets are required)"
            % (subsets.subset_key(missing), size)
        )
    return as_capacity(vals, n=n, require_positive_singletons=True)


def _utilities(model: AggregationModel, act) -> np.ndarray:
    if not isinstance(act, Act):
        act = Act(tuple(act))
    n = model.n
    if len(act.entries) != n:
        raise DimensionMismatch(
            "act has %d entries but the model has %d criteria" % (len(act.entries), n)
        )
    out = np.empty(n)
    for i, entry in enumerate(act.entries):
        if isinstance(entry, str):
            out[i] = model.scales[i].utility(entry)
        else:
            out[i] = float(entry)
    return out


def evaluate_act(model: AggregationModel, act) -> float:
    """Aggregate one act with the model's extension."""
    return float(model._evaluator(_utilities(model, act)))


@dataclass(frozen=True)
class RankedAct:
    position: int
    index: int
    act: Act
    score: float
    indifferent_to_previous: bool

    def to_dict(self) -> dict:
        return {
            "position": self.position,
            "index": self.index,
            "label": self.act.label,
            "entries": list(self.act.entries),
            "score": self.score,
            "indifferent_to_previous": self.indifferent_to_previous,
        }


def rank_acts(model: AggregationModel, acts, tol: float = DEFAULT_TOL) -> list:
    """Rank acts by descending aggregate.

    Adjacent scores within ``tol`` of each other form an indifference
    chain: within a chain acts keep their input order and all but the
    first are flagged. The result is a list of :class:`RankedAct`.
    """
    acts = [a if isinstance(a, Act) else Act(tuple(a)) for a in acts]
    if not acts:
        raise CapacitiesError("no acts to rank")
    scored = [(evaluate_act(model, a), k) for k, a in enumerate(acts)]
    order = sorted(range(len(acts)), key=lambda k: (-scored[k][0], k))
    groups = []
    for k in order:
        score = scored[k][0]
        if groups and groups[-1][-1][0] - score <= tol:
            groups[-1].append((score, k))
        else:
            groups.append([(score, k)])
    out = []
    position = 0
    for group in groups:
        group.sort(key=lambda item: item[1])
        for j, (score, k) in enumerate(group):
            position += 1
            out.append(
                RankedAct(
                    position=position,
                    index=k,
                    act=acts[k],
                    score=score,
                    indifferent_to_previous=j > 0,
                )
            )
    return out


def model_from_dict(obj) -> AggregationModel:
    """Parse the model schema.

    Required: "capacity" (capacity schema) and "extension" (one of the
    extension names). Optional: "capacity2" for cpt and "scales", an
    object keyed by criterion number whose values map level names to
    utilities.
    """
    if not isinstance(obj, dict):
        raise InvalidFormat("model must be a JSON object, got %r" % type(obj).__name__)
    if "capacity" not in obj:
        raise InvalidFormat('model is missing the "capacity" field')
    if "extension" not in obj:
        raise InvalidFormat('model is missing the "extension" field')
    capacity = capacity_from_dict(obj["capacity"], require_positive_singletons=True)
    losses = None
    if obj.get("capacity2") is not None:
        losses = capacity_from_dict(obj["capacity2"])
    scales = []
    raw_scales = obj.get("scales", {})
    if not isinstance(raw_scales, dict):
        raise InvalidFormat('"scales" must be an object keyed by criterion number')
    for key, levels in raw_scales.items():
        try:
            criterion = int(key)
        except (TypeError, ValueError):
            raise InvalidFormat("scale key %r is not a criterion number" % (key,)) from None
        if not isinstance(levels, dict):
            raise InvalidFormat("scale %r must map level names to numbers" % (key,))
        scales.append(UtilityScale(criterion, levels))
    return AggregationModel(
        capacity=capacity,
        extension=obj["extension"],
        scales=tuple(scales),
        capacity_losses=losses,
    )


def acts_from_obj(obj) -> list:
    """Parse an acts file: a JSON array of acts.

    Each act is either an array of entries or an object with "entries"
    and an optional "label".
    """
    if not isinstance(obj, list):
        raise InvalidFormat("acts must be a JSON array")
    acts = []
    for k, item in enumerate(obj):
        if isinstance(item, list):
            acts.append(Act(tuple(item)))
        elif isinstance(item, dict):
            if "entries" not in item:
                raise InvalidFormat('act %d is missing "entries"' % k)
            if not isinstance(item["entries"], list):
                raise InvalidFormat('act %d: "entries" must be an array' % k)
            label = item.get("label", "")
            if not isinstance(label, str):
                raise InvalidFormat('act %d: "label" must be a string' % k)
            acts.append(Act(tuple(item["entries"]), label=label))
        else:
            raise InvalidFormat("act %d must be an array or an object" % k)
    return acts
