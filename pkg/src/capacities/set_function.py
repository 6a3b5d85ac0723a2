"""Set functions, capacities, and the Mobius-family transforms.

A set function assigns a real value to every subset of the criteria set
N = {1, ..., n} and is stored densely as a float vector of length 2**n
indexed by bitmask (see :mod:`capacities.subsets`). A capacity is a
validated set function: normalized (mu(empty) = 0, mu(N) = 1) and
monotone with respect to set inclusion.

Three coefficient-domain representations are provided, each with its
transform from the value domain:

* ``mobius``: the alternating-sum transform whose inverse ``zeta``
  accumulates coefficients over subsets, so v(A) = sum of m(B) for B
  inside A.
* ``co_mobius``: the complement-based variant, summing v(N - B) with
  alternating signs over B inside A.
* ``ordinal_mobius``: the max-based variant for capacities, keeping
  mu(A) where A is a strict local maximizer and 0 elsewhere, so mu(A)
  is the maximum of the kept coefficients inside A.

All transforms run in O(n * 2**n) with in-place vectorized butterflies;
n is capped at 24 to keep the dense tables reasonable.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import Union

import numpy as np

from . import subsets
from .errors import (
    DimensionMismatch,
    InvalidFormat,
    NonPositiveSingleton,
    NotMonotone,
    NotNormalized,
)

DEFAULT_TOL = 1e-9

__all__ = [
    "DEFAULT_TOL",
    "SetFunction",
    "Capacity",
    "MobiusRepr",
    "CoMobiusRepr",
    "OrdinalMobiusRepr",
    "ValidationResult",
    "mobius",
    "zeta",
    "co_mobius",
    "ordinal_mobius",
    "ordinal_zeta",
    "conjugate",
    "validate",
    "as_capacity",
    "to_dict",
    "vector_from_dict",
    "set_function_from_dict",
    "capacity_from_dict",
]


def _coerce_vector(n: int, values, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionMismatch("%s must be a flat vector, got shape %s" % (what, arr.shape))
    if arr.shape[0] != (1 << n):
        raise DimensionMismatch(
            "%s must have length 2**%d = %d, got %d" % (what, n, 1 << n, arr.shape[0])
        )
    if not np.all(np.isfinite(arr)):
        raise InvalidFormat("%s must contain only finite numbers" % what)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class SetFunction:
    """Real-valued function on subsets of N with v(empty) = 0."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        subsets.check_n(self.n)
        arr = _coerce_vector(self.n, self.values, "values")
        if arr[0] != 0.0:
            raise NotNormalized("v(empty) must be exactly 0, got %.17g" % arr[0])
        object.__setattr__(self, "values", arr)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __getitem__(self, mask: int) -> float:
        return float(self.values[mask])


@dataclass(frozen=True, eq=False)
class Capacity:
    """Normalized monotone set function.

    Construction validates the invariants and raises the matching error
    (:class:`NotNormalized`, :class:`NotMonotone`, or, when
    ``strictly_positive_singletons`` is set, :class:`NonPositiveSingleton`).
    ``tol`` is the absolute slack allowed on normalization and
    monotonicity; it is not stored.
    """

    base: SetFunction
    strictly_positive_singletons: bool = False
    tol: InitVar[float] = DEFAULT_TOL

    def __post_init__(self, tol: float):
        err = _first_capacity_violation(self.base, tol, self.strictly_positive_singletons)
        if err is not None:
            raise err

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def values(self) -> np.ndarray:
        return self.base.values

    @property
    def full_mask(self) -> int:
        return self.base.full_mask

    def __getitem__(self, mask: int) -> float:
        return float(self.base.values[mask])


@dataclass(frozen=True, eq=False)
class MobiusRepr:
    """Coefficients of the alternating-sum transform; zeta inverts them."""

    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        subsets.check_n(self.n)
        arr = _coerce_vector(self.n, self.coefficients, "coefficients")
        if arr[0] != 0.0:
            raise NotNormalized("m(empty) must be exactly 0, got %.17g" % arr[0])
        object.__setattr__(self, "coefficients", arr)

    def __getitem__(self, mask: int) -> float:
        return float(self.coefficients[mask])


@dataclass(frozen=True, eq=False)
class CoMobiusRepr:
    """Coefficients of the complement-based transform.

    Unlike the plain Mobius coefficients these need not vanish on the
    empty set: the coefficient at empty equals v(N).
    """

    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        subsets.check_n(self.n)
        arr = _coerce_vector(self.n, self.coefficients, "coefficients")
        object.__setattr__(self, "coefficients", arr)

    def __getitem__(self, mask: int) -> float:
        return float(self.coefficients[mask])


@dataclass(frozen=True, eq=False)
class OrdinalMobiusRepr:
    """Nonnegative coefficients of the max-based transform of a capacity."""

    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        subsets.check_n(self.n)
        arr = _coerce_vector(self.n, self.coefficients, "coefficients")
        if arr[0] != 0.0:
            raise NotNormalized("coefficient at empty must be exactly 0, got %.17g" % arr[0])
        if np.any(arr < 0.0):
            bad = int(np.argmax(arr < 0.0))
            raise InvalidFormat(
                "ordinal coefficients must be nonnegative, got %.17g at {%s}"
                % (arr[bad], subsets.subset_key(bad))
            )
        object.__setattr__(self, "coefficients", arr)

    def __getitem__(self, mask: int) -> float:
        return float(self.coefficients[mask])


ValueFunction = Union[SetFunction, Capacity]


def _as_values(v: ValueFunction) -> tuple[int, np.ndarray]:
    if isinstance(v, Capacity):
        return v.n, v.base.values
    if isinstance(v, SetFunction):
        return v.n, v.values
    raise TypeError("expected SetFunction or Capacity, got %r" % type(v).__name__)


# In-place subset-lattice butterflies. Writing the upper half of each
# 2*bit block in terms of the lower half visits every (A, A | bit) pair
# exactly once, hence O(n * 2**n) overall.


def _subset_acc(a: np.ndarray, n: int) -> None:
    for i in range(n):
        bit = 1 << i
        blocks = a.reshape(-1, 2 * bit)
        blocks[:, bit:] += blocks[:, :bit]


def _subset_diff(a: np.ndarray, n: int) -> None:
    for i in range(n):
        bit = 1 << i
        blocks = a.reshape(-1, 2 * bit)
        blocks[:, bit:] -= blocks[:, :bit]


def _subset_max(a: np.ndarray, n: int) -> None:
    for i in range(n):
        bit = 1 << i
        blocks = a.reshape(-1, 2 * bit)
        np.maximum(blocks[:, bit:], blocks[:, :bit], out=blocks[:, bit:])


def mobius(v: ValueFunction) -> MobiusRepr:
    """Alternating-sum coefficients m(A) = sum over B in A of (-1)^|A-B| v(B)."""
    n, vals = _as_values(v)
    a = vals.copy()
    _subset_diff(a, n)
    return MobiusRepr(n, a)


def zeta(m: MobiusRepr) -> SetFunction:
    """Inverse of :func:`mobius`: v(A) = sum over B in A of m(B)."""
    a = m.coefficients.copy()
    _subset_acc(a, m.n)
    return SetFunction(m.n, a)


def co_mobius(v: ValueFunction) -> CoMobiusRepr:
    """Complement-based coefficients sum over B in A of (-1)^|B| v(N - B).

    Computed by reversing the value table (mask of N - B is the bitwise
    complement of B) and reusing the plain Mobius butterfly, which differs
    from the target sum only by the sign (-1)^|A|.
    """
    n, vals = _as_values(v)
    a = vals[::-1].copy()
    _subset_diff(a, n)
    sign = np.where(subsets.popcounts(n) % 2 == 0, 1.0, -1.0)
    return CoMobiusRepr(n, a * sign)


def ordinal_mobius(mu: ValueFunction) -> OrdinalMobiusRepr:
    """Max-based coefficients: mu(A) where A is a strict step, else 0.

    A subset keeps its value exactly when removing any single member
    strictly decreases it. Intended for capacities (and more generally
    nonnegative monotone tables), for which the table is recovered as the
    maximum kept coefficient over subsets (:func:`ordinal_zeta`).
    """
    n, vals = _as_values(mu)
    keep = np.ones(1 << n, dtype=bool)
    for i in range(n):
        bit = 1 << i
        vb = vals.reshape(-1, 2 * bit)
        kb = keep.reshape(-1, 2 * bit)
        kb[:, bit:] &= vb[:, bit:] > vb[:, :bit]
    return OrdinalMobiusRepr(n, np.where(keep, vals, 0.0))


def ordinal_zeta(m: OrdinalMobiusRepr) -> SetFunction:
    """Recover the value table: v(A) = max over B in A of the coefficients."""
    a = m.coefficients.copy()
    _subset_max(a, m.n)
    return SetFunction(m.n, a)


def conjugate(v: ValueFunction):
    """Conjugate set function v(N) - v(N - A); an involution.

    Conjugating a :class:`Capacity` yields a :class:`Capacity` (the
    strict-singleton flag is not carried over, since it is not preserved).
    """
    n, vals = _as_values(v)
    out = vals[-1] - vals[::-1]
    if isinstance(v, Capacity):
        return Capacity(SetFunction(n, out))
    return SetFunction(n, out)


def _first_monotonicity_violation(vals: np.ndarray, n: int, tol: float):
    """First (mask, criterion) pair with v(mask | bit) < v(mask) - tol.

    Ordered by mask, then by criterion index, so diagnostics are stable.
    """
    best = None
    for i in range(n):
        bit = 1 << i
        blocks = vals.reshape(-1, 2 * bit)
        bad = np.argwhere(blocks[:, :bit] - blocks[:, bit:] > tol)
        if bad.size:
            row, col = bad[0]
            mask = int(row) * 2 * bit + int(col)
            if best is None or (mask, i) < (best[0], best[1]):
                best = (mask, i, float(vals[mask]), float(vals[mask | bit]))
    return best


def _first_capacity_violation(sf: SetFunction, tol: float, require_positive_singletons: bool):
    vals = sf.values
    if abs(vals[-1] - 1.0) > tol:
        return NotNormalized("mu(N) must be 1 within %g, got %.17g" % (tol, vals[-1]))
    hit = _first_monotonicity_violation(vals, sf.n, tol)
    if hit is not None:
        mask, i, lo, hi = hit
        return NotMonotone(subsets.subset_key(mask), i + 1, lo, hi)
    if require_positive_singletons:
        for i in range(sf.n):
            w = float(vals[1 << i])
            if not w > 0.0:
                return NonPositiveSingleton(i + 1, w)
    return None


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of :func:`validate`.

    ``error`` carries the first violated constraint (the exception that
    :func:`as_capacity` would raise), naming the offending subset pair or
    singleton. ``strictly_monotone`` and ``additive`` are informational
    flags, reported whenever the value table itself is well formed.
    """

    ok: bool
    capacity: Capacity | None
    error: Exception | None
    strictly_monotone: bool
    additive: bool


def _diagnostic_flags(vals: np.ndarray, n: int, tol: float) -> tuple[bool, bool]:
    strict = True
    for i in range(n):
        bit = 1 << i
        blocks = vals.reshape(-1, 2 * bit)
        if not np.all(blocks[:, bit:] > blocks[:, :bit]):
            strict = False
            break
    m = vals.copy()
    _subset_diff(m, n)
    additive = bool(np.all(np.abs(m[subsets.popcounts(n) >= 2]) <= tol))
    return strict, additive


def validate(
    v,
    n: int | None = None,
    require_positive_singletons: bool = False,
    tol: float = DEFAULT_TOL,
) -> ValidationResult:
    """Check the capacity axioms on a set function or a raw value table.

    Accepts a :class:`SetFunction`, a :class:`Capacity`, or a raw vector of
    length 2**n (``n`` inferred from the length when omitted). Never raises
    for axiom violations; malformed vectors (wrong length, non-finite
    entries) do raise.
    """
    if isinstance(v, (SetFunction, Capacity)):
        _, vals = _as_values(v)
        sf = v.base if isinstance(v, Capacity) else v
    else:
        arr = np.asarray(v, dtype=np.float64)
        if n is None:
            if arr.ndim != 1 or arr.shape[0] < 2 or arr.shape[0] & (arr.shape[0] - 1):
                raise DimensionMismatch(
                    "value table length must be a power of two, got shape %s" % (arr.shape,)
                )
            n = arr.shape[0].bit_length() - 1
        vals = _coerce_vector(subsets.check_n(n), arr, "values")
        if vals[0] != 0.0:
            strict, additive = _diagnostic_flags(vals, n, tol)
            return ValidationResult(
                False,
                None,
                NotNormalized("mu(empty) must be 0, got %.17g" % vals[0]),
                strict,
                additive,
            )
        sf = SetFunction(n, vals)
    err = _first_capacity_violation(sf, tol, require_positive_singletons)
    strict, additive = _diagnostic_flags(vals, sf.n, tol)
    if err is not None:
        return ValidationResult(False, None, err, strict, additive)
    cap = Capacity(sf, strictly_positive_singletons=require_positive_singletons, tol=tol)
    return ValidationResult(True, cap, None, strict, additive)


def as_capacity(
    v,
    n: int | None = None,
    require_positive_singletons: bool = False,
    tol: float = DEFAULT_TOL,
) -> Capacity:
    """Like :func:`validate` but raises the first violated constraint."""
    result = validate(v, n=n, require_positive_singletons=require_positive_singletons, tol=tol)
    if not result.ok:
        raise result.error
    return result.capacity


# -- JSON schema ---------------------------------------------------------
#
# Canonical form: {"n": 2, "values_by_mask": [0.0, 0.3, 0.6, 1.0]} with
# index = bitmask. The sparse-looking alternative keys every subset by its
# comma-joined member list: {"n": 2, "values": {"": 0.0, "1": 0.3, ...}};
# all 2**n keys are required.


def to_dict(v) -> dict:
    """Canonical JSON-ready dict for any of the table-backed types."""
    if isinstance(v, (SetFunction, Capacity)):
        n, vals = _as_values(v)
    elif isinstance(v, (MobiusRepr, CoMobiusRepr, OrdinalMobiusRepr)):
        n, vals = v.n, v.coefficients
    else:
        raise TypeError("cannot serialize %r" % type(v).__name__)
    return {"n": n, "values_by_mask": [float(x) for x in vals]}


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InvalidFormat("%s must be a number, got %r" % (where, x))
    return float(x)


def vector_from_dict(obj) -> tuple[int, np.ndarray]:
    """Parse ``{"n": ..., "values_by_mask": [...]}`` or the keyed form."""
    if not isinstance(obj, dict):
        raise InvalidFormat("expected a JSON object, got %r" % type(obj).__name__)
    if "n" not in obj:
        raise InvalidFormat('missing required field "n"')
    n = subsets.check_n(obj["n"])
    size = 1 << n
    dense = obj.get("values_by_mask")
    keyed = obj.get("values")
    if (dense is None) == (keyed is None):
        raise InvalidFormat('give exactly one of "values_by_mask" or "values"')
    if dense is not None:
        if not isinstance(dense, list) or len(dense) != size:
            raise InvalidFormat('"values_by_mask" must be a list of length 2**%d = %d' % (n, size))
        arr = np.array([_number(x, '"values_by_mask" entry') for x in dense])
        return n, arr
    if not isinstance(keyed, dict):
        raise InvalidFormat('"values" must be an object keyed by subsets')
    arr = np.empty(size)
    seen = np.zeros(size, dtype=bool)
    for key, val in keyed.items():
        if not isinstance(key, str):
            raise InvalidFormat("subset keys must be strings, got %r" % (key,))
        mask = subsets.parse_subset_key(key, n)
        if seen[mask]:
            raise InvalidFormat("duplicate subset key for {%s}" % subsets.subset_key(mask))
        seen[mask] = True
        arr[mask] = _number(val, 'value for subset "%s"' % key)
    if not seen.all():
        missing = int(np.argmin(seen))
        raise InvalidFormat(
            'missing value for subset "%s" (all %d subsets are required)'
            % (subsets.subset_key(missing), size)
        )
    return n, arr


def set_function_from_dict(obj) -> SetFunction:
    n, arr = vector_from_dict(obj)
    return SetFunction(n, arr)


def capacity_from_dict(
    obj, require_positive_singletons: bool = False, tol: float = DEFAULT_TOL
) -> Capacity:
    n, arr = vector_from_dict(obj)
    return as_capacity(arr, n=n, require_positive_singletons=require_positive_singletons, tol=tol)
