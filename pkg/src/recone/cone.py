"""Membership and ray decomposition for the monotonicity cone.

The cone consists of all vectors, indexed by the nonempty subsets of [n],
that are nonnegative and monotone under restriction (v_S >= v_S' whenever
S contains S').  Its extremal rays are the 0/1 indicator vectors of
up-sets, so every member splits canonically into a positive combination of
nested up-set indicators: the layer cake over its level sets.

Values are in bits.  Entries may be ints, Fractions or floats; +inf (as
math.inf) is allowed for membership checks but not for decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .lattice import UpSet, is_upset, proper_submasks, subsets_in_order

#: relative gap under which two float levels are considered one level
LEVEL_MERGE_RTOL = 1e-12


class NotInConeError(ValueError):
    """Operation requires a cone member; carries the membership report."""

    def __init__(self, report):
        super().__init__("vector is not in the monotonicity cone")
        self.report = report


class InfiniteEntryError(ValueError):
    """Operation requires a finite vector."""


@lru_cache(maxsize=None)
def _index_of(n: int) -> dict[int, int]:
    return {mask: i for i, mask in enumerate(subsets_in_order(n))}


@dataclass(frozen=True)
class REVector:
    """One extended nonnegative real per nonempty subset, in canonical
    coordinate order (cardinality, then party tuple)."""

    n: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        expected = (1 << self.n) - 1
        if len(self.values) != expected:
            raise ValueError(f"need {expected} entries for n={self.n}, got {len(self.values)}")
        for v in self.values:
            if isinstance(v, float) and math.isnan(v):
                raise ValueError("NaN entry")
            if v < 0:
                raise ValueError(f"negative entry {v}")

    @classmethod
    def from_mapping(cls, n: int, mapping) -> "REVector":
        order = subsets_in_order(n)
        if set(mapping) != set(order):
            raise ValueError("mapping must cover every nonempty subset exactly once")
        return cls(n, tuple(mapping[m] for m in order))

    @classmethod
    def indicator(cls, u: UpSet) -> "REVector":
        return cls(u.n, u.indicator_values())

    def value(self, mask: int):
        return self.values[_index_of(self.n)[mask]]

    def entries(self):
        return zip(subsets_in_order(self.n), self.values)

    def is_finite(self) -> bool:
        return all(v != math.inf for v in self.values)

    def __add__(self, other: "REVector") -> "REVector":
        if not isinstance(other, REVector) or other.n != self.n:
            return NotImplemented
        return REVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, coefficient) -> "REVector":
        if coefficient < 0:
            raise ValueError("coefficient must be nonnegative")
        return REVector(self.n, tuple(coefficient * v for v in self.values))


class Violation(NamedTuple):
    superset: int
    subset: int
    v_superset: object
    v_subset: object


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    violations: tuple[Violation, ...]
    infinite_part_ok: bool


def check_membership(v: REVector, tol: float = 0.0) -> MembershipReport:
    """Test cone membership, listing every failed comparable pair.

    A pair (S, S') with S' a proper subset of S violates monotonicity when
    v_S < v_S' - tol; only finite entries are compared.  The subsets
    carrying +inf must themselves form an up-set (vacuously fine when
    there are none).
    """
    infinite = {m for m, val in v.entries() if val == math.inf}
    infinite_ok = not infinite or is_upset(infinite, v.n)
    violations = []
    for mask in subsets_in_order(v.n):
        vs = v.value(mask)
        if vs == math.inf:
            continue
        for sub in proper_submasks(mask):
            vsub = v.value(sub)
            if vsub == math.inf:
                continue
            # exact comparison when tol == 0 so Fractions never round through float
            if vs < vsub if tol == 0 else vs < vsub - tol:
                violations.append(Violation(mask, sub, vs, vsub))
    violations.sort(key=lambda x: (x.superset, x.subset))
    return MembershipReport(member=not violations and infinite_ok,
                            violations=tuple(violations),
                            infinite_part_ok=infinite_ok)


@dataclass(frozen=True)
class RayDecomposition:
    """Positive combination of nested up-set indicators, innermost first."""

    n: int
    terms: tuple  # ((coefficient, UpSet), ...) with strictly growing up-sets

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        prev = None
        for coeff, upset in self.terms:
            if not coeff > 0:
                raise ValueError(f"coefficient must be positive, got {coeff}")
            if upset.n != self.n:
                raise ValueError("up-set party count mismatch")
            if prev is not None and not prev.members < upset.members:
                raise ValueError("up-sets must be strictly nested, innermost first")
            prev = upset


def _is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _merged_levels(values, exact: bool):
    """Map each distinct value to a level representative.

    Exact values keep their identity; floats within LEVEL_MERGE_RTOL
    (relative) collapse onto the largest value of their group so rounding
    noise cannot split one level into several spurious rays.
    """
    distinct = sorted(set(values), reverse=True)
    rep_of = {}
    group_rep = None
    for val in distinct:
        if exact or group_rep is None or \
                group_rep - val > LEVEL_MERGE_RTOL * max(abs(group_rep), abs(val)):
            group_rep = val
        rep_of[val] = group_rep
    return rep_of


def layer_cake_decompose(v: REVector) -> RayDecomposition:
    """Split a finite cone member over its level sets.

    With t_1 > ... > t_k the distinct positive levels, the i-th term is
    (t_i - t_{i+1}) times the indicator of {S : v_S >= t_i}; monotonicity
    makes every level set an up-set.  The zero vector decomposes into no
    terms.
    """
    report = check_membership(v)
    if not report.member:
        raise NotInConeError(report)
    if not v.is_finite():
        raise InfiniteEntryError("decomposition is defined for finite vectors only")
    exact = all(_is_exact(x) for x in v.values)
    rep_of = _merged_levels(v.values, exact)
    levels = sorted({r for r in rep_of.values() if r > 0}, reverse=True)
    terms = []
    members: set[int] = set()
    for i, t in enumerate(levels):
        members |= {m for m, val in v.entries() if rep_of[val] == t}
        t_next = levels[i + 1] if i + 1 < len(levels) else 0
        terms.append((t - t_next, UpSet(v.n, frozenset(members))))
    return RayDecomposition(v.n, tuple(terms))


def recompose(d: RayDecomposition) -> REVector:
    """Sum of coefficient * indicator over the decomposition terms."""
    totals = [0] * ((1 << d.n) - 1)
    order = subsets_in_order(d.n)
    for coeff, upset in d.terms:
        for i, mask in enumerate(order):
            if mask in upset.members:
                totals[i] = totals[i] + coeff
    return REVector(d.n, tuple(totals))
