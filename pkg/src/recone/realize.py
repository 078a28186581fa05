"""End-to-end realization: target vector -> state pair -> verification.

A single ray, lam times the indicator of an up-set U, is realized by the
XOR scheme for U: take rho = table(0) and sigma = the weight-p mix of the
two tables with p = 2**(-lam).  Authorized subsets then sit at exactly
-log2(p) bits (the two tables never collide, so the cross term vanishes;
note this is -log2(p), not the binary entropy of p, which the mixture
form might suggest) and unauthorized subsets at exactly 0.  General
members decompose into nested rays whose realizations combine by tensor
product.

The weight is snapped to p = round(2**(-lam) * 2**53) / 2**53 once and
kept exact afterwards, so achieved values match targets to well below
1e-6; integer lam gives dyadic p and machine-exact entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cone import (
    NotInConeError,
    RayDecomposition,
    REVector,
    check_membership,
    layer_cake_decompose,
)
from .lattice import UpSet, mask_label, subsets_in_order
from .schemes import AccessStructure, dnf_scheme, scheme_state_pair
from .states import StatePair, point_pair, re_vector, tensor

DYADIC_TOL = 1e-9
GENERAL_TOL = 1e-6
MONOTONICITY_RECHECK_TOL = 1e-12


class RealizationError(ValueError):
    """Synthesized pair missed the target beyond the allowed tolerance."""


def _dyadic_weight(lam) -> Fraction:
    if not lam > 0 or lam == math.inf:
        raise ValueError(f"ray coefficient must be a positive finite number of bits, got {lam}")
    p = Fraction(round(2.0 ** (-float(lam)) * (1 << 53)), 1 << 53)
    if not 0 < p < 1:
        raise ValueError(f"ray coefficient {lam} leaves no representable mixing weight")
    return p


def realize_ray(u: UpSet, lam) -> StatePair:
    """State pair whose relative-entropy vector is lam times the indicator
    of u, up to the dyadic rounding of the mixing weight."""
    scheme = dnf_scheme(AccessStructure(u))
    return scheme_state_pair(scheme, _dyadic_weight(lam))


@dataclass(frozen=True)
class RealizationResult:
    target: REVector
    decomposition: RayDecomposition
    pair: StatePair
    achieved: REVector
    max_abs_error: float


def _auto_tolerance(decomposition: RayDecomposition) -> float:
    dyadic = all(
        (isinstance(c, int) and not isinstance(c, bool))
        or (isinstance(c, float) and c.is_integer())
        or (isinstance(c, Fraction) and c.denominator == 1)
        for c, _ in decomposition.terms)
    return DYADIC_TOL if dyadic else GENERAL_TOL


def synthesize(v: REVector, tol: float | None = None) -> RealizationResult:
    """Build and check a state pair realizing a finite cone member.

    Decomposes v over its level sets, realizes each nested ray, tensors
    the realizations together and recomputes the achieved vector.  When
    tol is None it defaults to 1e-9 for integer-level targets (exact
    dyadic weights) and 1e-6 otherwise.  Raises RealizationError if the
    achieved vector misses the target beyond the tolerance.
    """
    decomposition = layer_cake_decompose(v)  # also enforces membership
    pair = point_pair(v.n)
    for coeff, upset in decomposition.terms:
        pair = tensor(pair, realize_ray(upset, coeff))
    achieved = re_vector(pair)
    max_err = max((abs(a - t) for a, t in zip(achieved.values, v.values)), default=0.0)
    if tol is None:
        tol = _auto_tolerance(decomposition)
    if max_err > tol:
        raise RealizationError(
            f"achieved vector misses the target by {max_err:.3e} > {tol:.1e}")
    return RealizationResult(target=v, decomposition=decomposition, pair=pair,
                             achieved=achieved, max_abs_error=max_err)


@dataclass(frozen=True)
class SubsetDeviation:
    mask: int
    target: object
    achieved: object
    deviation: float


@dataclass(frozen=True)
class VerificationReport:
    n: int
    tol: float
    deviations: tuple[SubsetDeviation, ...]
    max_abs_error: float
    monotone_ok: bool
    passed: bool

    def failing_subsets(self) -> tuple[int, ...]:
        return tuple(d.mask for d in self.deviations if not d.deviation <= self.tol)


def verify(v: REVector, pair: StatePair, tol: float = DYADIC_TOL) -> VerificationReport:
    """Recompute the pair's relative-entropy vector and compare to v.

    Reports the per-subset deviation, the worst deviation, and whether
    the achieved vector itself still passes the monotonicity check (with
    a 1e-12 cushion for float noise in independent marginal sums).
    """
    if v.n != pair.n:
        raise ValueError(f"vector has {v.n} parties but pair has {pair.n}")
    achieved = re_vector(pair)
    deviations = []
    for mask in subsets_in_order(v.n):
        t, a = v.value(mask), achieved.value(mask)
        if t == math.inf or a == math.inf:
            dev = 0.0 if t == a else math.inf
        else:
            dev = abs(float(a) - float(t))
        deviations.append(SubsetDeviation(mask, t, a, dev))
    max_err = max(d.deviation for d in deviations)
    monotone_ok = check_membership(achieved, tol=MONOTONICITY_RECHECK_TOL).member
    return VerificationReport(n=v.n, tol=tol, deviations=tuple(deviations),
                              max_abs_error=max_err, monotone_ok=monotone_ok,
                              passed=bool(max_err <= tol and monotone_ok))


def describe_deviation(report: VerificationReport) -> str:
    """One-line summary naming the worst subset."""
    worst = max(report.deviations, key=lambda d: d.deviation)
    return (f"max |achieved - target| = {worst.deviation:.3e} "
            f"at subset {mask_label(worst.mask)}")
