"""Scalar representation arithmetic: dimensions, ranges, reduction points.

Covers the Weyl dimension formula for SO(2m), infinitesimal characters and
their regularity, the good and weakly fair positivity ranges, scalar
generalized Verma homomorphism arithmetic, Knapp–Stein residue degrees, the
Enright–Howe–Wallach unitarizability window for scalar lowest weights, the
Borel–Weil–Bott K-type target on the compact cycle, and Weyl-orbit equality
in type D.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Optional, Tuple

from .kostant import KTypeParam
from .root_data import (
    Weight,
    as_weight,
    build_root_sets,
    dot,
    half_sum,
    rho_g,
    rho_l,
    sub,
)

__all__ = [
    "weyl_dim_so2m",
    "inf_char",
    "is_regular_type_d",
    "RangeVerdict",
    "range_verdict",
    "verma_hom_condition",
    "verma_inf_char",
    "knapp_stein_residue_degree",
    "ehw_first_reduction_point",
    "ehw_last_unitary_point",
    "ehw_unitarizable",
    "borel_weil_bott_ktype",
    "orbit_equal",
]


def weyl_dim_so2m(m: int, mu: Tuple[int, ...]) -> int:
    """Weyl dimension of the SO(2m) representation with highest weight μ.

    The product of ⟨μ+ρ_c, α⟩ / ⟨ρ_c, α⟩ over the positive roots
    {e_i ± e_j : i < j}; always a positive integer for dominant μ.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if len(mu) != m:
        raise ValueError("weight rank does not match m")
    body, last = mu[:-1], mu[-1]
    if any(body[i] < body[i + 1] for i in range(len(body) - 1)) or body[-1] < abs(last):
        raise ValueError(f"{mu} is not dominant")
    data = build_root_sets(m)
    rc = half_sum(data.k_pos)
    shifted = tuple(Q(c) + r for c, r in zip(mu, rc))
    dim = Q(1)
    for alpha in data.k_pos:
        dim *= dot(shifted, alpha) / dot(rc, alpha)
    if dim.denominator != 1 or dim <= 0:
        raise ArithmeticError(f"Weyl dimension came out as {dim}")
    return int(dim)


def inf_char(m: int, lam: object) -> Weight:
    """Infinitesimal character (λ, λ−1, ..., λ−m) of the scalar module."""
    if m < 2:
        raise ValueError("need m >= 2")
    q = Q(lam)
    return as_weight(tuple(q - i for i in range(m + 1)))


def is_regular_type_d(w: Weight) -> bool:
    """Regular for the type-D root system: no two coordinates share an
    absolute value.  A single zero coordinate does not break regularity."""
    values = [abs(c) for c in w]
    return len(set(values)) == len(values)


@dataclass(frozen=True)
class RangeVerdict:
    """Positivity verdicts for a scalar parameter, with exact witnesses.

    Each witness is a pair (root, pairing) recording a violated inequality:
    a root of u whose pairing with the shifted parameter fails the bound.
    """

    m: int
    lam: int
    weakly_fair: bool
    good: bool
    weakly_fair_witnesses: Tuple[Tuple[Weight, Q], ...] = field(default_factory=tuple)
    good_witnesses: Tuple[Tuple[Weight, Q], ...] = field(default_factory=tuple)


def range_verdict(m: int, lam: int) -> RangeVerdict:
    """Weakly fair and good range tests for the scalar parameter λ.

    Weakly fair requires ⟨λ·1 − ρ(u), α⟩ ≥ 0 for every root α of u; good
    requires ⟨λ·1 − ρ(u) + ρ_l, α⟩ > 0.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    data = build_root_sets(m)
    rho_u = half_sum(data.u)
    ones = as_weight((lam,) * (m + 1))
    wf_shift = sub(ones, rho_u)
    good_shift = tuple(a + b for a, b in zip(wf_shift, rho_l(m)))
    wf_witnesses = []
    good_witnesses = []
    for alpha in data.u:
        pairing = dot(wf_shift, alpha)
        if pairing < 0:
            wf_witnesses.append((alpha, pairing))
        pairing = dot(good_shift, alpha)
        if pairing <= 0:
            good_witnesses.append((alpha, pairing))
    return RangeVerdict(
        m=m,
        lam=lam,
        weakly_fair=not wf_witnesses,
        good=not good_witnesses,
        weakly_fair_witnesses=tuple(wf_witnesses),
        good_witnesses=tuple(good_witnesses),
    )


def verma_hom_condition(m: int, lam: object, nu: object) -> Optional[int]:
    """Degree of the scalar generalized Verma homomorphism, if any.

    A homomorphism M(ν) → M(λ) of degree l exists for the scalar family
    exactly when λ + ν = 2m with l = m − λ a nonnegative integer; returns
    l, or None when the condition fails.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    lam_q, nu_q = Q(lam), Q(nu)
    if lam_q + nu_q != 2 * m:
        return None
    l = m - lam_q
    if l.denominator != 1 or l < 0:
        return None
    return int(l)


def verma_inf_char(m: int, lam: object) -> Weight:
    """Harish-Chandra parameter −λ·e_0 + ρ of the scalar Verma module."""
    if m < 2:
        raise ValueError("need m >= 2")
    rg = rho_g(m)
    lam_q = Q(lam)
    return as_weight((rg[0] - lam_q,) + rg[1:])


def knapp_stein_residue_degree(n: int, lam: object) -> Optional[int]:
    """Order l = n/2 − λ of the residual intertwining differential operator.

    The standard intertwining family for the rank-one parabolic of
    SO_0(2, n) has simple poles exactly at λ ∈ {n/2, n/2 − 1, ...}; the
    residue there is the power Δ^l of the flat Laplacian, mapping the
    degenerate principal series at λ to the one at n − λ.  None when λ is
    not a pole.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError("need even n >= 4")
    l = Q(n, 2) - Q(lam)
    if l.denominator != 1 or l < 0:
        return None
    return int(l)


def ehw_first_reduction_point(n: int) -> Q:
    """First reduction point A = n/2 of the scalar lowest-weight family."""
    if n < 4:
        raise ValueError("need n >= 4")
    return Q(n, 2)


def ehw_last_unitary_point(n: int) -> Q:
    """Last unitarizable parameter B = n − 1 of the scalar family."""
    if n < 4:
        raise ValueError("need n >= 4")
    return Q(n - 1)


def ehw_unitarizable(n: int, z: object) -> bool:
    """Unitarizability of the scalar lowest-weight module at parameter z.

    The module with lowest weight z·e_0 is unitarizable iff z ≤ 0 (the
    continuous part) or z is one of the two discrete points n/2 and n−1.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    zq = Q(z)
    return zq <= 0 or zq == ehw_first_reduction_point(n) or zq == ehw_last_unitary_point(n)


def borel_weil_bott_ktype(m: int, lam: int) -> Optional[KTypeParam]:
    """The K-type (λ; (λ−m+1)·1_m) cut out on the compact cycle, when dominant.

    The weight is the bottom character pushed through the top cohomology of
    the cycle; it is a valid SO(2m) highest weight iff λ ≥ m − 1, and the
    transform has zero target otherwise.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    entry = lam - m + 1
    if entry < 0:
        return None
    return KTypeParam(lam, (entry,) * m)


def orbit_equal(w1: Weight, w2: Weight) -> bool:
    """Whether two weights lie in one orbit of the type-D Weyl group.

    The group permutes coordinates and flips evenly many signs, so orbits
    are classified by the multiset of absolute values together with the
    sign parity, except that a zero coordinate absorbs any sign.
    """
    if len(w1) != len(w2):
        raise ValueError("rank mismatch")
    a1 = sorted(abs(c) for c in w1)
    a2 = sorted(abs(c) for c in w2)
    if a1 != a2:
        return False
    if any(c == 0 for c in w1):
        return True
    neg1 = sum(1 for c in w1 if c < 0)
    neg2 = sum(1 for c in w2 if c < 0)
    return neg1 % 2 == neg2 % 2
