"""Root data for so(2, 2m): ambient D_{m+1} roots and the parabolic decomposition.

Coordinates are exact rationals in an orthonormal basis.  G-weights live in
rank m+1 (basis e_0..e_m, with e_0 attached to the so(2) factor); weights of
the maximal compact factor SO(2m) live in rank m (basis e_1..e_m).  All
half-sums are half-integral, so every coordinate has denominator 1 or 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Tuple

__all__ = [
    "Weight",
    "RootSet",
    "RootData",
    "as_weight",
    "add",
    "sub",
    "neg",
    "scale",
    "dot",
    "basis_vector",
    "build_root_sets",
    "half_sum",
    "rho_u",
    "rho_u_cap_k",
    "rho_c",
    "rho_l",
    "rho_g",
    "dolbeault_degree",
]

Weight = Tuple[Q, ...]

ROOT_SET_LABELS = ("g", "p+", "p-", "u", "u∩k", "u∩p", "k", "l", "l∩k")


def as_weight(coords: Iterable[object]) -> Weight:
    """Coerce coordinates to an exact weight; denominators must divide 2."""
    w = tuple(Q(c) for c in coords)
    for c in w:
        if c.denominator not in (1, 2):
            raise ValueError(f"weight coordinate {c} is not half-integral")
    return w


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def neg(x: Weight) -> Weight:
    return tuple(-a for a in x)


def scale(c: object, x: Weight) -> Weight:
    q = Q(c)
    return tuple(q * a for a in x)


def dot(x: Weight, y: Weight) -> Q:
    """Standard inner product; the basis e_i is orthonormal."""
    return sum((a * b for a, b in zip(x, y, strict=True)), Q(0))


def basis_vector(rank: int, i: int) -> Weight:
    if not 0 <= i < rank:
        raise ValueError(f"basis index {i} out of range for rank {rank}")
    return tuple(Q(1) if j == i else Q(0) for j in range(rank))


@dataclass(frozen=True)
class RootSet:
    """A finite set of roots, stored in a fixed deterministic order."""

    label: str
    rank: int
    roots: Tuple[Weight, ...]

    def __post_init__(self) -> None:
        if self.label not in ROOT_SET_LABELS:
            raise ValueError(f"unknown root set label {self.label!r}")
        seen = set()
        for r in self.roots:
            if len(r) != self.rank:
                raise ValueError("root rank mismatch")
            support = [c for c in r if c != 0]
            if len(support) != 2 or any(abs(c) != 1 for c in support):
                raise ValueError(f"{r} is not a root of type B/D shape ±e_i±e_j")
            if r in seen:
                raise ValueError(f"duplicate root {r}")
            seen.add(r)

    def __contains__(self, w: Weight) -> bool:
        return w in set(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _root(rank: int, i: int, si: int, j: int, sj: int) -> Weight:
    out = [Q(0)] * rank
    out[i] = Q(si)
    out[j] = Q(sj)
    return tuple(out)


@dataclass(frozen=True)
class RootData:
    """All root sets used downstream, for one rank parameter m >= 2.

    Rank m+1 sets (basis e_0..e_m): g, p_plus, p_minus, u, u_cap_k, u_cap_p, l.
    Rank m sets (basis e_1..e_m, the SO(2m) factor): k_pos is the positive
    system {e_i ± e_j : i < j} containing the u∩k roots, u_cap_k_so is u∩k in
    SO(2m) coordinates, l_cap_k_pos is the positive system {e_i − e_j : i < j}
    of the gl(m) Levi factor of k.
    """

    m: int
    g: RootSet
    p_plus: RootSet
    p_minus: RootSet
    u: RootSet
    u_cap_k: RootSet
    u_cap_p: RootSet
    l: RootSet
    k_pos: RootSet
    u_cap_k_so: RootSet
    l_cap_k_pos: RootSet


@lru_cache(maxsize=None)
def build_root_sets(m: int) -> RootData:
    """Construct the root sets of so(2m+2, C) cut out by the grading element.

    The grading element is 1_{m+1} = e_0 + ... + e_m: l collects the roots
    pairing to zero with it, u the roots pairing positively.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    n = m + 1
    g = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    g.append(_root(n, i, si, j, sj))
    p_plus = [_root(n, 0, 1, j, s) for j in range(1, n) for s in (1, -1)]
    p_minus = [neg(r) for r in p_plus]
    u_cap_k = [_root(n, i, 1, j, 1) for i in range(1, n) for j in range(i + 1, n)]
    u_cap_p = [_root(n, 0, 1, j, 1) for j in range(1, n)]
    u = [_root(n, i, 1, j, 1) for i in range(n) for j in range(i + 1, n)]
    l = []
    for i in range(n):
        for j in range(i + 1, n):
            l.append(_root(n, i, 1, j, -1))
            l.append(_root(n, i, -1, j, 1))
    k_pos = []
    for i in range(m):
        for j in range(i + 1, m):
            k_pos.append(_root(m, i, 1, j, 1))
            k_pos.append(_root(m, i, 1, j, -1))
    u_cap_k_so = [_root(m, i, 1, j, 1) for i in range(m) for j in range(i + 1, m)]
    l_cap_k_pos = [_root(m, i, 1, j, -1) for i in range(m) for j in range(i + 1, m)]
    return RootData(
        m=m,
        g=RootSet("g", n, tuple(g)),
        p_plus=RootSet("p+", n, tuple(p_plus)),
        p_minus=RootSet("p-", n, tuple(p_minus)),
        u=RootSet("u", n, tuple(u)),
        u_cap_k=RootSet("u∩k", n, tuple(u_cap_k)),
        u_cap_p=RootSet("u∩p", n, tuple(u_cap_p)),
        l=RootSet("l", n, tuple(l)),
        k_pos=RootSet("k", m, tuple(k_pos)),
        u_cap_k_so=RootSet("u∩k", m, tuple(u_cap_k_so)),
        l_cap_k_pos=RootSet("l∩k", m, tuple(l_cap_k_pos)),
    )


def half_sum(rs: RootSet) -> Weight:
    """Half the sum of the roots in the set."""
    total = tuple(Q(0) for _ in range(rs.rank))
    for r in rs:
        total = add(total, r)
    return scale(Q(1, 2), total)


@lru_cache(maxsize=None)
def rho_u(m: int) -> Weight:
    """Half-sum over u; equals (m/2)·1_{m+1}."""
    return half_sum(build_root_sets(m).u)


@lru_cache(maxsize=None)
def rho_u_cap_k(m: int) -> Weight:
    """Half-sum over u∩k in rank m+1; equals 0 ⊕ ((m−1)/2)·1_m."""
    return half_sum(build_root_sets(m).u_cap_k)


@lru_cache(maxsize=None)
def rho_c(m: int) -> Weight:
    """Half-sum of the positive compact roots; equals (m−1, m−2, ..., 1, 0)."""
    return half_sum(build_root_sets(m).k_pos)


@lru_cache(maxsize=None)
def rho_l(m: int) -> Weight:
    """Half-sum of the positive roots of the Levi factor gl(m+1)."""
    pos = RootSet(
        "l",
        m + 1,
        tuple(
            _root(m + 1, i, 1, j, -1)
            for i in range(m + 1)
            for j in range(i + 1, m + 1)
        ),
    )
    return half_sum(pos)


@lru_cache(maxsize=None)
def rho_g(m: int) -> Weight:
    """Half-sum of the positive roots of so(2m+2); equals (m, m−1, ..., 1, 0)."""
    n = m + 1
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_root(n, i, 1, j, 1))
            pos.append(_root(n, i, 1, j, -1))
    return half_sum(RootSet("g", n, tuple(pos)))


def dolbeault_degree(m: int) -> int:
    """Degree of the Dolbeault realization on the cycle SO(2m)/U(m).

    This is the declared constant m(m−1); note it equals twice the number of
    roots in u∩k, which is m(m−1)/2 and bounds the nonzero cohomology degrees.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    return m * (m - 1)
