"""K-type multiplicities of the derived-functor modules, by Euler sum.

For the scalar module with parameter λ the multiplicity of the K-type
(μ_0; μ) equals the signed count over coset representatives w of the
coincidences

    w(μ+ρ_c) − ρ_c = (ℓ+λ−m+1, λ−m+1, ..., λ−m+1),   ℓ := μ_0 − λ,

which matches degree-ℓ symmetric tensors of u∩p twisted by the bottom
character.  The sum is an honest multiplicity inside the weakly fair range
and an Euler characteristic otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .kostant import KTypeParam, LKTypeParam, _shifted_weight
from .weyl import enumerate_coset_reps, identity, length

__all__ = [
    "mu_lambda",
    "s_u_cap_p_component",
    "multiplicity",
    "KTypeTable",
    "ktype_table",
    "dominant_mu_vectors",
    "unique_scalar_match_check",
]


def mu_lambda(m: int, lam: int) -> LKTypeParam:
    """The bottom character: charge λ with U(m)-weight (λ−m+1)·1_m.

    This is the λ-th power of the determinant character twisted by the top
    exterior power of the opposite of u∩k, whose weight is −(m−1)·1_m.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    return LKTypeParam(lam, ((lam - m + 1),) * m)


def s_u_cap_p_component(m: int, l: int) -> LKTypeParam:
    """Degree-l symmetric power of u∩p as a T × U(m) highest weight."""
    if m < 2:
        raise ValueError("need m >= 2")
    if l < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    return LKTypeParam(l, (l,) + (0,) * (m - 1))


def _target_hw(m: int, lam: int, l: int) -> Tuple[int, ...]:
    """U(m) weight of S^l(u∩p) ⊗ C_{μ_λ}: the symmetric power shifted by
    the bottom character."""
    sym = s_u_cap_p_component(m, l)
    bottom = mu_lambda(m, lam)
    return tuple(a + b for a, b in zip(sym.hw, bottom.hw))


def _signed_shift_counts(m: int, mu: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """Signed multiset {w(μ+ρ_c) − ρ_c : coset reps w} with signs (−1)^len(w)."""
    counts: Dict[Tuple[int, ...], int] = {}
    for w in enumerate_coset_reps(m):
        hw = _shifted_weight(m, mu, w)
        counts[hw] = counts.get(hw, 0) + (-1) ** length(w)
    return counts


def multiplicity(m: int, lam: int, pi: KTypeParam) -> int:
    """Multiplicity of the K-type pi in the scalar module with parameter λ.

    Zero whenever μ_0 < λ, since the charge pins the symmetric power degree
    μ_0 − λ, which must be a nonnegative integer.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if len(pi.mu) != m:
        raise ValueError("K-type rank does not match m")
    l = pi.mu0 - lam
    if l < 0:
        return 0
    counts = _signed_shift_counts(m, pi.mu)
    return counts.get(_target_hw(m, lam, l), 0)


def dominant_mu_vectors(m: int, max_mu1: int) -> List[Tuple[int, ...]]:
    """All dominant SO(2m) weights with μ_1 ≤ max_mu1, sorted lexicographically."""
    if m < 2:
        raise ValueError("need m >= 2")
    if max_mu1 < 0:
        return []
    out: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...]) -> None:
        if len(prefix) == m - 1:
            bound = prefix[-1]
            for last in range(-bound, bound + 1):
                out.append(prefix + (last,))
            return
        for nxt in range(prefix[-1], -1, -1):
            extend(prefix + (nxt,))

    for mu1 in range(max_mu1, -1, -1):
        extend((mu1,))
    out.sort()
    return out


@dataclass
class KTypeTable:
    """A window of K-types with integer multiplicities.

    entries maps KTypeParam to a nonzero integer; the scan bounds record the
    window μ_0 ≤ max_mu0, μ_1 ≤ max_mu1 the table was computed over (None
    when the table was parsed from serialized form).
    """

    m: int
    lam: int
    entries: Dict[KTypeParam, int]
    max_mu0: int | None = None
    max_mu1: int | None = None

    def sorted_entries(self) -> List[Tuple[KTypeParam, int]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0].mu0, kv[0].mu))

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "lambda": self.lam,
            "entries": [
                {"mu0": pi.mu0, "mu": list(pi.mu), "mult": mult}
                for pi, mult in self.sorted_entries()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "KTypeTable":
        entries = {
            KTypeParam(int(e["mu0"]), tuple(int(c) for c in e["mu"])): int(e["mult"])
            for e in data["entries"]
        }
        return cls(m=int(data["m"]), lam=int(data["lambda"]), entries=entries)

    @classmethod
    def from_json(cls, text: str) -> "KTypeTable":
        return cls.from_json_dict(json.loads(text))

    def to_csv(self) -> str:
        header = "mu0," + ",".join(f"mu_{i}" for i in range(1, self.m + 1)) + ",mult"
        lines = [header]
        for pi, mult in self.sorted_entries():
            lines.append(",".join(str(c) for c in (pi.mu0, *pi.mu, mult)))
        return "\n".join(lines) + "\n"

    def same_entries(self, other: "KTypeTable") -> bool:
        return self.m == other.m and self.entries == other.entries


def ktype_table(m: int, lam: int, max_mu0: int, max_mu1: int) -> KTypeTable:
    """All K-types with nonzero signed multiplicity in the scan window."""
    if m < 2:
        raise ValueError("need m >= 2")
    entries: Dict[KTypeParam, int] = {}
    vectors = dominant_mu_vectors(m, max_mu1)
    shift_counts = [(mu, _signed_shift_counts(m, mu)) for mu in vectors]
    for mu0 in range(lam, max_mu0 + 1):
        l = mu0 - lam
        for mu, counts in shift_counts:
            mult = counts.get(_target_hw(m, lam, l), 0)
            if mult != 0:
                entries[KTypeParam(mu0, mu)] = mult
    return KTypeTable(m=m, lam=lam, entries=entries, max_mu0=max_mu0, max_mu1=max_mu1)


def unique_scalar_match_check(m: int, grid_bound: int) -> bool:
    """Exhaustively confirm the scalar K-type match is unique.

    Over every dominant μ with entries in [−grid_bound, grid_bound], every
    l in [0, 2·grid_bound] and every coset representative w, the equality
    w(μ+ρ_c) − ρ_c = (l, 0, ..., 0) holds exactly when w is the identity
    and μ = (l, 0, ..., 0).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if grid_bound < 0:
        raise ValueError("grid bound must be nonnegative")
    e = identity(m)
    reps = enumerate_coset_reps(m)
    for mu in dominant_mu_vectors(m, grid_bound):
        for l in range(0, 2 * grid_bound + 1):
            target = (l,) + (0,) * (m - 1)
            for w in reps:
                matches = _shifted_weight(m, mu, w) == target
                expected = w == e and mu == target
                if matches != expected:
                    return False
    return True
