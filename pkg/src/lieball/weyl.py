"""The Weyl group W(D_m) as signed permutations, with coset enumeration.

Elements permute the basis e_1..e_m and flip an even number of signs.  The
action convention is act(w, e_j) = signs[perm(j)] · e_{perm(j)}, so on
coordinate vectors (w·μ)_i = signs_i · μ_{perm⁻¹(i)}.  Indices are 0-based
internally; printed one-line windows are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from .root_data import RootSet, build_root_sets

__all__ = [
    "SignedPermutation",
    "identity",
    "compose",
    "inverse",
    "act",
    "enumerate_group",
    "group_order",
    "inversion_set",
    "length",
    "is_coset_rep",
    "enumerate_coset_reps",
    "lehmer_code",
    "sign_bits",
    "flip_pattern",
    "one_line_window",
]


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation with an even number of sign flips.

    perm[j] is the image of position j; signs[i] is the sign attached to the
    target position i.  Both tuples have length m.
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.perm)
        if sorted(self.perm) != list(range(m)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{m - 1}")
        if len(self.signs) != m or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a ±1 vector of matching length")
        if sum(1 for s in self.signs if s < 0) % 2 != 0:
            raise ValueError("sign flips must be even in number")

    @property
    def rank(self) -> int:
        return len(self.perm)


def identity(m: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(m)), (1,) * m)


def act(w: SignedPermutation, mu: Sequence) -> tuple:
    """Apply w to a coordinate vector: (w·μ)_i = signs_i · μ_{perm⁻¹(i)}."""
    m = w.rank
    if len(mu) != m:
        raise ValueError("vector length does not match rank")
    out = [None] * m
    for j in range(m):
        i = w.perm[j]
        out[i] = w.signs[i] * mu[j]
    return tuple(out)


def compose(w1: SignedPermutation, w2: SignedPermutation) -> SignedPermutation:
    """The product w1∘w2, satisfying act(w1, act(w2, μ)) = act(compose(w1, w2), μ)."""
    if w1.rank != w2.rank:
        raise ValueError("rank mismatch")
    m = w1.rank
    perm = tuple(w1.perm[w2.perm[j]] for j in range(m))
    signs = [0] * m
    for j in range(m):
        i2 = w2.perm[j]
        i = w1.perm[i2]
        signs[i] = w1.signs[i] * w2.signs[i2]
    return SignedPermutation(perm, tuple(signs))


def inverse(w: SignedPermutation) -> SignedPermutation:
    m = w.rank
    q = [0] * m
    for j in range(m):
        q[w.perm[j]] = j
    signs = tuple(w.signs[w.perm[j]] for j in range(m))
    return SignedPermutation(tuple(q), signs)


def group_order(m: int) -> int:
    order = 2 ** (m - 1)
    for k in range(2, m + 1):
        order *= k
    return order


def enumerate_group(m: int) -> Iterator[SignedPermutation]:
    """All of W(D_m): every permutation with every even sign vector."""
    if m < 1:
        raise ValueError("need m >= 1")
    for perm in itertools.permutations(range(m)):
        for flips in itertools.product((1, -1), repeat=m - 1):
            parity = 1
            for s in flips:
                parity *= s
            signs = flips + (parity,)
            yield SignedPermutation(perm, signs)


def _is_negative_root(v: Sequence) -> bool:
    """Negative for the positive system {e_i ± e_j : i < j}: first nonzero < 0."""
    for c in v:
        if c != 0:
            return c < 0
    raise ValueError("zero vector is not a root")


def inversion_set(w: SignedPermutation, m: int | None = None) -> RootSet:
    """The roots {α ∈ Δ+(k) : w⁻¹α ∈ Δ−(k)}; its size is the length of w."""
    if m is None:
        m = w.rank
    if m != w.rank:
        raise ValueError("rank mismatch")
    roots = build_root_sets(m).k_pos.roots if m >= 2 else ()
    winv = inverse(w)
    inv = [alpha for alpha in roots if _is_negative_root(act(winv, alpha))]
    return RootSet("k", m, tuple(inv))


@lru_cache(maxsize=None)
def length(w: SignedPermutation, m: int | None = None) -> int:
    return len(inversion_set(w, m))


def is_coset_rep(w: SignedPermutation) -> bool:
    """True iff the inversion set of w lies inside the u∩k roots {e_i + e_j}.

    Equivalent direct test: no root e_i − e_j (i < j) maps under w⁻¹ to a
    negative root.  Writing q = perm⁻¹, w⁻¹(e_i − e_j) = signs_i e_{q(i)} −
    signs_j e_{q(j)}, which is positive iff the coefficient on the smaller
    target index is +1.
    """
    m = w.rank
    q = [0] * m
    for j in range(m):
        q[w.perm[j]] = j
    for i in range(m):
        for j in range(i + 1, m):
            if q[i] < q[j]:
                if w.signs[i] != 1:
                    return False
            else:
                if w.signs[j] != -1:
                    return False
    return True


def lehmer_code(perm: Sequence[int]) -> int:
    """The permutation's Lehmer code packed in factorial base."""
    m = len(perm)
    code = 0
    for j in range(m):
        smaller_later = sum(1 for k in range(j + 1, m) if perm[k] < perm[j])
        base = 1
        for t in range(1, m - j):
            base *= t
        code += smaller_later * base
    return code


def sign_bits(signs: Sequence[int]) -> int:
    """Sign vector as a bitmask, position 0 in the most significant bit."""
    bits = 0
    for s in signs:
        bits = (bits << 1) | (1 if s < 0 else 0)
    return bits


@lru_cache(maxsize=None)
def enumerate_coset_reps(m: int) -> Tuple[SignedPermutation, ...]:
    """Minimal-length representatives of W(D_m) modulo the gl(m) Weyl group.

    Full enumeration of the 2^{m−1}·m! group elements, keeping exactly those
    whose inversion set lies inside the u∩k roots.  Sorted by (length,
    Lehmer code of perm, sign bitmask); there are 2^{m−1} of them.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    reps = [w for w in enumerate_group(m) if is_coset_rep(w)]
    reps.sort(key=lambda w: (length(w), lehmer_code(w.perm), sign_bits(w.signs)))
    return tuple(reps)


def flip_pattern(w: SignedPermutation) -> Tuple[int, ...]:
    """Source positions (1-based) whose coordinate picks up a sign flip."""
    flipped = []
    for j in range(w.rank):
        if w.signs[w.perm[j]] < 0:
            flipped.append(j + 1)
    return tuple(flipped)


def one_line_window(w: SignedPermutation) -> Tuple[int, ...]:
    """Signed one-line notation: entry j is ±(perm(j)+1) with the target sign."""
    return tuple(w.signs[w.perm[j]] * (w.perm[j] + 1) for j in range(w.rank))
