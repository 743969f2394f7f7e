"""Exact fraction-free elimination for sparse integer matrices.

Vectors are dicts mapping row index to a nonzero integer.  Elimination uses
integer cross-multiplication with gcd normalization after every combination,
so all arithmetic is exact; no floating point and no modular arithmetic
anywhere.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Dict, Iterable, List, Tuple

__all__ = ["exact_rank", "exact_kernel"]

Vector = Dict[int, int]
Tag = Dict[int, Q]


def _content(v: Vector) -> int:
    """gcd of the entries, signed so the leading entry comes out positive."""
    g = 0
    for x in v.values():
        g = gcd(g, x)
    return -g if v[min(v)] < 0 else g


def _combine(v: Vector, pivot: Vector, key: int) -> Vector:
    """pivot[key]·v − v[key]·pivot, which clears position key."""
    a, b = pivot[key], v[key]
    out = {k: a * x for k, x in v.items()}
    for k, x in pivot.items():
        y = out.get(k, 0) - b * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def exact_rank(vectors: Iterable[Vector]) -> int:
    """Rank of the matrix whose columns are the given sparse vectors."""
    pivots: Dict[int, Vector] = {}
    for v0 in vectors:
        v = {k: x for k, x in v0.items() if x}
        while v:
            key = min(v)
            pivot = pivots.get(key)
            if pivot is None:
                g = _content(v)
                pivots[key] = {k: x // g for k, x in v.items()}
                break
            v = _combine(v, pivot, key)
            if v:
                g = _content(v)
                v = {k: x // g for k, x in v.items()}
    return len(pivots)


def exact_kernel(vectors: List[Vector]) -> List[Tag]:
    """A basis of the kernel of the matrix whose columns are the vectors.

    Each basis element maps column index to an exact rational coefficient;
    the corresponding combination of columns vanishes.  Coefficients are
    normalized to coprime integers with positive leading entry.
    """
    pivots: Dict[int, Tuple[Vector, Tag]] = {}
    kernel: List[Tag] = []
    for c, v0 in enumerate(vectors):
        v = {k: x for k, x in v0.items() if x}
        tag: Tag = {c: Q(1)}
        while v:
            key = min(v)
            hit = pivots.get(key)
            if hit is None:
                pivots[key] = (v, tag)
                break
            pivot, ptag = hit
            a, b = pivot[key], v[key]
            new_tag: Tag = {k: a * x for k, x in tag.items()}
            for k, x in ptag.items():
                y = new_tag.get(k, Q(0)) - b * x
                if y:
                    new_tag[k] = y
                else:
                    new_tag.pop(k, None)
            v = _combine(v, pivot, key)
            tag = new_tag
            if v:
                g = _content(v)
                v = {k: x // g for k, x in v.items()}
                tag = {k: x / g for k, x in tag.items()}
        else:
            kernel.append(_normalized_tag(tag))
    return kernel


def _normalized_tag(tag: Tag) -> Tag:
    denom_lcm = 1
    for x in tag.values():
        d = x.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = {k: int(x * denom_lcm) for k, x in tag.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, x)
    if ints[min(ints)] < 0:
        g = -g
    return {k: Q(x // g) for k, x in ints.items()}
