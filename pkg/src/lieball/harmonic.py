"""Harmonic polynomials for the holomorphic Laplacian Δ = Σ ∂²/∂z_i².

Polynomials carry exact rational coefficients on integer exponent tuples.
Kernel dimensions are computed by exact rank of the Laplacian matrix over
the graded-lexicographic monomial basis, then certified against the Weyl
dimension of the expected SO(2m) constituent; the resulting K-type table is
the analytic counterpart of the algebraic Euler-sum table.
"""

from __future__ import annotations

import random
from fractions import Fraction as Q
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Iterable, List, Tuple

from .blattner import KTypeTable
from .kostant import KTypeParam
from .linalg import exact_kernel, exact_rank
from .repdata import weyl_dim_so2m

__all__ = [
    "SparsePolynomial",
    "CertificationError",
    "monomial_exponents",
    "polynomial_space_dimension",
    "laplacian",
    "laplacian_power",
    "rotation_generator",
    "radial_square",
    "harmonic_dimension",
    "harmonic_dimension_formula",
    "harmonic_basis",
    "random_homogeneous",
    "so_invariance_check",
    "sol_ktype_table",
]

Exponents = Tuple[int, ...]


class CertificationError(RuntimeError):
    """An exact cross-check between two independent computations failed."""


class SparsePolynomial:
    """A polynomial in nvars variables with exact rational coefficients.

    Terms map exponent tuples to nonzero Fractions; arithmetic never leaves
    exact rationals.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponents, object] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        clean: Dict[Exponents, Q] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars or any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"bad exponent tuple {exps}")
            q = Q(c)
            if q != 0:
                clean[tuple(exps)] = q
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: object) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: Q(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePolynomial":
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: Q(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], coeff: object = 1) -> "SparsePolynomial":
        return cls(nvars, {tuple(exps): Q(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; −1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def partial(self, i: int) -> "SparsePolynomial":
        if not 0 <= i < self.nvars:
            raise ValueError("variable index out of range")
        out: Dict[Exponents, Q] = {}
        for exps, c in self.terms.items():
            a = exps[i]
            if a:
                e2 = exps[:i] + (a - 1,) + exps[i + 1 :]
                out[e2] = out.get(e2, Q(0)) + c * a
        return SparsePolynomial(self.nvars, out)

    def _check_same_ring(self, other: "SparsePolynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_same_ring(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Q(0)) + c
        return SparsePolynomial(self.nvars, out)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            self._check_same_ring(other)
            out: Dict[Exponents, Q] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, Q(0)) + c1 * c2
            return SparsePolynomial(self.nvars, out)
        return SparsePolynomial(self.nvars, {e: c * Q(other) for e, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "SparsePolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = SparsePolynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "SparsePolynomial(0)"
        bits = []
        for exps in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[exps]
            mono = "*".join(
                f"z{i + 1}" + (f"^{a}" if a > 1 else "")
                for i, a in enumerate(exps)
                if a
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "SparsePolynomial(" + " + ".join(bits) + ")"

    def to_json_dict(self) -> dict:
        ordered = sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
        return {
            "nvars": self.nvars,
            "terms": [
                {
                    "exp": list(e),
                    "num": self.terms[e].numerator,
                    "den": self.terms[e].denominator,
                }
                for e in ordered
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SparsePolynomial":
        terms = {
            tuple(int(v) for v in t["exp"]): Q(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return cls(int(data["nvars"]), terms)


@lru_cache(maxsize=None)
def monomial_exponents(n: int, degree: int) -> Tuple[Exponents, ...]:
    """Exponent tuples of total degree `degree`, in decreasing lexicographic
    order; the graded-lexicographic basis enumerates degrees separately."""
    if n < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return ()
    if n == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomial_exponents(n - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def polynomial_space_dimension(n: int, degree: int) -> int:
    """Dimension of the homogeneous polynomials of the given degree."""
    if degree < 0:
        return 0
    return comb(n + degree - 1, degree)


def laplacian(f: SparsePolynomial) -> SparsePolynomial:
    """Σ_i ∂²f/∂z_i², exactly."""
    out: Dict[Exponents, Q] = {}
    for exps, c in f.terms.items():
        for i, a in enumerate(exps):
            if a >= 2:
                e2 = exps[:i] + (a - 2,) + exps[i + 1 :]
                out[e2] = out.get(e2, Q(0)) + c * a * (a - 1)
    return SparsePolynomial(f.nvars, out)


def laplacian_power(f: SparsePolynomial, l: int) -> SparsePolynomial:
    if l < 0:
        raise ValueError("power must be nonnegative")
    for _ in range(l):
        f = laplacian(f)
    return f


def rotation_generator(f: SparsePolynomial, a: int, b: int) -> SparsePolynomial:
    """The infinitesimal rotation (z_a ∂_b − z_b ∂_a) applied to f."""
    za = SparsePolynomial.variable(f.nvars, a)
    zb = SparsePolynomial.variable(f.nvars, b)
    return za * f.partial(b) - zb * f.partial(a)


def radial_square(n: int) -> SparsePolynomial:
    """The quadric Σ z_i²."""
    return SparsePolynomial(
        n, {tuple(2 if j == i else 0 for j in range(n)): Q(1) for i in range(n)}
    )


def _laplacian_columns(n: int, l: int) -> List[Dict[int, int]]:
    """Columns of Δ: Pol^l → Pol^{l−2} over the monomial bases."""
    source = monomial_exponents(n, l)
    target = monomial_exponents(n, l - 2)
    index = {e: i for i, e in enumerate(target)}
    cols = []
    for exps in source:
        col: Dict[int, int] = {}
        for i, a in enumerate(exps):
            if a >= 2:
                e2 = exps[:i] + (a - 2,) + exps[i + 1 :]
                col[index[e2]] = a * (a - 1)
        cols.append(col)
    return cols


@lru_cache(maxsize=None)
def harmonic_dimension(n: int, l: int) -> int:
    """dim ker(Δ) on degree-l polynomials in n variables, by exact rank."""
    if n < 2:
        raise ValueError("need at least two variables")
    if l < 0:
        raise ValueError("degree must be nonnegative")
    cols = _laplacian_columns(n, l)
    return len(cols) - exact_rank(cols)


def harmonic_dimension_formula(n: int, l: int) -> int:
    """Closed form: dim Pol^l − dim Pol^{l−2}."""
    if n < 2:
        raise ValueError("need at least two variables")
    if l < 0:
        raise ValueError("degree must be nonnegative")
    return polynomial_space_dimension(n, l) - polynomial_space_dimension(n, l - 2)


def harmonic_basis(n: int, l: int) -> List[SparsePolynomial]:
    """An exact basis of the degree-l harmonic polynomials."""
    source = monomial_exponents(n, l)
    cols = _laplacian_columns(n, l)
    basis = []
    for combo in exact_kernel(cols):
        terms = {source[c]: coeff for c, coeff in combo.items()}
        basis.append(SparsePolynomial(n, terms))
    return basis


def random_homogeneous(
    n: int, degree: int, rng: random.Random, max_terms: int = 6
) -> SparsePolynomial:
    """A random homogeneous polynomial with small rational coefficients."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    nterms = rng.randint(1, max_terms)
    terms: Dict[Exponents, Q] = {}
    for _ in range(nterms):
        counts = [0] * n
        for _ in range(degree):
            counts[rng.randrange(n)] += 1
        exps = tuple(counts)
        num = rng.choice([x for x in range(-9, 10) if x != 0])
        den = rng.randint(1, 3)
        terms[exps] = terms.get(exps, Q(0)) + Q(num, den)
    return SparsePolynomial(n, terms)


def so_invariance_check(
    n: int,
    trials: int,
    seed: int = 0,
    generator: Callable[[SparsePolynomial, int, int], SparsePolynomial] = rotation_generator,
) -> bool:
    """Check Δ(Gf) = G(Δf) for every pair generator G on random polynomials.

    With the default rotation generators this is the SO(n)-equivariance of
    the Laplacian; a deliberately broken generator makes the check fail.
    """
    if n < 2:
        raise ValueError("need at least two variables")
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    for _ in range(trials):
        degree = rng.randint(1, 4)
        f = random_homogeneous(n, degree, rng)
        for a in range(n):
            for b in range(a + 1, n):
                if laplacian(generator(f, a, b)) != generator(laplacian(f), a, b):
                    return False
    return True


def sol_ktype_table(m: int, max_l: int) -> KTypeTable:
    """K-types of the kernel of Δ on the ambient polynomial model.

    Row l is the K-type (l+m−1; l, 0, ..., 0) with multiplicity one; the
    charge carries the shift m−1 coming from the bundle trivialization.
    Every row is certified by comparing the exact kernel dimension in
    2m variables with the Weyl dimension of the SO(2m) constituent;
    a mismatch raises CertificationError.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if max_l < 0:
        raise ValueError("max_l must be nonnegative")
    entries: Dict[KTypeParam, int] = {}
    for l in range(max_l + 1):
        mu = (l,) + (0,) * (m - 1)
        kernel_dim = harmonic_dimension(2 * m, l)
        rep_dim = weyl_dim_so2m(m, mu)
        if kernel_dim != rep_dim:
            raise CertificationError(
                f"kernel dimension {kernel_dim} != Weyl dimension {rep_dim} "
                f"for m={m}, l={l}"
            )
        entries[KTypeParam(l + m - 1, mu)] = 1
    return KTypeTable(
        m=m, lam=m - 1, entries=entries, max_mu0=m - 1 + max_l, max_mu1=max_l
    )
