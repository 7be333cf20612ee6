"""K-type bookkeeping for the scalar induced representations.

Restricted to the maximal compact subgroup, the scalar induced
representation of parity alpha decomposes multiplicity-free into spherical
harmonic spaces, one for each homogeneous degree m with (-1)^m = alpha.
The induced representation has length at most two; at the special integer
parameters there is a finite-dimensional constituent (harmonic degrees up
to m of the right parity) and an infinite-dimensional one (degrees from
m + 2 up).  The kernel of the degree-k covariant operator is the finite
constituent at parameter 1 - k when the parity matches, and zero
otherwise, which pins down all kernel/image K-type tables.

The closed dimension formula for harmonics is cross-checked in the test
suite against an exact Laplacian nullspace computation.

Ranks n = 2 are rejected: the length-two composition structure quoted
above is only used for n >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .engine import build_operator
from .errors import UnsupportedRankError
from .exact import Polynomial, monomial_count, monomials_up_to
from .series import BundleParams, TRIVIAL, dpi
from .slstruct import ParabolicData, check_parity, parity_of_int


def harmonic_dim(n: int, m: int) -> int:
    """Dimension of spherical harmonics of degree m on the (n-1)-sphere."""
    if n < 2:
        raise UnsupportedRankError("harmonics need n >= 2")
    if m < 0:
        raise ValueError("degree must be nonnegative")
    second = comb(n + m - 3, m - 2) if m >= 2 else 0
    return comb(n + m - 1, m) - second


@dataclass(frozen=True)
class KTypeTerm:
    m: int
    dim: int

    def to_json(self) -> dict:
        return {"harmonic_degree": self.m, "dim": self.dim}


@dataclass(frozen=True)
class KTypeFormula:
    """A parity-pure multiset of harmonic summands.

    kind "finite": degrees of one parity up to ``bound``;
    kind "tail":   degrees of one parity from ``bound`` on (lazy);
    kind "full":   all degrees of one parity;
    kind "zero":   the zero module.
    """

    n: int
    kind: str
    parity: str
    bound: int | None = None

    def __post_init__(self):
        if self.kind not in ("finite", "tail", "full", "zero"):
            raise ValueError(f"unknown formula kind {self.kind!r}")
        if self.kind != "zero":
            check_parity(self.parity)
        if self.kind in ("finite", "tail"):
            if self.bound is None or self.bound < 0:
                raise ValueError("finite/tail formulas need a nonnegative bound")
            if parity_of_int(self.bound) != self.parity:
                raise ValueError("bound parity disagrees with the formula parity")

    def degrees_up_to(self, max_degree: int) -> list[int]:
        if self.kind == "zero":
            return []
        start = 0 if self.parity == "+" else 1
        if self.kind == "tail":
            start = self.bound
        stop = max_degree if self.kind != "finite" else min(self.bound, max_degree)
        return list(range(start, stop + 1, 2))

    def terms_up_to(self, max_degree: int) -> list[KTypeTerm]:
        return [KTypeTerm(m, harmonic_dim(self.n, m)) for m in self.degrees_up_to(max_degree)]

    def is_finite(self) -> bool:
        return self.kind in ("finite", "zero")

    def total_dim(self) -> int:
        if not self.is_finite():
            raise ValueError("infinite formula has no total dimension")
        if self.kind == "zero":
            return 0
        return sum(t.dim for t in self.terms_up_to(self.bound))

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "kind": self.kind}
        if self.kind != "zero":
            out["parity"] = self.parity
        if self.kind in ("finite", "tail"):
            key = "max_degree" if self.kind == "finite" else "min_degree"
            out[key] = self.bound
        if self.kind == "finite":
            out["terms"] = [t.to_json() for t in self.terms_up_to(self.bound)]
            out["total_dim"] = self.total_dim()
        return out


def full_series(n: int, alpha: str) -> KTypeFormula:
    return KTypeFormula(n, "full", check_parity(alpha))


def finite_constituent(n: int, m: int, alpha: str) -> KTypeFormula:
    """Harmonic degrees of parity alpha up to m (the finite constituent)."""
    if parity_of_int(m) != alpha:
        raise ValueError("constituent parameter parity must match alpha")
    return KTypeFormula(n, "finite", alpha, m)


def tail_constituent(n: int, m: int, alpha: str) -> KTypeFormula:
    """Harmonic degrees of parity alpha from m + 2 on (the big constituent)."""
    if parity_of_int(m) != alpha:
        raise ValueError("constituent parameter parity must match alpha")
    return KTypeFormula(n, "tail", alpha, m + 2)


# ---------------------------------------------------------------------------
# composition series
# ---------------------------------------------------------------------------

@dataclass
class CompositionReport:
    n: int
    lam: Fraction
    alpha: str
    irreducible: bool
    case: str  # "A", "B" or "none"
    sub: KTypeFormula | None
    quotient: KTypeFormula | None
    full: KTypeFormula

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": str(self.lam),
            "alpha": self.alpha,
            "irreducible": self.irreducible,
            "case": self.case,
            "sub": self.sub.to_json() if self.sub else None,
            "quotient": self.quotient.to_json() if self.quotient else None,
            "full": self.full.to_json(),
        }


def _require_rank(n: int) -> None:
    if n < 3:
        raise UnsupportedRankError(
            "composition/K-type formulas are implemented for n >= 3 only"
        )


def composition_series(n: int, lam, alpha: str) -> CompositionReport:
    """Length-two structure of the scalar induced representation.

    Reducible exactly at nonpositive integers with matching parity (finite
    submodule) and at integers >= n with matching shifted parity (finite
    quotient); irreducible at every other real parameter.
    """
    _require_rank(n)
    check_parity(alpha)
    lam = Fraction(lam)
    full = full_series(n, alpha)
    if lam.denominator == 1:
        li = int(lam)
        if li <= 0 and parity_of_int(li) == alpha:
            m = -li
            return CompositionReport(
                n, lam, alpha, False, "A",
                finite_constituent(n, m, alpha), tail_constituent(n, m, alpha), full,
            )
        if li >= n and parity_of_int(li + n) == alpha:
            m = li - n
            return CompositionReport(
                n, lam, alpha, False, "B",
                tail_constituent(n, m, alpha), finite_constituent(n, m, alpha), full,
            )
    return CompositionReport(n, lam, alpha, True, "none", None, None, full)


# ---------------------------------------------------------------------------
# kernel and image tables
# ---------------------------------------------------------------------------

@dataclass
class KernelImageReport:
    n: int
    k: int
    alpha: str
    kernel: KTypeFormula
    image: KTypeFormula

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "alpha": self.alpha,
            "kernel": self.kernel.to_json(),
            "image": self.image.to_json(),
        }


def kernel_image_ktypes(n: int, k: int, alpha: str) -> KernelImageReport:
    """K-type formulas of the kernel and image of the degree-k operator."""
    _require_rank(n)
    check_parity(alpha)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0 or parity_of_int(1 - k) != alpha:
        zero = KTypeFormula(n, "zero", "+")
        return KernelImageReport(n, k, alpha, zero, full_series(n, alpha))
    m = k - 1
    return KernelImageReport(
        n, k, alpha, finite_constituent(n, m, alpha), tail_constituent(n, m, alpha),
    )


# ---------------------------------------------------------------------------
# the polynomial model of the finite constituent
# ---------------------------------------------------------------------------

@dataclass
class FiniteModelReport:
    n: int
    k: int
    max_degree: int
    kernel_matches_low_degrees: bool
    low_degrees_invariant: bool
    dimension_matches_table: bool
    kernel_dim: int
    table_dim: int

    @property
    def passed(self) -> bool:
        return (
            self.kernel_matches_low_degrees
            and self.low_degrees_invariant
            and self.dimension_matches_table
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max_degree": self.max_degree,
            "kernel_matches_low_degrees": self.kernel_matches_low_degrees,
            "low_degrees_invariant": self.low_degrees_invariant,
            "dimension_matches_table": self.dimension_matches_table,
            "kernel_dim": self.kernel_dim,
            "table_dim": self.table_dim,
            "passed": self.passed,
        }


def finite_model_check(n: int, k: int, max_degree: int | None = None) -> FiniteModelReport:
    """Certify the polynomial model of the finite constituent, exactly.

    Three facts are checked on the cell model: (a) polynomials killed by the
    degree-k operator up to the degree bound are exactly those of degree
    below k, (b) that space is invariant under the full Lie algebra action
    at the matching parameter, and (c) its dimension equals the total of the
    finite K-type table at the matching parity.
    """
    _require_rank(n)
    if k < 1:
        raise ValueError("the finite model needs k >= 1")
    if max_degree is None:
        max_degree = k + 3
    if max_degree < k:
        raise ValueError("degree bound must reach the operator order")
    pd = ParabolicData(n)
    nvars = pd.nvars
    built = build_operator(n, k, pd)
    op = built.operator

    # (a) exact nullspace of the operator on polynomials of degree <= max_degree
    source = monomials_up_to(nvars, max_degree)
    col_of = {mi: i for i, mi in enumerate(source)}
    rows: dict[tuple, dict] = {}
    for mi in source:
        img = op.apply(Polynomial.monomial("x", mi))
        for label, poly in img.items():
            for tm, c in poly.terms.items():
                rows.setdefault((label, tm), {})[col_of[mi]] = c
    kernel_vecs = linalg.nullspace(list(rows.values()), len(source), method="field")
    kernel_dim = len(kernel_vecs)
    low_span = linalg.SpanBasis(
        [{col_of[mi]: Fraction(1)} for mi in source if sum(mi) <= k - 1]
    )
    kernel_ok = kernel_dim == low_span.dim and all(
        low_span.contains(v) for v in kernel_vecs
    )

    # (b) invariance of the low-degree space under every basis element
    params = BundleParams(n, TRIVIAL, "+", built.lam, dual_twist=False)
    invariant = True
    low = monomials_up_to(nvars, k - 1)
    scalar = (0,) * nvars
    for x in pd.sl_basis():
        act = dpi(x, params, pd)
        for mi in low:
            out = act.apply({scalar: Polynomial.monomial("x", mi)})
            img = out.get(scalar)
            if img is not None and img.degree() > k - 1:
                invariant = False

    # (c) dimension of the finite K-type table at the matching parity
    alpha = parity_of_int(1 - k)
    table = kernel_image_ktypes(n, k, alpha).kernel
    table_dim = table.total_dim()
    low_dim = monomial_count(nvars + 1, k - 1)  # all degrees < k in nvars vars
    dims_ok = table_dim == low_dim == kernel_dim

    return FiniteModelReport(
        n, k, max_degree, kernel_ok, invariant, dims_ok, kernel_dim, table_dim,
    )
