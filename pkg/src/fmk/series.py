"""The infinitesimal principal series action on the open cell.

A section of the induced bundle restricted to the open cell is a W-valued
polynomial (or smooth) function of the cell coordinates.  The Lie algebra
acts by differential operators with polynomial coefficients of degree at
most two: conjugating a Lie algebra element by the generic cell point and
splitting it along n_- + m + a + n_+ yields

* a first-order part from the lowering coefficients (right translation
  along the cell is plain partial differentiation, with a minus sign),
* a multiplication part from the projection onto the grading element,
  weighted by the inducing character,
* a fiber part from the semisimple Levi projection.

The twisted dual bundle replaces the character value by (trace of ad on the
nilradical) minus it, and the fiber action by its contragredient.

Operators are stored as matrices of normal-ordered Weyl elements indexed by
fiber basis labels, so composition and commutators reduce to exact Weyl
algebra arithmetic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import FiberError, SizeMismatchError, VariableSpaceError
from .exact import (
    MultiIndex, Polynomial, grlex_key, mi_unit, monomial_basis, monomials_up_to,
)
from .slstruct import GMatrix, ParabolicData, check_parity
from .weyl import WeylElement


# ---------------------------------------------------------------------------
# fibers and bundle parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fiber:
    """The inducing fiber: trivial, degree-k polynomials, or their dual."""

    kind: str  # "trivial" | "poly" | "sym"
    degree: int = 0

    def __post_init__(self):
        if self.kind not in ("trivial", "poly", "sym"):
            raise ValueError(f"unknown fiber kind {self.kind!r}")
        if self.kind == "trivial" and self.degree != 0:
            raise ValueError("trivial fiber has degree 0")
        if self.degree < 0:
            raise ValueError("fiber degree must be nonnegative")

    def labels(self, n: int) -> list[MultiIndex]:
        return monomial_basis(n - 1, self.degree)

    def describe(self, n: int) -> str:
        if self.kind == "trivial" or n == 2 or self.degree == 0:
            return "triv"
        return f"{self.kind}^{self.degree}"


TRIVIAL = Fiber("trivial", 0)


def poly_fiber(k: int) -> Fiber:
    return Fiber("poly", k)


def sym_fiber(k: int) -> Fiber:
    return Fiber("sym", k)


@dataclass(frozen=True)
class BundleParams:
    """Parameters of one induced bundle in the family under study.

    ``dual_twist`` selects the density-twisted dual parameters: the inducing
    character value on the grading element becomes (trace of ad on the
    nilradical) - lam, and a nontrivial fiber acts by its contragredient.
    The parity character is bookkeeping at this infinitesimal level; the
    classification records enforce it separately.
    """

    n: int
    fiber: Fiber = TRIVIAL
    alpha: str = "+"
    lam: object = Fraction(0)
    dual_twist: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        check_parity(self.alpha)

    def labels(self) -> list[MultiIndex]:
        return self.fiber.labels(self.n)


# ---------------------------------------------------------------------------
# fiber actions of the Levi block
# ---------------------------------------------------------------------------

def dsigma_fiber(y: GMatrix, fiber: Fiber, pd: ParabolicData) -> dict[tuple[MultiIndex, MultiIndex], object]:
    """Action of a Levi-block element on the fiber, as a sparse matrix.

    Keys are (output label, input label).  For the symmetric power the basis
    is the raw monomial one; for its polynomial dual the basis is the
    normalized dual monomial basis, and the map is minus the transpose of
    the symmetric-power action expressed there.
    """
    if not pd.is_in_m(y):
        raise FiberError("element does not lie in the Levi block")
    if fiber.kind == "trivial":
        return {}
    m = pd.n - 1
    block = [[y.entries[a + 1][b + 1] for b in range(m)] for a in range(m)]
    k = fiber.degree
    out: dict[tuple[MultiIndex, MultiIndex], object] = {}

    def put(lo, li, v):
        if v == 0:
            return
        key = (lo, li)
        nv = out.get(key, 0) + v
        if nv == 0:
            out.pop(key, None)
        else:
            out[key] = nv

    for ki in monomial_basis(m, k):
        for j in range(m):
            kj = ki[j]
            if kj == 0:
                continue
            for i in range(m):
                lo = tuple(
                    e + (1 if t == i else 0) - (1 if t == j else 0)
                    for t, e in enumerate(ki)
                )
                if fiber.kind == "sym":
                    # derivation action on monomials: e_j -> sum_i B_ij e_i
                    put(lo, ki, block[i][j] * kj)
                else:
                    # contragredient on the normalized dual basis
                    if block[j][i] == 0:
                        continue
                    ratio = Fraction(_mi_factorial(lo), _mi_factorial(ki))
                    put(lo, ki, -block[j][i] * kj * ratio)
    return out


def _mi_factorial(mi: MultiIndex) -> int:
    out = 1
    for e in mi:
        out *= factorial(e)
    return out


def fiber_pairing(p_label: MultiIndex, v_label: MultiIndex) -> Fraction:
    """Pairing of the dual fiber basis against the monomial basis (delta)."""
    from .exact import dual_pairing
    return dual_pairing(p_label, v_label)


# ---------------------------------------------------------------------------
# matrix-of-Weyl-elements operators
# ---------------------------------------------------------------------------

class PDOperator:
    """A W_out-valued polynomial-coefficient differential operator on W_in.

    entries[(lo, li)] is the Weyl element mapping the li-component of the
    input to the lo-component of the output; absent entries are zero.
    """

    __slots__ = ("nvars", "labels_out", "labels_in", "entries")

    def __init__(self, nvars, labels_out, labels_in, entries):
        self.nvars = nvars
        self.labels_out = list(labels_out)
        self.labels_in = list(labels_in)
        self.entries = {k: w for k, w in entries.items() if not w.is_zero()}

    @classmethod
    def identity(cls, nvars: int, labels) -> "PDOperator":
        eye = {
            (l, l): WeylElement.identity("x", nvars) for l in labels
        }
        return cls(nvars, labels, labels, eye)

    def entry(self, lo: MultiIndex, li: MultiIndex) -> WeylElement:
        return self.entries.get((lo, li), WeylElement.zero("x", self.nvars))

    def apply(self, vec: dict[MultiIndex, Polynomial]) -> dict[MultiIndex, Polynomial]:
        out: dict[MultiIndex, Polynomial] = {}
        for (lo, li), w in self.entries.items():
            p = vec.get(li)
            if p is None or p.is_zero():
                continue
            img = w.apply(p)
            if img.is_zero():
                continue
            out[lo] = out[lo] + img if lo in out else img
        return {lo: p for lo, p in out.items() if not p.is_zero()}

    def apply_scalar(self, p: Polynomial) -> dict[MultiIndex, Polynomial]:
        """Apply to a scalar function (single input label)."""
        if len(self.labels_in) != 1:
            raise SizeMismatchError("operator does not have a scalar source")
        return self.apply({self.labels_in[0]: p})

    def compose(self, other: "PDOperator") -> "PDOperator":
        """self after other."""
        if self.nvars != other.nvars:
            raise VariableSpaceError("operators live on different cells")
        if set(self.labels_in) != set(other.labels_out):
            raise SizeMismatchError("inner labels do not match")
        by_mid: dict[MultiIndex, list[tuple[MultiIndex, WeylElement]]] = {}
        for (mid, li), w in other.entries.items():
            by_mid.setdefault(mid, []).append((li, w))
        entries: dict[tuple[MultiIndex, MultiIndex], WeylElement] = {}
        for (lo, mid), w1 in self.entries.items():
            for li, w2 in by_mid.get(mid, ()):
                prod = w1 * w2
                key = (lo, li)
                entries[key] = entries[key] + prod if key in entries else prod
        return PDOperator(self.nvars, self.labels_out, other.labels_in, entries)

    def __sub__(self, other: "PDOperator") -> "PDOperator":
        entries = dict(self.entries)
        for k, w in other.entries.items():
            entries[k] = entries[k] - w if k in entries else -w
        return PDOperator(self.nvars, self.labels_out, self.labels_in, entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, PDOperator):
            return NotImplemented
        return self.nvars == other.nvars and self.entries == other.entries

    def max_order(self) -> int:
        return max((w.order() for w in self.entries.values()), default=-1)

    def __repr__(self):
        body = "; ".join(
            f"{lo}<-{li}: {w}" for (lo, li), w in sorted(
                self.entries.items(), key=lambda t: (grlex_key(t[0][0]), grlex_key(t[0][1]))
            )
        )
        return f"PDOperator({body})"


# ---------------------------------------------------------------------------
# the infinitesimal action
# ---------------------------------------------------------------------------

def dpi(x: GMatrix, params: BundleParams, pd: ParabolicData | None = None) -> PDOperator:
    """The action of a Lie algebra element on cell sections of the bundle."""
    pd = pd or ParabolicData(params.n)
    if pd.n != params.n:
        raise SizeMismatchError("parabolic data does not match the bundle")
    if not x.is_traceless():
        raise ValueError("Lie algebra elements must be traceless")
    nvars = pd.nvars
    labels = params.labels()
    dec = pd.decompose_poly(pd.ad_conjugate(x))

    # character on the grading element
    a_char = pd.two_rho_nplus() - params.lam if params.dual_twist else params.lam
    scalar = WeylElement.from_polynomial(dec.a_coeff).scale(a_char)

    # right-translation part: minus the lowering coefficients times partials
    for r, c_r in enumerate(dec.nminus_coeffs):
        if c_r.is_zero():
            continue
        term = WeylElement.from_polynomial(c_r) * WeylElement.derivative("x", mi_unit(nvars, r))
        scalar = scalar - term

    entries: dict[tuple[MultiIndex, MultiIndex], WeylElement] = {}
    for l in labels:
        entries[(l, l)] = scalar

    if params.fiber.kind != "trivial":
        for mono, const in dec.m_part.monomial_decomposition().items():
            if const.is_zero():
                continue
            act = dsigma_fiber(const, params.fiber, pd)
            if params.dual_twist:
                act = {(li, lo): -v for (lo, li), v in act.items()}
            mult = WeylElement.monomial("x", mono)
            for (lo, li), v in act.items():
                w = mult.scale(v)
                key = (lo, li)
                entries[key] = entries[key] + w if key in entries else w

    return PDOperator(nvars, labels, labels, entries)


def dpi_commutator_defect(
    x: GMatrix, y: GMatrix, params: BundleParams, pd: ParabolicData,
) -> PDOperator:
    """dpi([x,y]) - [dpi(x), dpi(y)]; zero exactly when the bracket law holds."""
    from .slstruct import bracket
    ax, ay = dpi(x, params, pd), dpi(y, params, pd)
    lie = dpi(bracket(x, y), params, pd)
    return lie - (ax.compose(ay) - ay.compose(ax))


# ---------------------------------------------------------------------------
# intertwining verification
# ---------------------------------------------------------------------------

@dataclass
class IntertwiningReport:
    passed: bool
    n: int
    max_degree: int
    checked: int = 0
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "n": self.n,
            "max_degree": self.max_degree,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


def max_workers() -> int:
    """Parallelism cap from the FMK_THREADS environment variable."""
    raw = os.environ.get("FMK_THREADS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def verify_intertwining(
    op: PDOperator,
    src: BundleParams,
    dst: BundleParams,
    max_degree: int,
    pd: ParabolicData | None = None,
) -> IntertwiningReport:
    """Check equivariance of an operator between two bundles, exactly.

    For every basis element of the Lie algebra, composes the operator with
    the source action and the target action with the operator, applies both
    to every monomial of degree up to the bound and every input label, and
    compares the results.  Failure returns the first counterexample in the
    deterministic basis/monomial order.
    """
    pd = pd or ParabolicData(src.n)
    basis = pd.sl_basis()
    monos = monomials_up_to(pd.nvars, max_degree)

    def check_one(item):
        idx, x = item
        left = op.compose(dpi(x, src, pd))
        right = dpi(x, dst, pd).compose(op)
        count = 0
        for mi in monos:
            p = Polynomial.monomial("x", mi)
            for li in op.labels_in:
                vec = {li: p}
                lv = left.apply(vec)
                rv = right.apply(vec)
                count += 1
                if lv != rv:
                    diff = {}
                    for lo in set(lv) | set(rv):
                        a = lv.get(lo, Polynomial.zero("x", pd.nvars))
                        b = rv.get(lo, Polynomial.zero("x", pd.nvars))
                        if a != b:
                            diff[lo] = str(a - b)
                    return count, {
                        "basis_index": idx,
                        "basis_element": x.to_json(),
                        "monomial": list(mi),
                        "input_label": list(li),
                        "difference": {str(list(k)): v for k, v in diff.items()},
                    }
        return count, None

    items = list(enumerate(basis))
    workers = max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(check_one, items))
    else:
        results = [check_one(it) for it in items]

    total = 0
    for count, witness in results:
        total += count
        if witness is not None:
            return IntertwiningReport(False, src.n, max_degree, total, witness)
    return IntertwiningReport(True, src.n, max_degree, total, None)
