"""The F-method engine: assemble, solve, and classify.

Pipeline:

1.  Conjugate each raising generator into the twisted-dual action on the
    cell, Fourier-transform it to the dual side, and collect the resulting
    second-order operators into an :class:`FSystem`.  Two structural
    identities are checked at assembly time: each operator kills constants,
    and multiplying by minus the matching coordinate turns it into
    theta_j * (lam - 1 + E), an Euler-operator form that makes the system
    diagonal on monomials.

2.  Restrict to one homogeneous degree and compute the exact nullspace of
    the stacked operators over Q or over Q(lam).  Over Q(lam) the pivots of
    the fraction-free elimination are minors of the system matrix, so the
    parameter values where the rank can drop are among their rational
    roots; each candidate is confirmed by re-solving at that value.

3.  Cut the nullspace down by Levi equivariance.  Torus elements act
    diagonally on monomials on both sides, so weight matching pins each
    fiber component to a single monomial line; the remaining generators
    give sparse linear conditions that are solved exactly.  The center of
    the Levi fixes the target character, and the component group fixes the
    parity shift.

4.  Convert surviving solutions into a constant-coefficient differential
    operator (replace each dual-side monomial by the matching partial
    derivative) and into a symmetric-algebra element over the lowering
    basis (replace it by the matching lowering monomial).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import ConsistencyError
from .exact import (
    MultiIndex, Polynomial, VectorPolynomial, grlex_key, mi_unit, monomial_basis,
)
from .ratfunc import LAM, RatFunc, scalar_is_generic, subs_scalar
from .series import BundleParams, PDOperator, TRIVIAL, dpi, dsigma_fiber, sym_fiber
from .slstruct import GMatrix, ParabolicData, bracket, parity_add
from .weyl import WeylElement


# ---------------------------------------------------------------------------
# system assembly
# ---------------------------------------------------------------------------

@dataclass
class FSystem:
    """The dual-side operators cutting out the solution space."""

    n: int
    lam: object
    ops: list[WeylElement]
    pd: ParabolicData

    @property
    def nvars(self) -> int:
        return self.n - 1

    def specialize(self, lam0) -> "FSystem":
        """The system at a concrete parameter value, checks re-run."""
        lam0 = Fraction(lam0)
        ops = [op.subs_param(lam0) for op in self.ops]
        _check_assembly(self.n, lam0, ops)
        return FSystem(self.n, lam0, ops, self.pd)


def assemble_fsystem(n: int, lam=None, pd: ParabolicData | None = None) -> FSystem:
    """Build the dual-side system for the twisted-dual scalar bundle.

    ``lam=None`` runs with the formal parameter, which is how the
    classification discovers its special values.
    """
    pd = pd or ParabolicData(n)
    if lam is None:
        lam = LAM
    params = BundleParams(n, TRIVIAL, "+", lam, dual_twist=True)
    scalar_label = (0,) * pd.nvars
    ops: list[WeylElement] = []
    for j in range(pd.nvars):
        cell_op = dpi(pd.nplus_basis[j], params, pd).entry(scalar_label, scalar_label)
        ops.append(cell_op.fourier_transform())
    _check_assembly(n, lam, ops)
    return FSystem(n, lam, ops, pd)


def _check_assembly(n: int, lam, ops: list[WeylElement]) -> None:
    nvars = n - 1
    one = Polynomial.constant("zeta", nvars, 1)
    euler = WeylElement.euler("zeta", nvars)
    for j, op in enumerate(ops):
        if not op.apply(one).is_zero():
            raise ConsistencyError(f"operator {j} does not kill constants")
        lhs = WeylElement.monomial("zeta", mi_unit(nvars, j)).scale(-1) * op
        rhs = WeylElement.theta("zeta", nvars, j) * (
            WeylElement.identity("zeta", nvars, lam - 1) + euler
        )
        if lhs != rhs:
            raise ConsistencyError(
                f"operator {j} fails the Euler-form identity: {lhs} != {rhs}"
            )


# ---------------------------------------------------------------------------
# the Levi action on the dual-side polynomials
# ---------------------------------------------------------------------------

_AD_SHARP_CACHE: dict[tuple[int, GMatrix], WeylElement] = {}


def ad_sharp_operator(y: GMatrix, pd: ParabolicData) -> WeylElement:
    """Derived action of a Levi element on polynomials on the nilradical.

    The group acts by substituting the inverse adjoint action into the
    argument; on the Lie algebra this becomes the vector field
    -sum c_ji zeta_i d_j where [y, N_i^+] = sum_j c_ji N_j^+.
    """
    cached = _AD_SHARP_CACHE.get((pd.n, y))
    if cached is not None:
        return cached
    nvars = pd.nvars
    out = WeylElement.zero("zeta", nvars)
    for i, ni in enumerate(pd.nplus_basis):
        br = bracket(y, ni)
        dec = pd.decompose(br)
        if any(c != 0 for c in dec.nminus_coeffs) or dec.a_coeff != 0 or not dec.m_part.is_zero():
            raise ConsistencyError("Levi bracket left the nilradical")
        for j, c in enumerate(dec.nplus_coeffs):
            if c != 0:
                term = WeylElement.monomial("zeta", mi_unit(nvars, i)) * \
                    WeylElement.derivative("zeta", mi_unit(nvars, j))
                out = out - term.scale(c)
    _AD_SHARP_CACHE[(pd.n, y)] = out
    return out


# ---------------------------------------------------------------------------
# solving one degree
# ---------------------------------------------------------------------------

@dataclass
class DegreeSolution:
    """Everything the solver knows about one homogeneous degree."""

    n: int
    degree: int
    lam: object
    kernel_dim: int
    kernel_basis: list[Polynomial]
    hom_basis: list[VectorPolynomial]
    nu: object | None
    beta_shift: int
    exceptional: list["DegreeSolution"] = field(default_factory=list)

    @property
    def hom_dimension(self) -> int:
        return len(self.hom_basis)


def solve_degree(fs: FSystem, k: int) -> DegreeSolution:
    """Exact solution space of the system in homogeneous degree k.

    Over Q(lam) the returned object carries, in ``exceptional``, one fully
    solved instance per parameter value at which the rank drops.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    nvars = fs.nvars
    cols = monomial_basis(nvars, k)
    col_of = {mi: i for i, mi in enumerate(cols)}

    rows: dict[tuple[int, MultiIndex], linalg.Row] = {}
    for j, op in enumerate(fs.ops):
        for ci, mi in enumerate(cols):
            img = op.apply(Polynomial.monomial("zeta", mi))
            for tm, c in img.terms.items():
                rows.setdefault((j, tm), {})[ci] = c
    row_list = [rows[key] for key in sorted(rows, key=lambda t: (t[0], grlex_key(t[1])))]

    generic = scalar_is_generic(fs.lam)
    # fraction-free over Q; field elimination over Q(lam), where the
    # fraction-free pivots would be huge polynomial minors
    if generic:
        ech = linalg.echelon_field(row_list, len(cols))
    else:
        ech = linalg.echelon_ff(row_list, len(cols))
    kernel_vecs = linalg.nullspace_from_echelon(ech)
    kernel = [_vec_to_poly(v, cols, nvars) for v in kernel_vecs]

    eq = impose_equivariance(kernel, fs.n, k, fs.lam, fs.pd)
    sol = DegreeSolution(
        fs.n, k, fs.lam, len(kernel), kernel, eq.hom_basis, eq.nu, eq.beta_shift,
    )

    if generic:
        generic_rank = ech.rank
        candidates: set[Fraction] = set()
        for pv in ech.pivot_values():
            if isinstance(pv, RatFunc) and not pv.is_constant():
                candidates.update(pv.numerator_roots())
        for lam0 in sorted(candidates):
            spec_rows = [
                {c: subs_scalar(v, lam0) for c, v in r.items()} for r in row_list
            ]
            spec_rows = [{c: v for c, v in r.items() if v != 0} for r in spec_rows]
            spec_rows = [r for r in spec_rows if r]
            if linalg.rank(spec_rows, len(cols)) < generic_rank:
                sub = solve_degree(fs.specialize(lam0), k)
                sol.exceptional.append(sub)
    return sol


def _vec_to_poly(vec: linalg.Row, cols: list[MultiIndex], nvars: int) -> Polynomial:
    return Polynomial("zeta", nvars, {cols[i]: c for i, c in vec.items()})


# ---------------------------------------------------------------------------
# equivariance
# ---------------------------------------------------------------------------

@dataclass
class EquivarianceResult:
    hom_basis: list[VectorPolynomial]
    nu: object
    beta_shift: int


def impose_equivariance(
    kernel_basis: list[Polynomial],
    n: int,
    k: int,
    lam,
    pd: ParabolicData | None = None,
) -> EquivarianceResult:
    """Filter a degree-k kernel down to the Levi-equivariant maps.

    A candidate assigns to each fiber basis label a kernel element; torus
    equivariance forces each component onto the monomial of the same weight,
    and the remaining Levi generators give linear gluing conditions across
    components.  The target character is forced to lam plus the scaling
    weight of degree-k polynomials on the nilradical, and the component
    group forces the parity shift by k.
    """
    pd = pd or ParabolicData(n)
    nvars = pd.nvars
    cols = monomial_basis(nvars, k)
    col_of = {mi: i for i, mi in enumerate(cols)}
    labels = cols  # fiber labels coincide with degree-k exponents

    # the center of the Levi scales degree-k polynomials on the nilradical
    scaling = ad_sharp_operator(pd.h0tilde, pd)
    if k == 0:
        eig = Fraction(0)
    else:
        probe = Polynomial.monomial("zeta", cols[0])
        img = scaling.apply(probe)
        eig = img.coefficient(cols[0])
        if img != probe.scale(eig):
            raise ConsistencyError("center of the Levi does not act by a scalar")
    nu = lam - eig
    beta_shift = k % 2
    if not kernel_basis:
        return EquivarianceResult([], nu, beta_shift)

    kb_vectors = [
        {col_of[mi]: c for mi, c in p.terms.items()} for p in kernel_basis
    ]
    kb_span = linalg.SpanBasis(kb_vectors)

    # weights of the monomial basis under the Levi torus, on both sides
    cartan = pd.m_cartan_basis()
    pol_weights = {mi: [] for mi in cols}
    lab_weights = {l: [] for l in labels}
    for y in cartan:
        adop = ad_sharp_operator(y, pd)
        for mi in cols:
            img = adop.apply(Polynomial.monomial("zeta", mi))
            ev = img.coefficient(mi)
            if img != Polynomial.monomial("zeta", mi, ev):
                raise ConsistencyError("torus action is not diagonal on monomials")
            pol_weights[mi].append(ev)
        act = dsigma_fiber(y, sym_fiber(k), pd)
        for l in labels:
            ev = act.get((l, l), Fraction(0))
            if any(lo != li for (lo, li) in act if li == l):
                raise ConsistencyError("torus action is not diagonal on the fiber")
            lab_weights[l].append(ev)

    # per-label admissible subspace: kernel intersected with the weight line
    kernel_is_full = kb_span.dim == len(cols)
    comp_space: dict[MultiIndex, list[linalg.Row]] = {}
    unknowns: list[tuple[MultiIndex, int]] = []
    for l in labels:
        allowed = [col_of[mi] for mi in cols if pol_weights[mi] == lab_weights[l]]
        unit_vecs = [{ci: Fraction(1)} for ci in allowed]
        if not kb_vectors:
            inter = []
        elif kernel_is_full:
            inter = unit_vecs
        else:
            inter = linalg.intersect_spans(unit_vecs, kb_vectors, len(cols))
        comp_space[l] = inter
        for b in range(len(inter)):
            unknowns.append((l, b))
    if not unknowns:
        return EquivarianceResult([], nu, beta_shift)
    unknown_of = {key: i for i, key in enumerate(unknowns)}

    # gluing equations from the non-torus Levi generators
    eq_rows: dict[tuple[int, MultiIndex, int], linalg.Row] = {}
    gens = [y for y in pd.m_basis() if y not in cartan]
    for gi, y in enumerate(gens):
        adop = ad_sharp_operator(y, pd)
        act_by_li: dict[MultiIndex, list[tuple[MultiIndex, object]]] = {}
        for (lo, li), v in dsigma_fiber(y, sym_fiber(k), pd).items():
            act_by_li.setdefault(li, []).append((lo, v))
        for l in labels:
            # sum over target labels of act[(lo, l)] * p_lo  ==  adop(p_l)
            for b, vec in enumerate(comp_space[l]):
                u = unknown_of[(l, b)]
                img = adop.apply(_vec_to_poly(vec, cols, nvars))
                for mi, c in img.terms.items():
                    key = (gi, l, col_of[mi])
                    eq_rows.setdefault(key, {})[u] = eq_rows.get(key, {}).get(u, 0) - c
            for lo, v in act_by_li.get(l, ()):
                for b, vec in enumerate(comp_space.get(lo, [])):
                    u = unknown_of[(lo, b)]
                    for ci, c in vec.items():
                        key = (gi, l, ci)
                        row = eq_rows.setdefault(key, {})
                        row[u] = row.get(u, 0) + v * c
    eq_list = [r for r in eq_rows.values() if r]
    sols = linalg.nullspace(eq_list, len(unknowns), method="field")

    hom_basis = []
    for s in sols:
        comps: dict[MultiIndex, Polynomial] = {}
        for (l, b), u in unknown_of.items():
            coef = s.get(u)
            if coef is None or coef == 0:
                continue
            add = _vec_to_poly(
                {ci: coef * c for ci, c in comp_space[l][b].items()}, cols, nvars
            )
            comps[l] = comps[l] + add if l in comps else add
        comps = {l: p for l, p in comps.items() if not p.is_zero()}
        if comps:
            hom_basis.append(_normalize(VectorPolynomial(comps, k)))
    return EquivarianceResult(hom_basis, nu, beta_shift)


def _normalize(psi: VectorPolynomial) -> VectorPolynomial:
    for l in psi.labels():
        p = psi.components[l]
        for mi, c in p.sorted_terms():
            return psi.scale(1 / c)
    return psi


# ---------------------------------------------------------------------------
# output forms
# ---------------------------------------------------------------------------

class DiffOperatorSpec:
    """A constant-coefficient operator from scalar to fiber-valued sections.

    ``components[label][deriv]`` is the coefficient of the deriv-th partial
    in the component attached to the normalized dual basis vector at label.
    """

    __slots__ = ("n", "degree", "components")

    def __init__(self, n: int, degree: int, components: dict[MultiIndex, dict[MultiIndex, Fraction]]):
        self.n = n
        self.degree = degree
        self.components = {
            l: {d: Fraction(c) for d, c in terms.items() if c != 0}
            for l, terms in components.items()
        }

    def as_pdoperator(self) -> PDOperator:
        nvars = self.n - 1
        scalar = (0,) * nvars
        entries = {}
        for l, terms in self.components.items():
            w = WeylElement(
                "x", nvars, {((0,) * nvars, d): c for d, c in terms.items()}
            )
            if not w.is_zero():
                entries[(l, scalar)] = w
        return PDOperator(nvars, monomial_basis(nvars, self.degree), [scalar], entries)

    def apply(self, f: Polynomial) -> dict[MultiIndex, Polynomial]:
        return self.as_pdoperator().apply_scalar(f)

    def __eq__(self, other):
        if not isinstance(other, DiffOperatorSpec):
            return NotImplemented
        return (self.n, self.degree, self.components) == (other.n, other.degree, other.components)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "fiber_basis": {"kind": "dual-monomial", "normalization": "1/(k1!*...*km!)"},
            "components": [
                {
                    "label": list(l),
                    "terms": [
                        {"deriv": list(d), "coeff": _frac_str(c)}
                        for d, c in sorted(terms.items(), key=lambda t: grlex_key(t[0]))
                    ],
                }
                for l, terms in sorted(self.components.items(), key=lambda t: grlex_key(t[0]))
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DiffOperatorSpec":
        return cls(
            data["n"], data["degree"],
            {
                tuple(c["label"]): {
                    tuple(t["deriv"]): Fraction(t["coeff"]) for t in c["terms"]
                }
                for c in data["components"]
            },
        )


class VermaHomSpec:
    """A module map encoded by images of the fiber basis in S(n_-).

    Images are polynomials in commuting symbols for the lowering basis,
    legal because the opposite nilradical is abelian.
    """

    __slots__ = ("n", "degree", "components")

    def __init__(self, n: int, degree: int, components: dict[MultiIndex, Polynomial]):
        self.n = n
        self.degree = degree
        self.components = dict(components)

    def __eq__(self, other):
        if not isinstance(other, VermaHomSpec):
            return NotImplemented
        return (self.n, self.degree, self.components) == (other.n, other.degree, other.components)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "components": [
                {"label": list(l), "image": p.to_json()}
                for l, p in sorted(self.components.items(), key=lambda t: grlex_key(t[0]))
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VermaHomSpec":
        return cls(
            data["n"], data["degree"],
            {tuple(c["label"]): Polynomial.from_json(c["image"]) for c in data["components"]},
        )


def _frac_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def symbol_inverse(psi: VectorPolynomial, n: int) -> DiffOperatorSpec:
    """Inverse symbol map: dual-side monomials become partial derivatives."""
    comps: dict[MultiIndex, dict[MultiIndex, Fraction]] = {}
    for l, p in psi.components.items():
        comps[l] = {mi: Fraction(c) for mi, c in p.terms.items()}
    return DiffOperatorSpec(n, psi.degree, comps)


def fc_inverse(psi: VectorPolynomial, n: int) -> VermaHomSpec:
    """Inverse module Fourier transform: monomials become lowering monomials."""
    comps = {
        l: Polynomial("nminus", p.nvars, dict(p.terms))
        for l, p in psi.components.items()
    }
    return VermaHomSpec(n, psi.degree, comps)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass
class ClassificationRecord:
    """One row of a classification table."""

    family: str  # "identity" | "Lambda_G" | "Lambda_gP" | "Lambda_g"
    n: int
    k: int
    alpha: str
    beta: str
    fiber: str
    lam: object | None
    nu: object | None
    s: object | None
    r: object | None
    hom_dim: int
    operator: DiffOperatorSpec | None = None
    hom: VermaHomSpec | None = None

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "alpha": self.alpha,
            "beta": self.beta,
            "fiber": self.fiber,
            "lambda": _param_str(self.lam),
            "nu": _param_str(self.nu),
            "homDim": self.hom_dim,
        }
        if self.family in ("identity", "Lambda_gP", "Lambda_g"):
            out["s"] = _param_str(self.s)
            out["r"] = _param_str(self.r)
        if self.operator is not None:
            out["operator"] = self.operator.to_json()
        if self.hom is not None:
            out["hom"] = self.hom.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationRecord":
        return cls(
            family=data["family"], n=data["n"], k=data["k"],
            alpha=data["alpha"], beta=data["beta"], fiber=data["fiber"],
            lam=_param_parse(data["lambda"]), nu=_param_parse(data["nu"]),
            s=_param_parse(data.get("s", "any")), r=_param_parse(data.get("r", "any")),
            hom_dim=data["homDim"],
            operator=DiffOperatorSpec.from_json(data["operator"]) if "operator" in data else None,
            hom=VermaHomSpec.from_json(data["hom"]) if "hom" in data else None,
        )


def _param_str(v) -> str | None:
    if v is None:
        return "any"
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _param_parse(s: str | None):
    if s is None or s == "any":
        return None
    return Fraction(s)


def _fiber_name(kind: str, n: int, k: int) -> str:
    if k == 0 or n == 2:
        return "triv"
    return f"{kind}^{k}"


@dataclass
class BuiltOperator:
    """The outcome of solving one degree at its special parameter value."""

    n: int
    k: int
    lam: Fraction
    nu: Fraction
    solution: DegreeSolution
    operator: DiffOperatorSpec
    hom: VermaHomSpec


def build_operator(n: int, k: int, pd: ParabolicData | None = None) -> BuiltOperator:
    """Discover the special parameter at degree k and construct both outputs."""
    pd = pd or ParabolicData(n)
    if k == 0:
        fs = assemble_fsystem(n, Fraction(1), pd)
        sol = solve_degree(fs, 0)
        lam0 = Fraction(1)
    else:
        generic = solve_degree(assemble_fsystem(n, None, pd), k)
        if generic.hom_dimension != 0 or not generic.exceptional:
            raise ConsistencyError(
                f"expected a nonzero solution only at special parameters, degree {k}"
            )
        if len(generic.exceptional) != 1:
            raise ConsistencyError(
                f"expected one special parameter at degree {k}, got "
                f"{[str(e.lam) for e in generic.exceptional]}"
            )
        sol = generic.exceptional[0]
        lam0 = Fraction(sol.lam)
    if sol.hom_dimension != 1:
        raise ConsistencyError(f"solution space at degree {k} has dimension {sol.hom_dimension}")
    psi = sol.hom_basis[0]
    return BuiltOperator(
        n, k, lam0, Fraction(sol.nu), sol,
        symbol_inverse(psi, n), fc_inverse(psi, n),
    )


def classify(n: int, k_max: int, alpha: str | None = None) -> list[ClassificationRecord]:
    """Classification records for all degrees up to k_max.

    With ``alpha`` unset, rows are uniform in the parity character and use
    the symbols +- / -+ for (alpha, alpha shifted by k).
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    pd = ParabolicData(n)
    records: list[ClassificationRecord] = []

    def parities(k: int) -> tuple[str, str]:
        if alpha is not None:
            return alpha, parity_add(alpha, k)
        if k % 2 == 0:
            return "+-", "+-"
        return "+-", "-+"

    a0, b0 = parities(0)
    records.append(ClassificationRecord(
        family="identity", n=n, k=0, alpha=a0, beta=b0, fiber="triv",
        lam=None, nu=None, s=None, r=None, hom_dim=1,
    ))
    for k in range(1, k_max + 1):
        built = build_operator(n, k, pd)
        a, b = parities(k)
        records.append(ClassificationRecord(
            family="Lambda_G", n=n, k=k, alpha=a, beta=b,
            fiber=_fiber_name("poly", n, k),
            lam=built.lam, nu=built.nu, s=None, r=None,
            hom_dim=built.solution.hom_dimension, operator=built.operator,
        ))
        records.append(ClassificationRecord(
            family="Lambda_gP", n=n, k=k, alpha=a, beta=b,
            fiber=_fiber_name("sym", n, k),
            lam=built.lam, nu=built.nu, s=-built.lam, r=-built.nu,
            hom_dim=built.solution.hom_dimension, hom=built.hom,
        ))
        records.append(ClassificationRecord(
            family="Lambda_g", n=n, k=k, alpha="n/a", beta="n/a",
            fiber=_fiber_name("sym", n, k),
            lam=built.lam, nu=built.nu, s=-built.lam, r=-built.nu,
            hom_dim=built.solution.hom_dimension,
        ))
    return records


# ---------------------------------------------------------------------------
# reducibility of the scalar-induced module
# ---------------------------------------------------------------------------

@dataclass
class ReducibilityVerdict:
    n: int
    s: Fraction
    reducible: bool
    witness_degree: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": _param_str(self.s),
            "reducible": self.reducible,
            "witness_degree": self.witness_degree,
        }


def reducibility(n: int, s, certify: bool = True) -> ReducibilityVerdict:
    """Reducibility of the scalar generalized Verma module at parameter s.

    The module is reducible exactly when s is a nonnegative integer; the
    witness is the degree k = s + 1 at which a nonscalar map exists.  With
    ``certify`` the witness is confirmed by actually solving that degree.
    """
    s = Fraction(s)
    if s.denominator != 1 or s < 0:
        return ReducibilityVerdict(n, s, False, None)
    k = int(s) + 1
    if certify:
        sol = solve_degree(assemble_fsystem(n, 1 - k), k)
        if sol.hom_dimension != 1:
            raise ConsistencyError(f"witness degree {k} failed certification")
    return ReducibilityVerdict(n, s, True, k)
