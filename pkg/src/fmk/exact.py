"""Exact sparse multivariate polynomials over the rationals.

Everything downstream (differential operators, Lie brackets, nullspaces,
classification tables) is built on the two types in this module:

* a multi-index is a plain tuple of nonnegative ints, one entry per variable;
* a :class:`Polynomial` is a dict from multi-index to coefficient, tagged
  with the variable space it lives in.

Coefficients are ``fractions.Fraction`` or, for computations carried out
with a formal parameter, :class:`fmk.ratfunc.RatFunc`.  No floating point
enters anywhere.

Variable spaces keep the different coordinate families apart:

* ``"x"``     coordinates on the abelian opposite nilradical (the open cell),
* ``"zeta"``  coordinates on the nilradical, the Fourier-dual side,
* ``"y"``     coordinates of the degree-k polynomial fiber,
* ``"nminus"``commuting symbols for the lowering basis inside S(n_-).

Monomial order is graded lexicographic throughout: sort by total degree,
then lexicographically with the earlier variable dominating.  The order is
fixed globally so matrix layouts and emitted tables are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DegreeMismatchError, VariableSpaceError
from .ratfunc import RatFunc, subs_scalar

MultiIndex = tuple[int, ...]

_VAR_STEMS = {"x": "x", "zeta": "zeta", "y": "y", "nminus": "N"}


# ---------------------------------------------------------------------------
# multi-index helpers
# ---------------------------------------------------------------------------

def mi_degree(mi: MultiIndex) -> int:
    return sum(mi)


def mi_add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def mi_sub(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError(f"negative exponent in {a} - {b}")
    return out


def mi_unit(nvars: int, idx: int, power: int = 1) -> MultiIndex:
    e = [0] * nvars
    e[idx] = power
    return tuple(e)


def grlex_key(mi: MultiIndex):
    """Sort key realizing the global graded-lex order."""
    return (sum(mi), tuple(-e for e in mi))


def monomial_basis(nvars: int, degree: int) -> list[MultiIndex]:
    """All multi-indices of the exact degree, in graded-lex order.

    The count is the stars-and-bars number C(degree + nvars - 1, nvars - 1).
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out: list[MultiIndex] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    return out


def monomials_up_to(nvars: int, max_degree: int) -> list[MultiIndex]:
    out: list[MultiIndex] = []
    for d in range(max_degree + 1):
        out.extend(monomial_basis(nvars, d))
    return out


def monomial_count(nvars: int, degree: int) -> int:
    return comb(degree + nvars - 1, nvars - 1)


def dual_pairing(y_dual: MultiIndex, e_basis: MultiIndex) -> Fraction:
    """Pairing of the normalized dual monomial basis against monomials.

    The dual basis carries the multinomial normalization internally, so the
    pairing is the plain Kronecker delta on equal-degree labels.
    """
    if mi_degree(y_dual) != mi_degree(e_basis):
        raise DegreeMismatchError(
            f"pairing needs equal degrees, got {y_dual} and {e_basis}"
        )
    return Fraction(1) if y_dual == e_basis else Fraction(0)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """A sparse exact polynomial in a tagged variable space.

    Instances are immutable by convention: no method mutates ``terms`` after
    construction, so values can be shared freely.
    """

    __slots__ = ("space", "nvars", "terms")

    def __init__(self, space: str, nvars: int, terms: dict[MultiIndex, object] | None = None):
        self.space = space
        self.nvars = nvars
        clean: dict[MultiIndex, object] = {}
        for mi, c in (terms or {}).items():
            if len(mi) != nvars:
                raise ValueError(f"multi-index {mi} has wrong length for {nvars} variables")
            if c == 0:
                continue
            clean[mi] = c if isinstance(c, RatFunc) else Fraction(c)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space: str, nvars: int) -> "Polynomial":
        return cls(space, nvars)

    @classmethod
    def constant(cls, space: str, nvars: int, c) -> "Polynomial":
        return cls(space, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, space: str, nvars: int, idx: int) -> "Polynomial":
        return cls(space, nvars, {mi_unit(nvars, idx): 1})

    @classmethod
    def monomial(cls, space: str, mi: MultiIndex, c=1) -> "Polynomial":
        return cls(space, len(mi), {mi: c})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mi_degree(mi) for mi in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mi_degree(mi) for mi in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.space, self.nvars,
            {mi: c for mi, c in self.terms.items() if mi_degree(mi) == degree},
        )

    def coefficient(self, mi: MultiIndex):
        return self.terms.get(mi, Fraction(0))

    def _check(self, other: "Polynomial") -> None:
        if self.space != other.space or self.nvars != other.nvars:
            raise VariableSpaceError(
                f"cannot combine {self.space}[{self.nvars}] with {other.space}[{other.nvars}]"
            )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for mi, c in other.terms.items():
            out[mi] = out.get(mi, 0) + c
        return Polynomial(self.space, self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.space, self.nvars, {mi: -c for mi, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: dict[MultiIndex, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mi_add(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.space, self.nvars, out)

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.space, self.nvars)
        return Polynomial(self.space, self.nvars, {mi: v * c for mi, v in self.terms.items()})

    def diff(self, idx: int, order: int = 1) -> "Polynomial":
        """Exact partial derivative of the given order."""
        if not 0 <= idx < self.nvars:
            raise ValueError(f"variable index {idx} out of range")
        if order < 0:
            raise ValueError("order must be nonnegative")
        out: dict[MultiIndex, object] = {}
        for mi, c in self.terms.items():
            e = mi[idx]
            if e < order:
                continue
            fac = 1
            for t in range(e, e - order, -1):
                fac *= t
            out[mi[:idx] + (e - order,) + mi[idx + 1:]] = c * fac
        return Polynomial(self.space, self.nvars, out)

    def diff_multi(self, d: MultiIndex) -> "Polynomial":
        p = self
        for idx, order in enumerate(d):
            if order:
                p = p.diff(idx, order)
        return p

    def subs_param(self, value) -> "Polynomial":
        """Specialize RatFunc coefficients at a rational parameter value."""
        return Polynomial(
            self.space, self.nvars,
            {mi: subs_scalar(c, value) for mi, c in self.terms.items()},
        )

    # -- comparison / display --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.space == other.space
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[MultiIndex, object]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        stem = _VAR_STEMS.get(self.space, self.space)
        parts = []
        for mi, c in self.sorted_terms():
            factors = [
                f"{stem}{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mi) if e
            ]
            coeff = _fmt_coeff(c)
            if factors:
                body = "*".join(factors)
                parts.append(body if coeff == "1" else f"-{body}" if coeff == "-1" else f"{coeff}*{body}")
            else:
                parts.append(coeff)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self.space!r}, {self})"

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "nvars": self.nvars,
            "terms": [
                {"exponents": list(mi), "coeff": _coeff_str(c)}
                for mi, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(
            data["space"], data["nvars"],
            {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data["terms"]},
        )


def _fmt_coeff(c) -> str:
    if isinstance(c, RatFunc):
        return f"({c})"
    return str(c)


def _coeff_str(c) -> str:
    """Coefficient as a "num/den" string; parameter-dependent ones verbatim."""
    if isinstance(c, RatFunc):
        if c.is_constant():
            c = c.constant_value()
        else:
            return str(c)
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


# ---------------------------------------------------------------------------
# vector-valued polynomials
# ---------------------------------------------------------------------------

class VectorPolynomial:
    """A polynomial with values in the degree-k fiber.

    Components are indexed by the exponent label of the normalized dual
    monomial basis of the fiber; all labels share one degree.  The component
    at label ``k`` is the coefficient polynomial of the k-th dual basis
    vector.
    """

    __slots__ = ("degree", "components")

    def __init__(self, components: dict[MultiIndex, Polynomial], degree: int | None = None):
        comps = {mi: p for mi, p in components.items() if not p.is_zero()}
        degs = {mi_degree(mi) for mi in comps}
        if len(degs) > 1:
            raise DegreeMismatchError(f"component labels of mixed degree: {sorted(degs)}")
        if degree is None:
            if not degs:
                raise ValueError("empty vector polynomial needs an explicit degree")
            degree = degs.pop()
        elif degs and degs != {degree}:
            raise DegreeMismatchError("labels disagree with the stated degree")
        self.degree = degree
        self.components = comps

    def component(self, label: MultiIndex) -> Polynomial | None:
        return self.components.get(label)

    def labels(self) -> list[MultiIndex]:
        return sorted(self.components, key=grlex_key)

    def map_components(self, fn) -> dict[MultiIndex, object]:
        return {mi: fn(p) for mi, p in self.components.items()}

    def scale(self, c) -> "VectorPolynomial":
        return VectorPolynomial(
            {mi: p.scale(c) for mi, p in self.components.items()}, self.degree
        )

    def subs_param(self, value) -> "VectorPolynomial":
        return VectorPolynomial(
            {mi: p.subs_param(value) for mi, p in self.components.items()}, self.degree
        )

    def __eq__(self, other):
        if not isinstance(other, VectorPolynomial):
            return NotImplemented
        return self.degree == other.degree and self.components == other.components

    def __repr__(self):
        body = ", ".join(f"{mi}: {p}" for mi, p in sorted(self.components.items(), key=lambda t: grlex_key(t[0])))
        return f"VectorPolynomial({{{body}}})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "fiber_basis": {"kind": "dual-monomial", "normalization": "1/(k1!*...*km!)"},
            "components": [
                {"label": list(mi), "value": p.to_json()}
                for mi, p in sorted(self.components.items(), key=lambda t: grlex_key(t[0]))
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VectorPolynomial":
        return cls(
            {tuple(c["label"]): Polynomial.from_json(c["value"]) for c in data["components"]},
            data["degree"],
        )
