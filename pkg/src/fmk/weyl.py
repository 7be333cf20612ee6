"""Normal-ordered elements of a Weyl algebra and their Fourier transform.

A Weyl algebra element is stored in normal order: every multiplication
operator stands to the left of every derivative.  A term is therefore a
pair of multi-indices (monomial exponents, derivative exponents) with a
scalar coefficient.  Products are re-normalized with the commutation rule

    d_j z_i = delta_ij + z_i d_j,

whose multivariate closed form is

    d^a z^b = sum_t  C(a,t) C(b,t) t!  z^(b-t) d^(a-t)   (t componentwise).

The algebraic Fourier transform maps the algebra on the source side to the
one on the dual side by  d_i -> -zeta_i,  z_i -> d/d zeta_i.  The sign makes
the map an algebra isomorphism, which the test suite checks on random
elements; a useful consequence is that the Euler operator in m variables
maps to -(m + E_zeta).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial

from .errors import VariableSpaceError
from .exact import MultiIndex, Polynomial, grlex_key
from .ratfunc import RatFunc, subs_scalar

TermKey = tuple[MultiIndex, MultiIndex]

_SOURCE_SPACE = "x"
_DUAL_SPACE = "zeta"


class WeylElement:
    """A normal-ordered polynomial differential operator."""

    __slots__ = ("space", "nvars", "terms")

    def __init__(self, space: str, nvars: int, terms: dict[TermKey, object] | None = None):
        self.space = space
        self.nvars = nvars
        clean: dict[TermKey, object] = {}
        for (m, d), c in (terms or {}).items():
            if len(m) != nvars or len(d) != nvars:
                raise ValueError("term multi-indices have wrong length")
            if c == 0:
                continue
            clean[(m, d)] = c if isinstance(c, RatFunc) else Fraction(c)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space: str, nvars: int) -> "WeylElement":
        return cls(space, nvars)

    @classmethod
    def identity(cls, space: str, nvars: int, c=1) -> "WeylElement":
        z = (0,) * nvars
        return cls(space, nvars, {(z, z): c})

    @classmethod
    def monomial(cls, space: str, m: MultiIndex, c=1) -> "WeylElement":
        return cls(space, len(m), {(m, (0,) * len(m)): c})

    @classmethod
    def derivative(cls, space: str, d: MultiIndex, c=1) -> "WeylElement":
        return cls(space, len(d), {((0,) * len(d), d): c})

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "WeylElement":
        """The multiplication operator by a polynomial."""
        z = (0,) * p.nvars
        return cls(p.space, p.nvars, {(m, z): c for m, c in p.terms.items()})

    @classmethod
    def theta(cls, space: str, nvars: int, j: int) -> "WeylElement":
        """The one-variable Euler operator var_j * d_j."""
        e = [0] * nvars
        e[j] = 1
        e = tuple(e)
        return cls(space, nvars, {(e, e): 1})

    @classmethod
    def euler(cls, space: str, nvars: int) -> "WeylElement":
        """The full Euler homogeneity operator, sum of the theta_j."""
        out = cls.zero(space, nvars)
        for j in range(nvars):
            out = out + cls.theta(space, nvars, j)
        return out

    # -- algebra -----------------------------------------------------------

    def _check(self, other: "WeylElement") -> None:
        if self.space != other.space or self.nvars != other.nvars:
            raise VariableSpaceError(
                f"cannot combine Weyl elements on {self.space} and {other.space}"
            )

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return WeylElement(self.space, self.nvars, out)

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.space, self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def scale(self, c) -> "WeylElement":
        if c == 0:
            return WeylElement.zero(self.space, self.nvars)
        return WeylElement(self.space, self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Normal-ordered product."""
        self._check(other)
        out: dict[TermKey, object] = {}
        for (m1, d1), c1 in self.terms.items():
            for (m2, d2), c2 in other.terms.items():
                c12 = c1 * c2
                # contract d1 against m2 variable by variable
                ranges = [range(min(a, b) + 1) for a, b in zip(d1, m2)]
                for t in iproduct(*ranges):
                    fac = 1
                    for a, b, tv in zip(d1, m2, t):
                        if tv:
                            fac *= comb(a, tv) * comb(b, tv) * factorial(tv)
                    mono = tuple(x + y - tv for x, y, tv in zip(m1, m2, t))
                    deriv = tuple(x - tv + y for x, tv, y in zip(d1, t, d2))
                    key = (mono, deriv)
                    out[key] = out.get(key, 0) + c12 * fac
        return WeylElement(self.space, self.nvars, out)

    def apply(self, p: Polynomial) -> Polynomial:
        """Exact action on a polynomial in the same variable space."""
        if p.space != self.space or p.nvars != self.nvars:
            raise VariableSpaceError(
                f"operator on {self.space} cannot act on polynomial in {p.space}"
            )
        out: dict[MultiIndex, object] = {}
        for (m, d), c in self.terms.items():
            for e, pc in p.terms.items():
                if any(ev < dv for ev, dv in zip(e, d)):
                    continue
                fac = 1
                for ev, dv in zip(e, d):
                    for t in range(ev, ev - dv, -1):
                        fac *= t
                mono = tuple(mv + ev - dv for mv, ev, dv in zip(m, e, d))
                v = c * pc * fac
                out[mono] = out.get(mono, 0) + v
        return Polynomial(self.space, self.nvars, out)

    # -- transforms ----------------------------------------------------------

    def fourier_transform(self) -> "WeylElement":
        """Algebraic Fourier transform from the source side to the dual side.

        Term by term, z^m d^a goes to (d/d zeta)^m (-zeta)^a, re-ordered into
        normal form.  The map is an algebra isomorphism.
        """
        if self.space != _SOURCE_SPACE:
            raise VariableSpaceError(
                f"fourier_transform expects the {_SOURCE_SPACE!r} side, got {self.space!r}"
            )
        out = WeylElement.zero(_DUAL_SPACE, self.nvars)
        for (m, d), c in self.terms.items():
            sign = -1 if sum(d) % 2 else 1
            left = WeylElement.derivative(_DUAL_SPACE, m, c * sign)
            right = WeylElement.monomial(_DUAL_SPACE, d)
            out = out + left * right
        return out

    def subs_param(self, value) -> "WeylElement":
        return WeylElement(
            self.space, self.nvars,
            {k: subs_scalar(c, value) for k, c in self.terms.items()},
        )

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        """Highest derivative order; -1 for the zero element."""
        return max((sum(d) for _, d in self.terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (
            self.space == other.space
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[TermKey, object]]:
        return sorted(self.terms.items(), key=lambda t: (grlex_key(t[0][0]), grlex_key(t[0][1])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        stem = {"x": "x", "zeta": "zeta"}.get(self.space, self.space)
        parts = []
        for (m, d), c in self.sorted_terms():
            factors = [f"{stem}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
            factors += [f"d{stem}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(d) if e]
            cs = f"({c})" if isinstance(c, RatFunc) else str(c)
            if factors:
                body = "*".join(factors)
                parts.append(body if cs == "1" else f"-{body}" if cs == "-1" else f"{cs}*{body}")
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"WeylElement({self.space!r}, {self})"

    def to_json(self) -> dict:
        from .exact import _coeff_str
        return {
            "space": self.space,
            "nvars": self.nvars,
            "terms": [
                {"mono": list(m), "deriv": list(d), "coeff": _coeff_str(c)}
                for (m, d), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeylElement":
        return cls(
            data["space"], data["nvars"],
            {
                (tuple(t["mono"]), tuple(t["deriv"])): Fraction(t["coeff"])
                for t in data["terms"]
            },
        )
