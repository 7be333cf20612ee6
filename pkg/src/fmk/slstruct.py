"""The special linear Lie algebra and its rank-one parabolic decomposition.

Fixes the setup used everywhere else: sl(n) realized as traceless n x n
rational matrices, the maximal parabolic for the partition n = 1 + (n-1),
its abelian nilradicals spanned by the first row / first column matrix
units, the normalized grading element, and the trace-form machinery that
splits an arbitrary element into nilradical, Levi-center and Levi-semisimple
parts.

Conventions (0-based indices internally):

    raising basis   N_j^+ = E[0, j]        j = 1..n-1
    lowering basis  N_j^- = E[j, 0]
    grading element H~ = diag(1, -1/(n-1), ..., -1/(n-1))

so the pairing Tr(N_i^+ N_j^-) is the Kronecker delta, the nilradicals are
abelian, and ad(H~) acts on them by +-n/(n-1).

Weights live in the coordinate realization inside R^n; two coordinate
vectors represent the same functional when they differ by a multiple of
(1,...,1), so equality is tested after subtracting the mean.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SizeMismatchError, VariableSpaceError
from .exact import Polynomial

# ---------------------------------------------------------------------------
# exact matrices
# ---------------------------------------------------------------------------

class GMatrix:
    """An immutable n x n matrix with exact rational entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(Fraction(v) for v in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SizeMismatchError("matrix must be square")
        self.n = n
        self.entries = rows

    @classmethod
    def zero(cls, n: int) -> "GMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "GMatrix":
        m = [[0] * n for _ in range(n)]
        m[i][j] = 1
        return cls(m)

    @classmethod
    def diagonal(cls, diag) -> "GMatrix":
        n = len(diag)
        m = [[0] * n for _ in range(n)]
        for i, v in enumerate(diag):
            m[i][i] = v
        return cls(m)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _check(self, other: "GMatrix") -> None:
        if self.n != other.n:
            raise SizeMismatchError(f"sizes {self.n} and {other.n} differ")

    def __add__(self, other: "GMatrix") -> "GMatrix":
        self._check(other)
        return GMatrix([
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __neg__(self) -> "GMatrix":
        return GMatrix([[-a for a in r] for r in self.entries])

    def __sub__(self, other: "GMatrix") -> "GMatrix":
        return self + (-other)

    def scale(self, c) -> "GMatrix":
        c = Fraction(c)
        return GMatrix([[a * c for a in r] for r in self.entries])

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        self._check(other)
        n = self.n
        return GMatrix([
            [sum(self.entries[i][k] * other.entries[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ])

    def trace(self) -> Fraction:
        return sum(self.entries[i][i] for i in range(self.n))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.entries for v in r)

    def is_traceless(self) -> bool:
        return self.trace() == 0

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GMatrix({[[str(v) for v in r] for r in self.entries]})"

    def to_json(self) -> list[list[str]]:
        return [[f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator) for v in r] for r in self.entries]


def bracket(x: GMatrix, y: GMatrix) -> GMatrix:
    """Matrix commutator [x, y] = xy - yx."""
    return (x @ y) - (y @ x)


class PolyMatrix:
    """An n x n matrix whose entries are polynomials in the cell coordinates."""

    __slots__ = ("n", "nvars", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SizeMismatchError("matrix must be square")
        first = rows[0][0]
        for r in rows:
            for p in r:
                if not isinstance(p, Polynomial) or p.space != first.space or p.nvars != first.nvars:
                    raise VariableSpaceError("all entries must be polynomials in one space")
        self.n = n
        self.nvars = first.nvars
        self.entries = rows

    @classmethod
    def from_gmatrix(cls, m: GMatrix, space: str, nvars: int) -> "PolyMatrix":
        return cls([
            [Polynomial.constant(space, nvars, v) for v in row]
            for row in m.entries
        ])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise SizeMismatchError("sizes differ")
        return PolyMatrix([
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix([[-a for a in r] for r in self.entries])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale_poly(self, p: Polynomial) -> "PolyMatrix":
        return PolyMatrix([[a * p for a in r] for r in self.entries])

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix([[a.scale(c) for a in r] for r in self.entries])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise SizeMismatchError("sizes differ")
        n = self.n
        zero = Polynomial.zero(self.entries[0][0].space, self.nvars)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def trace(self) -> Polynomial:
        acc = self.entries[0][0]
        for i in range(1, self.n):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.entries for p in r)

    def at_zero(self) -> GMatrix:
        """Constant part, i.e. the matrix evaluated at the cell origin."""
        z = (0,) * self.nvars
        return GMatrix([[p.coefficient(z) for p in r] for r in self.entries])

    def monomial_decomposition(self) -> dict[tuple, GMatrix]:
        """Write the matrix as sum of x-monomials times constant matrices."""
        monos: dict[tuple, list[list[Fraction]]] = {}
        n = self.n
        for i in range(n):
            for j in range(n):
                for mi, c in self.entries[i][j].terms.items():
                    tgt = monos.setdefault(mi, [[Fraction(0)] * n for _ in range(n)])
                    tgt[i][j] = c
        return {mi: GMatrix(m) for mi, m in monos.items()}

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"PolyMatrix({[[str(p) for p in r] for r in self.entries]})"


def poly_bracket(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    return (x @ y) - (y @ x)


# ---------------------------------------------------------------------------
# the parabolic decomposition
# ---------------------------------------------------------------------------

class Decomposition:
    """Parts of an element along n_- + m + a + n_+.

    Coefficient containers are generic: entries are Fractions when a constant
    matrix was decomposed and Polynomials for a matrix-valued function of the
    cell coordinates.
    """

    __slots__ = ("nminus_coeffs", "m_part", "a_coeff", "nplus_coeffs")

    def __init__(self, nminus_coeffs, m_part, a_coeff, nplus_coeffs):
        self.nminus_coeffs = nminus_coeffs
        self.m_part = m_part
        self.a_coeff = a_coeff
        self.nplus_coeffs = nplus_coeffs


class ParabolicData:
    """Bases and pairings for the parabolic n = 1 + (n-1) inside sl(n)."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.nvars = n - 1
        self.nplus_basis = [GMatrix.unit(n, 0, j) for j in range(1, n)]
        self.nminus_basis = [GMatrix.unit(n, j, 0) for j in range(1, n)]
        self.h0tilde = GMatrix.diagonal(
            [Fraction(1)] + [Fraction(-1, n - 1)] * (n - 1)
        )
        self._h_norm = self.trace_form(self.h0tilde, self.h0tilde)
        self._ad_cache: dict[GMatrix, PolyMatrix] = {}

    # -- pairings ------------------------------------------------------------

    @staticmethod
    def trace_form(x: GMatrix, y: GMatrix) -> Fraction:
        if x.n != y.n:
            raise SizeMismatchError("sizes differ")
        return sum(
            x.entries[i][j] * y.entries[j][i]
            for i in range(x.n) for j in range(x.n)
        )

    def two_rho_nplus(self) -> Fraction:
        """Value on the grading element of the trace of ad on the nilradical."""
        total = Fraction(0)
        for j, nj in enumerate(self.nplus_basis):
            img = bracket(self.h0tilde, nj)
            # img must be proportional to nj; read off the coefficient
            total += img.entries[0][j + 1]
        return total

    # -- decomposition ---------------------------------------------------------

    def decompose(self, x: GMatrix) -> Decomposition:
        if x.n != self.n:
            raise SizeMismatchError("wrong size for this parabolic")
        n = self.n
        nminus = [x.entries[j][0] for j in range(1, n)]
        nplus = [x.entries[0][j] for j in range(1, n)]
        a_coeff = self.trace_form(x, self.h0tilde) / self._h_norm
        rest = [[x.entries[i][j] for j in range(n)] for i in range(n)]
        for j in range(1, n):
            rest[j][0] = Fraction(0)
            rest[0][j] = Fraction(0)
        m_part = GMatrix(rest) - self.h0tilde.scale(a_coeff)
        return Decomposition(nminus, m_part, a_coeff, nplus)

    def decompose_poly(self, x: PolyMatrix) -> Decomposition:
        if x.n != self.n:
            raise SizeMismatchError("wrong size for this parabolic")
        n = self.n
        space, nvars = x.entries[0][0].space, x.nvars
        nminus = [x.entries[j][0] for j in range(1, n)]
        nplus = [x.entries[0][j] for j in range(1, n)]
        a_coeff = Polynomial.zero(space, nvars)
        for i in range(n):
            for j in range(n):
                h = self.h0tilde.entries[j][i]
                if h != 0:
                    a_coeff = a_coeff + x.entries[i][j].scale(h)
        a_coeff = a_coeff.scale(1 / self._h_norm)
        h_poly = PolyMatrix.from_gmatrix(self.h0tilde, space, nvars)
        rest = [[x.entries[i][j] for j in range(n)] for i in range(n)]
        zero = Polynomial.zero(space, nvars)
        for j in range(1, n):
            rest[j][0] = zero
            rest[0][j] = zero
        m_part = PolyMatrix(rest) - h_poly.scale_poly(a_coeff)
        return Decomposition(nminus, m_part, a_coeff, nplus)

    # -- adjoint conjugation ----------------------------------------------------

    def ad_conjugate(self, x: GMatrix) -> PolyMatrix:
        """Conjugation of x by the inverse of the generic cell point.

        Computes exp(-ad(sum_j x_j N_j^-)) applied to x as a finite sum; the
        nilradical is abelian, so the series breaks off after the quadratic
        term.  Results are cached per basis element (values are immutable).
        """
        cached = self._ad_cache.get(x)
        if cached is not None:
            return cached
        space, nvars = "x", self.nvars
        nmat = PolyMatrix([
            [Polynomial.zero(space, nvars)] * self.n for _ in range(self.n)
        ])
        for j, nj in enumerate(self.nminus_basis):
            xj = Polynomial.variable(space, nvars, j)
            nmat = nmat + PolyMatrix.from_gmatrix(nj, space, nvars).scale_poly(xj)
        result = PolyMatrix.from_gmatrix(x, space, nvars)
        term = result
        i = 0
        while not term.is_zero():
            i += 1
            if i > 2 * self.n:
                raise RuntimeError("adjoint series failed to terminate")
            term = poly_bracket(nmat, term).scale(Fraction(-1, i))
            result = result + term
        self._ad_cache[x] = result
        return result

    # -- bases ------------------------------------------------------------------

    def m_block(self, a: int, b: int) -> GMatrix:
        """Matrix unit of the Levi block, 1-based block indices in 1..n-1."""
        return GMatrix.unit(self.n, a, b)

    def m_basis(self) -> list[GMatrix]:
        """A basis of the semisimple Levi part (empty for n = 2)."""
        out = []
        for a in range(1, self.n):
            for b in range(1, self.n):
                if a != b:
                    out.append(GMatrix.unit(self.n, a, b))
        for a in range(1, self.n - 1):
            out.append(GMatrix.unit(self.n, a, a) - GMatrix.unit(self.n, a + 1, a + 1))
        return out

    def m_cartan_basis(self) -> list[GMatrix]:
        return [
            GMatrix.unit(self.n, a, a) - GMatrix.unit(self.n, a + 1, a + 1)
            for a in range(1, self.n - 1)
        ]

    def sl_basis(self) -> list[GMatrix]:
        """The standard basis of sl(n): off-diagonal units and simple coweights."""
        n = self.n
        out = [GMatrix.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
        out += [
            GMatrix.unit(n, i, i) - GMatrix.unit(n, i + 1, i + 1)
            for i in range(n - 1)
        ]
        return out

    def is_in_m(self, x: GMatrix) -> bool:
        if x.n != self.n:
            return False
        if any(x.entries[0][j] != 0 for j in range(self.n)):
            return False
        if any(x.entries[j][0] != 0 for j in range(self.n)):
            return False
        return x.is_traceless()


# ---------------------------------------------------------------------------
# weights in coordinates
# ---------------------------------------------------------------------------

class Weight:
    """A weight in the coordinate realization inside R^n.

    Coordinates are taken modulo the all-ones vector; equality subtracts the
    mean first.  Pairings against roots are unaffected by the ambiguity.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def canonical(self) -> tuple[Fraction, ...]:
        mean = sum(self.coords) / len(self.coords)
        return tuple(c - mean for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(a * c for a in self.coords))

    def dot(self, other: "Weight") -> Fraction:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def pair_coroot(self, alpha: "Weight") -> Fraction:
        """Pairing with the coroot 2*alpha / (alpha, alpha)."""
        return 2 * self.dot(alpha) / alpha.dot(alpha)

    def reflect(self, alpha: "Weight") -> "Weight":
        return self - alpha.scale(self.pair_coroot(alpha))

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator) for c in self.coords]


def rho_weight(n: int) -> Weight:
    """Half the sum of the positive roots, in coordinates."""
    return Weight([Fraction(n - 1 - 2 * i, 2) for i in range(n)])


def dchi_weight(n: int) -> Weight:
    """Differential of the character that the grading element generates."""
    return Weight([Fraction(n - 1, n)] + [Fraction(-1, n)] * (n - 1))


def omega1_weight(n: int) -> Weight:
    """Highest weight of the degree-one fiber, in coordinates."""
    return Weight(
        [Fraction(0), Fraction(n - 2, n - 1)] + [Fraction(-1, n - 1)] * (n - 2)
    )


# ---------------------------------------------------------------------------
# parity characters of the disconnected Levi factor
# ---------------------------------------------------------------------------

PARITIES = ("+", "-")


def check_parity(alpha: str) -> str:
    if alpha not in PARITIES:
        raise ValueError(f"parity must be '+' or '-', got {alpha!r}")
    return alpha


def parity_of_int(m: int) -> str:
    """The parity character (-1)^m."""
    return "+" if m % 2 == 0 else "-"


def parity_add(alpha: str, k: int) -> str:
    """Shift a parity character by the sign twist of a degree-k fiber."""
    check_parity(alpha)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k % 2 == 0:
        return alpha
    return "-" if alpha == "+" else "+"
