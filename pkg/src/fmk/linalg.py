"""Exact sparse linear algebra: fraction-free elimination and nullspaces.

Rows are dicts mapping column index to a nonzero scalar (Fraction or
RatFunc).  Columns are expected to be laid out in graded-lex order by the
caller, so pivoting by ascending column index keeps every reduction
deterministic and reproducible.

Elimination follows the fraction-free (Bareiss) scheme: the two-row update

    new = (pivot * row - row[pc] * pivot_row) / previous_pivot

stays inside the coefficient domain, so over Q(lam) every intermediate
entry remains a polynomial in the parameter.  Each pivot produced this way
equals a minor of the original matrix, which is what makes the rank-drop
candidate extraction in :func:`pivot_values` sound.
"""

from __future__ import annotations

from fractions import Fraction

Row = dict[int, object]


class Echelon:
    """Result of fraction-free elimination."""

    __slots__ = ("pivots", "ncols")

    def __init__(self, pivots: list[tuple[int, Row]], ncols: int):
        self.pivots = pivots  # (pivot column, row) in ascending column order
        self.ncols = ncols

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_cols(self) -> list[int]:
        return [pc for pc, _ in self.pivots]

    def pivot_values(self) -> list[object]:
        return [row[pc] for pc, row in self.pivots]


def echelon_ff(rows: list[Row], ncols: int) -> Echelon:
    """Fraction-free (Bareiss) row echelon form of a sparse matrix.

    In the textbook scheme every active row is rescaled by p_t / p_{t-1} at
    every step t, even rows not containing the pivot column.  Those rescales
    telescope, so they are applied lazily here: each row remembers the step
    it was last brought up to date, and is rescaled by the ratio of the
    corresponding pivots only when actually touched.  Pivot values are
    therefore exactly the textbook ones (minors of the input matrix).
    """
    active: list[list] = [[dict(r), 0] for r in rows if r]  # [row, last step]
    pivhist: list[object] = [Fraction(1)]  # pivhist[t] = pivot of step t
    pivots: list[tuple[int, Row]] = []
    for pc in range(ncols):
        piv_idx = -1
        for i, (r, _) in enumerate(active):
            if pc in r:
                piv_idx = i
                break
        if piv_idx < 0:
            continue
        piv_row, s_piv = active.pop(piv_idx)
        t = len(pivots)
        if s_piv != t:
            f = pivhist[t] / pivhist[s_piv]
            piv_row = {c: v * f for c, v in piv_row.items()}
        piv = piv_row[pc]
        prev = pivhist[t]
        for item in active:
            r, s = item
            fr = r.get(pc)
            if fr is None:
                continue
            if s != t:
                f = pivhist[t] / pivhist[s]
                r = {c: v * f for c, v in r.items()}
                fr = r[pc]
            nr: Row = {}
            for c in set(piv_row) | set(r):
                v = piv * r.get(c, 0) - fr * piv_row.get(c, 0)
                if v != 0:
                    nr[c] = v / prev
            item[0], item[1] = nr, t + 1
        active = [item for item in active if item[0]]
        pivots.append((pc, piv_row))
        pivhist.append(piv)
    return Echelon(pivots, ncols)


def rank(rows: list[Row], ncols: int) -> int:
    return echelon_ff(rows, ncols).rank


def echelon_field(rows: list[Row], ncols: int) -> Echelon:
    """Row echelon form by plain exact field elimination.

    Unlike the fraction-free scheme this never touches rows missing the
    pivot column, which keeps entries small over rational-function fields.
    Each pivot equals a ratio of consecutive leading minors for the chosen
    pivot sequence, so over Q(lam) the union of the rational roots of the
    pivot numerators still contains every parameter value where the rank
    can drop (their product telescopes to a maximal nonzero minor).
    """
    active = [dict(r) for r in rows if r]
    pivots: list[tuple[int, Row]] = []
    for pc in range(ncols):
        piv_idx = -1
        for i, r in enumerate(active):
            if pc in r:
                piv_idx = i
                break
        if piv_idx < 0:
            continue
        piv_row = active.pop(piv_idx)
        piv = piv_row[pc]
        remaining: list[Row] = []
        for r in active:
            f = r.get(pc)
            if f is None:
                remaining.append(r)
                continue
            factor = f / piv
            nr = dict(r)
            for c, v in piv_row.items():
                nv = nr.get(c, 0) - factor * v
                if nv == 0:
                    nr.pop(c, None)
                else:
                    nr[c] = nv
            if nr:
                remaining.append(nr)
        active = remaining
        pivots.append((pc, piv_row))
    return Echelon(pivots, ncols)


def nullspace_from_echelon(ech: Echelon) -> list[Row]:
    """Back-substitute an echelon form into a canonical nullspace basis."""
    pivot_cols = set(ech.pivot_cols())
    basis: list[Row] = []
    for fc in range(ech.ncols):
        if fc in pivot_cols:
            continue
        vec: Row = {fc: Fraction(1)}
        for pc, row in reversed(ech.pivots):
            acc = None
            for c, v in row.items():
                if c == pc:
                    continue
                x = vec.get(c)
                if x is not None:
                    acc = v * x if acc is None else acc + v * x
            if acc is not None and acc != 0:
                vec[pc] = -acc / row[pc]
        basis.append(vec)
    return basis


def nullspace(rows: list[Row], ncols: int, method: str = "ff") -> list[Row]:
    """Basis of the right nullspace, one vector per free column.

    Vector j is normalized to have entry 1 at its free column, so the basis
    is canonical given the column order.  ``method="field"`` switches from
    the fraction-free scheme to plain field elimination (same basis, faster
    on large sparse systems).
    """
    return nullspace_from_echelon(
        (echelon_ff if method == "ff" else echelon_field)(rows, ncols)
    )


def apply_rows(rows: list[Row], vec: Row) -> list[object]:
    """Matrix-vector product, one scalar per row."""
    out = []
    for r in rows:
        acc = Fraction(0)
        for c, v in r.items():
            x = vec.get(c)
            if x is not None:
                acc = acc + v * x
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# reduced bases for span arithmetic
# ---------------------------------------------------------------------------

class SpanBasis:
    """Reduced (Gauss-Jordan) basis of a span, for membership tests."""

    __slots__ = ("rows",)

    def __init__(self, vectors: list[Row]):
        rows: dict[int, Row] = {}  # leading column -> normalized row
        for v in vectors:
            r = self._reduce(rows, v)
            if not r:
                continue
            lead = min(r)
            inv = r[lead]
            r = {c: x / inv for c, x in r.items()}
            for other in rows.values():
                if lead in other:
                    f = other[lead]
                    for c, x in r.items():
                        nv = other.get(c, 0) - f * x
                        if nv == 0:
                            other.pop(c, None)
                        else:
                            other[c] = nv
            rows[lead] = r
        self.rows = rows

    @staticmethod
    def _reduce(rows: dict[int, Row], v: Row) -> Row:
        r = dict(v)
        while r:
            lead = min(r)
            piv = rows.get(lead)
            if piv is None:
                return r
            f = r[lead]
            for c, x in piv.items():
                nv = r.get(c, 0) - f * x
                if nv == 0:
                    r.pop(c, None)
                else:
                    r[c] = nv
        return r

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Row) -> bool:
        return not self._reduce(self.rows, v)

    def basis_vectors(self) -> list[Row]:
        return [dict(r) for _, r in sorted(self.rows.items())]


def intersect_spans(a: list[Row], b: list[Row], ncols: int) -> list[Row]:
    """Basis of span(a) in span(b): solve sum(x_i a_i) = sum(y_j b_j)."""
    if not a or not b:
        return []
    cols = len(a) + len(b)
    rows: dict[int, Row] = {}
    for j, v in enumerate(a):
        for c, x in v.items():
            rows.setdefault(c, {})[j] = x
    for j, v in enumerate(b):
        for c, x in v.items():
            rows.setdefault(c, {})[len(a) + j] = -x
    sol = nullspace(list(rows.values()), cols, method="field")
    out: list[Row] = []
    for s in sol:
        vec: Row = {}
        for j, v in enumerate(a):
            coef = s.get(j)
            if coef is None or coef == 0:
                continue
            for c, x in v.items():
                nv = vec.get(c, 0) + coef * x
                if nv == 0:
                    vec.pop(c, None)
                else:
                    vec[c] = nv
        if vec:
            out.append(vec)
    # the combination map may be degenerate; reduce to an honest basis
    sb = SpanBasis(out)
    return sb.basis_vectors()
