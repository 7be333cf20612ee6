import random
from fractions import Fraction

from fmk.linalg import (
    SpanBasis, apply_rows, echelon_ff, intersect_spans, nullspace, rank,
)
from fmk.ratfunc import LAM


def F(a, b=1):
    return Fraction(a, b)


def test_rank_and_nullspace_small():
    rows = [{0: F(1), 1: F(2)}, {0: F(2), 1: F(4)}, {1: F(1), 2: F(3)}]
    assert rank(rows, 3) == 2
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    assert all(v == 0 for v in apply_rows(rows, ns[0]))


def test_bareiss_pivots_are_minors():
    # 2x2 leading minors of [[2,1],[1,3]] are 2 and 5
    rows = [{0: F(2), 1: F(1)}, {0: F(1), 1: F(3)}]
    ech = echelon_ff(rows, 2)
    assert ech.pivot_values() == [F(2), F(5)]


def test_field_and_ff_give_same_rank_and_kernel():
    rng = random.Random(5)
    for _ in range(40):
        ncols = rng.randint(2, 7)
        rows = []
        for _ in range(rng.randint(1, 8)):
            r = {
                c: F(rng.randint(-4, 4))
                for c in rng.sample(range(ncols), rng.randint(1, ncols))
            }
            r = {c: v for c, v in r.items() if v}
            if r:
                rows.append(r)
        ns_ff = nullspace(rows, ncols, method="ff")
        ns_f = nullspace(rows, ncols, method="field")
        assert len(ns_ff) == len(ns_f)
        for v in ns_ff + ns_f:
            assert all(x == 0 for x in apply_rows(rows, v))
        # canonical normalization makes the two bases literally equal
        assert ns_ff == ns_f


def test_nullspace_over_rational_functions():
    # [lam, 1; 0, lam-2] drops rank at lam = 2 only
    rows = [{0: LAM, 1: RatOne()}, {1: LAM - 2}]
    ech = echelon_ff(rows, 2)
    assert ech.rank == 2
    roots = set()
    for pv in ech.pivot_values():
        roots.update(pv.numerator_roots())
    assert F(2) in roots
    spec = [{0: F(2), 1: F(1)}]
    assert rank(spec, 2) == 1


def RatOne():
    return LAM / LAM


def test_span_basis_membership():
    sb = SpanBasis([{0: F(1), 1: F(1)}, {1: F(1), 2: F(1)}])
    assert sb.dim == 2
    assert sb.contains({0: F(1), 2: F(-1)})
    assert not sb.contains({0: F(1)})


def test_intersect_spans():
    a = [{0: F(1)}, {1: F(1)}]
    b = [{1: F(2)}, {2: F(1)}]
    inter = intersect_spans(a, b, 3)
    assert len(inter) == 1
    sb = SpanBasis(inter)
    assert sb.contains({1: F(1)}) and not sb.contains({0: F(1)})
    assert intersect_spans([], b, 3) == []


def test_random_nullspace_dimension_theorem():
    rng = random.Random(17)
    for _ in range(30):
        ncols = rng.randint(2, 8)
        rows = []
        for _ in range(rng.randint(1, 10)):
            r = {c: F(rng.randint(-3, 3)) for c in rng.sample(range(ncols), 2)}
            r = {c: v for c, v in r.items() if v}
            if r:
                rows.append(r)
        assert rank(rows, ncols) + len(nullspace(rows, ncols)) == ncols
