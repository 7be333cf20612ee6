"""Standardness of the classified module maps via linkage sequences.

A map between generalized Verma modules is standard when it is induced
from a map of full Verma modules; a classical criterion decides whether the
induced (standard) map is nonzero: it is nonzero exactly when, for every
sequence of positive-root reflections linking the target highest weight to
the source one with nonnegative integral pairings along the way, the
weight after the first reflection is dominant and integral for the Levi
factor.

This module builds the type-A root data in coordinates, constructs the two
infinitesimal-character representatives attached to degree k both from
their defining combination of fundamental data and from closed coordinate
formulas (asserting agreement), enumerates all linkage sequences up to a
depth bound by exhaustive breadth-first search, and applies the criterion.

Only n >= 3 is meaningful here: for n = 2 the parabolic is the Borel and
the generalized Verma modules are ordinary ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, UnsupportedRankError
from .slstruct import Weight, dchi_weight, omega1_weight, rho_weight


class RootSystemA:
    """Positive roots and the Levi simple roots for the 1+(n-1) parabolic."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.positive_roots = [
            _eps_diff(n, i, j) for i in range(n) for j in range(i + 1, n)
        ]
        self.simple_roots = [_eps_diff(n, i, i + 1) for i in range(n - 1)]
        # the crossed-out node is the first one
        self.levi_simple_roots = self.simple_roots[1:]


def _eps_diff(n: int, i: int, j: int) -> Weight:
    coords = [Fraction(0)] * n
    coords[i] = Fraction(1)
    coords[j] = Fraction(-1)
    return Weight(coords)


def levi_dominant_integral(w: Weight, rs: RootSystemA) -> bool:
    """Whether the weight pairs to a positive integer with every Levi simple coroot."""
    for alpha in rs.levi_simple_roots:
        v = w.pair_coroot(alpha)
        if v.denominator != 1 or v < 1:
            return False
    return True


# ---------------------------------------------------------------------------
# the two weight families
# ---------------------------------------------------------------------------

def mu_eta_weights(n: int, k: int) -> tuple[Weight, Weight]:
    """Infinitesimal-character representatives of the degree-k pair.

    Both weights are computed twice, from the defining combination of the
    fundamental data and from closed coordinate formulas, and the two must
    agree exactly.
    """
    if n < 3:
        raise UnsupportedRankError("standardness analysis needs n >= 3")
    if k < 0:
        raise ValueError("k must be nonnegative")
    rho = rho_weight(n)
    dchi = dchi_weight(n)
    omega1 = omega1_weight(n)
    mu = omega1.scale(k) - dchi.scale(1 + Fraction(k, n - 1)) + rho
    eta = dchi.scale(k - 1) + rho

    # closed coordinate forms
    def tail(i: int) -> Fraction:
        return Fraction(2 * (1 - k) + n * (n - 2 * i + 1), 2 * n)

    head = Fraction((n - 1) * (n - 2 + 2 * k), 2 * n)
    mu_closed = Weight([tail(2), head] + [tail(i) for i in range(3, n + 1)])
    eta_closed = Weight([head, tail(2)] + [tail(i) for i in range(3, n + 1)])
    if mu != mu_closed or eta != eta_closed:
        raise ConsistencyError(
            f"weight construction mismatch at n={n}, k={k}: "
            f"{mu} vs {mu_closed}; {eta} vs {eta_closed}"
        )
    return mu, eta


# ---------------------------------------------------------------------------
# linkage search
# ---------------------------------------------------------------------------

@dataclass
class LinkageSequence:
    roots: list[Weight]
    weights: list[Weight]  # eta_0 .. eta_t

    @property
    def length(self) -> int:
        return len(self.roots)

    def first_reflected(self) -> Weight | None:
        return self.weights[1] if len(self.weights) > 1 else None

    def to_json(self) -> dict:
        return {
            "roots": [r.to_json() for r in self.roots],
            "weights": [w.to_json() for w in self.weights],
        }


def linkage_search(
    eta: Weight, mu: Weight, rs: RootSystemA, max_len: int = 3,
) -> list[LinkageSequence]:
    """All reflection sequences linking eta to mu, up to the depth bound.

    A sequence qualifies when each step reflects in a positive root whose
    pairing with the current weight is a nonnegative integer, and the final
    weight is mu.  Pairing zero gives a stationary step and is admissible;
    to keep the enumeration finite, sequences are deduplicated by their
    weight paths.  Exhaustiveness beyond the depth bound is not claimed.
    """
    results: list[LinkageSequence] = []
    seen_paths: set[tuple] = set()

    def path_key(weights: list[Weight]) -> tuple:
        return tuple(w.canonical() for w in weights)

    frontier: list[LinkageSequence] = [LinkageSequence([], [eta])]
    seen_paths.add(path_key([eta]))
    if eta == mu:
        results.append(frontier[0])
    for _ in range(max_len):
        new_frontier: list[LinkageSequence] = []
        for node in frontier:
            current = node.weights[-1]
            for beta in rs.positive_roots:
                pairing = current.pair_coroot(beta)
                if pairing.denominator != 1 or pairing < 0:
                    continue
                nxt = current.reflect(beta)
                weights = node.weights + [nxt]
                key = path_key(weights)
                if key in seen_paths:
                    continue
                seen_paths.add(key)
                seq = LinkageSequence(node.roots + [beta], weights)
                new_frontier.append(seq)
                if nxt == mu:
                    results.append(seq)
        frontier = new_frontier
    return results


# ---------------------------------------------------------------------------
# the nonvanishing criterion
# ---------------------------------------------------------------------------

@dataclass
class BoeReport:
    standard_nonzero: bool
    sequences: list[LinkageSequence]
    failures: list[LinkageSequence]
    searched_depth: int
    identity_case: bool = False

    def to_json(self) -> dict:
        return {
            "standard_nonzero": self.standard_nonzero,
            "identity_case": self.identity_case,
            "searched_depth": self.searched_depth,
            "links": [s.to_json() for s in self.sequences],
            "failures": [s.to_json() for s in self.failures],
        }


def boe_check(eta: Weight, mu: Weight, rs: RootSystemA, max_len: int = 3) -> BoeReport:
    """Nonvanishing test for the standard map, given that some map exists.

    Every linking sequence found within the depth bound must have its first
    reflected weight dominant integral for the Levi factor.  The empty
    sequence (possible only when the weights agree) imposes no condition.
    """
    sequences = linkage_search(eta, mu, rs, max_len)
    failures = [
        s for s in sequences
        if s.length > 0 and not levi_dominant_integral(s.first_reflected(), rs)
    ]
    return BoeReport(
        standard_nonzero=not failures,
        sequences=sequences,
        failures=failures,
        searched_depth=max_len,
        identity_case=(eta == mu),
    )


# ---------------------------------------------------------------------------
# the report over a degree range
# ---------------------------------------------------------------------------

@dataclass
class StandardnessRow:
    n: int
    k: int
    mu: Weight
    eta: Weight
    report: BoeReport
    mu_levi_dominant: bool
    same_orbit: bool

    @property
    def verdict(self) -> str:
        return "standard" if self.report.standard_nonzero else "nonstandard-or-zero"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "mu": self.mu.to_json(),
            "eta": self.eta.to_json(),
            "links": [s.to_json() for s in self.report.sequences],
            "verdict": self.verdict,
            "identity_case": self.report.identity_case,
            "mu_levi_dominant": self.mu_levi_dominant,
            "same_weyl_orbit": self.same_orbit,
        }


def standardness_report(n: int, k_max: int, max_len: int = 3) -> list[StandardnessRow]:
    """Linkage data and verdicts for every degree up to k_max.

    Alongside the criterion itself, each row records that the source weight
    is Levi dominant integral (so its module is defined) and that the two
    weights lie in one orbit of the Weyl group, witnessed by the swap of
    the first two coordinates (the identity at degree zero).
    """
    if n < 3:
        raise UnsupportedRankError("standardness analysis needs n >= 3")
    rs = RootSystemA(n)
    swap = rs.positive_roots[0]  # first-coordinate simple root
    rows = []
    for k in range(k_max + 1):
        mu, eta = mu_eta_weights(n, k)
        report = boe_check(eta, mu, rs, max_len)
        same_orbit = (eta == mu) if k == 0 else (eta.reflect(swap) == mu)
        rows.append(StandardnessRow(
            n, k, mu, eta, report,
            mu_levi_dominant=levi_dominant_integral(mu, rs),
            same_orbit=same_orbit,
        ))
    return rows
