"""Weight, halved weight, perverse Leray and Leray filtrations as split dimension tables.

All four filtrations are split along the partition decomposition, so each is
determined by an integer index per ``(d, nu)`` summand:

* weight on ``Y^[n]``: the summand weight ``2d - 2(n - l)``;
* halved weight on ``Y^[n]``: half of that, ``d - (n - l)``;
* perverse Leray on ``X^[n]`` (shift ``[n]``): the perversity ``d - (n - l)``;
* Leray on ``X^[n]``: the degree ``d`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hilbert import HilbertCohomology, assemble
from .partitions import Partition
from .surfaces import X_ID, Y_ID, model

P_NORMALIZATION = "perverse filtration of h_n_* Q[n] (shift m = n), type [0,2n]"


@dataclass(frozen=True)
class FiltrationTable:
    """Increasing filtration ``F_k H^d`` recorded through the summands it contains."""

    name: str
    n: int
    k_min: int
    k_max: int
    # (d, nu) -> (index, dim); a summand lies in F_k exactly when index <= k
    summands: dict = field(repr=False)

    @property
    def degrees(self) -> range:
        return range(2 * self.n + 1)

    @property
    def levels(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def dim(self, d: int, k: int) -> int:
        return sum(dim for (dd, _), (idx, dim) in self.summands.items() if dd == d and idx <= k)

    def total(self, d: int) -> int:
        return sum(dim for (dd, _), (_, dim) in self.summands.items() if dd == d)

    def graded(self, d: int, k: int) -> int:
        return self.dim(d, k) - self.dim(d, k - 1)

    def attribution(self, d: int, k: int) -> frozenset:
        return frozenset(nu for (dd, nu), (idx, _) in self.summands.items() if dd == d and idx <= k)

    def graded_attribution(self, d: int, k: int) -> frozenset:
        return frozenset(nu for (dd, nu), (idx, _) in self.summands.items() if dd == d and idx == k)

    def entries(self) -> dict:
        return {(d, k): self.dim(d, k) for d in self.degrees for k in self.levels}

    def graded_table(self) -> dict:
        return {(d, k): self.graded(d, k) for d in self.degrees for k in self.levels}

    def jumps(self, d: int) -> list[int]:
        return sorted({idx for (dd, _), (idx, _) in self.summands.items() if dd == d})

    def to_json(self) -> dict:
        rows = []
        for d in self.degrees:
            for k in self.levels:
                rows.append({
                    "d": d,
                    "k": k,
                    "dim": self.dim(d, k),
                    "graded": self.graded(d, k),
                    "partitions": sorted(str(nu) for nu in self.graded_attribution(d, k)),
                })
        return {"name": self.name, "n": self.n, "k_range": [self.k_min, self.k_max], "rows": rows}


def _table(name, coh: HilbertCohomology, index, k_max) -> FiltrationTable:
    summands = {key: (index(p), p.dim) for key, p in coh.table.items()}
    return FiltrationTable(name, coh.n, 0, k_max, summands)


def weight_filtration_Y(n: int, cache=None) -> FiltrationTable:
    """``W_k H^d(Y^[n])``; odd steps repeat the even step below."""
    return _table("W", assemble(model(Y_ID), n, cache), lambda p: p.weight, 4 * n)


def halved_weight(n: int, cache=None) -> FiltrationTable:
    w = weight_filtration_Y(n, cache)
    summands = {}
    for key, (weight, dim) in w.summands.items():
        if weight % 2:
            raise ValueError(f"odd weight {weight} on {key}: halving is undefined")
        summands[key] = (weight // 2, dim)
    return FiltrationTable("halfW", n, 0, 2 * n, summands)


def perverse_filtration_X(n: int, cache=None) -> FiltrationTable:
    return _table("P", assemble(model(X_ID), n, cache), lambda p: p.perversity, 2 * n)


def leray_filtration_X(n: int, cache=None) -> FiltrationTable:
    return _table("L", assemble(model(X_ID), n, cache), lambda p: p.label.d, 2 * n)


def filtration(which: str, n: int, cache=None) -> FiltrationTable:
    try:
        fn = {"W": weight_filtration_Y, "halfW": halved_weight,
              "P": perverse_filtration_X, "L": leray_filtration_X}[which]
    except KeyError:
        raise ValueError(f"unknown filtration {which!r}") from None
    return fn(n, cache)


@dataclass
class ExchangeReport:
    n: int
    passed: bool
    rows: list
    phi_summands_match: bool
    mismatches: list

    def to_json(self) -> dict:
        return {
            "check": "pw",
            "n": self.n,
            "normalization": P_NORMALIZATION,
            "note": "consistency check of two independent bookkeeping pipelines, not a proof",
            "phi_summands_match": self.phi_summands_match,
            "passed": self.passed,
            "mismatches": self.mismatches,
            "rows": self.rows,
        }


def _relabel(vec):
    # phi(e_i) = u_i is the identity on index-encoded tensor monomials
    return dict(vec)


def pw_exchange_check(n: int, cache=None) -> ExchangeReport:
    """Compare ``Gr^P`` on ``X^[n]`` with ``Gr^halfW`` on ``Y^[n]`` degree by degree."""
    p = perverse_filtration_X(n, cache)
    w = halved_weight(n, cache)
    rows, mismatches = [], []
    for d in p.degrees:
        for k in p.levels:
            gp, gw = p.graded(d, k), w.graded(d, k)
            np_, nw = p.graded_attribution(d, k), w.graded_attribution(d, k)
            if gp or gw:
                rows.append({"d": d, "k": k, "gr_P": gp, "gr_halfW": gw,
                             "partitions_P": sorted(map(str, np_)), "partitions_halfW": sorted(map(str, nw))})
            if gp != gw or np_ != nw:
                mismatches.append({"d": d, "k": k})

    # phi^[n] is the direct sum of the summand-wise relabellings
    xs = assemble(model(X_ID), n, cache)
    ys = assemble(model(Y_ID), n, cache)
    phi_ok = set(xs.table) == set(ys.table)
    if phi_ok:
        for key, xp in xs.table.items():
            yp = ys.table[key]
            if [_relabel(v) for v in xp.piece.basis] != yp.piece.basis:
                phi_ok = False
                mismatches.append({"phi": f"d={key[0]} nu={key[1]}"})
    return ExchangeReport(n, not mismatches and phi_ok, rows, phi_ok, mismatches)
