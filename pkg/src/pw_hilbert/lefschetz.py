"""Hard Lefschetz type checks as exact rank computations on per-partition blocks.

Cup product with an alpha class pulled back from the symmetric product acts
diagonally on the partition decomposition, and on the ``nu`` summand it acts
as the symmetrized class on ``S^(nu)``. Every check below therefore reduces
to a family of small matrices ``H^{l-j}(S^(nu)) -> H^{l+j}(S^(nu))``; the
checks differ in how they select and label those blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hilbert import assemble
from .invariants import cup_operator
from .linalg import ExactMatrix
from .partitions import Partition, enumerate_partitions
from .surfaces import X_ID, Y_ID, SurfaceModel, alpha_class, model


@dataclass
class Block:
    nu: Partition
    power: int
    source_inner: int
    target_inner: int
    matrix: ExactMatrix
    source_ambient: int | None = None
    target_ambient: int | None = None

    @property
    def rank(self) -> int:
        return self.matrix.rank()

    @property
    def is_isomorphism(self) -> bool:
        return self.matrix.is_isomorphism()

    def summary(self) -> dict:
        out = {
            "partition": str(self.nu),
            "power": self.power,
            "source_inner_degree": self.source_inner,
            "target_inner_degree": self.target_inner,
            "source_dim": self.matrix.cols,
            "target_dim": self.matrix.rows,
            "rank": self.rank,
            "iso": self.is_isomorphism,
        }
        if self.source_ambient is not None:
            out["source_degree"] = self.source_ambient
            out["target_degree"] = self.target_ambient
        return out


@dataclass
class LefschetzReport:
    check: str
    params: dict
    blocks: list = field(default_factory=list)
    problems: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems and all(b.is_isomorphism for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "blocks": [b.summary() for b in self.blocks],
            "problems": self.problems,
            "passed": self.passed,
        }


def lefschetz_block(surface: SurfaceModel, nu: Partition, inner: int, power: int) -> ExactMatrix:
    """Cup with ``alpha^power`` from ``H^inner(S^(nu))``."""
    return cup_operator(surface, nu, alpha_class(surface), inner, power)


def chl_check(n: int, k: int) -> LefschetzReport:
    """``alpha^k : Gr^W_{2n-2k} H^d -> Gr^W_{2n+2k} H^{d+2k}`` on ``Y^[n]`` for every ``d``."""
    report = LefschetzReport("chl", {"n": n, "k": k})
    if k < 0 or k > n:
        return report
    y = model(Y_ID)
    coh = assemble(y, n)
    lo, hi = 2 * n - 2 * k, 2 * n + 2 * k
    for d in range(2 * n + 1):
        sources = {nu: p for (dd, nu), p in coh.table.items() if dd == d and p.weight == lo}
        targets = {nu: p for (dd, nu), p in coh.table.items() if dd == d + 2 * k and p.weight == hi}
        if set(sources) != set(targets):
            report.problems.append({"d": d, "source_partitions": sorted(map(str, sources)),
                                    "target_partitions": sorted(map(str, targets))})
        for nu in sorted(set(sources) & set(targets), key=lambda v: v.parts, reverse=True):
            s, t = sources[nu], targets[nu]
            report.blocks.append(Block(nu, k, s.label.inner_degree, t.label.inner_degree,
                                       lefschetz_block(y, nu, s.label.inner_degree, k), d, d + 2 * k))
    return report


def hl_check(nu: Partition, j: int) -> LefschetzReport:
    """``omega^j : H^{l-j}(E^(nu)) -> H^{l+j}(E^(nu))``."""
    report = LefschetzReport("hl", {"partition": str(nu), "j": j})
    l = len(nu)
    if not 0 <= j <= l:
        report.problems.append({"reason": f"j={j} outside [0, {l}]"})
        return report
    report.blocks.append(Block(nu, j, l - j, l + j, lefschetz_block(model(X_ID), nu, l - j, j)))
    return report


def relative_hl_check(n: int, j: int) -> LefschetzReport:
    """``alpha^j`` from perverse degree ``-j`` to ``+j`` for ``h_n``, via global sections.

    With the shift ``[n]`` normalization these are ``Gr^P_{n-j}`` and ``Gr^P_{n+j}``.
    """
    report = LefschetzReport("rhl", {"n": n, "j": j})
    if j < 0 or j > n:
        return report
    x = model(X_ID)
    coh = assemble(x, n)
    sources = {nu: p for (_, nu), p in coh.table.items() if p.perversity == n - j and p.label.inner_degree == len(nu) - j}
    targets = {nu: p for (_, nu), p in coh.table.items() if p.perversity == n + j and p.label.inner_degree == len(nu) + j}
    expected = {nu for nu in enumerate_partitions(n) if len(nu) >= j}
    if set(sources) != expected or set(targets) != expected:
        report.problems.append({"expected": sorted(map(str, expected)), "source_partitions": sorted(map(str, sources)),
                                "target_partitions": sorted(map(str, targets))})
    for nu in sorted(set(sources) & set(targets), key=lambda v: v.parts, reverse=True):
        s, t = sources[nu], targets[nu]
        report.blocks.append(Block(nu, j, s.label.inner_degree, t.label.inner_degree,
                                   lefschetz_block(x, nu, s.label.inner_degree, j),
                                   s.label.d, t.label.d))
    return report


def atq2_check(n: int) -> LefschetzReport:
    """CHL blocks on ``Y^[n]`` coincide entry-for-entry with relative HL blocks on ``X^[n]``."""
    report = LefschetzReport("atq2", {"n": n})
    for k in range(n + 1):
        chl = {b.nu: b for b in chl_check(n, k).blocks}
        rhl = {b.nu: b for b in relative_hl_check(n, k).blocks}
        if set(chl) != set(rhl):
            report.problems.append({"k": k, "chl_partitions": sorted(map(str, chl)),
                                    "rhl_partitions": sorted(map(str, rhl))})
        for nu in sorted(set(chl) & set(rhl), key=lambda v: v.parts, reverse=True):
            a, b = chl[nu], rhl[nu]
            hl = hl_check(nu, k).blocks[0]
            same = (a.matrix == b.matrix == hl.matrix and a.source_inner == b.source_inner
                    and a.source_ambient == b.source_ambient)
            if not same:
                report.problems.append({"k": k, "partition": str(nu), "reason": "matrices differ"})
            report.blocks.append(a)
    return report
