"""Cohomology of ``S^[n]`` as a partition-indexed sum of twisted symmetric products."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import series
from .invariants import CohomologyPiece, PieceCache, invariant_basis
from .partitions import Partition, enumerate_partitions
from .surfaces import SurfaceModel


@dataclass(frozen=True)
class SummandLabel:
    nu: Partition
    d: int
    n: int

    @property
    def twist(self) -> int:
        """Number of Tate twists, ``n - l(nu)``."""
        return self.n - len(self.nu)

    @property
    def shift(self) -> int:
        return 2 * self.twist

    @property
    def inner_degree(self) -> int:
        return self.d - self.shift

    @property
    def perversity(self) -> int:
        return self.d - self.twist


@dataclass(frozen=True)
class HilbertPiece:
    """The ``nu``-summand of ``H^d(S^[n])``: a symmetric-product piece plus twist bookkeeping."""

    label: SummandLabel
    piece: CohomologyPiece

    @property
    def dim(self) -> int:
        return self.piece.dim

    @property
    def weight(self) -> int:
        return self.piece.weight + 2 * self.label.twist

    @property
    def halved_weight(self) -> int | None:
        return self.weight // 2 if self.weight % 2 == 0 else None

    @property
    def perversity(self) -> int:
        return self.label.perversity

    def hodge(self) -> Counter:
        t = self.label.twist
        return Counter({(p + t, q + t): c for (p, q), c in self.piece.hodge().items()})


@dataclass(frozen=True)
class HilbertCohomology:
    model: SurfaceModel
    n: int
    table: dict  # (d, nu) -> HilbertPiece, only nonzero pieces

    @property
    def surface(self) -> str:
        return self.model.id

    @property
    def top_degree(self) -> int:
        return 2 * self.n

    def pieces(self, d: int | None = None) -> list[HilbertPiece]:
        """Nonzero pieces, by degree and then in partition order."""
        return [p for (dd, _), p in self.table.items() if d is None or dd == d]

    def betti(self) -> list[int]:
        out = [0] * (self.top_degree + 1)
        for (d, _), p in self.table.items():
            out[d] += p.dim
        return out


def assemble(model: SurfaceModel, n: int, cache: PieceCache | None = None) -> HilbertCohomology:
    """Sum over partitions of ``n`` of ``H^{d - 2(n - l)}(S^(nu))`` placed in degree ``d``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if cache is None:
        return _assemble(model, n)
    return _build(model, n, cache.get)


@lru_cache(maxsize=None)
def _assemble(model, n):
    return _build(model, n, invariant_basis)


def _build(model, n, get):
    table = {}
    partitions = enumerate_partitions(n)
    for d in range(2 * n + 1):
        for nu in partitions:
            label = SummandLabel(nu, d, n)
            i = label.inner_degree
            if not 0 <= i <= model.top_degree * len(nu):
                continue
            piece = get(model, nu, i)
            if piece.dim:
                table[(d, nu)] = HilbertPiece(label, piece)
    return HilbertCohomology(model, n, table)


def betti(model: SurfaceModel, n: int) -> list[int]:
    return assemble(model, n).betti()


def goettsche_oracle(n_max: int, d_max: int | None = None) -> list[list[int]]:
    """Rows ``b_0..b_{d_max}`` of ``S^[n]`` for ``n <= n_max`` from the product formula.

    Valid for any surface with Betti numbers (1, 2, 1).
    """
    if d_max is None:
        d_max = 2 * n_max
    g = series.one(n_max, d_max)
    for m in range(1, n_max + 1):
        g = series.mul(g, series.binomial_power(n_max, d_max, m, 2 * m - 1, 1, 2))
        g = series.mul(g, series.geometric(n_max, d_max, m, 2 * m - 2))
        g = series.mul(g, series.geometric(n_max, d_max, m, 2 * m))
    return g


def mixed_hodge_table(model: SurfaceModel, n: int) -> dict:
    """``(d, weight, (p, q)) -> dim`` over all of ``H*(S^[n])``."""
    out: Counter = Counter()
    for (d, _), piece in assemble(model, n).table.items():
        for pq, c in piece.hodge().items():
            out[(d, piece.weight, pq)] += c
    return dict(sorted(out.items()))
