"""Invariant subspaces of tensor powers under Koszul-signed block permutations.

The cohomology of ``S^(nu)`` is the subspace of ``H*(S)^{(x) l(nu)}`` fixed by
the group permuting tensor slots within blocks of equal part size, where
moving odd-degree factors past each other costs a sign. Bases are built by
signed orbit sums over sorted representatives, so every basis vector has
integer coefficients and coefficient ``+1`` on its representative.
"""

from __future__ import annotations

import itertools
import json
import os
import tempfile
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path

from . import series
from .linalg import ExactMatrix
from .partitions import Partition
from .surfaces import AlgebraElement, Monomial, SurfaceModel, model as get_model, monomial_product

SCHEMA = "pw-hilbert/1"
CODE_VERSION = "1"

TensorMonomial = tuple[Monomial, ...]
Vector = dict  # TensorMonomial -> Fraction


def _parity(model: SurfaceModel | None, m: Monomial) -> int:
    # built-in generators all have degree 1
    return (model.degree(m) if model is not None else len(m)) % 2


def _preserves_blocks(sigma, nu: Partition) -> bool:
    for _, start, stop in nu.blocks():
        if any(not (start <= sigma[j] < stop) for j in range(start, stop)):
            return False
    return True


def signed_permute(sigma, t: TensorMonomial, model: SurfaceModel | None = None,
                   nu: Partition | None = None) -> tuple[int, TensorMonomial]:
    """Apply ``sigma`` (slot ``j`` moves to slot ``sigma[j]``) with the Koszul sign.

    Returns ``(sign, permuted)``. When ``nu`` is given, ``sigma`` must preserve
    its equal-part blocks.
    """
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(len(t))):
        raise ValueError(f"{sigma} is not a permutation of {len(t)} slots")
    if nu is not None and (len(nu) != len(t) or not _preserves_blocks(sigma, nu)):
        raise ValueError(f"{sigma} does not lie in the block group of {nu}")
    out: list = [None] * len(t)
    for j, f in enumerate(t):
        out[sigma[j]] = f
    odd = [j for j, f in enumerate(t) if _parity(model, f)]
    inversions = sum(1 for a, b in itertools.combinations(odd, 2) if sigma[a] > sigma[b])
    return (-1) ** inversions, tuple(out)


def tensor_product(model: SurfaceModel, s: TensorMonomial, t: TensorMonomial) -> tuple[int, TensorMonomial]:
    """Slotwise product in the graded tensor algebra as ``(sign, monomial)``."""
    sign = 1
    # (a_1 x ... x a_l)(b_1 x ... x b_l): b_j passes a_i for every i > j
    odd_b_seen = 0
    for i in range(len(s)):
        if _parity(model, s[i]) and odd_b_seen % 2:
            sign = -sign
        odd_b_seen += _parity(model, t[i])
    out = []
    for a, b in zip(s, t):
        sg, m = monomial_product(a, b)
        if not sg:
            return 0, ()
        sign *= sg
        out.append(m)
    return sign, tuple(out)


def vector_product(model: SurfaceModel, a: Vector, b: Vector) -> Vector:
    out: dict = {}
    for s, x in a.items():
        for t, y in b.items():
            sign, m = tensor_product(model, s, t)
            if sign:
                out[m] = out.get(m, 0) + sign * x * y
    return {m: c for m, c in out.items() if c}


def slot_class(c: AlgebraElement, slot: int, l: int) -> Vector:
    """``1 x ... x c x ... x 1`` with ``c`` in position ``slot``."""
    unit = ()
    return {tuple(m if i == slot else unit for i in range(l)): Fraction(x) for m, x in c.terms.items()}


def symmetrized_class(c: AlgebraElement, l: int) -> Vector:
    """Sum of ``c`` over all slots: the class induced on the symmetric product."""
    out: dict = {}
    for i in range(l):
        for m, x in slot_class(c, i, l).items():
            out[m] = out.get(m, 0) + x
    return {m: x for m, x in out.items() if x}


def _distinct_arrangements(items: list):
    """Distinct orderings of a sorted multiset (lexicographic)."""
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    cur: list = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


def _inversions(seq) -> int:
    return sum(1 for a, b in itertools.combinations(seq, 2) if a > b)


@lru_cache(maxsize=None)
def _index(model: SurfaceModel) -> dict:
    return {m: i for i, m in enumerate(model.basis())}


def _block_multisets(model: SurfaceModel, size: int) -> dict[int, list[tuple[int, ...]]]:
    """Sorted index multisets of one block with non-vanishing orbit sum, keyed by degree."""
    basis = model.basis()
    out: dict[int, list] = {}
    for combo in itertools.combinations_with_replacement(range(len(basis)), size):
        odd = [i for i in combo if _parity(model, basis[i])]
        if len(odd) != len(set(odd)):
            continue  # a repeated odd factor is stabilized by a sign -1 swap
        deg = sum(model.degree(basis[i]) for i in combo)
        out.setdefault(deg, []).append(combo)
    return out


def orbit_sum(model: SurfaceModel, nu: Partition, rep: TensorMonomial) -> Vector:
    """Signed orbit sum of a sorted representative, coefficient +1 on ``rep``."""
    index = _index(model)
    basis = model.basis()
    per_block = []
    for _, start, stop in nu.blocks():
        keys = [index[f] for f in rep[start:stop]]
        arrangements = []
        for arr in _distinct_arrangements(keys):
            odd = [k for k in arr if _parity(model, basis[k])]
            arrangements.append(((-1) ** _inversions(odd), arr))
        per_block.append(arrangements)
    out = {}
    for combo in itertools.product(*per_block):
        sign = 1
        keys: list[int] = []
        for s, arr in combo:
            sign *= s
            keys.extend(arr)
        out[tuple(basis[k] for k in keys)] = Fraction(sign)
    return out


@dataclass(frozen=True)
class CohomologyPiece:
    """``H^degree(S^(nu))`` with an explicit invariant basis."""

    model: SurfaceModel
    nu: Partition
    degree: int
    representatives: tuple[TensorMonomial, ...]
    _basis: tuple | None = field(default=None, compare=False, repr=False)

    @property
    def surface(self) -> str:
        return self.model.id

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def __len__(self):
        return self.dim

    @cached_property
    def basis(self) -> list[Vector]:
        if self._basis is not None:
            return list(self._basis)
        return [orbit_sum(self.model, self.nu, r) for r in self.representatives]

    @property
    def weight(self) -> int:
        """Common weight of the piece; the built-in models are pure."""
        ratios = {g.weight // g.degree for g in self.model.generators}
        if len(ratios) != 1:
            raise ValueError("model has no uniform weight per degree")
        return ratios.pop() * self.degree

    def hodge(self) -> Counter:
        """Dimension of each Hodge type ``(p, q)`` among basis vectors."""
        out: Counter = Counter()
        for r in self.representatives:
            p = sum(self.model.hodge(f)[0] for f in r)
            q = sum(self.model.hodge(f)[1] for f in r)
            out[(p, q)] += 1
        return out

    def coordinates(self, v: Vector) -> list[Fraction]:
        """Coordinates of an invariant vector; raises if ``v`` is outside the span."""
        coords = [Fraction(v.get(r, 0)) for r in self.representatives]
        recon: dict = {}
        for c, b in zip(coords, self.basis):
            if c:
                for m, x in b.items():
                    recon[m] = recon.get(m, 0) + c * x
        recon = {m: x for m, x in recon.items() if x}
        if recon != {m: Fraction(x) for m, x in v.items() if x}:
            raise ValueError(f"vector is not in the invariant span of {self.nu} degree {self.degree}")
        return coords

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "cohomology_piece",
            "code_version": CODE_VERSION,
            "surface": self.model.id,
            "partition": list(self.nu.parts),
            "degree": self.degree,
            "dim": self.dim,
            "weight": self.weight,
            "hodge": {f"{p},{q}": c for (p, q), c in sorted(self.hodge().items())},
            "representatives": [[list(f) for f in r] for r in self.representatives],
            "basis": [
                [[[list(f) for f in m], f"{x.numerator}/{x.denominator}"] for m, x in sorted(b.items())]
                for b in self.basis
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CohomologyPiece":
        if data.get("schema") != SCHEMA or data.get("kind") != "cohomology_piece":
            raise ValueError("not a serialized cohomology piece")
        basis = tuple(
            {tuple(tuple(f) for f in m): Fraction(x) for m, x in vec} for vec in data["basis"]
        )
        reps = tuple(tuple(tuple(f) for f in r) for r in data["representatives"])
        return cls(get_model(data["surface"]), Partition(tuple(data["partition"])), data["degree"], reps, basis)


@lru_cache(maxsize=None)
def invariant_basis(model: SurfaceModel, nu: Partition, d: int) -> CohomologyPiece:
    """Basis of ``H^d(S^(nu))``; empty when ``d`` is out of range."""
    basis = model.basis()
    l = len(nu)
    if d < 0 or d > model.top_degree * l:
        return CohomologyPiece(model, nu, d, ())
    per_block = [_block_multisets(model, stop - start) for _, start, stop in nu.blocks()]
    reps = []

    def rec(b: int, remaining: int, acc: tuple):
        if b == len(per_block):
            if remaining == 0:
                reps.append(acc)
            return
        for deg, combos in per_block[b].items():
            if deg <= remaining:
                for combo in combos:
                    rec(b + 1, remaining - deg, acc + combo)

    rec(0, d, ())
    reps.sort()
    return CohomologyPiece(model, nu, d, tuple(tuple(basis[k] for k in r) for r in reps))


def symmetric_power_dim_oracle(betti, a: int, d: int) -> int:
    """``dim H^d(S^(a))`` read off ``prod_k (1 -/+ t^k s)^(-/+ b_k)`` at ``s^a t^d``."""
    return _symmetric_power_poly(tuple(betti), a, d)[d] if d >= 0 else 0


@lru_cache(maxsize=None)
def _symmetric_power_poly(betti: tuple, a: int, dmax: int) -> list[int]:
    imax, jmax = a, max(dmax, 0)
    g = series.one(imax, jmax)
    for k, b in enumerate(betti):
        if k % 2:
            g = series.mul(g, series.binomial_power(imax, jmax, 1, k, 1, b))
        else:
            g = series.mul(g, series.geometric(imax, jmax, 1, k, b))
    return list(g[a])


def partition_dim_oracle(betti, nu: Partition, d: int) -> int:
    """``dim H^d(S^(nu))`` as a convolution of symmetric-power dimensions over blocks."""
    if d < 0:
        return 0
    poly = [1] + [0] * d
    for _, start, stop in nu.blocks():
        block = _symmetric_power_poly(tuple(betti), stop - start, d)
        poly = [sum(poly[i] * block[k - i] for i in range(k + 1)) for k in range(d + 1)]
    return poly[d]


def cup_operator(model: SurfaceModel, nu: Partition, c: AlgebraElement, d: int, power: int = 1) -> ExactMatrix:
    """Matrix of cup with ``(sum over slots of c)^power`` from degree ``d`` to ``d + power*deg(c)``."""
    degs = c.degrees(model)
    if len(degs) > 1:
        raise ValueError("class must be homogeneous")
    step = degs.pop() if degs else 0
    source = invariant_basis(model, nu, d)
    target = invariant_basis(model, nu, d + power * step)
    klass = symmetrized_class(c, len(nu))
    columns = []
    for v in source.basis:
        w = v
        for _ in range(power):
            w = vector_product(model, klass, w)
        columns.append(target.coordinates(w))
    return ExactMatrix.from_columns(target.dim, columns)


class PieceCache:
    """On-disk cache of serialized pieces; write-once, atomic replace."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def path(self, model: SurfaceModel, nu: Partition, d: int) -> Path:
        parts = "-".join(map(str, nu.parts)) or "empty"
        return self.directory / f"{model.id}_{parts}_d{d}_v{CODE_VERSION}.json"

    def get(self, model: SurfaceModel, nu: Partition, d: int) -> CohomologyPiece:
        p = self.path(model, nu, d)
        if p.exists():
            return CohomologyPiece.from_json(json.loads(p.read_text()))
        piece = invariant_basis(model, nu, d)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(piece.to_json(), fh, sort_keys=True)
        os.replace(tmp, p)
        return piece
