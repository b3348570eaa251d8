"""Cohomology rings of the two surfaces as annotated exterior algebras.

Both built-in models are exterior algebras on two degree-one generators, so
they share one underlying graded algebra. They differ only in the weight and
Hodge annotations carried by the generators:

* ``X_torus_cotangent`` (an elliptic curve times a line): generators of
  weight 1 with Hodge types (1,0) and (0,1);
* ``Y_torus_algebraic`` (the two-dimensional algebraic torus): generators of
  weight 2, both of type (1,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

X_ID = "X_torus_cotangent"
Y_ID = "Y_torus_algebraic"

# Monomials are sorted tuples of generator indices; () is the unit.
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    weight: int
    hodge: tuple[int, int]

    def __post_init__(self):
        if self.weight < self.degree:
            raise ValueError(f"weight below degree for {self.name}")
        if sum(self.hodge) != self.weight:
            raise ValueError(f"hodge type of {self.name} does not sum to its weight")


@dataclass(frozen=True)
class SurfaceModel:
    id: str
    generators: tuple[Generator, ...]

    def __post_init__(self):
        if any(g.degree % 2 == 0 for g in self.generators):
            raise ValueError("only exterior algebras on odd generators are supported")

    @property
    def top_degree(self) -> int:
        return sum(g.degree for g in self.generators)

    def degree(self, m: Monomial) -> int:
        return sum(self.generators[i].degree for i in m)

    def weight(self, m: Monomial) -> int:
        return sum(self.generators[i].weight for i in m)

    def hodge(self, m: Monomial) -> tuple[int, int]:
        p = sum(self.generators[i].hodge[0] for i in m)
        q = sum(self.generators[i].hodge[1] for i in m)
        return (p, q)

    def name(self, m: Monomial) -> str:
        return "".join(self.generators[i].name for i in m) or "1"

    def basis(self) -> list[Monomial]:
        """All monomials, by degree and then lexicographically."""
        out: list[Monomial] = []
        for d in range(self.top_degree + 1):
            out.extend(graded_basis(self, d))
        return out

    def element(self, m: Monomial, coeff=1) -> "AlgebraElement":
        return AlgebraElement({tuple(m): Fraction(coeff)})

    def gen(self, i: int) -> "AlgebraElement":
        return self.element((i,))


_MODELS = {
    X_ID: SurfaceModel(
        X_ID,
        (Generator("e1", 1, 1, (1, 0)), Generator("e2", 1, 1, (0, 1))),
    ),
    Y_ID: SurfaceModel(
        Y_ID,
        (Generator("u1", 1, 2, (1, 1)), Generator("u2", 1, 2, (1, 1))),
    ),
}

ALIASES = {"X": X_ID, "Y": Y_ID, "E": X_ID}


def model(id: str) -> SurfaceModel:
    """Look up a built-in model by id (``"X"``/``"Y"`` shorthands accepted)."""
    key = ALIASES.get(id, id)
    try:
        return _MODELS[key]
    except KeyError:
        raise ValueError(f"unknown surface model {id!r}; expected one of {sorted(_MODELS)}") from None


def graded_basis(model: SurfaceModel, d: int) -> list[Monomial]:
    if d < 0:
        return []
    idx = range(len(model.generators))
    # all generators have degree 1 in the built-ins; filter keeps this honest otherwise
    out = []
    for k in range(len(model.generators) + 1):
        for m in combinations(idx, k):
            if model.degree(m) == d:
                out.append(m)
    return out


def monomial_product(a: Monomial, b: Monomial) -> tuple[int, Monomial]:
    """Product of exterior monomials as ``(sign, monomial)``; sign 0 if it vanishes."""
    if set(a) & set(b):
        return 0, ()
    word = list(a) + list(b)
    inversions = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return (-1) ** inversions, tuple(sorted(word))


class AlgebraElement:
    """Sparse exact-rational combination of monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(m)] = c

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"AlgebraElement({self.terms!r})"

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return AlgebraElement({m: scalar * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return cup(self, other)
        return self.__rmul__(other)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self, model: SurfaceModel) -> set[int]:
        return {model.degree(m) for m in self.terms}

    def is_homogeneous(self, model: SurfaceModel) -> bool:
        return len(self.degrees(model)) <= 1


def cup(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, m = monomial_product(ma, mb)
            if sign:
                out[m] = out.get(m, 0) + sign * ca * cb
    return AlgebraElement(out)


@lru_cache(maxsize=None)
def alpha_monomial(model: SurfaceModel) -> Monomial:
    return tuple(range(len(model.generators)))


def alpha_class(model: SurfaceModel) -> AlgebraElement:
    """Normalized alpha class: the product of all generators (scalar factor dropped)."""
    return model.element(alpha_monomial(model))
