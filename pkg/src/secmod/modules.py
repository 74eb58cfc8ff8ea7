"""Finite modules over Z/nZ and their submodules.

A ``FinModule`` is Z/d_1 + ... + Z/d_k in invariant-factor form, acted on by
Z/nZ with every d_i dividing n.  A ``Submodule`` is stored as the Hermite
basis of its preimage lattice in Z^k (see ``normalform``), which is a unique
canonical form: two submodules of one parent are equal iff their bases are.

Every operation below works on those bases alone.  Element sets are only
built on demand (``Submodule.elements``) and only for modules within
``config.max_elements``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd, lcm, prod

import numpy as np

from . import config
from .errors import (
    BoundExceededError,
    IllDefinedHomError,
    ParentMismatchError,
    RingMismatchError,
)
from .ideals import Ideal, RingSpec, factorize, ideal_product
from .normalform import hnf_mod, lattice_contains, smith_form

__all__ = [
    "FinModule",
    "Submodule",
    "ModuleHom",
    "make_module",
    "span",
    "annihilator",
    "scalar_image",
    "colon",
    "submodule_sum",
    "intersect",
    "coproduct",
    "coproduct_power",
    "torsion",
    "quotient",
    "as_module",
    "hom_make",
    "hom_image",
    "hom_preimage",
    "hom_kernel",
]


def invariant_factors(factors) -> tuple[int, ...]:
    """Regroup cyclic orders prime by prime into a divisibility chain."""
    by_prime: dict[int, list[int]] = {}
    for f in factors:
        for p, e in factorize(f):
            by_prime.setdefault(p, []).append(e)
    depth = max((len(es) for es in by_prime.values()), default=0)
    out = [1] * depth
    for p, es in by_prime.items():
        for slot, e in enumerate(sorted(es, reverse=True)):
            out[depth - 1 - slot] *= p**e
    return tuple(out)


@dataclass(frozen=True)
class FinModule:
    """Z/d_1 + ... + Z/d_k over Z/nZ, with d_1 | d_2 | ... | d_k | n."""

    modulus: int
    factors: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"module ring modulus must be >= 1, got {self.modulus}")
        prev = 1
        for d in self.factors:
            if d < 2 or d % prev:
                raise ValueError(f"{self.factors} is not an invariant-factor chain")
            prev = d
        if self.modulus % prev:
            raise ValueError(f"exponent {prev} does not divide the ring modulus {self.modulus}")

    @property
    def ring(self) -> RingSpec:
        return RingSpec(self.modulus)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out, s = [], 1
        for d in reversed(self.factors):
            out.append(s)
            s *= d
        return tuple(reversed(out))

    def element(self, coords) -> tuple[int, ...]:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ParentMismatchError(
                f"element {coords} has {len(coords)} coordinates, module has rank {self.rank}"
            )
        return tuple(c % d for c, d in zip(coords, self.factors))

    def index(self, coords) -> int:
        return sum(c * s for c, s in zip(self.element(coords), self.strides))

    def coords(self, index: int) -> tuple[int, ...]:
        out = []
        for s, d in zip(self.strides, self.factors):
            out.append(index // s % d)
        return tuple(out)

    def zero(self) -> "Submodule":
        return Submodule(self, tuple(tuple(d * (i == j) for j in range(self.rank))
                                     for i, d in enumerate(self.factors)))

    def whole(self) -> "Submodule":
        return Submodule(self, tuple(tuple(int(i == j) for j in range(self.rank))
                                     for i in range(self.rank)))

    def check_materializable(self):
        if self.order > config.max_elements:
            raise BoundExceededError(
                f"module of order {self.order} exceeds the element bound {config.max_elements}"
            )

    def all_elements(self) -> list[tuple[int, ...]]:
        self.check_materializable()
        return [self.coords(i) for i in range(self.order)]

    def __str__(self):
        body = " + ".join(f"Z{d}" for d in self.factors) or "Z1"
        if self.modulus != self.exponent:
            body += f" over Z{self.modulus}"
        return body


def make_module(ring_modulus: int | None, factors) -> FinModule:
    """Build a module from arbitrary cyclic orders; the ring defaults to the exponent."""
    factors = [int(f) for f in factors]
    for f in factors:
        if f < 2:
            raise ValueError(f"cyclic factor must be >= 2, got {f}")
    inv = invariant_factors(factors)
    exponent = inv[-1] if inv else 1
    if ring_modulus is None:
        ring_modulus = exponent
    if ring_modulus < 1:
        raise ValueError(f"ring modulus must be >= 1, got {ring_modulus}")
    if ring_modulus % exponent:
        raise ValueError(f"exponent {exponent} does not divide the ring modulus {ring_modulus}")
    return FinModule(ring_modulus, inv)


class Submodule:
    """A submodule in canonical Hermite form.  Immutable."""

    __slots__ = ("parent", "hnf", "__dict__")

    def __init__(self, parent: FinModule, hnf):
        self.parent = parent
        self.hnf = hnf

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.parent == other.parent and self.hnf == other.hnf

    def __hash__(self):
        return hash((self.parent, self.hnf))

    def __repr__(self):
        return f"Submodule({self.parent}, gens={self.gens}, order={self.order})"

    @cached_property
    def order(self) -> int:
        return self.parent.order // prod(self.hnf[i][i] for i in range(self.parent.rank))

    @cached_property
    def gens(self) -> tuple[tuple[int, ...], ...]:
        """Canonical generators: the nonzero Hermite rows reduced into M."""
        d = self.parent.factors
        rows = (tuple(x % m for x, m in zip(r, d)) for r in self.hnf)
        return tuple(r for r in rows if any(r))

    @property
    def sort_key(self):
        return (self.order, self.gens)

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    @cached_property
    def exponent(self) -> int:
        d = self.parent.factors
        e = 1
        for g in self.gens:
            e = lcm(e, *(m // gcd(x, m) for x, m in zip(g, d)))
        return e

    def __contains__(self, x) -> bool:
        return lattice_contains(self.hnf, self.parent.element(x))

    def __le__(self, other: "Submodule") -> bool:
        _same_parent(self, other)
        return all(lattice_contains(other.hnf, r) for r in self.hnf)

    def __lt__(self, other: "Submodule") -> bool:
        return self <= other and self.order < other.order

    def __add__(self, other: "Submodule") -> "Submodule":
        return submodule_sum(self, other)

    def __and__(self, other: "Submodule") -> "Submodule":
        return intersect(self, other)

    def __rmul__(self, a: int) -> "Submodule":
        return scalar_image(a, self)

    def element_coords(self) -> np.ndarray:
        """All elements as an ``(order, rank)`` coordinate array."""
        M = self.parent
        M.check_materializable()
        k = M.rank
        d = np.array(M.factors, dtype=np.int64)
        pts = np.zeros((1, k), dtype=np.int64)
        for i, row in enumerate(self.hnf):
            count = M.factors[i] // row[i]
            if count == 1:
                continue
            step = np.arange(count, dtype=np.int64)[None, :, None] * np.array(row, dtype=np.int64)
            pts = ((pts[:, None, :] + step) % d).reshape(-1, k)
        return pts

    @cached_property
    def indices(self) -> np.ndarray:
        """Sorted mixed-radix indices of the elements."""
        strides = np.array(self.parent.strides, dtype=np.int64)
        idx = self.element_coords() @ strides if self.parent.rank else np.zeros(1, np.int64)
        return np.sort(idx)

    @cached_property
    def mask(self) -> int:
        """Elements as a Python-int bitset over ``parent`` indices."""
        return indices_to_mask(self.indices, self.parent.order)

    def elements(self) -> set[tuple[int, ...]]:
        return {self.parent.coords(int(i)) for i in self.indices}


def indices_to_mask(idx, size: int) -> int:
    bits = np.zeros(size, dtype=bool)
    bits[idx] = True
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _same_parent(N: Submodule, K: Submodule) -> FinModule:
    if N.parent != K.parent:
        raise ParentMismatchError(f"submodules of different modules: {N.parent} vs {K.parent}")
    return N.parent


def _ideal_generator(M: FinModule, I) -> int:
    if isinstance(I, Ideal):
        if I.ring != M.ring:
            raise RingMismatchError(f"ideal of {I.ring} acting on a module over {M.ring}")
        return I.generator
    return int(I)


def span(M: FinModule, gens=()) -> Submodule:
    rows = [M.element(g) for g in gens]
    return Submodule(M, hnf_mod(rows, M.factors))


def annihilator(N: Submodule) -> Ideal:
    """Ann(N) = (exponent of N) inside Z/nZ."""
    return Ideal(N.exponent, N.parent.ring)


def scalar_image(a: int, N: Submodule) -> Submodule:
    M = N.parent
    return Submodule(M, hnf_mod([[a * x for x in r] for r in N.hnf], M.factors))


def submodule_sum(N: Submodule, K: Submodule) -> Submodule:
    M = _same_parent(N, K)
    return Submodule(M, hnf_mod(N.hnf + K.hnf, M.factors))


def _lower_block(rows, moduli, split: int) -> tuple:
    """Hermite basis of the sublattice whose first ``split`` coordinates vanish."""
    H = hnf_mod(rows, moduli)
    return tuple(r[split:] for r in H[split:])


def intersect(N: Submodule, K: Submodule) -> Submodule:
    # rows (n, n) and (k, 0): vectors with zero left half are (x, x), x in N & K
    M = _same_parent(N, K)
    k = M.rank
    rows = [r + r for r in N.hnf] + [r + (0,) * k for r in K.hnf]
    return Submodule(M, _lower_block(rows, M.factors * 2, k))


def _preimage(matrix, source: FinModule, target: Submodule) -> tuple:
    """Hermite basis of {x : x @ matrix lies in the target submodule}."""
    k = source.rank
    t = target.parent.rank
    rows = [tuple(matrix[i]) + tuple(int(i == j) for j in range(k)) for i in range(k)]
    rows += [r + (0,) * k for r in target.hnf]
    return _lower_block(rows, target.parent.factors + source.factors, t)


def colon(N: Submodule, I) -> Submodule:
    """(N :_M I) = {m in M : I m is inside N}; I is an Ideal or ring element."""
    M = N.parent
    g = _ideal_generator(M, I)
    mult = [[g * (i == j) for j in range(M.rank)] for i in range(M.rank)]
    return Submodule(M, _preimage(mult, M, N))


def torsion(M: FinModule, m: int) -> Submodule:
    """(0 :_M m), the elements killed by m."""
    return colon(M.zero(), m)


def coproduct(N: Submodule, K: Submodule) -> Submodule:
    """C(NK) = (0 :_M Ann(N) Ann(K))."""
    M = _same_parent(N, K)
    return colon(M.zero(), ideal_product(annihilator(N), annihilator(K)))


def coproduct_power(N: Submodule, t: int) -> Submodule:
    """C(N^t) = (0 :_M Ann(N)^t)."""
    if t < 1:
        raise ValueError(f"coproduct power needs t >= 1, got {t}")
    A = annihilator(N)
    I = reduce(ideal_product, [A] * t)
    return colon(N.parent.zero(), I)


@dataclass(frozen=True)
class ModuleHom:
    """A hom given by the images of the source generators (one row each)."""

    source: FinModule
    target: FinModule
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, x) -> tuple[int, ...]:
        x = self.source.element(x)
        img = [0] * self.target.rank
        for c, row in zip(x, self.matrix):
            for j, y in enumerate(row):
                img[j] += c * y
        return self.target.element(img)

    @cached_property
    def kernel(self) -> Submodule:
        return Submodule(self.source, _preimage(self.matrix, self.source, self.target.zero()))

    @property
    def is_injective(self) -> bool:
        return self.kernel.is_zero

    @cached_property
    def image(self) -> Submodule:
        return hom_image(self, self.source.whole())


def hom_make(source: FinModule, target: FinModule, matrix) -> ModuleHom:
    """Validate a generator-image matrix.

    The rings of source and target may differ (a summand over a factor ring
    of Z/nZ maps into the whole module); only the relations are checked.
    """
    if len(matrix) != source.rank:
        raise IllDefinedHomError(f"need {source.rank} generator images, got {len(matrix)}")
    rows = tuple(target.element(r) for r in matrix)
    for d, row in zip(source.factors, rows):
        if any(d * y % e for y, e in zip(row, target.factors)):
            raise IllDefinedHomError(
                f"generator of order {d} sent to {row}, which {d} does not kill"
            )
    return ModuleHom(source, target, rows)


def hom_image(h: ModuleHom, N: Submodule) -> Submodule:
    if N.parent != h.source:
        raise ParentMismatchError("submodule is not in the source of the hom")
    rows = []
    for r in N.hnf:
        rows.append([sum(c * h.matrix[i][j] for i, c in enumerate(r)) for j in range(h.target.rank)])
    return Submodule(h.target, hnf_mod(rows, h.target.factors))


def hom_preimage(h: ModuleHom, N: Submodule) -> Submodule:
    if N.parent != h.target:
        raise ParentMismatchError("submodule is not in the target of the hom")
    return Submodule(h.source, _preimage(h.matrix, h.source, N))


def hom_kernel(h: ModuleHom) -> Submodule:
    return h.kernel


def quotient(M: FinModule, K: Submodule) -> tuple[FinModule, ModuleHom]:
    """M/K in invariant-factor form with the projection M -> M/K."""
    if K.parent != M:
        raise ParentMismatchError("K is not a submodule of M")
    diag, _, V, _ = smith_form(K.hnf)
    keep = [j for j, e in enumerate(diag) if e > 1]
    Q = FinModule(M.modulus, tuple(diag[j] for j in keep))
    matrix = [[V[i][j] for j in keep] for i in range(M.rank)]
    return Q, hom_make(M, Q, matrix)


def as_module(N: Submodule) -> tuple[FinModule, ModuleHom]:
    """N as an abstract module together with its inclusion into the parent."""
    M = N.parent
    B = N.hnf
    k = M.rank
    # solve X @ B = diag(d) row by row (B is upper triangular)
    X = []
    for r in range(k):
        x = []
        for j in range(k):
            rhs = M.factors[r] * (r == j) - sum(x[i] * B[i][j] for i in range(j))
            q, rem = divmod(rhs, B[j][j])
            assert rem == 0, "relation lattice not contained in the submodule lattice"
            x.append(q)
        X.append(x)
    diag, _, _, Vi = smith_form(X) if k else ([], [], [], [])
    keep = [j for j, e in enumerate(diag) if e > 1]
    S = FinModule(M.modulus, tuple(diag[j] for j in keep))
    gens = [[sum(Vi[j][i] * B[i][c] for i in range(k)) for c in range(k)] for j in keep]
    return S, hom_make(S, M, gens)
