"""The submodule lattice of a finite module.

Enumeration seeds with the zero submodule and repeatedly joins cyclic
submodules onto every submodule found so far, deduplicating on element
bitsets.  Every subgroup is a join of cyclic subgroups, so the search closes
on the full lattice.  Nodes are then put in canonical Hermite form and sorted
by (order, canonical generators), which fixes their numbering.

Relations between nodes are Python-int bitsets over node numbers:
``up[i]`` has bit j set iff node i is contained in node j.
"""
from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from . import config
from .errors import BoundExceededError, NotProperError, ParentMismatchError
from .ideals import factorize
from .modules import (
    FinModule,
    Submodule,
    colon,
    indices_to_mask,
    intersect,
    scalar_image,
    submodule_sum,
)
from .normalform import hnf_mod

__all__ = [
    "SubLattice",
    "enumerate_submodules",
    "completely_irreducibles",
    "is_prime_submodule",
    "prime_submodules",
    "m_radical",
    "is_second",
    "second_submodules",
    "second_radical",
    "socle",
    "iter_bits",
]


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class SubLattice:
    """All submodules of ``parent`` with containment and cover relations."""

    def __init__(self, parent: FinModule, nodes: list[Submodule]):
        self.parent = parent
        self.nodes = nodes
        self._index = {N.hnf: i for i, N in enumerate(nodes)}
        self.up, self.down = _containment(nodes, parent.order)
        self._images: dict[int, list[int]] = {}
        #: per-lattice cache for callers, keyed however they like
        self.memo: dict = {}

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i: int) -> Submodule:
        return self.nodes[i]

    @property
    def zero_id(self) -> int:
        return 0

    @property
    def top_id(self) -> int:
        return len(self.nodes) - 1

    @property
    def ring_elements(self) -> range:
        return range(self.parent.modulus)

    def id(self, N: Submodule) -> int:
        if N.parent != self.parent:
            raise ParentMismatchError("submodule is not in this lattice's module")
        return self._index[N.hnf]

    def contains(self, i: int, j: int) -> bool:
        """Node i is a submodule of node j."""
        return bool(self.up[i] >> j & 1)

    def image(self, a: int, i: int) -> int:
        """Node number of ``a * node_i``."""
        row = self._images.get(a)
        if row is None:
            row = [self._index[scalar_image(a, N).hnf] for N in self.nodes]
            self._images[a] = row
        return row[i]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        # in a finite abelian group a subgroup is maximal in a larger one iff
        # it has prime index there
        out = []
        for i, N in enumerate(self.nodes):
            covers = []
            for j in iter_bits(self.up[i] & ~(1 << i)):
                ratio = self.nodes[j].order // N.order
                if len(factorize(ratio)) == 1 and factorize(ratio)[0][1] == 1:
                    covers.append(j)
            out.append(covers)
        return out

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        out = [[] for _ in self.nodes]
        for i, ups in enumerate(self.upper_covers):
            for j in ups:
                out[j].append(i)
        return out

    def cover_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, ups in enumerate(self.upper_covers) for j in ups]

    @cached_property
    def completely_irreducible_ids(self) -> list[int]:
        out = []
        for i, N in enumerate(self.nodes):
            if i == self.top_id:
                continue
            meet = -1
            for j in self.upper_covers[i]:
                meet &= self.nodes[j].mask
            if meet != N.mask:
                out.append(i)
        return out

    @cached_property
    def ci_mask(self) -> int:
        return sum(1 << i for i in self.completely_irreducible_ids)

    @cached_property
    def ci_pair_mask(self) -> int:
        """Nodes of the form L1 & L2 with L1, L2 completely irreducible."""
        ids = self.completely_irreducible_ids
        out = 0
        for x, i in enumerate(ids):
            for j in ids[x:]:
                out |= 1 << self._meet(i, j)
        return out

    def join(self, ids) -> int:
        """Node id of the sum of the given nodes (zero for none).

        Nodes are sorted by order, so the least common upper bound is the
        lowest set bit of the common up-set.
        """
        common = (1 << len(self.nodes)) - 1
        for i in ids:
            common &= self.up[i]
        return (common & -common).bit_length() - 1

    def _meet(self, i: int, j: int) -> int:
        # greatest node below both: the largest-order node in down[i] & down[j]
        common = self.down[i] & self.down[j]
        return common.bit_length() - 1

    @cached_property
    def prime_ids(self) -> list[int]:
        return [i for i, N in enumerate(self.nodes) if not N.is_whole and is_prime_submodule(N)]

    @cached_property
    def second_ids(self) -> list[int]:
        return [i for i, N in enumerate(self.nodes) if is_second(N)]

    @cached_property
    def second_mask(self) -> int:
        return sum(1 << i for i in self.second_ids)

    @cached_property
    def minimal_ids(self) -> list[int]:
        return [i for i in range(1, len(self.nodes)) if self.lower_covers[i] == [0]]


def _containment(nodes: list[Submodule], size: int) -> tuple[list[int], list[int]]:
    n = len(nodes)
    S = np.zeros((n, size), dtype=np.float32)
    for i, N in enumerate(nodes):
        S[i, N.indices] = 1.0
    orders = np.array([N.order for N in nodes], dtype=np.float32)
    up = [0] * n
    down = [0] * n
    block = 2048
    for start in range(0, n, block):
        overlap = S[start:start + block] @ S.T
        sub = overlap == orders[start:start + block, None]
        for r, row in enumerate(sub):
            up[start + r] = int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
    for i in range(n):
        for j in iter_bits(up[i]):
            down[j] |= 1 << i
    return up, down


def _enumerate_masks(M: FinModule, bound: int):
    M.check_materializable()
    d = np.array(M.factors, dtype=np.int64)
    strides = np.array(M.strides, dtype=np.int64)
    size = M.order
    coords = (np.arange(size, dtype=np.int64)[:, None] // strides) % d if M.rank else \
        np.zeros((1, 0), dtype=np.int64)

    def to_index(pts):
        return pts @ strides if M.rank else np.zeros(len(pts), dtype=np.int64)

    # one representative generator per cyclic submodule
    cyclics = []
    seen = np.zeros(size, dtype=bool)
    for g in range(1, size):
        if seen[g]:
            continue
        mult = [0]
        pt = coords[g]
        x = pt.copy()
        while True:
            ix = int(to_index(x[None])[0])
            if ix == 0:
                break
            mult.append(ix)
            x = (x + pt) % d
        m = len(mult)
        gens = [mult[j] for j in range(1, m) if np.gcd(j, m) == 1]
        seen[gens] = True
        cyclics.append((g, np.array(mult, dtype=np.int64)))

    zero = np.zeros(1, dtype=np.int64)
    found = {1: (zero, ())}
    queue = [1]
    for mask in queue:
        idx, gens = found[mask]
        pts = coords[idx]
        covered = mask
        for g, cidx in cyclics:
            if covered >> g & 1:
                continue
            coset = to_index((pts + coords[g]) % d)
            covered |= indices_to_mask(coset, size)
            new_idx = np.unique(to_index(((pts[:, None, :] + coords[cidx][None, :, :]) % d)
                                         .reshape(-1, M.rank)))
            new_mask = indices_to_mask(new_idx, size)
            if new_mask not in found:
                found[new_mask] = (new_idx, gens + (tuple(int(c) for c in coords[g]),))
                queue.append(new_mask)
                if len(found) > bound:
                    raise BoundExceededError(
                        f"lattice of {M} has more than {bound} submodules", partial_count=len(found)
                    )
    return found


@lru_cache(maxsize=64)
def _enumerate_cached(M: FinModule, bound: int) -> SubLattice:
    nodes = []
    for mask, (idx, gens) in _enumerate_masks(M, bound).items():
        N = Submodule(M, hnf_mod(gens, M.factors))
        assert N.order == len(idx), "canonical form disagrees with the element set"
        N.__dict__["indices"] = idx
        N.__dict__["mask"] = mask
        nodes.append(N)
    nodes.sort(key=lambda N: N.sort_key)
    return SubLattice(M, nodes)


def enumerate_submodules(M: FinModule, max_nodes: int | None = None) -> SubLattice:
    """Every submodule of M exactly once, ordered by (order, canonical gens)."""
    return _enumerate_cached(M, max_nodes if max_nodes is not None else config.max_lattice)


def completely_irreducibles(L: SubLattice) -> list[Submodule]:
    return [L[i] for i in L.completely_irreducible_ids]


def is_prime_submodule(P: Submodule) -> bool:
    """rm in P forces m in P or rM inside P."""
    if P.is_whole:
        raise NotProperError("a prime submodule must be proper")
    M = P.parent
    whole = M.whole()
    for r in range(M.modulus):
        if scalar_image(r, whole) <= P:
            continue
        if colon(P, r) != P:
            return False
    return True


def prime_submodules(L: SubLattice) -> list[Submodule]:
    return [L[i] for i in L.prime_ids]


def m_radical(L: SubLattice, N: Submodule) -> Submodule:
    """Intersection of the prime submodules containing N, or M if there are none."""
    i = L.id(N)
    out = L[L.top_id]
    for j in L.prime_ids:
        if L.contains(i, j):
            out = intersect(out, L[j])
    return out


def is_second(N: Submodule) -> bool:
    """Nonzero, and every ring element acts on N surjectively or as zero."""
    if N.is_zero:
        return False
    for a in range(N.parent.modulus):
        aN = scalar_image(a, N)
        if aN != N and not aN.is_zero:
            return False
    return True


def second_submodules(L: SubLattice) -> list[Submodule]:
    return [L[i] for i in L.second_ids]


@lru_cache(maxsize=256)
def socle(M: FinModule) -> Submodule:
    """Sum over primes p of the p-torsion of M: its elements of squarefree order."""
    out = M.zero()
    for p, _ in factorize(M.modulus):
        out = submodule_sum(out, colon(M.zero(), p))
    return out


def second_radical(N: Submodule, L: SubLattice | None = None, mode: str = "fast") -> Submodule:
    """sec(N): the sum of the second submodules inside N, zero if none.

    ``mode="fast"`` computes the socle, the sum over primes p of the p-torsion
    of N, and needs no lattice.  ``mode="definition"`` sums the second nodes of
    ``L`` that lie in N.
    """
    M = N.parent
    if mode == "fast":
        # the socle of N is N meet the socle of M
        return intersect(N, socle(M))
    if mode != "definition":
        raise ValueError(f"unknown mode {mode!r}")
    if L is None:
        L = enumerate_submodules(M)
    return L[L.join(iter_bits(L.second_mask & L.down[L.id(N)]))]
