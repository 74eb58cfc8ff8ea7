"""Instance-level verification of the theorems about 2-absorbing secondary
submodules, corpus generation and counterexample search.

``check_theorem(tid, M)`` instantiates every universally quantified variable
of theorem ``tid`` over M: ring elements, ideals, submodules, and for the
hom-based statements every inclusion of a submodule plus a seeded sample of
injective homs.  Instances whose hypotheses fail are counted as vacuous, so
that "no violations" can be told apart from "never applicable".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Any, Callable

import numpy as np

from .classify import (
    CLASSES,
    absorbing_violation,
    is_2_absorbing_second,
    is_2_absorbing_secondary,
    is_2_absorbing_submodule,
    is_2_absorbing_primary_submodule,
    is_comultiplication,
    is_cocyclic,
    is_secondary,
    is_second_radical_submodule,
    is_strongly_2_absorbing_second,
    is_strongly_2_absorbing_secondary,
    secondary_representation,
    strongly_2_absorbing_secondary_witness,
)
from .errors import SecmodError
from .ideals import (
    divisors,
    factorize,
    is_2_absorbing_primary_ideal,
    is_primary_ideal,
)
from .lattice import (
    SubLattice,
    enumerate_submodules,
    is_second,
    iter_bits,
    m_radical,
    second_radical,
)
from .modules import (
    FinModule,
    ModuleHom,
    Submodule,
    annihilator,
    as_module,
    colon,
    coproduct_power,
    hom_image,
    hom_make,
    hom_preimage,
    indices_to_mask,
    intersect,
    make_module,
    quotient,
    scalar_image,
    submodule_sum,
    torsion,
)

log = logging.getLogger(__name__)

THEOREM_IDS = (
    "l1.3", "l1.4", "t1.5", "l9.2", "t9.4", "t9.5", "l9.6", "p1.5", "t9.7",
    "t9.8", "l9.9", "t9.10", "c9.11", "p9.12", "l9.13", "t9.14", "t9.15", "t9.16",
)

DEFAULT_SEED = 20160501


class UnknownIdError(SecmodError, KeyError):
    pass


@dataclass
class TheoremReport:
    theorem_id: str
    module: str
    instances_checked: int = 0
    vacuous_instances: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    #: optional per-part counts, e.g. {"d": {"instances": 7, "vacuous": 5}}
    parts: dict[str, dict[str, int]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.violations

    def count(self, vacuous: bool, part: str | None = None, times: int = 1):
        self.instances_checked += times
        self.vacuous_instances += vacuous * times
        if part is not None:
            c = self.parts.setdefault(part, {"instances": 0, "vacuous": 0})
            c["instances"] += times
            c["vacuous"] += vacuous * times

    def violate(self, **witness):
        self.violations.append(_jsonable(witness))

    def to_dict(self) -> dict[str, Any]:
        out = {
            "theorem_id": self.theorem_id,
            "module": self.module,
            "instances_checked": self.instances_checked,
            "vacuous_instances": self.vacuous_instances,
            "violations": self.violations,
        }
        if self.parts:
            out["parts"] = self.parts
        return out


def _jsonable(x):
    if isinstance(x, Submodule):
        return {"gens": [list(g) for g in x.gens], "order": x.order}
    if isinstance(x, FinModule):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    return x


# -- corpus ----------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    """Which finite abelian groups to generate.

    ``kind`` is ``"all"``, ``"cyclic"`` or ``"p-groups"``; ``explicit`` is an
    optional list of cyclic-order tuples that replaces generation entirely.
    """

    max_order: int
    kind: str = "all"
    explicit: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.kind not in ("all", "cyclic", "p-groups"):
            raise ValueError(f"unknown corpus kind {self.kind!r}")


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def abelian_groups(order: int) -> list[tuple[int, ...]]:
    """Invariant-factor tuples of all abelian groups of the given order."""
    per_prime = []
    for p, e in factorize(order):
        per_prime.append([[p**k for k in part] for part in _partitions(e)])
    out = []
    for choice in product(*per_prime):
        cyc = [q for part in choice for q in part]
        out.append(make_module(None, cyc).factors)
    return sorted(out, key=lambda f: (len(f), f))


def corpus_generate(spec: CorpusSpec) -> list[FinModule]:
    if spec.explicit is not None:
        mods = [make_module(None, f) for f in spec.explicit]
        return [M for M in mods if M.order <= spec.max_order]
    out = []
    for order in range(1, spec.max_order + 1):
        if spec.kind == "p-groups" and len(factorize(order)) > 1:
            continue
        for f in abelian_groups(order):
            if spec.kind == "cyclic" and len(f) > 1:
                continue
            out.append(FinModule(f[-1] if f else 1, f))
    return out


# -- product rings ---------------------------------------------------------

@dataclass
class ProductDecomposition:
    """M = M1 x M2 for R = Z/n1 x Z/n2, with M_i the n_i-torsion of M."""

    M: FinModule
    n1: int
    n2: int
    M1: FinModule
    M2: FinModule
    inc1: ModuleHom
    inc2: ModuleHom

    def split(self, N: Submodule) -> tuple[Submodule, Submodule]:
        """N -> (N1, N2) as submodules of the abstract factors."""
        return hom_preimage(self.inc1, N), hom_preimage(self.inc2, N)

    def join(self, N1: Submodule, N2: Submodule) -> Submodule:
        return submodule_sum(hom_image(self.inc1, N1), hom_image(self.inc2, N2))


def product_decompose(M: FinModule, n1: int, n2: int) -> ProductDecomposition:
    if n1 < 2 or n2 < 2 or n1 * n2 != M.modulus or gcd(n1, n2) != 1:
        raise ValueError(f"{n1} * {n2} is not a coprime split of {M.modulus}")
    facs = []
    for ni in (n1, n2):
        S, inc = as_module(torsion(M, ni))
        Si = FinModule(ni, S.factors)
        facs.append((Si, hom_make(Si, M, inc.matrix)))
    (M1, inc1), (M2, inc2) = facs
    return ProductDecomposition(M, n1, n2, M1, M2, inc1, inc2)


def coprime_splits(n: int) -> list[tuple[int, int]]:
    """All (n1, n2) with n1 * n2 = n, gcd 1, both > 1."""
    out = []
    for d in divisors(n):
        if 1 < d < n and gcd(d, n // d) == 1:
            out.append((d, n // d))
    return out


# -- helpers with per-lattice memoization ----------------------------------

def _memo(L: SubLattice, key, i: int, fn: Callable[[], Any]):
    table = L.memo.setdefault(key, {})
    if i not in table:
        table[i] = fn()
    return table[i]


def _strongly(L: SubLattice, i: int, mode: str = "c") -> bool:
    return _memo(L, ("s2as", mode), i,
                 lambda: is_strongly_2_absorbing_secondary(L[i], L, mode))


def _sec(L: SubLattice, i: int) -> Submodule:
    return _memo(L, "sec", i, lambda: second_radical(L[i]))


def _nonzero(L: SubLattice):
    return range(1, len(L))


def _ring_pairs(n: int):
    return combinations_with_replacement(range(n), 2)


# -- the checks ------------------------------------------------------------

def _check_l1_3(M, L, rep, **_):
    n = M.modulus
    for i in _nonzero(L):
        hyp = is_2_absorbing_secondary(L[i], L)
        rep.count(not hyp)
        if not hyp:
            continue
        s = L.id(_sec(L, i))
        pairs = product(divisors(n), range(n))
        bad = absorbing_violation(L, i, s, L.ci_mask, pairs)
        if bad:
            g, a, x = bad
            rep.violate(N=L[i], ideal=g, a=a, L=L[x])


def _check_l1_4(M, L, rep, **_):
    n = M.modulus
    for i in _nonzero(L):
        hyp = is_2_absorbing_secondary(L[i], L)
        rep.count(not hyp)
        if not hyp:
            continue
        s = L.id(_sec(L, i))
        bad = absorbing_violation(L, i, s, L.ci_mask, product(divisors(n), repeat=2))
        if bad:
            g, h, x = bad
            rep.violate(N=L[i], I=g, J=h, L=L[x])


def _check_t1_5(M, L, rep, **_):
    for i in _nonzero(L):
        rep.count(False)
        modes = {m: _strongly(L, i, m) for m in "abc"}
        if len(set(modes.values())) > 1:
            rep.violate(N=L[i], modes=modes)


def _check_l9_2(M, L, rep, **_):
    for i in _nonzero(L):
        hyp = is_strongly_2_absorbing_second(L[i], L, mode="literal")
        rep.count(not hyp)
        if hyp and not _strongly(L, i, "a"):
            rep.violate(N=L[i])


def _check_t9_4(M, L, rep, **_):
    comult = is_comultiplication(M, L)
    for i in _nonzero(L):
        hyp = comult and _strongly(L, i, "b")
        rep.count(not hyp)
        if hyp and not is_2_absorbing_primary_ideal(annihilator(L[i])):
            rep.violate(N=L[i], annihilator=annihilator(L[i]).generator)


def _check_t9_5(M, L, rep, **_):
    comult = is_comultiplication(M, L)
    for i in _nonzero(L):
        hyp = comult and is_2_absorbing_primary_ideal(annihilator(L[i]))
        rep.count(not hyp)
        if hyp and not _strongly(L, i, "b"):
            rep.violate(N=L[i], annihilator=annihilator(L[i]).generator)


def _check_l9_6(M, L, rep, **_):
    for i in range(len(L) - 1):
        N = L[i]
        hyp = is_2_absorbing_primary_submodule(N, L)
        rep.count(not hyp)
        if not hyp:
            continue
        rad = m_radical(L, N)
        if rad.is_whole or not is_2_absorbing_submodule(rad):
            rep.violate(N=N, m_radical=rad)


def _check_p1_5(M, L, rep, **_):
    for i in _nonzero(L):
        N = L[i]
        S = _sec(L, i)
        two_sec = is_2_absorbing_secondary(N, L)
        strong_sec = _strongly(L, i, "b")
        radical = is_second_radical_submodule(N)
        rep.count(not (two_sec or strong_sec), part="a")
        if two_sec and not is_2_absorbing_second(S, L):
            rep.violate(part="a", N=N, sec=S, cls="2-absorbing")
        if strong_sec and not is_strongly_2_absorbing_second(S, L, mode="literal"):
            rep.violate(part="a", N=N, sec=S, cls="strongly 2-absorbing")
        rep.count(not radical, part="b")
        if radical:
            if is_2_absorbing_second(N, L) != two_sec:
                rep.violate(part="b", N=N, cls="2-absorbing")
            if is_strongly_2_absorbing_second(N, L, mode="literal") != strong_sec:
                rep.violate(part="b", N=N, cls="strongly 2-absorbing")


def _check_t9_7(M, L, rep, **_):
    comult = is_comultiplication(M, L)
    max_t = max(2, sum(e for _, e in factorize(M.modulus)) + 1)
    for i in _nonzero(L):
        hyp = is_second(_sec(L, i))
        rep.count(not hyp, part="a")
        if hyp and not _strongly(L, i, "b"):
            rep.violate(part="a", N=L[i])
        rep.count(not (hyp and comult), part="b")
        if hyp and comult:
            for t in range(1, max_t + 1):
                C = coproduct_power(L[i], t)
                if not _strongly(L, L.id(C), "b"):
                    rep.violate(part="b", N=L[i], t=t, coproduct=C)


def _join_closure(L: SubLattice, members: list[int]) -> set[int]:
    """Node ids of the sums of all nonempty subfamilies of ``members``."""
    out: set[int] = set()
    for i in members:
        out |= {L.id(submodule_sum(L[i], L[j])) for j in out}
        out.add(i)
    return out


def _check_t9_8(M, L, rep, **_):
    comult = is_comultiplication(M, L)
    nz = list(_nonzero(L))
    if not comult:
        for part in "abcd":
            for _ in nz:
                rep.count(True, part=part)
        return

    def family_sums(part, members, pred):
        groups: dict[int, list[int]] = {}
        for i in members:
            groups.setdefault(L.id(_sec(L, i)), []).append(i)
        for group in groups.values():
            for j in sorted(_join_closure(L, group)):
                rep.count(False, part=part)
                if not pred(j):
                    rep.violate(part=part, family=[L[x] for x in group], sum=L[j])

    strong = [i for i in nz if _strongly(L, i, "b")]
    family_sums("a", strong, lambda j: _strongly(L, j, "b"))
    two = [i for i in nz if is_2_absorbing_secondary(L[i], L)]
    family_sums("b", two, lambda j: is_2_absorbing_secondary(L[j], L))

    secondary = [i for i in nz if is_secondary(L[i])]
    for x, y in combinations_with_replacement(secondary, 2):
        rep.count(False, part="c")
        if not _strongly(L, L.id(submodule_sum(L[x], L[y])), "b"):
            rep.violate(part="c", N1=L[x], N2=L[y])

    minimal = L.minimal_ids
    for i in nz:
        S = _sec(L, i)
        # every nonzero finite module is the sum of its primary components
        has_rep = all(is_secondary(P) for P in secondary_representation(L[i]))
        two_min = any(submodule_sum(L[x], L[y]) == S
                      for x, y in combinations_with_replacement(minimal, 2) if x != y)
        hyp = has_rep and two_min
        rep.count(not hyp, part="d")
        if hyp and not _strongly(L, i, "b"):
            rep.violate(part="d", N=L[i], sec=S)


def _random_injective_homs(S: FinModule, T: FinModule, count: int, rng) -> list[ModuleHom]:
    if S.rank == 0:
        return []
    pools = [torsion(T, d).indices for d in S.factors]
    out = []
    for _ in range(count * 20):
        rows = [T.coords(int(rng.choice(pool))) for pool in pools]
        h = hom_make(S, T, rows)
        if h.is_injective:
            out.append(h)
            if len(out) == count:
                break
    return out


def _homs(M: FinModule, L: SubLattice, samples: int, seed: int):
    """(hom, source lattice, target lattice) triples: all inclusions, then samples."""
    out = []
    for K in L:
        S, inc = as_module(K)
        out.append((inc, enumerate_submodules(S), L))
    if samples and M.rank:
        rng = np.random.default_rng(seed)
        p = factorize(M.modulus)[0][0]
        bigger = make_module(M.modulus, M.factors + (p,))
        for T in (M, bigger):
            LT = L if T == M else enumerate_submodules(T)
            for h in _random_injective_homs(M, T, samples, rng):
                out.append((h, L, LT))
    return out


def _mask_ids(L: SubLattice) -> dict[int, int]:
    if "mask_ids" not in L.memo:
        L.memo["mask_ids"] = {N.mask: i for i, N in enumerate(L)}
    return L.memo["mask_ids"]


def _sec_id(L: SubLattice, i: int) -> int:
    return _memo(L, "sec_id", i, lambda: L.id(_sec(L, i)))


class _ElementHom:
    """An injective hom tabulated on element indices, acting on node ids."""

    def __init__(self, h: ModuleHom, LS: SubLattice, LT: SubLattice):
        self.h, self.LS, self.LT = h, LS, LT
        S, T = h.source, h.target
        pts = S.whole().element_coords()
        if T.rank and S.rank:
            img = (pts @ np.array(h.matrix, dtype=np.int64)) % np.array(T.factors, dtype=np.int64)
            images = img @ np.array(T.strides, dtype=np.int64)
        else:
            images = np.zeros(len(pts), dtype=np.int64)
        src = pts @ np.array(S.strides, dtype=np.int64) if S.rank else np.zeros(1, np.int64)
        #: fmap[x] is the index of f(x), for every source index x
        self.fmap = np.empty(S.order, dtype=np.int64)
        self.fmap[src] = images
        self.image_ids: dict[int, int] = {}

    def image(self, i: int) -> int:
        """Node id of f(N) for source node i."""
        out = self.image_ids.get(i)
        if out is None:
            idx = self.fmap[self.LS[i].indices]
            out = _mask_ids(self.LT)[indices_to_mask(idx, self.h.target.order)]
            self.image_ids[i] = out
        return out

    def preimage(self, j: int) -> int:
        """Node id of f^-1(N') for target node j."""
        inside = np.zeros(self.h.target.order, dtype=bool)
        inside[self.LT[j].indices] = True
        idx = np.flatnonzero(inside[self.fmap])
        return _mask_ids(self.LS)[indices_to_mask(idx, self.h.source.order)]


def _check_l9_9(M, L, rep, samples=100, seed=DEFAULT_SEED, **_):
    for h, LS, LT in _homs(M, L, samples, seed):
        f = _ElementHom(h, LS, LT)
        img = f.image(len(LS) - 1)
        for i in range(len(LS)):
            rep.count(False, part="a")
            if _sec_id(LT, f.image(i)) != f.image(_sec_id(LS, i)):
                rep.violate(part="a", hom=h.matrix, source=h.source, target=h.target, N=LS[i])
        inside = LT.down[img]
        rep.count(True, part="b", times=len(LT) - inside.bit_count())
        for j in iter_bits(inside):
            rep.count(False, part="b")
            if _sec_id(LS, f.preimage(j)) != f.preimage(_sec_id(LT, j)):
                rep.violate(part="b", hom=h.matrix, source=h.source, target=h.target, N=LT[j])


def _check_t9_10(M, L, rep, samples=100, seed=DEFAULT_SEED, **_):
    for h, LS, LT in _homs(M, L, samples, seed):
        f = _ElementHom(h, LS, LT)
        img = f.image(len(LS) - 1)
        for i in range(1, len(LS)):
            hyp = _strongly(LS, i, "a")
            rep.count(not hyp, part="a")
            if hyp and not _strongly(LT, f.image(i), "a"):
                rep.violate(part="a", hom=h.matrix, source=h.source, target=h.target, N=LS[i])
        inside = LT.down[img] & ~1
        rep.count(True, part="b", times=len(LT) - 1 - inside.bit_count())
        for j in iter_bits(inside):
            hyp = _strongly(LT, j, "a")
            rep.count(not hyp, part="b")
            if hyp and not _strongly(LS, f.preimage(j), "a"):
                rep.violate(part="b", hom=h.matrix, source=h.source, target=h.target, N=LT[j])


def _check_c9_11(M, L, rep, **_):
    for K in L:
        S, inc = as_module(K)
        LS = enumerate_submodules(S)
        for i in range(1, len(LS)):
            rep.count(False)
            inner = _strongly(LS, i, "a")
            outer = _strongly(L, L.id(hom_image(inc, LS[i])), "a")
            if inner != outer:
                rep.violate(K=K, N=hom_image(inc, LS[i]), in_K=inner, in_M=outer)


def _check_p9_12(M, L, rep, **_):
    cocyclic = is_cocyclic(M, L)
    if not cocyclic:
        for _ in _nonzero(L):
            rep.count(True)
        return
    k = L.minimal_ids[0]
    K = L[k]
    Q, proj = quotient(M, K)
    LQ = enumerate_submodules(Q)
    for i in _nonzero(L):
        N = L[i]
        hyp = K <= N and all(scalar_image(r, N) != K for r in range(M.modulus))
        if hyp:
            NK = hom_image(proj, N)
            hyp = not NK.is_zero and _strongly(LQ, LQ.id(NK), "b")
        rep.count(not hyp)
        if hyp and not _strongly(L, i, "b"):
            rep.violate(N=N, minimal=K)


def _splits(M: FinModule) -> list[ProductDecomposition]:
    return [product_decompose(M, n1, n2) for n1, n2 in coprime_splits(M.modulus)]


def _check_l9_13(M, L, rep, **_):
    splits = _splits(M)
    if not splits:
        for _ in L:
            rep.count(True)
        return
    for D in splits:
        for N in L:
            rep.count(False)
            N1, N2 = D.split(N)
            if D.join(N1, N2) != N:
                rep.violate(part="decomposition", split=[D.n1, D.n2], N=N)
            one_sided = (N2.is_zero and is_second(N1)) or (N1.is_zero and is_second(N2))
            if is_second(N) != one_sided:
                rep.violate(part="a", split=[D.n1, D.n2], N=N)
            if second_radical(N) != D.join(second_radical(N1), second_radical(N2)):
                rep.violate(part="b", split=[D.n1, D.n2], N=N)


def _strongly_sub(N: Submodule) -> bool:
    L = enumerate_submodules(N.parent)
    return _strongly(L, L.id(N), "a")


def _check_t9_14(M, L, rep, **_):
    splits = _splits(M)
    if not splits:
        rep.count(True)
        return
    for D in splits:
        L1, L2 = enumerate_submodules(D.M1), enumerate_submodules(D.M2)
        co1, co2 = is_comultiplication(D.M1, L1), is_comultiplication(D.M2, L2)
        comult = co1 and co2
        for part, Li, inc, co in (("a", L1, D.inc1, co1), ("b", L2, D.inc2, co2)):
            for i in range(1, len(Li)):
                rep.count(not co, part=part)
                if not co:
                    continue
                inner = _strongly(Li, i, "a")
                N = hom_image(inc, Li[i])
                outer = _strongly(L, L.id(N), "a")
                if inner != outer:
                    rep.violate(part=part, split=[D.n1, D.n2], K=Li[i], N=N)
        sec1 = [K for K in L1 if is_secondary(K)]
        sec2 = [K for K in L2 if is_secondary(K)]
        for K1, K2 in product(sec1, sec2):
            rep.count(not comult, part="c")
            if comult:
                N = D.join(K1, K2)
                if not _strongly(L, L.id(N), "a"):
                    rep.violate(part="c", split=[D.n1, D.n2], N=N)


def _check_t9_15(M, L, rep, **_):
    comult = is_comultiplication(M, L)
    for i in _nonzero(L):
        rep.count(not comult)
        if comult and is_secondary(L[i]) != is_primary_ideal(annihilator(L[i])):
            rep.violate(N=L[i])


def _check_t9_16(M, L, rep, **_):
    splits = _splits(M)
    comult = is_comultiplication(M, L)
    if not splits or not comult:
        for _ in _nonzero(L):
            rep.count(True)
        return
    for D in splits:
        for i in _nonzero(L):
            rep.count(False)
            N1, N2 = D.split(L[i])
            side = (
                (N1.is_zero and _strongly_sub(N2))
                or (N2.is_zero and _strongly_sub(N1))
                or (is_secondary(N1) and is_secondary(N2))
            )
            if _strongly(L, i, "a") != side:
                rep.violate(split=[D.n1, D.n2], N=L[i])


_CHECKS = {
    "l1.3": _check_l1_3,
    "l1.4": _check_l1_4,
    "t1.5": _check_t1_5,
    "l9.2": _check_l9_2,
    "t9.4": _check_t9_4,
    "t9.5": _check_t9_5,
    "l9.6": _check_l9_6,
    "p1.5": _check_p1_5,
    "t9.7": _check_t9_7,
    "t9.8": _check_t9_8,
    "l9.9": _check_l9_9,
    "t9.10": _check_t9_10,
    "c9.11": _check_c9_11,
    "p9.12": _check_p9_12,
    "l9.13": _check_l9_13,
    "t9.14": _check_t9_14,
    "t9.15": _check_t9_15,
    "t9.16": _check_t9_16,
}
assert tuple(_CHECKS) == THEOREM_IDS


def check_theorem(tid: str, M: FinModule, *, samples: int = 100, seed: int = DEFAULT_SEED,
                  max_nodes: int | None = None) -> TheoremReport:
    """Verify theorem ``tid`` on every instance over M."""
    if tid not in _CHECKS:
        raise UnknownIdError(f"unknown theorem id {tid!r}")
    L = enumerate_submodules(M, max_nodes)
    rep = TheoremReport(tid, str(M))
    _CHECKS[tid](M, L, rep, samples=samples, seed=seed)
    if tid in ("t9.4", "t9.5", "p9.12", "t9.8"):
        log.debug("%s on %s: %d instances, %d vacuous", tid, M, rep.instances_checked,
                 rep.vacuous_instances)
    return rep


def check_all(M: FinModule, ids=THEOREM_IDS, **kw) -> list[TheoremReport]:
    return [check_theorem(tid, M, **kw) for tid in ids]


def _check_module(args):
    ids, M, kw = args
    return check_all(M, ids, **kw)


def check_corpus(ids, modules, workers: int = 1, **kw) -> list[TheoremReport]:
    """Reports for every (module, theorem), in corpus order then id order."""
    jobs = [(tuple(ids), M, kw) for M in modules]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_check_module, jobs))
    else:
        chunks = [_check_module(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]


# -- counterexample search -------------------------------------------------

def search_counterexample(antecedent: str, consequent: str, spec: CorpusSpec) -> list[dict]:
    """Every (module, submodule) in the corpus where antecedent holds and consequent fails.

    An empty result means none exists up to the corpus bound, nothing more.
    """
    for cid in (antecedent, consequent):
        if cid not in CLASSES:
            raise UnknownIdError(f"unknown class id {cid!r}")
    ante, cons = CLASSES[antecedent], CLASSES[consequent]
    out = []
    for M in corpus_generate(spec):
        L = enumerate_submodules(M)
        for N in L:
            if ante(N, L) and not cons(N, L):
                out.append({
                    "module": {"expr": str(M), "ring": M.modulus,
                               "invariant_factors": list(M.factors)},
                    "submodule": _jsonable(N),
                    "is_whole_module": N.is_whole,
                })
    return out
