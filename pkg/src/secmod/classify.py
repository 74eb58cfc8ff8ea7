"""Decision procedures for the submodule classes.

Conventions shared by every predicate here:

* Ring quantifiers in definitional ("literal") modes run over all residues
  0..n-1 of Z/nZ.  Fast modes run over the divisors of n instead: ``a`` and
  ``gcd(a, n)`` differ by a unit of Z/nZ, so ``aX = gcd(a, n) X`` for every
  submodule X and nothing is lost.
* Classes that require a non-zero submodule return False on the zero
  submodule.  Classes that require a proper submodule raise NotProperError
  on N = M.
* Conditions of the shape "abN in X implies aS in X or bS in X or abN = 0",
  quantified over a family of submodules X, are decided with node bitsets:
  a violation is a family member above abN that is above neither aS nor bS.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any

from .errors import NotProperError, SecmodError
from .ideals import (
    divisors,
    factorize,
    is_2_absorbing_primary_ideal,
    is_primary_ideal,
)
from .lattice import (
    SubLattice,
    enumerate_submodules,
    is_prime_submodule,
    is_second,
    m_radical,
    second_radical,
)
from .modules import (
    FinModule,
    Submodule,
    annihilator,
    colon,
    intersect,
    scalar_image,
)

__all__ = [
    "is_second",
    "is_secondary",
    "is_2_absorbing_second",
    "is_strongly_2_absorbing_second",
    "is_2_absorbing_secondary",
    "is_strongly_2_absorbing_secondary",
    "is_2_absorbing_submodule",
    "is_2_absorbing_primary_submodule",
    "is_comultiplication",
    "is_cocyclic",
    "secondary_representation",
    "is_second_radical_submodule",
    "classify_all",
    "ClassificationReport",
    "CLASSES",
    "FLAG_NAMES",
]


class ConsistencyError(SecmodError, AssertionError):
    """A classification broke an implication that must always hold."""


def _literal_pairs(n: int):
    # every condition below is symmetric in (a, b)
    return combinations_with_replacement(range(n), 2)


def _divisor_pairs(n: int):
    return combinations_with_replacement(divisors(n), 2)


def absorbing_violation(L: SubLattice, n_id: int, s_id: int, family: int, pairs):
    """First ``(a, b, X)`` with abN <= X, aS !<= X, bS !<= X and abN != 0.

    N is node ``n_id``, S is node ``s_id`` and X ranges over the nodes whose
    bits are set in ``family``.
    """
    n = L.parent.modulus
    up = L.up
    for a, b in pairs:
        ab = L.image(a * b % n, n_id)
        if ab == 0:
            continue
        bad = family & up[ab] & ~up[L.image(a, s_id)] & ~up[L.image(b, s_id)]
        if bad:
            return a, b, (bad & -bad).bit_length() - 1
    return None


def _all_nodes(L: SubLattice) -> int:
    return (1 << len(L)) - 1


def _fast_violation(N: Submodule, S: Submodule):
    """(c)-style check without a lattice: aS <= abN or bS <= abN or abN = 0."""
    for a, b in _divisor_pairs(N.parent.modulus):
        abN = scalar_image(a * b, N)
        if abN.is_zero:
            continue
        if not (scalar_image(a, S) <= abN or scalar_image(b, S) <= abN):
            return a, b, abN
    return None


def is_secondary(N: Submodule, mode: str = "definition") -> bool:
    """Nonzero, and each ring element acts on N surjectively or nilpotently.

    The fast mode uses that a finite module is secondary iff it is a nonzero
    p-group.
    """
    if N.is_zero:
        return False
    if mode == "fast":
        return len(factorize(N.exponent)) == 1
    n = N.parent.modulus
    bound = max(1, sum(e for _, e in factorize(n)))
    for a in range(n):
        if scalar_image(a, N) == N:
            continue
        if not any(scalar_image(pow(a, t, n), N).is_zero for t in range(1, bound + 1)):
            return False
    return True


def is_2_absorbing_second(N: Submodule, L: SubLattice | None = None) -> bool:
    if N.is_zero:
        return False
    L = L or enumerate_submodules(N.parent)
    i = L.id(N)
    return absorbing_violation(L, i, i, L.ci_mask, _literal_pairs(N.parent.modulus)) is None


def is_strongly_2_absorbing_second(N: Submodule, L: SubLattice | None = None,
                                   mode: str = "fast") -> bool:
    """abN <= K forces aN <= K or bN <= K or abN = 0, for every submodule K.

    ``mode="fast"`` tests only K = abN, the smallest candidate;
    ``mode="literal"`` quantifies over every node of the lattice.
    """
    if N.is_zero:
        return False
    if mode == "fast":
        return _fast_violation(N, N) is None
    if mode != "literal":
        raise ValueError(f"unknown mode {mode!r}")
    L = L or enumerate_submodules(N.parent)
    i = L.id(N)
    return absorbing_violation(L, i, i, _all_nodes(L), _literal_pairs(N.parent.modulus)) is None


def is_2_absorbing_secondary(N: Submodule, L: SubLattice | None = None) -> bool:
    if N.is_zero:
        return False
    L = L or enumerate_submodules(N.parent)
    i = L.id(N)
    s = L.id(second_radical(N))
    return absorbing_violation(L, i, s, L.ci_mask, _literal_pairs(N.parent.modulus)) is None


def strongly_2_absorbing_secondary_witness(N: Submodule, L: SubLattice | None = None,
                                           mode: str = "c"):
    """A violating ``(a, b, X)`` for the given mode, or None.

    Modes: ``"c"`` compares a sec(N) and b sec(N) with abN directly;
    ``"b"`` ranges over pairs of ideals and every submodule K;
    ``"a"`` ranges over ring elements and intersections of two
    completely irreducible submodules.
    """
    if mode == "c":
        return _fast_violation(N, second_radical(N))
    L = L or enumerate_submodules(N.parent)
    i = L.id(N)
    s = L.id(second_radical(N))
    n = N.parent.modulus
    if mode == "b":
        return absorbing_violation(L, i, s, _all_nodes(L), _divisor_pairs(n))
    if mode == "a":
        return absorbing_violation(L, i, s, L.ci_pair_mask, _literal_pairs(n))
    raise ValueError(f"unknown mode {mode!r}")


def is_strongly_2_absorbing_secondary(N: Submodule, L: SubLattice | None = None,
                                      mode: str = "c") -> bool:
    if N.is_zero:
        return False
    return strongly_2_absorbing_secondary_witness(N, L, mode) is None


def _require_proper(N: Submodule):
    if N.is_whole:
        raise NotProperError("the predicate needs a proper submodule")


def _colon_masks(N: Submodule) -> list[int]:
    return [colon(N, a).mask for a in range(N.parent.modulus)]


def _absorbing_submodule_violation(N: Submodule, target: Submodule):
    """First (a, b, m) with abm in N, am and bm outside target, abM not in N."""
    n = N.parent.modulus
    full = (1 << N.parent.order) - 1
    into_N = _colon_masks(N)
    into_T = into_N if target == N else _colon_masks(target)
    for a, b in _literal_pairs(n):
        ab = into_N[a * b % n]
        if ab == full:
            continue
        bad = ab & ~(into_T[a] | into_T[b])
        if bad:
            return a, b, N.parent.coords((bad & -bad).bit_length() - 1)
    return None


def is_2_absorbing_submodule(N: Submodule) -> bool:
    """abm in N forces am in N or bm in N or abM inside N."""
    _require_proper(N)
    return _absorbing_submodule_violation(N, N) is None


def is_2_absorbing_primary_submodule(N: Submodule, L: SubLattice | None = None) -> bool:
    """abm in N forces am or bm into M-rad(N), or abM inside N."""
    _require_proper(N)
    L = L or enumerate_submodules(N.parent)
    return _absorbing_submodule_violation(N, m_radical(L, N)) is None


def is_comultiplication(M: FinModule, L: SubLattice | None = None,
                        mode: str = "definition") -> bool:
    """Every submodule N equals (0 :_M Ann(N))."""
    if mode == "fast":
        primes = {p for d in M.factors for p, _ in factorize(d)}
        return all(sum(d % p == 0 for d in M.factors) <= 1 for p in primes)
    L = L or enumerate_submodules(M)
    zero = M.zero()
    return all(colon(zero, annihilator(N)) == N for N in L)


def is_cocyclic(M: FinModule, L: SubLattice | None = None) -> bool:
    """M has exactly one minimal submodule."""
    L = L or enumerate_submodules(M)
    return len(L.minimal_ids) == 1


def secondary_representation(N: Submodule) -> list[Submodule]:
    """N as the sum of its nonzero primary components, by increasing prime."""
    if N.is_zero:
        raise ValueError("the zero submodule has no secondary representation")
    M = N.parent
    zero = M.zero()
    return [intersect(N, colon(zero, p**e)) for p, e in factorize(M.modulus)
            if N.exponent % p == 0]


def is_second_radical_submodule(N: Submodule) -> bool:
    return not N.is_zero and second_radical(N) == N


# -- batch classification --------------------------------------------------

def _proper_only(pred):
    def wrapped(N, L):
        return False if N.is_whole else pred(N, L)
    return wrapped


#: class id -> total predicate ``(N, L) -> bool``
CLASSES = {
    "second": lambda N, L: is_second(N),
    "secondary": lambda N, L: is_secondary(N),
    "second-radical": lambda N, L: is_second_radical_submodule(N),
    "2-abs-second": lambda N, L: is_2_absorbing_second(N, L),
    "strongly-2-abs-second": lambda N, L: is_strongly_2_absorbing_second(N, L),
    "2-abs-secondary": lambda N, L: is_2_absorbing_secondary(N, L),
    "strongly-2-abs-secondary": lambda N, L: is_strongly_2_absorbing_secondary(N, L),
    "2-abs-submodule": _proper_only(lambda N, L: is_2_absorbing_submodule(N)),
    "2-abs-primary-submodule": _proper_only(is_2_absorbing_primary_submodule),
    "prime": _proper_only(lambda N, L: is_prime_submodule(N)),
    "completely-irreducible": lambda N, L: L.id(N) in L.completely_irreducible_ids,
    "minimal": lambda N, L: L.id(N) in L.minimal_ids,
}

#: class id -> report field name
FLAG_NAMES = {
    "second": "second",
    "secondary": "secondary",
    "second-radical": "second_radical_submodule",
    "2-abs-second": "two_abs_second",
    "strongly-2-abs-second": "strongly_two_abs_second",
    "2-abs-secondary": "two_abs_secondary",
    "strongly-2-abs-secondary": "strongly_two_abs_secondary",
    "2-abs-submodule": "two_abs_submodule",
    "2-abs-primary-submodule": "two_abs_primary_submodule",
    "prime": "prime",
    "completely-irreducible": "completely_irreducible",
    "minimal": "minimal",
}

# (antecedent, consequent) pairs that hold for every submodule
IMPLICATIONS = [
    ("minimal", "second"),
    ("second", "secondary"),
    ("second", "strongly_two_abs_second"),
    ("strongly_two_abs_second", "two_abs_second"),
    ("strongly_two_abs_second", "strongly_two_abs_secondary"),
    ("secondary", "strongly_two_abs_secondary"),
    ("strongly_two_abs_secondary", "two_abs_secondary"),
    ("prime", "two_abs_submodule"),
    ("two_abs_submodule", "two_abs_primary_submodule"),
]


@dataclass
class ClassificationReport:
    module: FinModule
    module_flags: dict[str, bool]
    rows: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        M = self.module
        return {
            "schema_version": "1",
            "module": {"ring": M.modulus, "invariant_factors": list(M.factors), "order": M.order},
            "module_flags": dict(self.module_flags),
            "rows": self.rows,
        }


def _row(N: Submodule, L: SubLattice) -> dict[str, Any]:
    row: dict[str, Any] = {"gens": [list(g) for g in N.gens], "order": N.order}
    for cid, name in FLAG_NAMES.items():
        row[name] = bool(CLASSES[cid](N, L))
    return row


def classify_all(M: FinModule, workers: int = 1, max_nodes: int | None = None) -> ClassificationReport:
    """Every flag for every submodule, rows in lattice order."""
    L = enumerate_submodules(M, max_nodes)
    # fill shared caches before any fan-out
    for a in L.ring_elements:
        L.image(a, 0)
    L.ci_mask, L.prime_ids, L.second_ids, L.minimal_ids
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda N: _row(N, L), L.nodes))
    else:
        rows = [_row(N, L) for N in L.nodes]
    for row in rows:
        for ante, cons in IMPLICATIONS:
            if row[ante] and not row[cons]:
                raise ConsistencyError(f"{ante} without {cons} on {row['gens']} in {M}")
    flags = {"comultiplication": is_comultiplication(M, L), "cocyclic": is_cocyclic(M, L)}
    return ClassificationReport(M, flags, rows)
