"""Hermite and Smith normal forms for the small integer matrices used here.

A subgroup of Z/d_1 + ... + Z/d_k is the same thing as a lattice L with
diag(d) Z^k <= L <= Z^k.  ``hnf_mod`` returns the unique row-style Hermite
basis of such a lattice:

* upper triangular, ``H[i][i] > 0`` and ``H[i][i]`` divides ``d_i``;
* entries above a pivot satisfy ``0 <= H[r][i] < H[i][i]``.

Because ``d_i e_i`` lies in the lattice, coordinate ``i`` of any working row
may be reduced mod ``d_i`` without changing the span.  That keeps every
intermediate entry bounded by the moduli.
"""
from __future__ import annotations

Row = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def hnf_mod(rows, moduli) -> tuple[Row, ...]:
    """Hermite basis of ``span(rows) + diag(moduli) Z^k``."""
    k = len(moduli)
    work = []
    for r in rows:
        if len(r) != k:
            raise ValueError(f"row {tuple(r)} has length {len(r)}, expected {k}")
        v = [x % d for x, d in zip(r, moduli)]
        if any(v):
            work.append(v)

    basis: list[list[int]] = []
    for i in range(k):
        pivot = [0] * k
        pivot[i] = moduli[i]
        rest = []
        for r in work:
            a = r[i]
            if a == 0:
                rest.append(r)
                continue
            b = pivot[i]
            g, s, t = xgcd(b, a)
            bg, ag = b // g, a // g
            new_pivot = [s * x + t * y for x, y in zip(pivot, r)]
            other = [bg * y - ag * x for x, y in zip(pivot, r)]
            for j in range(i + 1, k):
                new_pivot[j] %= moduli[j]
                other[j] %= moduli[j]
            other[i] = 0
            pivot = new_pivot
            if any(other):
                rest.append(other)
        basis.append(pivot)
        work = rest

    for i in range(k):
        h = basis[i][i]
        for r in range(i):
            q = basis[r][i] // h
            if q:
                row = basis[r]
                piv = basis[i]
                basis[r] = [x - q * y for x, y in zip(row, piv)]
    return tuple(tuple(r) for r in basis)


def lattice_contains(H, v) -> bool:
    """Membership of an integer vector in the lattice with Hermite basis H."""
    v = list(v)
    for i, row in enumerate(H):
        q, rem = divmod(v[i], row[i])
        if rem:
            return False
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return True


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_form(A):
    """Smith normal form with transforms.

    Returns ``(diag, U, V, Vinv)`` such that ``U @ A @ V`` is diagonal with
    entries ``diag`` (nonnegative, each dividing the next) and
    ``V @ Vinv == I``.  U and V are unimodular.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    A = [list(r) for r in A]
    U = _identity(m)
    V = _identity(n)
    Vi = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vi[src] = [x - q * y for x, y in zip(Vi[src], Vi[dst])]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish(A, U, V, Vi, m, n)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return _finish(A, U, V, Vi, m, n)


def _finish(A, U, V, Vi, m, n):
    diag = [A[i][i] for i in range(min(m, n))]
    return diag, U, V, Vi
