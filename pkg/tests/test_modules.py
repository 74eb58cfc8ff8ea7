import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import Brute
from secmod.errors import IllDefinedHomError, ParentMismatchError
from secmod.modules import (
    annihilator,
    as_module,
    colon,
    coproduct,
    coproduct_power,
    hom_image,
    hom_kernel,
    hom_make,
    hom_preimage,
    intersect,
    invariant_factors,
    make_module,
    quotient,
    scalar_image,
    span,
    submodule_sum,
    torsion,
)
from secmod.normalform import hnf_mod, smith_form


def elems(N):
    return frozenset(N.elements())


# -- normal forms ----------------------------------------------------------

@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3), min_size=1, max_size=4))
def test_smith_form_is_a_factorization(rows):
    A = np.array(rows, dtype=object)
    diag, U, V, Vinv = smith_form(rows)
    U, V, Vinv = (np.array(x, dtype=object) for x in (U, V, Vinv))
    D = U.dot(A).dot(V)
    r = min(A.shape)
    expected = np.zeros(A.shape, dtype=object)
    for i in range(r):
        expected[i, i] = diag[i]
    assert (D == expected).all()
    assert (V.dot(Vinv) == np.eye(V.shape[0], dtype=object)).all()
    assert round(abs(float(np.linalg.det(U.astype(float))))) == 1
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(st.lists(st.lists(st.integers(0, 50), min_size=2, max_size=2), max_size=4))
def test_hnf_is_canonical_for_the_generated_subgroup(rows):
    moduli = (4, 12)
    H = hnf_mod(rows, moduli)
    B = Brute(moduli)
    spanned = B.generated([tuple(x % d for x, d in zip(r, moduli)) for r in rows])
    assert B.generated(H) == spanned
    # permuting and doubling the generators does not change the form
    assert hnf_mod(list(reversed(rows)) + rows, moduli) == H
    for i, row in enumerate(H):
        assert all(x == 0 for x in row[:i])
        assert moduli[i] % row[i] == 0
        for r in H[:i]:
            assert 0 <= r[i] < row[i]


# -- modules and submodules ------------------------------------------------

@pytest.mark.parametrize("factors, ring, inv, n", [
    ((2, 3), None, (6,), 6),
    ((2, 2), None, (2, 2), 2),
    ((4, 6), None, (2, 12), 12),
    ((6, 10), None, (2, 30), 30),
    ((2, 4), 8, (2, 4), 8),
    ((), None, (), 1),
])
def test_make_module(factors, ring, inv, n):
    M = make_module(ring, factors)
    assert M.factors == inv and M.modulus == n


@pytest.mark.parametrize("factors, ring", [((1,), None), ((0,), None), ((4,), 6), ((2,), 0)])
def test_make_module_rejects(factors, ring):
    with pytest.raises(ValueError):
        make_module(ring, factors)


@given(st.lists(st.integers(2, 40), max_size=4))
def test_invariant_factors_match_brute_element_orders(factors):
    inv = invariant_factors(factors)
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
    assert np.prod(inv, dtype=object) == np.prod(factors, dtype=object)
    # same number of elements of each order in both presentations
    if np.prod(factors) <= 400:
        def order_counts(fs):
            B = Brute(fs)
            counts = {}
            for x in B.elements:
                k = len(B.cyclic(x))
                counts[k] = counts.get(k, 0) + 1
            return counts
        assert order_counts(inv) == order_counts(factors)


def test_zero_module():
    M = make_module(None, [])
    assert M.order == 1 and M.rank == 0 and str(M) == "Z1"
    assert M.zero() == M.whole()


def test_span_examples():
    Z6 = make_module(None, [6])
    assert elems(span(Z6, [(2,)])) == {(0,), (2,), (4,)}
    assert span(Z6, []).is_zero
    M = make_module(12, [2, 12])
    assert span(M, [(1, 3)]).order == 4


def test_annihilator_examples():
    Z6 = make_module(None, [6])
    assert annihilator(Z6.whole()).generator == 6
    assert annihilator(span(Z6, [(2,)])).generator == 3
    assert annihilator(Z6.zero()).generator == 1


def test_scalar_image_examples():
    Z6 = make_module(None, [6])
    assert elems(scalar_image(2, Z6.whole())) == {(0,), (2,), (4,)}
    assert scalar_image(0, Z6.whole()).is_zero
    # 10 kills the 10-part and doubles twice on the 6-part: image has order 3
    M = make_module(None, [6, 10])
    assert scalar_image(10, M.whole()).order == 3


def test_colon_examples():
    Z12 = make_module(None, [12])
    assert elems(colon(Z12.zero(), 2)) == {(0,), (6,)}
    N = span(Z12, [(4,)])
    assert colon(N, 1) == N
    M = make_module(12, [2, 12])
    assert colon(M.zero(), 4).order == 8


def test_sum_and_intersection_examples():
    Z6 = make_module(None, [6])
    assert submodule_sum(span(Z6, [(2,)]), span(Z6, [(3,)])).is_whole
    Z12 = make_module(None, [12])
    N = span(Z12, [(3,)])
    assert intersect(N, N) == N
    assert elems(intersect(N, span(Z12, [(2,)]))) == {(0,), (6,)}


def test_coproduct_examples():
    Z12 = make_module(None, [12])
    N = span(Z12, [(6,)])
    assert elems(coproduct(N, N)) == {(0,), (3,), (6,), (9,)}
    assert coproduct(N, Z12.whole()).is_whole
    assert N <= coproduct_power(N, 1)
    with pytest.raises(ValueError):
        coproduct_power(N, 0)


def test_quotient_examples():
    Z12 = make_module(None, [12])
    Q, proj = quotient(Z12, span(Z12, [(6,)]))
    assert Q.factors == (6,)
    M = make_module(None, [2, 4])
    Q, proj = quotient(M, M.zero())
    assert Q.factors == M.factors and proj.is_injective
    Q, proj = quotient(M, M.whole())
    assert Q.order == 1


def test_hom_examples():
    Z6 = make_module(None, [6])
    N = span(Z6, [(2,)])
    S, inc = as_module(N)
    assert S.order == 3 and inc.image == N
    double = hom_make(Z6, Z6, [(2,)])
    assert elems(hom_preimage(double, Z6.zero())) == {(0,), (3,)}
    assert hom_kernel(double) == hom_preimage(double, Z6.zero())
    with pytest.raises(IllDefinedHomError):
        hom_make(make_module(None, [2]), make_module(None, [3]), [(1,)])
    with pytest.raises(ParentMismatchError):
        hom_image(double, make_module(None, [3]).whole())


# -- properties against element-set oracles --------------------------------

FACTOR_CHOICES = [(2,), (6,), (8,), (12,), (2, 2), (2, 4), (2, 6), (3, 9), (4, 4), (2, 2, 2), (2, 2, 4)]


@st.composite
def module_and_subs(draw, count=2):
    factors = draw(st.sampled_from(FACTOR_CHOICES))
    M = make_module(None, factors)
    subs = []
    for _ in range(count):
        gens = draw(st.lists(st.tuples(*(st.integers(0, d - 1) for d in M.factors)), max_size=3))
        subs.append(span(M, gens))
    return M, subs


@settings(max_examples=150)
@given(module_and_subs(), st.integers(0, 30))
def test_operations_match_element_sets(ms, a):
    M, (N, K) = ms
    B = Brute(M.factors, M.modulus)
    En, Ek = elems(N), elems(K)
    assert En == B.generated(N.gens)
    assert elems(submodule_sum(N, K)) == B.plus(En, Ek)
    assert elems(intersect(N, K)) == En & Ek
    assert elems(scalar_image(a, N)) == B.scalar(a, En)
    assert elems(colon(N, a)) == B.colon(En, a)
    assert annihilator(N).generator == B.ann(En)
    assert (N <= K) == (En <= Ek)
    assert (N == K) == (En == Ek)
    assert elems(torsion(M, a or M.modulus)) == B.colon(B.Z, a)


@settings(max_examples=100)
@given(module_and_subs())
def test_quotient_and_as_module(ms):
    M, (N, K) = ms
    Q, proj = quotient(M, K)
    assert Q.order * K.order == M.order
    assert hom_kernel(proj) == K and proj.image.is_whole
    S, inc = as_module(N)
    assert S.order == N.order and inc.is_injective and inc.image == N
    # preimage of the image of a submodule containing K is itself
    J = submodule_sum(N, K)
    assert hom_preimage(proj, hom_image(proj, J)) == J


@settings(max_examples=100)
@given(module_and_subs(), st.data())
def test_hom_image_and_preimage_by_elements(ms, data):
    M, (N, K) = ms
    rows = [data.draw(st.sampled_from(sorted(torsion(M, d).elements()))) for d in M.factors]
    h = hom_make(M, M, rows)
    img = frozenset(h(x) for x in N.elements())
    assert elems(hom_image(h, N)) == img
    pre = frozenset(x for x in M.all_elements() if h(x) in elems(K))
    assert elems(hom_preimage(h, K)) == pre
