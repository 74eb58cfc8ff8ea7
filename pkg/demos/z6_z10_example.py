"""Z6 and Z10 are strongly 2-absorbing secondary, their direct sum is not.

Run:  python demos/z6_z10_example.py
"""
from secmod import (
    is_2_absorbing_second,
    is_strongly_2_absorbing_secondary,
    make_module,
    second_radical,
)
from secmod.classify import strongly_2_absorbing_secondary_witness

Z6 = make_module(None, [6])
Z10 = make_module(None, [10])
M = make_module(None, [6, 10])   # stored by invariant factors: Z2 + Z30

for X in (Z6, Z10, M):
    W = X.whole()
    print(f"{str(X):>10}  strongly 2-abs secondary: {is_strongly_2_absorbing_secondary(W)}")

# sec(M) is the sum of the second submodules of M; here it is all of M
print("sec(M) == M:", second_radical(M.whole()) == M.whole())

# the reason M fails: a scalar pair (a, b) with a*b*M inside a submodule
# that neither a*sec(M) nor b*sec(M) fits into
a, b, K = strongly_2_absorbing_secondary_witness(M.whole())
print(f"witness: a={a}, b={b}, K generated by {K.gens} (order {K.order})")

# the weaker notion, quantified only over completely irreducible submodules, still holds
print("2-abs second:", is_2_absorbing_second(M.whole()))
