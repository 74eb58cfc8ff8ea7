"""The submodule lattice of Z12, printed and written out as a DOT Hasse diagram.

Run:  python demos/lattice_of_z12.py > z12.dot && dot -Tpng z12.dot -o z12.png
"""
import sys

from secmod import classify_all, completely_irreducibles, enumerate_submodules, make_module
from secmod.cli import lattice_dot

M = make_module(None, [12])
L = enumerate_submodules(M)

print(f"{len(L)} submodules of {M}", file=sys.stderr)
for i, N in enumerate(L):
    print(f"  id {i}: gens {N.gens}, order {N.order}", file=sys.stderr)
print("cover edges:", list(L.cover_edges()), file=sys.stderr)

ci = completely_irreducibles(L)
print("completely irreducible:", [N.gens for N in ci], file=sys.stderr)

rows = classify_all(M).rows
print("strongly 2-abs secondary:",
      [r["gens"] for r in rows if r["strongly_two_abs_secondary"]], file=sys.stderr)
print("strongly 2-abs second:",
      [r["gens"] for r in rows if r["strongly_two_abs_second"]], file=sys.stderr)

# DOT goes to stdout; every node carries its classification flags as attributes
print(lattice_dot(M), end="")
