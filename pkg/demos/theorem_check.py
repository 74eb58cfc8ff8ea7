"""Check every theorem on a few modules and show how much of it is vacuous.

Run:  python demos/theorem_check.py
"""
import numpy as np

from secmod import THEOREM_IDS, check_theorem, make_module

modules = [make_module(None, f) for f in ([12], [2, 4], [6, 10], [2, 2, 2])]

counts = np.zeros((len(THEOREM_IDS), 3), dtype=int)   # checked, vacuous, violations
for M in modules:
    for k, tid in enumerate(THEOREM_IDS):
        r = check_theorem(tid, M, samples=20)
        counts[k] += (r.instances_checked, r.vacuous_instances, len(r.violations))

print(f"{'theorem':>8} {'checked':>8} {'vacuous':>8} {'share':>6} {'bad':>4}")
for tid, (c, v, bad) in zip(THEOREM_IDS, counts):
    share = v / c if c else float("nan")
    print(f"{tid:>8} {c:8d} {v:8d} {share:6.2f} {bad:4d}")
print("total violations:", counts[:, 2].sum())
