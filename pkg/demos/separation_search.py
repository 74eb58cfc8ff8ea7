"""Search small modules for submodules in one class but not another.

Run:  python demos/separation_search.py
"""
from secmod import CorpusSpec, search_counterexample

# strongly 2-absorbing secondary does not imply 2-absorbing second: Z8 itself
for w in search_counterexample("strongly-2-abs-secondary", "2-abs-second", CorpusSpec(8)):
    print("strongly 2-abs secondary, not 2-abs second:",
          w["module"]["expr"], w["submodule"], "whole" if w["is_whole_module"] else "")

# 2-absorbing secondary versus the strong version: nothing below order 17 ...
small = search_counterexample("2-abs-secondary", "strongly-2-abs-secondary", CorpusSpec(16))
print("2-abs secondary, not strongly, order <= 16:", len(small), "witnesses")

# ... but an explicit larger module separates them
big = search_counterexample("2-abs-secondary", "strongly-2-abs-secondary",
                            CorpusSpec(60, explicit=[(2, 30)]))
for w in big:
    print("witness in", w["module"]["expr"], w["submodule"])
