"""Size bounds for enumeration.

Both bounds can be overridden by environment variables at import time or by
assigning to the attributes of this module at run time.
"""
import os

#: largest module whose elements may be materialized as explicit sets
max_elements: int = int(os.environ.get("SECMOD_MAX_ELEMENTS", 20000))

#: largest submodule lattice ``enumerate_submodules`` will build
max_lattice: int = int(os.environ.get("SECMOD_MAX_LATTICE", 100000))
