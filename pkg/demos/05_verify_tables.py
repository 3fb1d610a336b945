"""Walkthrough: the verification harness.

Runs two scopes of the claim battery, shows the verdict table, and
demonstrates the result cache making reruns free.  The same battery backs
`negacyclic verify` on the command line (exit code 2 on any mismatch).
Run:  python demos/05_verify_tables.py
"""

import tempfile
import time
from pathlib import Path

from negacyclic import ResultCache, render_scope, verify_claims

cache = ResultCache(str(Path(tempfile.mkdtemp()) / "results.json"))

# Scope "table1": exhaustive best-negacyclic vs best-cyclic searches.
manifest = verify_claims("table1", cache=cache)
print(render_scope(manifest))

# Scope "properties": the structural identity battery.
manifest = verify_claims("properties", cache=cache)
print()
print(render_scope(manifest))

# Reruns hit the cache: the searches are keyed by descriptor + budget.
t0 = time.time()
verify_claims("table1", cache=cache)
print(f"\nrerun with warm cache: {time.time()-t0:.2f}s "
      f"({cache.hits} cache hits)")
