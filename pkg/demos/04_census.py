"""Rediscover the small members of the classification by exhaustive search.

Cubic girth >= 5 graphs: 1, 2 and 9 classes on 10, 12 and 14 vertices. Only
the Petersen graph and the Triplex graph are Ricci-flat. Allowing degree 2
adds exactly the long cycles. Pass ``--big`` to also run the 16-vertex
cubic census (49 classes, about a minute).
"""
import sys
import time

from ricci_flat.search import census, classify_ricci_flat

for n in (10, 12, 14) + ((16,) if "--big" in sys.argv else ()):
    start = time.perf_counter()
    r = census(n, 3, 3)
    print(f"cubic n={n}: {r.enumerated_count} classes, {r.prefiltered} rejected by the pentagon test, "
          f"Ricci-flat: {r.families or '-'}  ({time.perf_counter() - start:.1f} s)")

for r in classify_ricci_flat(11, 2, 3):
    if r.enumerated_count:
        print(f"degrees 2..3, n={r.n}: {r.enumerated_count} classes, Ricci-flat: {r.families}")
