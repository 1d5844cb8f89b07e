# Dev scratch: cross-check the length-9 witness and time the tree search.
import sys
import time

from dipolecodes import (
    CheckMode, Code, canonical_signed, check_encoding,
    SearchConstraints, search_min_code,
)

w = Code(("...0.0..0", ".00.01000"))
rep = check_encoding(w, canonical_signed(1), CheckMode.SIGNS_PLUS_ALIGNMENT)
print("witness passes:", rep.passed, "matrix:", rep.force_matrix)

for max_len in (5, 6, 7):
    t0 = time.time()
    out = search_min_code(
        canonical_signed(1),
        SearchConstraints(mode=CheckMode.SIGNS_PLUS_ALIGNMENT, max_length=max_len),
    )
    print(f"max={max_len}: {out.status.value} nodes={out.nodes_explored} "
          f"({time.time()-t0:.1f}s)")

t0 = time.time()
out = search_min_code(
    canonical_signed(1),
    SearchConstraints(mode=CheckMode.SIGNS_PLUS_ALIGNMENT, max_length=9),
    progress=sys.stderr,
)
print(f"max=9: {out.status.value} min={out.proven_minimum} "
      f"witness={out.witness.words if out.witness else None} "
      f"nodes={out.nodes_explored} ({time.time()-t0:.1f}s)")
