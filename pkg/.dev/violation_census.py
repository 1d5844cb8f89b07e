# Dev scratch: characterize every alignment violation across families.
import random
from math import comb

from dipolecodes import (
    CheckMode, bipartite_code, canonical_signed, canonical_unsigned,
    check_encoding, general_code, log_signed_code, make_glue,
    signed_canonical_code, unsigned_canonical_code,
)

def census(tag, code, glue):
    rep = check_encoding(code, glue, CheckMode.SIGNS_PLUS_ALIGNMENT)
    v = rep.alignment_violations
    n = code.length
    variants = sorted({x[2] for x in v})
    offsets = sorted({n - x[3] for x in v})  # distance from full overlap
    forces = sorted({x[4] for x in v})
    print(f"{tag}: len={n} signs_ok={not rep.sign_mismatches} "
          f"viols={len(v)} variants={variants} shift=(n-offset)={offsets} forces={forces}")
    return v

for k in (2, 3, 8, 16, 32):
    census(f"thm1 k={k}", signed_canonical_code(k), canonical_signed(k))

for k in (2, 3, 8):
    census(f"cor2 k={k}", unsigned_canonical_code(k), canonical_unsigned(k))
v = census("cor2 k=2 detail", unsigned_canonical_code(2), canonical_unsigned(2))
print("  ", v)

for k in (4, 8):
    census(f"log k={k}", log_signed_code(k), canonical_signed(comb(k, k // 2)))

rng = random.Random(11)
for trial in range(8):
    k = rng.randint(3, 12)
    verts = list(range(1, k + 1))
    rng.shuffle(verts)
    v1, v2 = verts[k // 2:], verts[: k // 2]
    entries = [(a, b, rng.randint(1, 5)) for a in v1 for b in v2 if rng.random() < 0.5]
    g = make_glue(k, entries)
    census(f"bip k={k} t={trial}", bipartite_code(g), g)

for trial in range(8):
    k = rng.randint(1, 6)
    entries = [(i, j, rng.choice([-2, -1, 1, 2]))
               for i in range(1, k + 1) for j in range(i, k + 1) if rng.random() < 0.6]
    g = make_glue(k, entries)
    census(f"gen k={k} t={trial}", general_code(g), g)
