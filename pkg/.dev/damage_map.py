# Dev scratch: which constructions pass/fail SIGNS_PLUS_ALIGNMENT, and where.
import random

from dipolecodes import (
    CheckMode, alignment_audit, bipartite_code, canonical_signed,
    canonical_unsigned, check_encoding, general_code, log_signed_code,
    make_glue, signed_canonical_code, unsigned_canonical_code,
)

print("== thm1 sweep ==")
for k in range(1, 9):
    c = signed_canonical_code(k)
    rep = check_encoding(c, canonical_signed(k), CheckMode.SIGNS_PLUS_ALIGNMENT)
    v = rep.alignment_violations
    pairs = sorted({(i, j) for i, j, *_ in v})
    print(f"k={k}: signs_ok={not rep.sign_mismatches} align_viols={len(v)} pairs={pairs}")
    if v:
        print("   sample:", v[:6])

print("\n== violation structure for k=4 ==")
c = signed_canonical_code(4)
rep = check_encoding(c, canonical_signed(4), CheckMode.SIGNS_PLUS_ALIGNMENT)
for viol in rep.alignment_violations:
    i, j, var, off, f = viol
    a = (i + 1) // 2 if i % 2 else None
    b = j // 2 if j % 2 == 0 else None
    print(f"  words ({i},{j}) variant={var} offset={off} force={f}  (a={a}, b={b})")

print("\n== cor2 sweep ==")
for k in range(1, 6):
    c = unsigned_canonical_code(k)
    rep = check_encoding(c, canonical_unsigned(k), CheckMode.SIGNS_PLUS_ALIGNMENT)
    print(f"k={k}: signs_ok={not rep.sign_mismatches} align_viols={len(rep.alignment_violations)}")

print("\n== log code sweep ==")
for k in (4, 8):
    c = log_signed_code(k)
    from math import comb
    rep = check_encoding(c, canonical_signed(comb(k, k // 2)), CheckMode.SIGNS_PLUS_ALIGNMENT)
    print(f"k={k}: signs_ok={not rep.sign_mismatches} align_viols={len(rep.alignment_violations)}")
    if rep.alignment_violations:
        print("   sample:", rep.alignment_violations[:6])

print("\n== random bipartite glues ==")
rng = random.Random(7)
fails = 0
for trial in range(20):
    k = rng.randint(2, 10)
    verts = list(range(1, k + 1))
    rng.shuffle(verts)
    half = k // 2
    v1, v2 = verts[half:], verts[:half]
    entries = []
    for a in v1:
        for b in v2:
            if rng.random() < 0.5:
                entries.append((a, b, rng.randint(1, 5)))
    g = make_glue(k, entries)
    try:
        c = bipartite_code(g)
    except Exception as e:
        print("  construction error:", e)
        continue
    rep = check_encoding(c, g, CheckMode.SIGNS_PLUS_ALIGNMENT)
    if not rep.passed:
        fails += 1
print(f"bipartite random: {fails}/20 fail alignment")

print("\n== random general glues ==")
fails = 0
for trial in range(20):
    k = rng.randint(1, 6)
    entries = []
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            if rng.random() < 0.6:
                entries.append((i, j, rng.choice([-2, -1, 1, 2, 3])))
    g = make_glue(k, entries)
    c = general_code(g)
    rep = check_encoding(c, g, CheckMode.SIGNS_PLUS_ALIGNMENT)
    if not rep.passed:
        fails += 1
print(f"general random: {fails}/20 fail alignment")
