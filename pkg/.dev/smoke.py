# Dev scratch: package smoke test against the oracle values.
import time

from dipolecodes import (
    CheckMode, Code, alignment_audit, balanced_bit_words, bipartite_code,
    bipartition, canonical_signed, canonical_unsigned, check_encoding,
    force_matrix, general_code, log_signed_code, log_signed_code_for_pairs,
    make_glue, offset_forces, signed_canonical_code, signed_double,
    unsigned_canonical_code,
)

print("offset_forces('10','10') =", offset_forces("10", "10"))

c1 = signed_canonical_code(1)
print("thm1 k=1 words:", c1.words)
print("matrix:", force_matrix(c1))

r = check_encoding(c1, canonical_signed(1), CheckMode.SIGNS_PLUS_ALIGNMENT)
print("thm1 k=1 SPA:", r.passed)

for k in (1, 2, 3, 5, 8):
    c = signed_canonical_code(k)
    assert c.length == 6 * k + 14 and c.k == 2 * k
    rep = check_encoding(c, canonical_signed(k), CheckMode.SIGNS_PLUS_ALIGNMENT)
    assert rep.passed, f"thm1 k={k} failed: {rep.sign_mismatches[:3], rep.alignment_violations[:3]}"
    # matched pair forces exactly 1
    m = rep.force_matrix
    assert all(m[2*a-2][2*a-1] == 1 for a in range(1, k+1))
print("thm1 sweep ok")

# thm2 == thm1 on canonical signed
for k in (1, 2, 4):
    assert bipartite_code(canonical_signed(k)).words == signed_canonical_code(k).words
print("thm2 reproduces thm1 on canonical signed glues")

for k in (1, 2, 3):
    c = unsigned_canonical_code(k)
    assert c.length == 18 * k + 42 and c.k == k
    rep = check_encoding(c, canonical_unsigned(k), CheckMode.SIGNS_PLUS_ALIGNMENT)
    assert rep.passed, f"cor2 k={k}: {rep.sign_mismatches[:4]} {rep.alignment_violations[:4]}"
print("cor2 sweep ok; k=2 matrix:", force_matrix(unsigned_canonical_code(2)))

g = make_glue(2, [(1, 2, 1)])
assert bipartite_code(g).words == signed_canonical_code(1).words
print("thm2 on single edge == thm1 k=1")

print("bipartition(canonical_signed(2)) =", bipartition(canonical_signed(2)))

# weight-7 edge: same words, SIGNS passes, EXACT fails
g7 = make_glue(2, [(1, 2, 7)])
assert bipartite_code(g7).words == bipartite_code(g).words
assert check_encoding(bipartite_code(g7), g7, CheckMode.SIGNS_PLUS_ALIGNMENT).passed
assert not check_encoding(bipartite_code(g7), g7, CheckMode.EXACT_PLUS_ALIGNMENT).passed
print("weight-7 edge ok")

# general code
gu1 = canonical_unsigned(1)
cg = general_code(gu1)
print("general(unsigned1): k =", cg.k, "len =", cg.length,
      "selfforce =", force_matrix(cg)[0][0])
assert check_encoding(cg, gu1, CheckMode.SIGNS_PLUS_ALIGNMENT).passed

tri = make_glue(3, [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
ct = general_code(tri)
rep = check_encoding(ct, tri, CheckMode.SIGNS_PLUS_ALIGNMENT)
print("general(triangle):", rep.passed, "len", ct.length)
assert rep.passed

zero2 = make_glue(2, [])
cz = general_code(zero2)
assert check_encoding(cz, zero2, CheckMode.SIGNS_PLUS_ALIGNMENT).passed
print("general(zero) ok, matrix:", force_matrix(cz))

# self-bonding
gs = make_glue(2, [(1, 1, 2), (1, 2, -1)])
cs = general_code(gs)
rep = check_encoding(cs, gs, CheckMode.SIGNS_PLUS_ALIGNMENT)
print("general(self-bond):", rep.passed, "matrix:", rep.force_matrix)
assert rep.passed

# log code
t0 = time.perf_counter()
c4 = log_signed_code(4)
assert c4.k == 12 and c4.length == 84
rep = check_encoding(c4, canonical_signed(6), CheckMode.SIGNS_PLUS_ALIGNMENT)
print("log k=4:", rep.passed, f"{time.perf_counter()-t0:.3f}s")
assert rep.passed
m = rep.force_matrix
assert all(m[2*a-2][2*a-1] == 1 for a in range(1, 7))

t0 = time.perf_counter()
c8 = log_signed_code(8)
assert c8.k == 140 and c8.length == 164
rep = check_encoding(c8, canonical_signed(70), CheckMode.SIGNS_PLUS_ALIGNMENT)
dt = time.perf_counter() - t0
print(f"log k=8: {rep.passed} in {dt:.2f}s")
assert rep.passed

c7 = log_signed_code_for_pairs(7)
assert c7.k == 14 and c7.length == 164
assert check_encoding(c7, canonical_signed(7), CheckMode.SIGNS_PLUS_ALIGNMENT).passed
print("log prefix n=7 ok")

print("balanced k=4:", balanced_bit_words(4))

# section-6 prototype
proto = Code(("11101.11.", "1..1.1...", "1110111..", "11...1..."))
t0 = time.perf_counter()
rep = check_encoding(proto, canonical_signed(2), CheckMode.SIGNS_ONLY)
dt = (time.perf_counter() - t0) * 1000
print(f"proto SIGNS_ONLY: {rep.passed} in {dt:.3f}ms")
print("proto matrix:", rep.force_matrix)
print("proto audit:", alignment_audit(proto))
