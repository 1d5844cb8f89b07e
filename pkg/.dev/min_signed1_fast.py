# Dev scratch: vectorized minimum-length scan for one complementary pair,
# SIGNS_PLUS_ALIGNMENT semantics.
import time

import numpy as np
from itertools import product

CHARGE = {".": 0, "0": -1, "1": 1}

def all_words(l):
    return ["".join(p) for p in product(".01", repeat=l)]

def charges(words):
    return np.array([[CHARGE[c] for c in w] for w in words], dtype=np.int32)

def self_ok(m):
    n = m.shape[1]
    keep = np.ones(m.shape[0], dtype=bool)
    for r in range(m.shape[0]):
        x = m[r]
        c1 = np.convolve(x, x[::-1])
        if (c1 < 0).any():
            keep[r] = False
            continue
        c2 = np.convolve(x, x)
        centre = c2[n - 1]
        c2[n - 1] = 0
        if (c2 < 0).any() or -centre > 0:
            keep[r] = False
    return keep

for l in range(9, 12):
    t0 = time.time()
    words = all_words(l)
    m = charges(words)
    n = l
    cand = np.nonzero(self_ok(m))[0]
    S = m[cand]
    k = len(cand)
    bond = S @ S[:, ::-1].T          # force(x, rev y) = -bond
    ok = bond < 0                    # attraction required
    full = S @ S.T                   # reflected full overlap
    ok &= full >= 0
    for i in range(1, n):
        if not ok.any():
            break
        pre = S[:, :i]
        suf = S[:, n - i:]
        ok &= (pre @ pre[:, ::-1].T) >= 0      # revY prefix side
        ok &= (suf @ suf[:, ::-1].T) >= 0      # revY suffix side
        r = pre @ suf.T                        # Y prefix side
        ok &= r >= 0
        ok &= r.T >= 0                         # Y suffix side
    hits = np.argwhere(ok)
    if len(hits):
        a, b = hits[0]
        print(f"l={l}: MIN FOUND, {len(hits)} ordered witnesses, "
              f"first = ({words[cand[a]]!r}, {words[cand[b]]!r}) "
              f"({time.time()-t0:.1f}s, {k} self-aligned)")
        break
    print(f"l={l}: none ({time.time()-t0:.1f}s, {k} self-aligned)")
