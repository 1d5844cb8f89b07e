"""Naive re-derivations used as independent oracles in tests.

Everything here materializes substrings and sums letter forces one pair at
a time, on purpose: these functions must stay independent of the library's
incremental and vectorized paths.
"""


def naive_letter_force(x, y):
    if x == "." or y == ".":
        return 0
    if x == y:
        return -1
    return 1


def naive_force(x, y):
    assert len(x) == len(y)
    total = 0
    for i in range(len(x)):
        total += naive_letter_force(x[i], y[i])
    return total


def naive_reverse(w):
    return "".join(reversed(w))


def naive_offset_forces(x, y):
    n = len(x)
    out = []
    for i in range(1, n):
        out.append((i, naive_force(x[:i], y[n - i:]), naive_force(x[n - i:], y[:i])))
    return out


def naive_alignment_violations(x, y):
    n = len(x)
    out = []
    full = naive_force(x, y)
    if full > 0:
        out.append(("full", 0, full))
    for variant, a in (("Y", y), ("revY", naive_reverse(y))):
        for i in range(1, n):
            pre = naive_force(x[:i], a[n - i:])
            suf = naive_force(x[n - i:], a[:i])
            if pre > 0:
                out.append((variant, i, pre))
            if suf > 0:
                out.append((variant, i, suf))
    return sorted(out)


def naive_is_aligned(x, y):
    return not naive_alignment_violations(x, y)


def naive_force_matrix(words):
    return [
        [naive_force(wi, naive_reverse(wj)) for wj in words] for wi in words
    ]


def random_word(rng, length):
    return "".join(rng.choice(".01") for _ in range(length))
