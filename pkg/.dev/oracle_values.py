# Dev scratch: compute DERIVED values with a naive, independent oracle
# before freezing them into tests. Not part of the package.

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

def naive_rev(w):
    return "".join(reversed(w))

def naive_offset_forces(x, y):
    n = len(x)
    return [(i, naive_force(x[:i], y[n - i:]), naive_force(x[n - i:], y[:i]))
            for i in range(1, n)]

def naive_violations(x, y):
    n = len(x)
    out = []
    f = naive_force(x, y)
    if f > 0:
        out.append(("full", 0, f))
    for variant, a in (("Y", y), ("revY", naive_rev(y))):
        for i in range(1, n):
            pre = naive_force(x[:i], a[n - i:])
            suf = naive_force(x[n - i:], a[:i])
            if pre > 0:
                out.append((variant, i, pre))
            if suf > 0:
                out.append((variant, i, suf))
    return sorted(out)

def naive_matrix(words):
    return [[naive_force(wi, naive_rev(wj)) for wj in words] for wi in words]


# Theorem-1-style words, built independently by the displayed formulas
def thm1_words(k):
    words = []
    for a in range(1, k + 1):
        w_odd = ("." * (2*k+5) + "11" + ".1" * (a-1) + "1." + ".1" * (k-a)
                 + "1" + "." * (2*k+6))
        w_even = ("1" * (2*k+6) + "0" + ".." * (k-a) + "1." + ".." * (a-1)
                  + ".." + "1" * (2*k+5))
        words += [w_odd, w_even]
    return words


print("== offset_forces examples ==")
print('("1.", ".0") ->', naive_offset_forces("1.", ".0"))
print('("..", "..") ->', naive_offset_forces("..", ".."))
print('("10", "10") ->', naive_offset_forces("10", "10"))

print("\n== thm1 k=1 ==")
w = thm1_words(1)
print("W1 =", repr(w[0]), len(w[0]))
print("W2 =", repr(w[1]), len(w[1]))
print("rev W2 =", repr(naive_rev(w[1])))
print("force matrix:", naive_matrix(w))
print("violations(W1, W2):", naive_violations(w[0], w[1]))
print("violations(W1, W1):", naive_violations(w[0], w[0]))
print("violations(W2, W2):", naive_violations(w[1], w[1]))

print("\n== thm1 k=2 ==")
w2 = thm1_words(2)
print("matrix:", naive_matrix(w2))
print("f(W1, rev W4):", naive_force(w2[0], naive_rev(w2[3])))

print("\n== section-6 prototype code ==")
proto = ("11101.11.", "1..1.1...", "1110111..", "11...1...")
m = naive_matrix(proto)
for row in m:
    print(row)
print("alignment violations per pair:")
for i in range(4):
    for j in range(i, 4):
        v = naive_violations(proto[i], proto[j])
        if v:
            print(f"  ({i+1},{j+1}):", v)

print("\n== log-code middle forces k=4 ==")
def bit_slot(b): return "1." if b == 0 else ".1"
def probe_slot(b): return "1." if b == 0 else "0."
def mid_alpha(c): return "".join(bit_slot(int(b)) for b in c)
def mid_beta_rev(c): return "".join(probe_slot(int(b)) for b in reversed(c))
ca, cb = "0011", "0101"
print("matched:", naive_force(mid_alpha(ca), naive_rev(mid_beta_rev(ca))))
print("0011 vs 0101:", naive_force(mid_alpha(ca), naive_rev(mid_beta_rev(cb))))

print("\n== concat force law example ==")
X, Y, Xp, Yp, s = "1.", "..", "..", ".0", 3
u = X + "." * s + Y
v = Xp + "." * s + Yp
print("f(concat, rev concat') =", naive_force(u, naive_rev(v)))
print("f(X, rev Y') + f(Y, rev X') =",
      naive_force(X, naive_rev(Yp)) + naive_force(Y, naive_rev(Xp)))

print("\n== padding counterexample ==")
c0 = ("0", "1")
print("f(W1, rev W2) unpadded:", naive_force(c0[0], naive_rev(c0[1])))
pad_r = tuple(w + "." for w in c0)
print("trailing pad f(W1, rev W2):", naive_force(pad_r[0], naive_rev(pad_r[1])))
pad_b = tuple("." + w + "." for w in c0)
print("both-ends pad f(W1, rev W2):", naive_force(pad_b[0], naive_rev(pad_b[1])))
