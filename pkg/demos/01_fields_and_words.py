"""
Field elements, binomials and left-normed words
===============================================

Everything downstream works over GF(p^k) with exact integer codes.
"""

import numpy as np

from thinlie import GF, VContext, binom_mod_p, emit, parse, vword

# %%
# GF(49) with its default modulus t^2 + 1
F = GF(7, 2)
print(F, "modulus", F.modulus)
a = F.parse("1+2*t")
b = F.parse("3+t")
print(f"({a}) * ({b}) = {a * b}")
inv = F.one / a
print(f"1/({a}) = {inv}, check: {a * inv}")

# the same product on whole arrays of codes
codes = np.arange(F.order)
print("squares of every element:", F.mul(codes, codes)[:10], "...")

# %%
# Binomials mod p come from the base-p digits.  Row q-1 alternates in sign,
# row q keeps only its ends.
q = 25
print([binom_mod_p(q - 1, i, 5) for i in range(8)])
print([i for i in range(q + 1) if binom_mod_p(q, i, 5)])

# %%
# The elements v_k are left-normed words of degree k(q-1).
ctx = VContext(7, 7)
for k in (1, 2, 3):
    w = vword(k, ctx)
    print(f"v{k}", w, "degree", w.degree)

# at a shift index the step uses y first
print("v2 shifted:", vword(2, VContext(7, 7, {2})))

# %%
# Relators are written in a small bracket language; v-macros expand inline.
e = parse("[v1 y x] + 2[v1 x y]", ctx, GF(7))
print(emit(e), "| degree", e.degree)
print(emit(parse("[x y] + [x y]", None, GF(7))))
