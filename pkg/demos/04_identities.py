"""
Checking product formulas inside the algebra
============================================

The suites evaluate both sides of each formula at every site whose
hypotheses hold and list the other sites as vacuous.
"""

from thinlie import (GF, LnWord, bracket, build, central_quotient, diamond_report, evaluate,
                     gen_jacobi_expand, make_preset, v_elements, verify_all)

P = make_preset(7, 7, 1, 3)
N = build(P, 120)
L = central_quotient(N)
rep = diamond_report(L, params=P.params)

# %%
# v_7 times v_2 lands on a multiple of v_9.  The type at t = 8 is 3, so the
# multiple is -2 * 3^-1 = 4 in GF(7).
v = v_elements(L, rep, 9)
print("[v7 v2] =", bracket(L, v[7], v[2]))
print("4 v9    =", 4 * v[9])

# %%
results = verify_all(L, rep, N)
for name, res in results.items():
    s = res.summary()
    print(f"{name:12s} passed {s['passed']:4d}  failed {s['failed']}  vacuous {s['vacuous']}")

# %%
# The generalized Jacobi expansion rewrites [a [b c^n]] as left-normed words.
F = GF(7)
a, b = LnWord.from_string("yxxxxx"), LnWord.from_string("y")
e = gen_jacobi_expand(F, a, b, 0, 6)
print(e)
lhs = evaluate(L, e)
rhs = bracket(L, evaluate(L, a), evaluate(L, LnWord.from_string("y" + "x" * 6)))
print("equal:", lhs == rhs)
