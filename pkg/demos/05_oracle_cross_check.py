"""
An independent check of the engine
==================================

The oracle works in the Lyndon basis of the free Lie algebra and closes the
ideal of the relators by brute force.  It is slow but shares no code with the
engine's elimination.
"""

import time

from thinlie import GF, Presentation, brute_quotient_dims, build, free_dims, make_preset, parse

print("free dims:", [free_dims(d) for d in range(1, 13)])

# %%
for label, P in [("preset", make_preset(7, 7, 1, 3)),
                 ("[y x y]", Presentation(GF(7), 7, [parse("[y x y]", None, GF(7))]))]:
    t0 = time.perf_counter()
    oracle = brute_quotient_dims(P, 11)
    t1 = time.perf_counter()
    engine = build(P, 11).dims[1:]
    t2 = time.perf_counter()
    print(f"{label:8s} oracle {oracle} ({t1 - t0:.2f} s)")
    print(f"{'':8s} engine {engine} ({t2 - t1:.2f} s)")

# %%
# With only the (u, x, y) Jacobi rows the engine overcounts on this
# presentation.  The default imposes the rows for every (u, t, g).
P = Presentation(GF(7), 7, [parse("[y x y]", None, GF(7))])
print("pairwise:", build(P, 9, consistency="pairwise").dims[1:])
print("full:    ", build(P, 9).dims[1:])
