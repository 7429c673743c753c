"""
Building N degree by degree and dividing by its centre
======================================================

The preset with p = q = 7, s = 1 and lambda = 3 has relators up to degree 50.
"""

from thinlie import build, central_quotient, diamond_report, make_preset

P = make_preset(7, 7, 1, 3)
print(P.label)
print(len(P.relators), "relators, top degree", P.max_degree)
for r in P.relators[:8]:
    print("  ", r)

# %%
# Build to degree 80.  The first few components already show the shape:
# two-dimensional at degrees 1, 7, 13, ... and one-dimensional in between.
N = build(P, 80)
print("dims of N:", N.dims[1:30])

# %%
# Dividing by the graded centre costs one degree of validity.
L = central_quotient(N)
print("L known to degree", L.computed_to)
print("dims of L:", L.dims[1:30])

# %%
# Every two-dimensional component is a diamond; its type is read off the
# products of a spanning element of the degree below.
rep = diamond_report(L)
for r in rep.diamonds:
    print(f"degree {r.degree:3d}  t={r.t:2d}  {r.kind:8s} type {r.type}")
print(rep.verdicts)
