"""
How lambda controls the diamond types
=====================================

Past the second diamond every type is infinite except at the indices
t = r*p^s + 1, where the type is r(lambda + 1) - 1.  Types 0 and 1 show up
as fake diamonds.
"""

import warnings

from thinlie import (build, central_quotient, diamond_report, expected_record, make_preset,
                     match_expected_pattern, type_text)

D = 100

# %%
rows = []
for lam in range(7):
    P = make_preset(7, 7, 1, lam)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        L = central_quotient(build(P, D))
    rep = diamond_report(L, params=P.params)
    ok, diffs = match_expected_pattern(rep, 7, 7, 1, P.params["lambda"])
    finite = [(r.t, r.kind, type_text(r.type)) for r in rep.diamonds
              if r.type is not None and r.type != "inf"]
    rows.append((lam, ok, finite))

for lam, ok, finite in rows:
    print(f"lambda={lam}  pattern {'ok' if ok else 'MISMATCH'}  finite types {finite}")

# %%
# The prediction itself is a one-liner per index.
F = make_preset(7, 7, 1, 2).field
print([type_text(expected_record(t, 7, 1, F(2))[1]) for t in range(1, 23)])
