"""Executable checks of the product formulas that hold near the diamonds of a
Nottingham algebra.

Each suite enumerates sites (an index ``k`` of the element ``v_k``, or a
diamond degree ``m``), decides from the diamond report whether the site
satisfies the hypotheses of its formulas, and if so evaluates both sides in
the computed algebra.  Sites whose hypotheses fail are itemized as vacuous.
Types are always read from the report; ``inf^-1`` is taken to be 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

import numpy as np

from .bracketlang import BracketExpr, LnWord, X, Y
from .combinatorics import binom_mod_p
from .ffield import GF
from .nqengine import DegreeError, GradedAlgebra, HomElement, bracket, lnprod
from .thinanalysis import INF, ThinReport, earliest_finite_after_q

__all__ = [
    "IdentityCheck",
    "SuiteResult",
    "SiteError",
    "SUITES",
    "expand_bracket",
    "gen_jacobi_expand",
    "v_elements",
    "verify_suite",
    "verify_all",
]


class SiteError(ValueError):
    pass


class _Undefined(Exception):
    pass


@dataclass
class IdentityCheck:
    label: str
    site: dict
    degrees: tuple = ()
    hypothesis: bool = True
    passed: bool | None = None
    left: str | None = None
    right: str | None = None
    note: str = ""

    @property
    def vacuous(self) -> bool:
        return not self.hypothesis

    def to_json(self) -> dict:
        return {
            "label": self.label, "site": self.site, "degrees": list(self.degrees),
            "hypothesis": self.hypothesis, "passed": self.passed,
            "left": self.left, "right": self.right, "note": self.note,
        }


@dataclass
class SuiteResult:
    suite: str
    entries: list = dc_field(default_factory=list)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if e.hypothesis and not e.passed]

    @property
    def vacuous(self) -> list:
        return [e for e in self.entries if not e.hypothesis]

    @property
    def checked(self) -> list:
        return [e for e in self.entries if e.hypothesis]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {"passed": len(self.checked) - len(self.failures),
                "failed": len(self.failures), "vacuous": len(self.vacuous)}

    def to_json(self) -> dict:
        return {"suite": self.suite, **self.summary(), "entries": [e.to_json() for e in self.entries]}


# --- bracket expansion ----------------------------------------------------------

def _ad_polynomial(letters) -> dict:
    """ad([b1 ... bn]) as a signed sum of letter sequences acting on the right."""
    poly = {(letters[0],): 1}
    for g in letters[1:]:
        nxt: dict = {}
        for w, c in poly.items():
            nxt[w + (g,)] = nxt.get(w + (g,), 0) + c
            nxt[(g,) + w] = nxt.get((g,) + w, 0) - c
        poly = {w: c for w, c in nxt.items() if c}
    return poly


def expand_bracket(F: GF, a, b: LnWord) -> BracketExpr:
    """[a, b] for a word or expression ``a`` and a word ``b``, as left-normed words."""
    if isinstance(a, LnWord):
        a = BracketExpr.word(F, a)
    poly = _ad_polynomial(b.letters)
    terms = []
    for coef, w in a.terms:
        for tail, c in poly.items():
            terms.append((coef * F(c), LnWord(w.letters + tail)))
    return BracketExpr(F, tuple(terms))


def gen_jacobi_expand(F: GF, a: LnWord, b: LnWord, c: int, n: int) -> BracketExpr:
    """sum_i (-1)^i C(n, i) [a c^i b c^(n-i)], the expansion of [a [b c^n]]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = BracketExpr(F)
    for i in range(n + 1):
        coef = binom_mod_p(n, i, F.p)
        if not coef:
            continue
        head = LnWord(a.letters + (c,) * i)
        inner = expand_bracket(F, head, b)
        tail = (c,) * (n - i)
        term = BracketExpr(F, tuple((k, LnWord(w.letters + tail)) for k, w in inner.terms))
        total = total + term.scale(coef if i % 2 == 0 else -coef)
    return total


# --- context --------------------------------------------------------------------

class _Ctx:
    def __init__(self, L: GradedAlgebra, report: ThinReport, N: GradedAlgebra | None):
        self.L, self.report, self.N = L, report, N
        self.F = L.field
        self.q = report.q
        self.top = L.computed_to
        self._v = {}

    def mu(self, t: int):
        if t < 1:
            return None
        return self.report.type_at(t)

    def is_zero_type(self, mu) -> bool:
        return mu is not None and mu != INF and not mu

    def inv(self, mu):
        return self.F.zero if mu == INF else self.F.one / mu

    def v(self, k: int) -> HomElement:
        if k in self._v:
            return self._v[k]
        q = self.q
        if k == 1:
            val = lnprod(self.L, Y, *(X,) * (q - 2))
        else:
            prev, mu = self.v(k - 1), self.mu(k - 1)
            if mu is None:
                raise _Undefined(f"no diamond in degree {(k - 1) * (q - 1) + 1}, so v_{k} is undefined")
            if self.is_zero_type(mu):
                val = lnprod(self.L, prev, Y, *(X,) * (q - 2))
            else:
                val = lnprod(self.L, prev, X, Y, *(X,) * (q - 3))
        self._v[k] = val
        return val

    def w(self, *factors) -> HomElement:
        return lnprod(self.L, *factors)

    def br(self, u, v) -> HomElement:
        return bracket(self.L, u, v)


@dataclass
class _Group:
    name: str
    reach: int
    hypothesis: bool
    reason: str
    identities: Callable


def _fmt(v: HomElement) -> str:
    return "(" + ", ".join(v.field.format_code(c) for c in v.coords) + ")"


def _xs(n):
    return (X,) * n


def _need(cond: bool, reason: str, current: str) -> str:
    return current or ("" if cond else reason)


def _types_hypothesis(c: _Ctx, k: int, first: str, second: str | None = None, third: bool = False):
    """Reason string (empty when satisfied) for the type pattern at t = k, k+1, k+2."""
    checks = {
        "nonzero": lambda mu: mu is not None and not c.is_zero_type(mu),
        "zero": lambda mu: c.is_zero_type(mu),
        "inf": lambda mu: mu == INF,
        "finite_nonzero": lambda mu: mu is not None and mu != INF and not c.is_zero_type(mu),
        "any": lambda mu: mu is not None,
    }
    names = {"nonzero": "of type in F* or inf", "zero": "of type 0", "inf": "of infinite type",
             "finite_nonzero": "of finite nonzero type", "any": "present"}
    why = ""
    for t, want in ((k, first), (k + 1, second), (k + 2, "any" if third else None)):
        if want is None:
            continue
        if not checks[want](c.mu(t)):
            why = why or f"diamond t={t} is not {names[want]} (found {c.mu(t)})"
    return why


# --- suites ---------------------------------------------------------------------

def _lemma_v1_groups(c: _Ctx, k: int, with_v1x: bool):
    q, F = c.q, c.F
    why = "site k=1 is the second diamond itself; the formulas concern later diamonds" if k < 2 else ""
    why = why or _types_hypothesis(c, k, "nonzero", "any")

    def lemma():
        mu = c.inv(c.mu(k))
        vk, v1, vn = c.v(k), c.v(1), c.v(k + 1)
        one = F.one
        return [
            ("[v_k v_1] = (mu^-1 + 1) v_(k+1)", c.br(vk, v1), (mu + one) * vn),
            ("[v_k x v_1] = [v_(k+1) x]", c.br(c.w(vk, X), v1), c.w(vn, X)),
            ("[v_k y v_1] = (1 - mu^-1) [v_(k+1) y]", c.br(c.w(vk, Y), v1), (one - mu) * c.w(vn, Y)),
            ("[v_k x y v_1] = -(2[v_(k+1) y x] + [v_(k+1) x y])", c.br(c.w(vk, X, Y), v1),
             -(2 * c.w(vn, Y, X) + c.w(vn, X, Y))),
            ("[v_k x y x v_1] = -(3[v_(k+1) y x^2] + 2[v_(k+1) x y x])", c.br(c.w(vk, X, Y, X), v1),
             -(3 * c.w(vn, Y, X, X) + 2 * c.w(vn, X, Y, X))),
        ]

    def cor():
        mu = c.inv(c.mu(k))
        vk, vn = c.v(k), c.v(k + 1)
        v1x = c.w(c.v(1), X)
        one = F.one
        return [
            ("[v_k [v_1 x]] = mu^-1 [v_(k+1) x]", c.br(vk, v1x), mu * c.w(vn, X)),
            ("[v_k x [v_1 x]] = 0", c.br(c.w(vk, X), v1x), c.L.zero(vk.degree + q + 1)),
            ("[v_k y [v_1 x]] = (mu^-1 - 1)([v_(k+1) y x] + [v_(k+1) x y])", c.br(c.w(vk, Y), v1x),
             (mu - one) * (c.w(vn, Y, X) + c.w(vn, X, Y))),
            ("[v_k x y [v_1 x]] = [v_(k+1) y x^2] + [v_(k+1) x y x]", c.br(c.w(vk, X, Y), v1x),
             c.w(vn, Y, X, X) + c.w(vn, X, Y, X)),
        ]

    reach = (k + 1) * (q - 1) + 3
    if with_v1x:
        return [_Group("cor_v1x", reach, not why, why, cor)]
    return [_Group("lemma_v1", reach, not why, why, lemma)]


def _suite_lemma_v1(c, k):
    return _lemma_v1_groups(c, k, False)


def _suite_cor_v1x(c, k):
    return _lemma_v1_groups(c, k, True)


def _suite_lemma_v2(c: _Ctx, k: int):
    q = c.q
    why = _types_hypothesis(c, k, "nonzero", "inf", third=True)

    def ids():
        mu = c.inv(c.mu(k))
        vk, v1, v2, vn, vnn = c.v(k), c.v(1), c.v(2), c.v(k + 1), c.v(k + 2)
        v1x = c.w(v1, X)
        d = vk.degree + 2 * (q - 1)
        tail = _xs(q - 4)
        return [
            ("[v_k v_2] = mu^-1 v_(k+2)", c.br(vk, v2), mu * vnn),
            ("[v_k x v_2] = 0", c.br(c.w(vk, X), v2), c.L.zero(d + 1)),
            ("[v_k y v_2] = 0", c.br(c.w(vk, Y), v2), c.L.zero(d + 1)),
            ("[v_k x y v_2] = [v_(k+2) y x] + [v_(k+2) x y]", c.br(c.w(vk, X, Y), v2),
             c.w(vnn, Y, X) + c.w(vnn, X, Y)),
            ("[v_k x y x v_2] = 2([v_(k+2) y x^2] + [v_(k+2) x y x])", c.br(c.w(vk, X, Y, X), v2),
             2 * (c.w(vnn, Y, X, X) + c.w(vnn, X, Y, X))),
            ("[v_k x y x^(q-4) v_1] = [v_(k+1) x y x^(q-4)]", c.br(c.w(vk, X, Y, *tail), v1),
             c.w(vn, X, Y, *tail)),
            ("[v_k x y x^(q-4) [v_1 x]] = 0", c.br(c.w(vk, X, Y, *tail), v1x),
             c.L.zero(vk.degree + q - 2 + q)),
            ("[v_k x y x^(q-4) v_2] = -3([v_(k+2) y x^(q-3)] + [v_(k+2) x y x^(q-4)])",
             c.br(c.w(vk, X, Y, *tail), v2),
             -(3 * (c.w(vnn, Y, *_xs(q - 3)) + c.w(vnn, X, Y, *tail)))),
        ]

    return [_Group("lemma_v2", (k + 3) * (q - 1) - 1, not why, why, ids)]


def _suite_lemma_v2ext(c: _Ctx, k: int):
    q, F = c.q, c.F
    why = _types_hypothesis(c, k, "inf", "finite_nonzero", third=True)

    def ids():
        mu = c.inv(c.mu(k + 1))
        vk, v2, vnn = c.v(k), c.v(2), c.v(k + 2)
        two, three = F(2), F(3)
        return [
            ("[v_k v_2] = -2 mu^-1 v_(k+2)", c.br(vk, v2), -(two * mu) * vnn),
            ("[v_k x v_2] = -mu^-1 [v_(k+2) x]", c.br(c.w(vk, X), v2), -mu * c.w(vnn, X)),
            ("[v_k y v_2] = -mu^-1 [v_(k+2) y]", c.br(c.w(vk, Y), v2), -mu * c.w(vnn, Y)),
            ("[v_k x y v_2] = [v_(k+2) x y] + (2 mu^-1 + 1)[v_(k+2) y x]", c.br(c.w(vk, X, Y), v2),
             c.w(vnn, X, Y) + (two * mu + F.one) * c.w(vnn, Y, X)),
            ("[v_k x y x v_2] = 2[v_(k+2) x y x] + (3 mu^-1 + 2)[v_(k+2) y x^2]",
             c.br(c.w(vk, X, Y, X), v2),
             2 * c.w(vnn, X, Y, X) + (three * mu + two) * c.w(vnn, Y, X, X)),
        ]

    return [_Group("lemma_v2ext", (k + 2) * (q - 1) + 3, not why, why, ids)]


def _suite_remarks_mu0(c: _Ctx, k: int):
    q = c.q

    def v1_ids():
        vk, v1, vn = c.v(k), c.v(1), c.v(k + 1)
        v1x = c.w(v1, X)
        return [
            ("[v_k v_1] = v_(k+1)", c.br(vk, v1), vn),
            ("[v_k y v_1] = -[v_(k+1) y]", c.br(c.w(vk, Y), v1), -c.w(vn, Y)),
            ("[v_k y x v_1] = -(2[v_(k+1) y x] + [v_(k+1) x y])", c.br(c.w(vk, Y, X), v1),
             -(2 * c.w(vn, Y, X) + c.w(vn, X, Y))),
            ("[v_k y x^2 v_1] = -(3[v_(k+1) y x^2] + 2[v_(k+1) x y x])", c.br(c.w(vk, Y, X, X), v1),
             -(3 * c.w(vn, Y, X, X) + 2 * c.w(vn, X, Y, X))),
            ("[v_k [v_1 x]] = [v_(k+1) x]", c.br(vk, v1x), c.w(vn, X)),
            ("[v_k y [v_1 x]] = [v_(k+1) y x] + [v_(k+1) x y]", c.br(c.w(vk, Y), v1x),
             c.w(vn, Y, X) + c.w(vn, X, Y)),
            ("[v_k y x [v_1 x]] = [v_(k+1) y x^2] + [v_(k+1) x y x]", c.br(c.w(vk, Y, X), v1x),
             c.w(vn, Y, X, X) + c.w(vn, X, Y, X)),
        ]

    def v2_ids():
        vk, v2, vnn = c.v(k), c.v(2), c.v(k + 2)
        return [
            ("[v_k v_2] = v_(k+2)", c.br(vk, v2), vnn),
            ("[v_k y v_2] = 0", c.br(c.w(vk, Y), v2), c.L.zero(vk.degree + 2 * (q - 1) + 1)),
            ("[v_k y x v_2] = [v_(k+2) y x] + [v_(k+2) x y]", c.br(c.w(vk, Y, X), v2),
             c.w(vnn, Y, X) + c.w(vnn, X, Y)),
            ("[v_k y x^2 v_2] = 2([v_(k+2) y x^2] + [v_(k+2) x y x])", c.br(c.w(vk, Y, X, X), v2),
             2 * (c.w(vnn, Y, X, X) + c.w(vnn, X, Y, X))),
        ]

    def v2ext_ids():
        vk, v2, vnn = c.v(k), c.v(2), c.v(k + 2)
        return [
            ("[v_k v_2] = -2 v_(k+2)", c.br(vk, v2), -(2 * vnn)),
            ("[v_k x v_2] = -[v_(k+2) x]", c.br(c.w(vk, X), v2), -c.w(vnn, X)),
            ("[v_k y v_2] = -[v_(k+2) y]", c.br(c.w(vk, Y), v2), -c.w(vnn, Y)),
            ("[v_k x y v_2] = 2[v_(k+2) y x]", c.br(c.w(vk, X, Y), v2), 2 * c.w(vnn, Y, X)),
            ("[v_k x y x v_2] = 3[v_(k+2) y x^2]", c.br(c.w(vk, X, Y, X), v2), 3 * c.w(vnn, Y, X, X)),
        ]

    w1 = _types_hypothesis(c, k, "zero", "any")
    w2 = _types_hypothesis(c, k, "zero", "inf", third=True)
    w3 = _types_hypothesis(c, k, "inf", "zero", third=True)
    return [
        _Group("mu0 v_1 action", (k + 1) * (q - 1) + 3, not w1, w1, v1_ids),
        _Group("mu0 v_2 action", (k + 2) * (q - 1) + 3, not w2, w2, v2_ids),
        _Group("mu0 v_2 action before the diamond", (k + 2) * (q - 1) + 3, not w3, w3, v2ext_ids),
    ]


def _suite_lemma_va1(c: _Ctx, k: int):
    q, p = c.q, c.F.p
    a = earliest_finite_after_q(c.report)
    why = ""
    if a is None:
        why = "no finite-type diamond past the second diamond"
    elif a % p:
        why = f"earliest finite-type diamond has a={a}, not divisible by p"
    elif not (c.mu(a) is not None and c.mu(a) != INF and c.mu(a) == c.F.one):
        why = f"diamond t={a} has type {c.mu(a)}, not 1"
    elif (a + 1) * (q - 1) + 1 <= c.top and np.any(c.L.act((a + 1) * (q - 1))[:, Y, :]):
        why = f"y does not centralize L_{(a + 1) * (q - 1)}"

    def ids():
        va, v1, v2 = c.v(a), c.v(1), c.v(2)
        vn = c.w(va, X, Y, *_xs(q - 2))
        vnn = c.w(vn, X, Y, *_xs(q - 3))
        return [
            ("[v_a x y x v_1] = [v_(a+1) x y]", c.br(c.w(va, X, Y, X), v1), c.w(vn, X, Y)),
            ("[v_a x v_2] = v_(a+2)", c.br(c.w(va, X), v2), vnn),
            ("[v_a x y v_2] = 0", c.br(c.w(va, X, Y), v2), c.L.zero(va.degree + 2 + 2 * (q - 1))),
            ("[v_a x y x v_2] = [v_(a+2) y x] + [v_(a+2) x y]", c.br(c.w(va, X, Y, X), v2),
             c.w(vnn, Y, X) + c.w(vnn, X, Y)),
        ]

    site_a = a if a is not None else k
    return [_Group("lemma_va1", (site_a + 2) * (q - 1) + 3, not why, why, ids)]


def _suite_compact_vk(c: _Ctx, k: int):
    q, F = c.q, c.F
    why = "" if k >= 3 else "the compact formula starts at k=3"
    factor = F.one
    for j in range(2, k):
        mu = c.mu(j)
        if mu is None:
            why = why or f"no diamond at t={j}"
            break
        if not c.is_zero_type(mu):
            factor = factor * (c.inv(mu) + F.one)

    def ids():
        cur, v1 = c.v(2), c.v(1)
        for _ in range(k - 2):
            cur = c.br(cur, v1)
        return [(f"[v_2 v_1^(k-2)] = {factor} v_k", cur, factor * c.v(k))]

    return [_Group("compact_vk", k * (q - 1), not why, why, ids)]


_K_SUITES = {
    "lemma_v1": _suite_lemma_v1,
    "cor_v1x": _suite_cor_v1x,
    "lemma_v2": _suite_lemma_v2,
    "lemma_v2ext": _suite_lemma_v2ext,
    "remarks_mu0": _suite_remarks_mu0,
    "lemma_va1": _suite_lemma_va1,
    "compact_vk": _suite_compact_vk,
}


def _zero_text(M) -> str:
    return "0" if not np.any(M) else f"nonzero ({int(np.count_nonzero(M))} entries)"


def _x_power(c: _Ctx, d: int, n: int):
    F, L = c.F, c.L
    M = L.act(d)[:, X, :]
    for e in range(d + 1, d + n):
        M = F.matmul(M, L.act(e)[:, X, :])
    return M


def _run_sandwich(c: _Ctx, site):
    F, L, q = c.F, c.L, c.q
    out = []
    for d in range(1, c.top - 1):
        if site is not None and d != site:
            continue
        M = F.matmul(L.act(d)[:, Y, :], L.act(d + 1)[:, Y, :])
        out.append(IdentityCheck("(ad y)^2 = 0 on L_d", {"d": d}, (d, d + 2), True,
                                 not np.any(M), _zero_text(M), "0"))
        if d + q <= c.top:
            M = _x_power(c, d, q)
            out.append(IdentityCheck("(ad x)^q = 0 on L_d", {"d": d}, (d, d + q), True,
                                     not np.any(M), _zero_text(M), "0"))
    return out


def _run_chain(c: _Ctx, site):
    L, q = c.L, c.q
    out = []
    for r in c.report.diamonds:
        m = r.degree
        if m < q or (site is not None and m != site):
            continue
        degrees = list(range(m + 1, m + q - 2))
        if r.kind == "fake1" and m + q - 1 <= c.report.horizon and not c.report.record(m + q - 1).is_diamond:
            degrees.append(m + q - 2)
        for i in degrees:
            if i + 1 > c.top:
                break
            M = L.act(i)[:, Y, :]
            out.append(IdentityCheck("[L_i y] = 0 after a diamond", {"m": m, "i": i}, (i, i + 1), True,
                                     not np.any(M), _zero_text(M), "0"))
    return out


def _run_chain_n(c: _Ctx, site):
    N, q = c.N, c.q
    if N is None:
        return [IdentityCheck("[N_i y] in Z(N)", {}, (), False, note="the covering algebra N was not supplied")]
    F = N.field
    out = []
    for r in c.report.diamonds:
        m = r.degree
        if m < 2 * q - 1 or (site is not None and m != site):
            continue
        mu = c.report.type_at(r.t) if r.t is not None else None
        why = ""
        if mu is not None and mu != INF and (mu == -F.one or not mu):
            prev = c.report.type_at(r.t - 1) if r.t else None
            if prev is None:
                why = f"diamond {m} has type {mu} and no diamond precedes it at distance q-1"
            elif not mu and c.is_zero_type(prev):
                why = f"diamond {m} has type 0 and so does the previous one"
        for i in range(m + 1, m + q - 2):
            if i + 2 > N.computed_to:
                break
            if why:
                out.append(IdentityCheck("[N_i y] in Z(N)", {"m": m, "i": i}, (i,), False, note=why))
                continue
            n_i, n_1 = N.dims[i], N.dims[i + 1]
            Yi = N.act(i)[:, Y, :]
            M = F.matmul(Yi, N.act(i + 1).reshape(n_1, -1)) if n_i and n_1 else F.zeros((0,))
            out.append(IdentityCheck("[N_i y] in Z(N)", {"m": m, "i": i}, (i, i + 2), True,
                                     not np.any(M), _zero_text(M), "0"))
    return out


def _run_no_consec(c: _Ctx, site):
    L = c.L
    out = []
    for d in range(1, c.top):
        if L.dims[d] != 2 or (site is not None and d != site):
            continue
        out.append(IdentityCheck("dim L_(d+1) < 2 after a diamond", {"d": d}, (d, d + 1), True,
                                 L.dims[d + 1] < 2, str(L.dims[d + 1]), "<2"))
    return out


_DIRECT_SUITES = {
    "sandwich": ("d", _run_sandwich),
    "chain": ("m", _run_chain),
    "chain_N": ("m", _run_chain_n),
    "no_consec": ("d", _run_no_consec),
}

SUITES = tuple(_K_SUITES) + tuple(_DIRECT_SUITES)


def _evaluate_group(g: _Group, site: dict) -> list:
    if not g.hypothesis:
        return [IdentityCheck(g.name, site, (), False, note=g.reason)]
    try:
        triples = g.identities()
    except _Undefined as exc:
        return [IdentityCheck(g.name, site, (), False, note=str(exc))]
    out = []
    for label, left, right in triples:
        out.append(IdentityCheck(label, site, (left.degree,), True, left == right, _fmt(left), _fmt(right)))
    return out


def _site_value(site, key):
    if site is None:
        return None
    if isinstance(site, int):
        return site
    if set(site) != {key}:
        raise SiteError(f"this suite takes a site of the form {key}=N")
    return int(site[key])


def v_elements(L: GradedAlgebra, report: ThinReport, upto: int) -> dict:
    """The elements v_1, ..., v_upto, defined with the types read from ``report``."""
    c = _Ctx(L, report, None)
    return {k: c.v(k) for k in range(1, upto + 1)}


def verify_suite(L: GradedAlgebra, suite: str, report: ThinReport, N: GradedAlgebra | None = None,
                 site=None) -> SuiteResult:
    """Run one suite at ``site`` (e.g. ``{"k": 3}``) or at every site that fits in ``L``."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    c = _Ctx(L, report, N)
    result = SuiteResult(suite)
    if suite in _DIRECT_SUITES:
        key, fn = _DIRECT_SUITES[suite]
        s = _site_value(site, key)
        if s is not None and not 1 <= s <= report.horizon:
            raise SiteError(f"site {key}={s} is outside the horizon {report.horizon}")
        result.entries = fn(c, s)
        return result
    s = _site_value(site, "k")
    q = c.q
    if suite == "lemma_va1":
        ks = [s if s is not None else 1]
    else:
        ks = [s] if s is not None else range(1, c.top // (q - 1) + 1)
    for k in ks:
        try:
            groups = _K_SUITES[suite](c, k)
        except DegreeError:
            groups = []
        fitting = [g for g in groups if g.reach <= c.top]
        if s is not None and not fitting:
            raise SiteError(f"site k={s} of {suite} needs degrees beyond {c.top}")
        for g in fitting:
            try:
                result.entries.extend(_evaluate_group(g, {"k": k}))
            except DegreeError as exc:  # pragma: no cover - reach bounds prevent this
                raise SiteError(str(exc)) from exc
    return result


def verify_all(L: GradedAlgebra, report: ThinReport, N: GradedAlgebra | None = None,
               suites=SUITES) -> dict:
    return {name: verify_suite(L, name, report, N) for name in suites}
