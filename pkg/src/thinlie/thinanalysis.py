"""Diamond structure of a computed thin quotient.

Given a graded algebra ``L`` generated by ``x, y`` in degree 1, this module
checks the covering property, normalizes the generators, classifies each
homogeneous component (genuine diamond with its type, fake diamond of type
0 or 1, or an ordinary one-dimensional component) and compares the result
with the progression of types expected from the preset parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .bracketlang import X, Y
from .ffield import FieldElement
from .linalg import rank
from .nqengine import GradedAlgebra, HomElement, lnprod

__all__ = [
    "INF",
    "DiamondRecord",
    "ThinReport",
    "StandardGenerators",
    "AnalysisError",
    "check_covering",
    "covering_diagnostic",
    "find_standard_generators",
    "classify_degree",
    "diamond_report",
    "expected_record",
    "match_expected_pattern",
    "earliest_finite_after_q",
    "type_text",
]

INF = "inf"

KINDS = ("first", "genuine", "fake0", "fake1", "none", "ambiguous")


class AnalysisError(ValueError):
    pass


def type_text(t) -> str | None:
    if t is None:
        return None
    return INF if t == INF else str(t)


def _fmt(v: HomElement) -> str:
    return "(" + ", ".join(v.field.format_code(c) for c in v.coords) + ")"


@dataclass
class DiamondRecord:
    degree: int
    t: int | None
    kind: str
    type: object = None
    witness: dict = dc_field(default_factory=dict)
    alternate: int | None = None

    @property
    def is_diamond(self) -> bool:
        return self.kind in ("first", "genuine", "fake0", "fake1")

    def to_json(self) -> dict:
        return {"degree": self.degree, "t": self.t, "kind": self.kind, "type": type_text(self.type)}


@dataclass
class ThinReport:
    params: dict
    q: int
    horizon: int
    dims: list
    records: list
    verdicts: dict = dc_field(default_factory=dict)
    discrepancies: list = dc_field(default_factory=list)

    def record(self, m: int) -> DiamondRecord:
        return self.records[m - 1]

    @property
    def diamonds(self) -> list:
        return [r for r in self.records if r.is_diamond]

    def type_at(self, t: int):
        """Type of the diamond in degree t(q-1)+1, INF, or None if there is none."""
        m = t * (self.q - 1) + 1
        if m > self.horizon:
            return None
        r = self.record(m)
        return r.type if r.is_diamond and r.kind != "first" else None


# --- covering ------------------------------------------------------------------

def _projective_points(F, n: int) -> np.ndarray:
    if n == 1:
        return F.asarray([[1]])
    pts = [[1, c] for c in range(F.order)] + [[0, 1]]
    return F.asarray(pts)


def covering_diagnostic(L: GradedAlgebra, d: int) -> str | None:
    """None if every nonzero z in L_d has [z L_1] = L_(d+1); else a reason."""
    n, n1 = L.dim(d), L.dim(d + 1)
    if n == 0:
        return None if n1 == 0 else f"L_{d} = 0 but L_{d + 1} has dimension {n1}"
    if n > 2:
        return f"dim L_{d} = {n} > 2"
    if n1 > 2:
        return f"dim L_{d + 1} = {n1} > 2"
    F = L.field
    act = L.act(d).reshape(n, 2 * n1)
    pts = _projective_points(F, n)
    images = F.matmul(pts, act).reshape(pts.shape[0], 2, n1)
    for z, img in zip(pts, images):
        if rank(F, img) != n1:
            return f"z = {[F.format_code(c) for c in z]} in L_{d} does not cover L_{d + 1}"
    return None


def check_covering(L: GradedAlgebra, d: int) -> bool:
    return covering_diagnostic(L, d) is None


# --- standard generators -------------------------------------------------------

@dataclass
class StandardGenerators:
    x: np.ndarray
    y: np.ndarray
    c: FieldElement
    witness: dict

    @property
    def is_identity(self) -> bool:
        return list(self.x) == [1, 0] and list(self.y) == [0, 1]


def _normalize_line(F, v):
    """Scale so the last nonzero coordinate is 1."""
    j = max(i for i in range(len(v)) if v[i])
    return F.mul(v, F.inv(v[j]))


def find_standard_generators(L: GradedAlgebra) -> StandardGenerators:
    """Basis x', y' of L_1 with [x' y' y'] = 0, [v1 x' x'] = 0 = [v1 y' y'] and
    [v1 y' x'] = -2 [v1 x' y'], where v1 = [y' x'^(q-2)]."""
    F, q = L.field, L.q
    if L.dims[1] != 2:
        raise AnalysisError("L_1 must be two-dimensional")
    if q is None or L.computed_to < q + 1:
        raise AnalysisError("standard generators need the algebra up to degree q+1")
    pts = _projective_points(F, 2)
    lines = []
    for yy in pts:
        xx = F.asarray([1, 0]) if yy[0] == 0 else F.asarray([0, 1])
        e_x, e_y = L.element(1, xx), L.element(1, yy)
        if lnprod(L, e_x, e_y, e_y).is_zero() and not lnprod(L, e_x, e_y).is_zero():
            lines.append(_normalize_line(F, yy))
    if len(lines) != 1:
        raise AnalysisError(f"expected a unique line with [x y y] = 0, found {len(lines)}")
    y1 = lines[0]
    x0 = F.asarray([1, 0]) if y1[0] == 0 else F.asarray([0, 1])
    ey = L.element(1, y1)
    good = []
    for c in range(F.order):
        x1 = F.add(x0, F.mul(y1, c))
        ex = L.element(1, x1)
        v1 = lnprod(L, ey, *([ex] * (q - 2)))
        if v1.is_zero():
            continue
        vxx, vyy = lnprod(L, v1, ex, ex), lnprod(L, v1, ey, ey)
        vyx, vxy = lnprod(L, v1, ey, ex), lnprod(L, v1, ex, ey)
        if vxx.is_zero() and vyy.is_zero() and (vyx + 2 * vxy).is_zero():
            good.append(c)
    if not good:
        raise AnalysisError("no x' = x + c y' satisfies the relations around v1")
    c = good[0]
    return StandardGenerators(
        x=F.add(x0, F.mul(y1, c)), y=y1, c=F.element(c),
        witness={"y_line": [F.format_code(a) for a in y1],
                 "valid_c": [F.format_code(a) for a in good]},
    )


# --- per-degree classification -------------------------------------------------

def _t_index(m: int, q: int | None):
    if q is None or (m - 1) % (q - 1):
        return None
    return (m - 1) // (q - 1)


def _scalar(u: HomElement, base: HomElement):
    """a with u = a * base, base a nonzero vector of a one-dimensional space."""
    j = int(np.nonzero(base.coords)[0][0])
    F = u.field
    return F.element(F.mul(u.coords[j], F.inv(base.coords[j])))


def classify_degree(L: GradedAlgebra, m: int) -> DiamondRecord:
    t = _t_index(m, L.q)
    if m == 1:
        return DiamondRecord(1, 0, "first" if L.dims[1] == 2 else "none")
    if m + 1 > L.computed_to:
        raise AnalysisError(f"classifying degree {m} needs degree {m + 1}; computed to {L.computed_to}")
    if L.dim(m - 1) != 1:
        kind = "ambiguous" if L.dim(m) == 2 else "none"
        return DiamondRecord(m, t, kind, witness={"dim L_(m-1)": L.dim(m - 1)})
    w = L.basis(m - 1, 0)
    wx, wy = lnprod(L, w, X), lnprod(L, w, Y)
    wxx, wyy = lnprod(L, wx, X), lnprod(L, wy, Y)
    wxy, wyx = lnprod(L, wx, Y), lnprod(L, wy, X)
    wit = {"w": str(L.word_of(m - 1, 0))}
    if L.dim(m) == 2:
        wit.update({"[w x x]": _fmt(wxx), "[w y y]": _fmt(wyy)})
        if not (wxx.is_zero() and wyy.is_zero()):
            return DiamondRecord(m, t, "ambiguous", witness=wit)
        if L.dim(m + 1) != 1:
            wit["dim L_(m+1)"] = L.dim(m + 1)
            return DiamondRecord(m, t, "ambiguous", witness=wit)
        u = L.basis(m + 1, 0)
        alpha, beta = _scalar(wyx, u), _scalar(wxy, u)
        wit.update({"[w y x]": str(alpha), "[w x y]": str(beta)})
        if not (alpha + beta):
            return DiamondRecord(m, t, "genuine", INF, wit)
        return DiamondRecord(m, t, "genuine", beta / (alpha + beta), wit)
    if L.dim(m) == 1:
        F = L.field
        if wy.is_zero() and wxx.is_zero():
            wit.update({"[w y]": "0", "[w x x]": "0"})
            return DiamondRecord(m, t, "fake1", F.one, wit)
        if wx.is_zero() and wyy.is_zero():
            wit.update({"[w x]": "0", "[w y y]": "0"})
            return DiamondRecord(m, t, "fake0", F.zero, wit)
    return DiamondRecord(m, t, "none")


# --- whole report --------------------------------------------------------------

def _resolve_fakes(records: list, q: int):
    """Keep one member of each fake1 (m) / fake0 (m+1) pair: the degree = 1 mod q-1."""
    for i in range(len(records) - 1):
        a, b = records[i], records[i + 1]
        if a.kind != "fake1" or b.kind != "fake0":
            continue
        keep_a = (a.degree - 1) % (q - 1) == 0
        keep_b = (b.degree - 1) % (q - 1) == 0
        if keep_a == keep_b:
            a.kind = b.kind = "ambiguous"
            a.alternate, b.alternate = b.degree, a.degree
        elif keep_a:
            b.kind, b.type, b.alternate = "none", None, a.degree
        else:
            a.kind, a.type, a.alternate = "none", None, b.degree


def diamond_report(L: GradedAlgebra, q: int | None = None, horizon: int | None = None,
                   params: dict | None = None) -> ThinReport:
    """Classify every degree up to ``horizon`` (default: last degree whose
    successor is known) and compute the structural verdicts."""
    q = q if q is not None else L.q
    if q is None:
        raise AnalysisError("q is unknown")
    if horizon is None:
        horizon = L.computed_to - 1
    if horizon > L.computed_to - 1:
        raise AnalysisError(f"horizon {horizon} needs degree {horizon + 1}; computed to {L.computed_to}")
    records = [classify_degree(L, m) for m in range(1, horizon + 1)]
    _resolve_fakes(records, q)
    report = ThinReport(params=dict(params or {}), q=q, horizon=horizon,
                        dims=[L.dims[d] for d in range(1, horizon + 1)], records=records)
    disc = report.discrepancies

    cover_fail = []
    for d in range(1, horizon + 1):
        msg = covering_diagnostic(L, d)
        if msg:
            cover_fail.append(msg)
    disc.extend(f"covering: {m}" for m in cover_fail)

    diamonds = [r.degree for r in report.diamonds]
    for r in records:
        if r.kind == "ambiguous":
            disc.append(f"degree {r.degree}: ambiguous component {r.witness}")
        if r.kind == "genuine" and r.type != INF and (r.type == L.field.zero or r.type == L.field.one):
            disc.append(f"degree {r.degree}: genuine diamond of type {r.type}")
    consec = [m for m in diamonds if m + 1 in diamonds]
    disc.extend(f"consecutive diamonds in degrees {m}, {m + 1}" for m in consec)
    gaps = [(a, b) for a, b in zip(diamonds, diamonds[1:]) if b - a != q - 1]
    disc.extend(f"diamonds {a} and {b} are {b - a} apart" for a, b in gaps)
    missing = bool(diamonds) and diamonds[-1] + q - 1 <= horizon
    if missing:
        disc.append(f"no diamond in degree {diamonds[-1] + q - 1}")
    uncentral = []
    for d in range(1, horizon):
        if d in diamonds or d + 1 in diamonds:
            continue
        if L.dims[1] == 2 and np.any(L.act(d)[:, Y, :]):
            uncentral.append(d)
    disc.extend(f"y does not centralize L_{d}" for d in uncentral)

    small = all(n <= 2 for n in report.dims)
    report.verdicts = {
        "covering": not cover_fail,
        "thin": (L.dims[1] == 2 and small and not cover_fail and len(diamonds) >= 2
                 and not any(r.kind == "ambiguous" for r in records)),
        "no_consecutive": not consec,
        "spacing": not gaps and not missing,
        "y_centralizer": not uncentral,
        "pattern": None,
    }
    if len(diamonds) < 2:
        disc.append("no second diamond within the horizon")
    return report


# --- expected pattern ----------------------------------------------------------

def expected_record(t: int, p: int, s: int, lam: FieldElement):
    """(kind, type) predicted for the diamond in degree t(q-1)+1, t >= 1."""
    ps = p ** s
    if t >= 2 and (t - 1) % ps:
        return "genuine", INF
    F = lam.field
    r = (t - 1) // ps
    mu = F(r) * (lam + F.one) - F.one
    if mu == F.zero:
        return "fake0", mu
    if mu == F.one:
        return "fake1", mu
    return "genuine", mu


def match_expected_pattern(report: ThinReport, p: int, q: int, s: int, lam: FieldElement):
    """(verdict, diffs) comparing every degree of the report with the predicted pattern."""
    diffs = []
    expected = {1: ("first", None)}
    t = 1
    while t * (q - 1) + 1 <= report.horizon:
        expected[t * (q - 1) + 1] = expected_record(t, p, s, lam)
        t += 1
    for r in report.records:
        kind, typ = expected.get(r.degree, ("none", None))
        got_type = r.type if r.kind in ("genuine", "fake0", "fake1") else None
        if r.kind != kind or type_text(got_type) != type_text(typ):
            diffs.append(f"degree {r.degree}: expected {kind} {type_text(typ)}, "
                         f"got {r.kind} {type_text(got_type)}")
    report.verdicts["pattern"] = not diffs
    report.discrepancies.extend(diffs)
    return not diffs, diffs


def earliest_finite_after_q(report: ThinReport) -> int | None:
    """The index a of the first diamond past L_q of finite (possibly fake) type."""
    for r in report.diamonds:
        if r.degree > report.q and r.type is not None and r.type != INF:
            return r.t
    return None
