"""Degree-by-degree construction of finitely presented graded Lie algebras.

The algebra ``N = F<x, y> / (relators)`` is built one homogeneous component
at a time.  In degree ``d`` the candidate spanning set is ``{[b, g]}`` for
``b`` a basis element of ``N_(d-1)`` and ``g`` in ``{x, y}``; candidate
``(b, g)`` has index ``2*b + g``.  Linear relations among candidates come
from

* skew-symmetry ``[a, t] + [t, a] = 0`` for basis elements ``a``, ``t``
  with ``deg a + deg t = d``,
* the Jacobi identity ``[u, [t, g]] = [[u, t], g] - [[u, g], t]``, and
* the relators of degree exactly ``d``.

That is ``consistency="full"``.  ``consistency="pairwise"`` replaces the
Jacobi rows by the triples ``(u, x, y)`` only.  It is cheaper but not
sufficient in general: for the single relator ``[y x y]`` over GF(7) it
gives dimension 3 in degree 6 where the true value is 2, and sampled
Jacobi triples then fail.  Use it only together with such a check.

Products ``[u, t]`` landing in degree ``d`` are expanded through the
definition ``t = [t', g]`` of ``t`` as ``[[u, t'], g] - [[u, g], t']``.
The rows are brought to reduced echelon form with pivots at the lowest
candidate index; the remaining candidates become the new basis and each
one records its definition ``(parent, g)``.

Besides the action tables the algebra stores full structure constants
``struct[(i, j)]`` of shape ``(dim_i, dim_j, dim_(i+j))`` for every
``i + j <= computed_to``, so brackets of arbitrary homogeneous elements are
a pair of matrix products.
"""

from __future__ import annotations

import json
import logging
import warnings
from dataclasses import dataclass, field as dc_field

import numpy as np

from .bracketlang import BracketExpr, LnWord, VContext, X, Y
from .ffield import GF, FieldElement
from .linalg import inverse, left_nullspace, rref

__all__ = [
    "Presentation",
    "GradedAlgebra",
    "HomElement",
    "EngineError",
    "DegreeError",
    "build",
    "extend_to",
    "evaluate",
    "bracket",
    "graded_centre",
    "central_quotient",
    "change_generators",
    "dump_algebra",
    "load_algebra",
]

log = logging.getLogger(__name__)

DEFAULT_CAP = 4096
DUMP_VERSION = 1


class EngineError(RuntimeError):
    pass


class DegreeError(EngineError, ValueError):
    """A degree outside the computed range was requested."""


@dataclass
class Presentation:
    """Generators x, y in degree 1 and homogeneous relators of degree >= 2."""

    field: GF
    q: int
    relators: list
    label: str = ""
    ctx: VContext | None = None
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.relators = list(self.relators)
        for r in self.relators:
            if not isinstance(r, BracketExpr):
                raise TypeError(f"relator must be a BracketExpr, got {type(r).__name__}")
            if r.field != self.field:
                raise ValueError("relator over a different field")
            if not r.homogeneous:
                raise ValueError(f"relator is not homogeneous: {r}")
            if r.terms and r.degree < 2:
                raise ValueError(f"relator of degree < 2: {r}")

    @property
    def max_degree(self) -> int:
        return max((r.degree for r in self.relators if r.terms), default=0)


class HomElement:
    """A homogeneous element: degree plus coordinates in that degree's basis."""

    __slots__ = ("degree", "coords", "field")

    def __init__(self, degree: int, coords, field: GF):
        self.degree = int(degree)
        self.coords = field.asarray(coords)
        self.field = field

    def _check(self, other):
        if not isinstance(other, HomElement):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return HomElement(self.degree, self.field.add(self.coords, other.coords), self.field)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return HomElement(self.degree, self.field.sub(self.coords, other.coords), self.field)

    def __neg__(self):
        return HomElement(self.degree, self.field.neg(self.coords), self.field)

    def __rmul__(self, c):
        code = c.code if isinstance(c, FieldElement) else int(c) % self.field.p
        return HomElement(self.degree, self.field.mul(self.coords, code), self.field)

    def is_zero(self) -> bool:
        return not np.any(self.coords)

    def __eq__(self, other):
        if not isinstance(other, HomElement):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self.coords, other.coords)

    def __repr__(self):
        return f"HomElement(deg={self.degree}, {[self.field.format_code(c) for c in self.coords]})"


class GradedAlgebra:
    """A graded Lie algebra generated in degree 1, known up to ``computed_to``.

    ``dims[d]`` is the dimension of degree ``d`` (``dims[0] = 0``);
    ``defs[d][b] = (parent, g)`` says basis element ``b`` of degree ``d`` is
    ``[parent, g]``; ``struct[(i, j)]`` holds the structure constants.
    The action of the generators on degree ``d`` is ``struct[(d, 1)]``.
    """

    def __init__(self, field: GF, presentation: Presentation | None = None,
                 q: int | None = None, consistency: str = "full", cap: int = DEFAULT_CAP):
        if consistency not in ("full", "pairwise"):
            raise ValueError("consistency must be 'full' or 'pairwise'")
        self.field = field
        self.presentation = presentation
        self.q = q if q is not None else (presentation.q if presentation else None)
        self.consistency = consistency
        self.cap = cap
        self.dims = [0, 2]
        self.defs: list = [[], [None, None]]
        self.struct: dict = {}
        self.computed_to = 1
        self.status = "ok"
        self.notes: list[str] = []
        self._relators_by_degree: dict = {}
        if presentation is not None:
            for r in presentation.relators:
                if r.terms:
                    self._relators_by_degree.setdefault(r.degree, []).append(r)

    # --- basic accessors ---------------------------------------------------

    def dim(self, d: int) -> int:
        self._check_degree(d)
        return self.dims[d] if d >= 1 else 0

    def _check_degree(self, d: int):
        if d > self.computed_to or d < 0:
            raise DegreeError(f"degree {d} outside computed range 1..{self.computed_to}")

    def act(self, d: int) -> np.ndarray:
        """Array (dim_d, 2, dim_(d+1)): row (b, g) is [b, g]."""
        if d + 1 > self.computed_to:
            raise DegreeError(f"action on degree {d} needs degree {d + 1} > {self.computed_to}")
        return self.struct[(d, 1)]

    def element(self, d: int, coords) -> HomElement:
        self._check_degree(d)
        return HomElement(d, coords, self.field)

    def zero(self, d: int) -> HomElement:
        return self.element(d, self.field.zeros(self.dim(d)))

    def basis(self, d: int, b: int) -> HomElement:
        v = self.field.zeros(self.dim(d))
        v[b] = 1
        return self.element(d, v)

    @property
    def x(self) -> HomElement:
        return self.basis(1, 0)

    @property
    def y(self) -> HomElement:
        return self.basis(1, 1)

    def word_of(self, d: int, b: int) -> LnWord:
        """The left-normed word spelled by following definitions to degree 1."""
        letters = []
        while d > 1:
            parent, g = self.defs[d][b]
            letters.append(g)
            b, d = parent, d - 1
        letters.append(b)
        return LnWord(tuple(reversed(letters)))

    def generator_action(self, u: HomElement, g: int) -> HomElement:
        A = self.act(u.degree)
        return HomElement(u.degree + 1, self.field.matmul(u.coords, A[:, g, :]), self.field)

    def __repr__(self):
        return f"<GradedAlgebra over {self.field!r} to degree {self.computed_to} dims={self.dims[1:]}>"


# --- helpers -------------------------------------------------------------------

def _embed(F: GF, V: np.ndarray, g: int) -> np.ndarray:
    """Map coordinates in degree d-1 to candidate space: c -> 2c + g."""
    out = F.zeros(V.shape[:-1] + (2 * V.shape[-1],))
    out[..., g::2] = V
    return out


def _as_rows(T: np.ndarray, m: int) -> np.ndarray:
    # reshape(-1, 0) is ambiguous for empty arrays
    return T.reshape(int(np.prod(T.shape[:-1])), m)


def _contract_first(F: GF, M: np.ndarray, T: np.ndarray) -> np.ndarray:
    """out[a, ...] = sum_c M[a, c] * T[c, ...]."""
    flat = T.reshape(T.shape[0], int(np.prod(T.shape[1:])))
    return F.matmul(M, flat).reshape((M.shape[0],) + T.shape[1:])


def _contract_second(F: GF, M: np.ndarray, T: np.ndarray) -> np.ndarray:
    """out[a, b, ...] = sum_c M[b, c] * T[a, c, ...]."""
    Tt = np.swapaxes(T, 0, 1)
    return np.swapaxes(_contract_first(F, M, Tt), 0, 1)


def _eval_prefix(A: GradedAlgebra, letters) -> np.ndarray:
    F = A.field
    v = F.zeros(A.dims[1])
    v[letters[0]] = 1
    for d, g in enumerate(letters[1:], start=1):
        v = F.matmul(v, A.struct[(d, 1)][:, g, :])
    return v


# --- extension -----------------------------------------------------------------

def _extend_one(A: GradedAlgebra, d: int):
    F = A.field
    dims, S = A.dims, A.struct
    n1 = dims[d - 1]
    m = 2 * n1

    if n1 == 0:
        _append_zero_degree(A, d)
        return

    # formal products landing in degree d, as candidate combinations
    Sb: dict = {}
    for j in range(1, d):
        i = d - j
        ni, nj = dims[i], dims[j]
        if j == 1:
            arr = F.zeros((ni, 2, m))
            for a in range(ni):
                arr[a, 0, 2 * a] = 1
                arr[a, 1, 2 * a + 1] = 1
        else:
            arr = F.zeros((ni, nj, m))
            for g in (X, Y):
                idx = [b for b in range(nj) if A.defs[j][b][1] == g]
                if not idx or ni == 0:
                    continue
                parents = [A.defs[j][b][0] for b in idx]
                first = _embed(F, S[(i, j - 1)][:, parents, :], g)
                inner = Sb[(i + 1, j - 1)][:, parents, :]
                second = _contract_first(F, S[(i, 1)][:, g, :], inner)
                arr[:, idx, :] = F.sub(first, second)
        Sb[(i, j)] = arr

    rows = []
    for i in range(1, d // 2 + 1):
        j = d - i
        block = F.add(Sb[(i, j)], np.swapaxes(Sb[(j, i)], 0, 1))
        if i == j:
            iu = np.triu_indices(dims[i])
            block = block[iu]
        rows.append(_as_rows(block, m))

    if A.consistency == "full":
        for i in range(1, d - 1):
            j = d - 1 - i
            if dims[i] == 0 or dims[j] == 0:
                continue
            for g in (X, Y):
                lhs = _contract_second(F, S[(j, 1)][:, g, :], Sb[(i, j + 1)])
                mid = _embed(F, S[(i, j)], g)
                rhs = _contract_first(F, S[(i, 1)][:, g, :], Sb[(i + 1, j)])
                rows.append(_as_rows(F.add(F.sub(lhs, mid), rhs), m))
    elif d >= 3:
        # rows [[u,x],y] - [[u,y],x] + [[x,y],u] for u of degree d-2
        xy = S[(1, 1)][0, 1, :]
        term = _contract_first(F, xy[None, :], Sb[(2, d - 2)])[0]
        ux = _embed(F, S[(d - 2, 1)][:, X, :], Y)
        uy = _embed(F, S[(d - 2, 1)][:, Y, :], X)
        rows.append(F.add(F.sub(ux, uy), term))

    for r in A._relators_by_degree.get(d, ()):
        vec = F.zeros(m)
        for coef, w in r.terms:
            v = _eval_prefix(A, w.letters[:-1])
            vec = F.add(vec, F.mul(_embed(F, v, w.letters[-1]), coef.code))
        rows.append(vec[None, :])

    R = np.concatenate(rows, axis=0) if rows else F.zeros((0, m))
    R = R[np.any(R != 0, axis=1)]
    if R.shape[0]:
        R, pivots = rref(F, R)
    else:
        pivots = []
    free = [c for c in range(m) if c not in set(pivots)]
    nd = len(free)
    P = F.zeros((m, nd))
    for k, c in enumerate(free):
        P[c, k] = 1
    if pivots and nd:
        P[pivots, :] = F.neg(R[:, free])

    dims.append(nd)
    A.defs.append([(c // 2, c % 2) for c in free])
    for (i, j), arr in Sb.items():
        S[(i, j)] = _contract_last(F, arr, P)
    A.computed_to = d
    if nd == 0 and A.status == "ok":
        A.status = f"finite-dimensional at {d}"
        log.info("degree %d vanishes; algebra is finite-dimensional", d)


def _contract_last(F: GF, T: np.ndarray, P: np.ndarray) -> np.ndarray:
    flat = _as_rows(T, T.shape[-1])
    return F.matmul(flat, P).reshape(T.shape[:-1] + (P.shape[1],))


def _append_zero_degree(A: GradedAlgebra, d: int):
    F = A.field
    A.dims.append(0)
    A.defs.append([])
    for j in range(1, d):
        A.struct[(d - j, j)] = F.zeros((A.dims[d - j], A.dims[j], 0))
    A.computed_to = d


def extend_to(A: GradedAlgebra, D: int) -> GradedAlgebra:
    """Compute every degree up to ``D`` (in place); returns ``A``."""
    if D < 2:
        raise DegreeError("extension degree must be >= 2")
    if D > A.cap:
        raise DegreeError(f"degree {D} exceeds the configured cap {A.cap}")
    for d in range(A.computed_to + 1, D + 1):
        _extend_one(A, d)
    return A


def build(presentation: Presentation, D: int, consistency: str = "full",
          cap: int = DEFAULT_CAP) -> GradedAlgebra:
    A = GradedAlgebra(presentation.field, presentation, consistency=consistency, cap=cap)
    if presentation.max_degree > D:
        log.info("relators above degree %d are ignored", D)
    return extend_to(A, D)


# --- evaluation and products ---------------------------------------------------

def evaluate(A: GradedAlgebra, e) -> HomElement:
    """Value of a word or homogeneous expression in ``A``."""
    F = A.field
    if isinstance(e, LnWord):
        A._check_degree(e.degree)
        return HomElement(e.degree, _eval_prefix(A, e.letters), F)
    if isinstance(e, BracketExpr):
        if e.field != F:
            raise ValueError("expression over a different field")
        if not e.terms:
            raise ValueError("zero expression has no degree; use A.zero(d)")
        d = e.degree
        A._check_degree(d)
        v = F.zeros(A.dims[d])
        for coef, w in e.terms:
            v = F.add(v, F.mul(_eval_prefix(A, w.letters), coef.code))
        return HomElement(d, v, F)
    raise TypeError(f"cannot evaluate {type(e).__name__}")


def bracket(A: GradedAlgebra, u: HomElement, v: HomElement) -> HomElement:
    """The Lie product [u, v]; bilinear, degree deg u + deg v."""
    F = A.field
    i, j = u.degree, v.degree
    d = i + j
    if d > A.computed_to:
        raise DegreeError(f"product lands in degree {d} > {A.computed_to}")
    T = A.struct[(i, j)]
    n = A.dims[d]
    if T.size == 0:
        return HomElement(d, F.zeros(n), F)
    left = F.matmul(u.coords, T.reshape(T.shape[0], -1)).reshape(T.shape[1], n)
    return HomElement(d, F.matmul(v.coords, left), F)


def lnprod(A: GradedAlgebra, *factors) -> HomElement:
    """Left-normed product of HomElements and generator indices 0/1."""
    F = A.field
    cur = None
    for f in factors:
        if isinstance(f, (int, np.integer)):
            f = A.basis(1, int(f))
        cur = f if cur is None else bracket(A, cur, f)
    return cur


def bracket_by_definitions(A: GradedAlgebra, u: HomElement, v: HomElement) -> HomElement:
    """[u, v] computed only from generator actions and definitions.

    Independent of the stored structure constants; used to cross-check them.
    """
    F = A.field
    out = A.zero(u.degree + v.degree)
    if v.degree == 1:
        for g in (X, Y):
            if v.coords[g]:
                out = out + F.element(v.coords[g]) * A.generator_action(u, g)
        return out
    for b in np.nonzero(v.coords)[0]:
        parent, g = A.defs[v.degree][b]
        w = A.basis(v.degree - 1, parent)
        term = A.generator_action(bracket_by_definitions(A, u, w), g) - \
            bracket_by_definitions(A, A.generator_action(u, g), w)
        out = out + F.element(v.coords[b]) * term
    return out


# --- centre and quotients ------------------------------------------------------

def graded_centre(A: GradedAlgebra, d: int) -> np.ndarray:
    """Rows spanning the degree-d elements killed by both generators."""
    if d + 1 > A.computed_to:
        raise DegreeError(f"centre in degree {d} needs degree {d + 1}; computed to {A.computed_to}")
    n = A.dim(d)
    if n == 0:
        return A.field.zeros((0, 0))
    M = A.act(d).reshape(n, -1)
    return left_nullspace(A.field, M)


def _complement(F: GF, Z: np.ndarray, n: int):
    """Section and projection for the quotient of F^n by the row space of Z."""
    pivots = []
    if Z.shape[0]:
        Z, pivots = rref(F, Z)
    free = [c for c in range(n) if c not in set(pivots)]
    lift = F.zeros((len(free), n))
    Q = F.zeros((n, len(free)))
    for k, c in enumerate(free):
        lift[k, c] = 1
        Q[c, k] = 1
    if pivots and free:
        Q[pivots, :] = F.neg(Z[:, free])
    return lift, Q


def _rebase(F: GF, dims: list, struct: dict, top: int, T1: np.ndarray):
    """Change bases so every element of degree >= 2 is [parent, g].

    ``T1`` gives the new degree-1 basis as rows.  Returns new struct and defs.
    """
    T = {1: F.asarray(T1)}
    Tinv = {1: inverse(F, T1) if dims[1] else F.zeros((0, 0))}
    defs = [[], [None] * dims[1]]
    for d in range(2, top + 1):
        nd = dims[d]
        A = _contract_second(F, T[1], _contract_first(F, T[d - 1], struct[(d - 1, 1)]))
        cand = _as_rows(A, nd)
        if nd == 0:
            T[d] = F.zeros((0, 0))
            Tinv[d] = F.zeros((0, 0))
            defs.append([])
            continue
        _, piv = rref(F, cand.T)
        if len(piv) < nd:
            raise EngineError(f"degree {d} is not generated by degree {d - 1}")
        T[d] = cand[piv]
        Tinv[d] = inverse(F, T[d])
        defs.append([(c // 2, c % 2) for c in piv])
    new = {}
    for (i, j), arr in struct.items():
        if i + j > top:
            continue
        t = _contract_second(F, T[j], _contract_first(F, T[i], arr))
        new[(i, j)] = _contract_last(F, t, Tinv[i + j])
    return new, defs


def _derived(A: GradedAlgebra, dims, struct, defs, top, notes=()) -> GradedAlgebra:
    B = GradedAlgebra(A.field, None, q=A.q, consistency=A.consistency, cap=A.cap)
    B.dims = list(dims[:top + 1])
    B.struct = struct
    B.defs = defs
    B.computed_to = top
    B.status = "ok"
    for d in range(1, top + 1):
        if B.dims[d] == 0:
            B.status = f"finite-dimensional at {d}"
            break
    B.notes = list(notes)
    return B


def _quotient_once(A: GradedAlgebra, horizon: int) -> GradedAlgebra:
    F = A.field
    lifts, Qs = {}, {}
    dims = [0]
    for d in range(1, horizon + 1):
        Z = graded_centre(A, d)
        lifts[d], Qs[d] = _complement(F, Z, A.dims[d])
        dims.append(lifts[d].shape[0])
    struct = {}
    for (i, j), arr in A.struct.items():
        if i + j > horizon:
            continue
        t = _contract_first(F, lifts[i], arr)
        t = _contract_second(F, lifts[j], t)
        struct[(i, j)] = _contract_last(F, t, Qs[i + j])
    T1 = F.asarray(np.eye(dims[1], dtype=np.int64))
    struct, defs = _rebase(F, dims, struct, horizon, T1)
    return _derived(A, dims, struct, defs, horizon)


def central_quotient(A: GradedAlgebra, horizon: int | None = None, iterations: int = 1) -> GradedAlgebra:
    """``A / Z(A)`` valid up to ``horizon`` (default ``computed_to - 1``).

    Each further iteration costs one more degree of horizon.  Afterwards the
    graded centre of the result is checked up to its last testable degree;
    a nontrivial centre is recorded in ``notes`` and warned about.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if horizon is None:
        horizon = A.computed_to - iterations
    if horizon > A.computed_to - iterations:
        raise DegreeError(f"horizon {horizon} > computed_to - iterations = {A.computed_to - iterations}")
    L = A
    for _ in range(iterations):
        L = _quotient_once(L, L.computed_to - 1)
    if L.computed_to > horizon:
        L = _truncate(L, horizon)
    L.presentation = A.presentation
    for d in range(1, L.computed_to):
        Z = graded_centre(L, d)
        if Z.shape[0]:
            msg = f"quotient still has centre of dimension {Z.shape[0]} in degree {d}"
            L.notes.append(msg)
            warnings.warn(msg, RuntimeWarning, stacklevel=2)
    return L


def _truncate(A: GradedAlgebra, top: int) -> GradedAlgebra:
    struct = {k: v for k, v in A.struct.items() if k[0] + k[1] <= top}
    return _derived(A, A.dims, struct, A.defs[:top + 1], top, notes=A.notes)


def change_generators(A: GradedAlgebra, new_x, new_y) -> GradedAlgebra:
    """The same algebra presented on generators ``new_x``, ``new_y`` (degree-1 coordinates)."""
    F = A.field
    T1 = F.asarray(np.array([_coords(F, new_x), _coords(F, new_y)]))
    struct = {k: v for k, v in A.struct.items()}
    struct, defs = _rebase(F, A.dims, struct, A.computed_to, T1)
    return _derived(A, A.dims, struct, defs, A.computed_to, notes=A.notes)


def _coords(F: GF, v):
    if isinstance(v, HomElement):
        return v.coords
    return F.asarray([F(c).code for c in v])


def structure_from_actions(F: GF, dims, defs, actions: dict, top: int) -> dict:
    """Rebuild all structure constants from generator actions and definitions."""
    S = {}
    for d in range(1, top):
        S[(d, 1)] = F.asarray(actions[d])
    for n in range(3, top + 1):
        for j in range(2, n):
            i = n - j
            ni, nj, nn = dims[i], dims[j], dims[n]
            arr = F.zeros((ni, nj, nn))
            for b in range(nj):
                parent, g = defs[j][b]
                first = _contract_last(F, S[(i, j - 1)][:, parent, :], S[(n - 1, 1)][:, g, :])
                second = _contract_first(F, S[(i, 1)][:, g, :], S[(i + 1, j - 1)][:, parent, :])
                arr[:, b, :] = F.sub(first, second)
            S[(i, j)] = arr
    return S


# --- serialization -------------------------------------------------------------

def dump_algebra(A: GradedAlgebra) -> dict:
    F = A.field
    return {
        "format": "thinlie-algebra",
        "version": DUMP_VERSION,
        "field": {"p": F.p, "k": F.k, "modulus": list(F.modulus)},
        "q": A.q,
        "computed_to": A.computed_to,
        "status": A.status,
        "dims": A.dims[1:],
        "definitions": [[list(map(int, df)) for df in A.defs[d]] for d in range(2, A.computed_to + 1)],
        "actions": [np.asarray(A.struct[(d, 1)]).astype(np.int64).tolist() for d in range(1, A.computed_to)],
    }


def load_algebra(doc) -> GradedAlgebra:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("format") != "thinlie-algebra" or doc.get("version") != DUMP_VERSION:
        raise ValueError("not a version-1 algebra dump")
    fd = doc["field"]
    F = GF(fd["p"], fd["k"], fd["modulus"])
    A = GradedAlgebra(F, None, q=doc["q"])
    top = doc["computed_to"]
    A.dims = [0] + list(doc["dims"])
    A.defs = [[], [None] * A.dims[1]] + [[tuple(df) for df in ds] for ds in doc["definitions"]]
    actions = {}
    for d, a in enumerate(doc["actions"], start=1):
        arr = np.asarray(a, dtype=np.int64).reshape(A.dims[d], 2, A.dims[d + 1])
        actions[d] = arr
    A.struct = structure_from_actions(F, A.dims, A.defs, actions, top)
    A.computed_to = top
    A.status = doc["status"]
    return A
