"""Brute-force dimensions of low-degree quotients of the free Lie algebra on
{x, y}, computed in the Lyndon basis.

This module shares nothing with :mod:`thinlie.nqengine` except the field
arithmetic: Lie products are expanded by the classical Lyndon rewriting and
ideals are closed degree by degree.  It exists to cross-check the engine.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .combinatorics import lyndon_words, witt_dimension
from .linalg import rref

__all__ = ["free_dims", "standard_factorization", "lyndon_bracket", "brute_quotient_dims", "MAX_DEGREE"]

MAX_DEGREE = 12
_WITT_RANGE = 14


def free_dims(d: int) -> int:
    """Dimension of degree d of the free Lie algebra on two generators."""
    if not 1 <= d <= _WITT_RANGE:
        raise ValueError(f"degree {d} outside the supported range 1..{_WITT_RANGE}")
    return witt_dimension(d, 2)


def _is_lyndon(w: str) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


def standard_factorization(w: str) -> tuple[str, str]:
    """w = u v with v the longest proper suffix of w that is a Lyndon word."""
    if len(w) < 2:
        raise ValueError("letters have no standard factorization")
    for i in range(1, len(w)):
        if _is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w!r} is not a Lyndon word")  # pragma: no cover


def _add(acc: dict, vec: dict, c: int):
    for w, a in vec.items():
        v = acc.get(w, 0) + c * a
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def _bracket_vec(u: dict, v: dict) -> dict:
    out: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            _add(out, lyndon_bracket(a, b), ca * cb)
    return out


@lru_cache(maxsize=None)
def _lyndon_bracket(a: str, b: str) -> tuple:
    if a == b:
        return ()
    if a > b:
        return tuple((w, -c) for w, c in _lyndon_bracket(b, a))
    if len(a) == 1 or standard_factorization(a)[1] >= b:
        return ((a + b, 1),)
    a1, a2 = standard_factorization(a)
    # [[a1, a2], b] = [[a1, b], a2] + [a1, [a2, b]]
    out: dict = {}
    _add(out, _bracket_vec(lyndon_bracket(a1, b), {a2: 1}), 1)
    _add(out, _bracket_vec({a1: 1}, lyndon_bracket(a2, b)), 1)
    return tuple(sorted(out.items()))


def lyndon_bracket(a: str, b: str) -> dict:
    """[P(a), P(b)] in the Lyndon basis, integer coefficients."""
    return dict(_lyndon_bracket(a, b))


@lru_cache(maxsize=None)
def _letter_matrix(d: int, g: str, p: int) -> np.ndarray:
    """Matrix of right multiplication by a letter, degree d -> d+1, mod p."""
    src = lyndon_words(d)
    dst = {w: i for i, w in enumerate(lyndon_words(d + 1))}
    M = np.zeros((len(src), len(dst)), dtype=np.int64)
    for i, w in enumerate(src):
        for u, c in lyndon_bracket(w, g).items():
            M[i, dst[u]] = c % p
    return M


def _eval_word(F, letters) -> np.ndarray:
    """Left-normed word as a coordinate vector over the Lyndon basis."""
    v = F.zeros(2)
    v[letters[0]] = 1
    for d, g in enumerate(letters[1:], start=1):
        v = F.matmul(v, _letter_matrix(d, "xy"[g], F.p))
    return v


def brute_quotient_dims(presentation, maxd: int) -> list[int]:
    """dims of F<x,y>/(relators) in degrees 1..maxd by explicit ideal closure."""
    if maxd > MAX_DEGREE:
        raise ValueError(f"oracle is capped at degree {MAX_DEGREE}")
    F = presentation.field
    by_degree: dict = {}
    for r in presentation.relators:
        if r.terms and r.degree <= maxd:
            by_degree.setdefault(r.degree, []).append(r)
    dims = [2]
    ideal = F.zeros((0, 2))
    for d in range(2, maxd + 1):
        n = free_dims(d)
        parts = []
        if ideal.shape[0]:
            for g in "xy":
                parts.append(F.matmul(ideal, _letter_matrix(d - 1, g, F.p)))
        for r in by_degree.get(d, ()):
            vec = F.zeros(n)
            for coef, w in r.terms:
                vec = F.add(vec, F.mul(_eval_word(F, w.letters), coef.code))
            parts.append(vec[None, :])
        if parts:
            rows = np.concatenate(parts, axis=0)
            rows = rows[np.any(rows != 0, axis=1)]
            ideal = rref(F, rows)[0] if rows.shape[0] else F.zeros((0, n))
        else:
            ideal = F.zeros((0, n))
        dims.append(n - ideal.shape[0])
    return dims[:maxd]
