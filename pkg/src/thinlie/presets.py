"""Finite presentations of Nottingham algebras with diamonds of finite and
infinite type.

Parameters: a prime ``p > 3``, a power ``q > 5`` of ``p``, an integer
``s >= 1`` and a scalar ``lam``.  The relators are, in order::

    [y x^i y]                          0 < i < q-2
    [v1 x x], [v1 y y], [v1 y x] + 2[v1 x y]
    [v1 y x^i y]                       0 < i < q-2
    [vk y x] + [vk x y]                2 <= k <= p^s, k even
    lam [v(p^s+1) y x] - (1-lam) [v(p^s+1) x y]

The quotient by the centre has diamonds in every degree ``t(q-1)+1``; they
have infinite type unless ``t = r p^s + 1``, where the type is
``r(lam+1) - 1``.  For ``lam = 0`` the extra relator ``[v(2p^s+2) x x]``
is needed, and ``v_(p^s+2)`` is formed as ``[v(p^s+1) y x^(q-2)]``
because ``[v(p^s+1) x y]`` vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bracketlang import BracketExpr, LnWord, VContext, X, Y, vword
from .ffield import GF, FieldElement, is_prime
from .nqengine import Presentation

__all__ = [
    "NottinghamParams",
    "PresetError",
    "nottingham_mixed",
    "nottingham_mixed_lambda0",
    "make_preset",
    "free_presentation",
    "default_max_degree",
]


class PresetError(ValueError):
    pass


@dataclass(frozen=True)
class NottinghamParams:
    p: int
    q: int
    s: int
    lam: FieldElement

    def __post_init__(self):
        if not is_prime(self.p) or self.p <= 3:
            raise PresetError(f"p must be a prime > 3, got {self.p}")
        r, e = self.q, 0
        while r % self.p == 0:
            r //= self.p
            e += 1
        if r != 1 or e < 1:
            raise PresetError(f"q={self.q} is not a power of p={self.p}")
        if self.q <= 5:
            raise PresetError("q must exceed 5")
        if self.s < 1:
            raise PresetError("s must be >= 1")
        if self.lam.field.p != self.p:
            raise PresetError("lambda lives in a field of the wrong characteristic")

    @property
    def field(self) -> GF:
        return self.lam.field

    @property
    def ps(self) -> int:
        return self.p ** self.s


def _tail(word: LnWord, letters) -> LnWord:
    return LnWord(word.letters + tuple(letters))


def _common_relators(params: NottinghamParams, ctx: VContext):
    F, q = params.field, params.q
    one = F.one
    v1 = vword(1, ctx)
    rels = []
    for i in range(1, q - 2):
        rels.append(BracketExpr.word(F, LnWord((Y,) + (X,) * i + (Y,))))
    rels.append(BracketExpr.word(F, _tail(v1, (X, X))))
    rels.append(BracketExpr.word(F, _tail(v1, (Y, Y))))
    rels.append(BracketExpr(F, ((one, _tail(v1, (Y, X))), (2, _tail(v1, (X, Y))))))
    for i in range(1, q - 2):
        rels.append(BracketExpr.word(F, _tail(v1, (Y,) + (X,) * i + (Y,))))
    for k in range(2, params.ps + 1, 2):
        vk = vword(k, ctx)
        rels.append(BracketExpr(F, ((one, _tail(vk, (Y, X))), (one, _tail(vk, (X, Y))))))
    return rels


def _type_relator(params: NottinghamParams, ctx: VContext) -> BracketExpr:
    F, lam = params.field, params.lam
    w = vword(params.ps + 1, ctx)
    return BracketExpr(F, ((lam, _tail(w, (Y, X))), (-(F.one - lam), _tail(w, (X, Y)))))


def nottingham_mixed(params: NottinghamParams) -> Presentation:
    """Presentation with a diamond of type ``lam != 0`` in degree (p^s+1)(q-1)+1."""
    if not params.lam:
        raise PresetError("lambda = 0 needs nottingham_mixed_lambda0")
    ctx = VContext(params.p, params.q)
    rels = _common_relators(params, ctx) + [_type_relator(params, ctx)]
    return Presentation(
        params.field, params.q, rels,
        label=f"nottingham_mixed p={params.p} q={params.q} s={params.s} lambda={params.lam}",
        ctx=ctx,
        params={"p": params.p, "q": params.q, "s": params.s, "lambda": params.lam},
    )


def nottingham_mixed_lambda0(p: int, q: int, s: int, field: GF | None = None) -> Presentation:
    """The ``lam = 0`` variant with the extra relator ``[v(2p^s+2) x x]``."""
    F = field if field is not None else GF(p)
    params = NottinghamParams(p, q, s, F.zero)
    ctx = VContext(p, q, frozenset({params.ps + 2}))
    rels = _common_relators(params, ctx) + [_type_relator(params, ctx)]
    rels.append(BracketExpr.word(F, _tail(vword(2 * params.ps + 2, ctx), (X, X))))
    return Presentation(
        F, q, rels,
        label=f"nottingham_mixed_lambda0 p={p} q={q} s={s}",
        ctx=ctx,
        params={"p": p, "q": q, "s": s, "lambda": F.zero},
    )


def make_preset(p: int, q: int, s: int, lam, k: int = 1, modulus=None) -> Presentation:
    """Dispatch on ``lam``: ``lam`` may be an int, text like ``1+2*t``, or a FieldElement."""
    F = lam.field if isinstance(lam, FieldElement) else GF(p, k, modulus)
    lam = F(lam)
    if lam:
        return nottingham_mixed(NottinghamParams(p, q, s, lam))
    return nottingham_mixed_lambda0(p, q, s, F)


def free_presentation(p: int, q: int | None = None, k: int = 1) -> Presentation:
    F = GF(p, k)
    return Presentation(F, q if q is not None else p, [], label="free")


def default_max_degree(p: int, q: int, s: int) -> int:
    """Covers two finite-type periods and the extra relator of the lam = 0 case."""
    return (2 * p ** s + 2) * (q - 1) + 6
