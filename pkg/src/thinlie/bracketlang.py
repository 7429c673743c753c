"""Left-normed bracket words over {x, y}, their linear combinations, and the
text syntax used for relators.

A word ``[a1 a2 ... an]`` always means ``[[...[a1 a2] ...] an]``.  The
syntax accepts the macros ``v1, v2, ...`` which expand to the elements
``v_1 = [y x^(q-2)]`` and ``v_k = [v_(k-1) x y x^(q-3)]``, or
``v_k = [v_(k-1) y x^(q-2)]`` at indices listed as shifts in the
:class:`VContext`.

Grammar (whitespace ignored)::

    expr := ['-'] term (('+'|'-') term)*  |  '0'
    term := [coef ['*']] '[' atom+ ']'
    coef := INT | '(' field-element ')'
    atom := ('x' | 'y' | 'v' INT) ['^' INT]
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .ffield import GF, FieldElement, FieldError

__all__ = [
    "X",
    "Y",
    "LnWord",
    "BracketExpr",
    "VContext",
    "BracketSyntaxError",
    "vword",
    "parse",
    "emit",
]

X, Y = 0, 1
_LETTERS = "xy"


class BracketSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True, order=True)
class LnWord:
    """A nonempty left-normed word; letters are 0 (x) and 1 (y)."""

    letters: tuple

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty word")
        if any(c not in (X, Y) for c in self.letters):
            raise ValueError(f"bad letters {self.letters}")

    @classmethod
    def from_string(cls, s: str) -> "LnWord":
        return cls(tuple(_LETTERS.index(c) for c in s if not c.isspace()))

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __add__(self, other: "LnWord") -> "LnWord":
        # concatenation = left-normed extension [self other...]
        return LnWord(self.letters + other.letters)

    def __str__(self):
        return "[" + _runs(self.letters) + "]"

    def __repr__(self):
        return f"LnWord({self})"


def _runs(letters) -> str:
    out = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        n = j - i
        out.append(_LETTERS[letters[i]] + (f"^{n}" if n > 1 else ""))
        i = j
    return " ".join(out)


@dataclass(frozen=True)
class BracketExpr:
    """A linear combination of left-normed words with coefficients in a field.

    Terms with equal words are merged and zero terms dropped on construction;
    terms are kept in lexicographic order of their letters.
    """

    field: GF
    terms: tuple = ()

    def __post_init__(self):
        acc: dict = {}
        for coef, word in self.terms:
            c = self.field(coef)
            acc[word] = acc.get(word, self.field.zero) + c
        terms = tuple(sorted(((c, w) for w, c in acc.items() if c), key=lambda t: t[1].letters))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def word(cls, field: GF, w: LnWord, coef=1) -> "BracketExpr":
        return cls(field, ((coef, w),))

    @property
    def degrees(self) -> set:
        return {w.degree for _, w in self.terms}

    @property
    def homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    @property
    def degree(self) -> int:
        degs = self.degrees
        if len(degs) != 1:
            raise ValueError(f"expression is not homogeneous of a single degree: {sorted(degs)}")
        return next(iter(degs))

    def __add__(self, other: "BracketExpr") -> "BracketExpr":
        return BracketExpr(self.field, self.terms + other.terms)

    def __neg__(self) -> "BracketExpr":
        return BracketExpr(self.field, tuple((-c, w) for c, w in self.terms))

    def __sub__(self, other: "BracketExpr") -> "BracketExpr":
        return self + (-other)

    def scale(self, c) -> "BracketExpr":
        c = self.field(c)
        return BracketExpr(self.field, tuple((c * a, w) for a, w in self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return emit(self)


@dataclass(frozen=True)
class VContext:
    """Parameters for expanding ``v_k``: the power ``q`` of ``p`` and the
    indices ``k`` at which ``v_k = [v_(k-1) y x^(q-2)]`` is used instead of
    the standard step."""

    p: int
    q: int
    shifts: frozenset = dc_field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "shifts", frozenset(int(k) for k in self.shifts))
        e, r = 0, self.q
        while r % self.p == 0:
            r //= self.p
            e += 1
        if r != 1 or e < 1:
            raise ValueError(f"q={self.q} is not a power of p={self.p}")
        if self.q <= 5:
            raise ValueError(f"q must exceed 5, got {self.q}")
        if any(k < 2 for k in self.shifts):
            raise ValueError("shift indices must be >= 2")


def _v_cache(ctx: VContext):
    cache = _V_CACHES.get(ctx)
    if cache is None:
        cache = _V_CACHES[ctx] = [None, (Y,) + (X,) * (ctx.q - 2)]
    return cache


_V_CACHES: dict = {}


def vword(k: int, ctx: VContext) -> LnWord:
    """The fully expanded word ``v_k``, of degree ``k(q-1)``."""
    if k < 1:
        raise ValueError("v-index must be positive")
    q = ctx.q
    cache = _v_cache(ctx)
    while len(cache) <= k:
        j = len(cache)
        step = (Y,) + (X,) * (q - 2) if j in ctx.shifts else (X, Y) + (X,) * (q - 3)
        cache.append(cache[-1] + step)
    return LnWord(cache[k])


# --- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, text, ctx, field):
        self.text = text
        self.ctx = ctx
        self.field = field
        self.pos = 0

    def error(self, msg):
        raise BracketSyntaxError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def expr(self):
        if self.peek() == "0":
            save = self.pos
            self.pos += 1
            if self.peek() == "":
                return BracketExpr(self.field)
            self.pos = save
        terms = []
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        terms.append(self.term(sign))
        while True:
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error("expected '+' or '-'")
            self.pos += 1
            terms.append(self.term(1 if ch == "+" else -1))
        return BracketExpr(self.field, tuple(terms))

    def term(self, sign):
        coef = self.field.one
        ch = self.peek()
        if ch.isdigit():
            coef = self.field(self.integer())
            if self.peek() == "*":
                self.pos += 1
        elif ch == "(":
            self.pos += 1
            start = self.pos
            depth = 1
            while self.pos < len(self.text) and depth:
                if self.text[self.pos] == "(":
                    depth += 1
                elif self.text[self.pos] == ")":
                    depth -= 1
                self.pos += 1
            if depth:
                self.error("unbalanced '('")
            try:
                coef = self.field.parse(self.text[start:self.pos - 1])
            except FieldError as exc:
                self.pos = start
                self.error(f"bad coefficient ({exc})")
            if self.peek() == "*":
                self.pos += 1
        self.take("[")
        letters = []
        while self.peek() not in ("]", ""):
            letters.extend(self.atom())
        self.take("]")
        if not letters:
            self.error("empty word")
        if sign < 0:
            coef = -coef
        return coef, LnWord(tuple(letters))

    def atom(self):
        ch = self.peek()
        if ch in ("x", "y"):
            self.pos += 1
            base = (_LETTERS.index(ch),)
        elif ch == "v":
            self.pos += 1
            k = self.integer()
            if k == 0:
                self.pos -= 1
                self.error("v-index must be positive")
            if self.ctx is None:
                self.error("v-atoms need a VContext")
            base = vword(k, self.ctx).letters
        else:
            self.error(f"unexpected character {ch!r}")
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.integer()
        return base * power


def parse(text: str, ctx: VContext | None, field: GF, homogeneous: bool = False) -> BracketExpr:
    """Parse a bracket expression, expanding v-atoms through ``ctx``."""
    expr = _Parser(text, ctx, field).expr()
    if homogeneous and not expr.homogeneous:
        raise BracketSyntaxError("expression is not homogeneous", text, 0)
    return expr


def _coef_text(c: FieldElement) -> str:
    s = str(c)
    return s if c.in_prime_field() else f"({s})"


def emit(expr: BracketExpr) -> str:
    """Canonical text; ``parse(emit(e)) == e``."""
    if not expr.terms:
        return "0"
    parts = []
    for c, w in expr.terms:
        prefix = "" if c == expr.field.one else _coef_text(c)
        parts.append(prefix + str(w))
    return " + ".join(parts)
