"""Exact arithmetic in GF(p) and small extensions GF(p^k).

Elements are encoded as integer *codes* ``c0 + c1*p + ... + c_{k-1}*p^(k-1)``
where ``c0 + c1*t + ...`` is the polynomial-basis representative.  Codes of
the prime subfield coincide with the usual residues, so integers map into
the field by ``n % p``.

All array-valued operations work on numpy integer arrays of codes, which is
what the Lie algebra engine uses.  :class:`FieldElement` is the scalar view
used in the public API.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property

import numpy as np

__all__ = [
    "GF",
    "FieldElement",
    "FieldError",
    "is_prime",
    "field_create",
]

_AUTO_MAX_DEGREE = 4


class FieldError(ValueError):
    """Invalid field parameters or an impossible field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# --- polynomials over GF(p), coefficient lists low-to-high -------------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = [c % p for c in a]
    m = _poly_trim(m)
    inv_lead = pow(m[-1], p - 2, p)
    while len(_poly_trim(a)) >= len(m):
        a = _poly_trim(a)
        shift = len(a) - len(m)
        f = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[i + shift] = (a[i + shift] - f * c) % p
    return _poly_trim(a)


def _is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..k//2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p, k):
    # monic t^k + c_{k-1} t^{k-1} + ... + c_0, ordered by (c_{k-1}, ..., c_0)
    for high_to_low in itertools.product(range(p), repeat=k):
        modulus = list(reversed(high_to_low)) + [1]
        if _is_irreducible(modulus, p):
            return tuple(modulus)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


class GF:
    """The finite field GF(p^k) in polynomial basis.

    Parameters
    ----------
    p : int
        Characteristic, must be prime.
    k : int
        Extension degree.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree ``k``, coefficients
        low-to-high.  Defaults to the lexicographically smallest one
        (ordered by the coefficient tuple from ``t^(k-1)`` down to the
        constant term); only available for ``k <= 4``.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
            raise FieldError(f"p={p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        self.p = int(p)
        self.k = int(k)
        if modulus is None:
            if k == 1:
                modulus = (0, 1)
            elif k > _AUTO_MAX_DEGREE:
                raise FieldError(f"k={k} > {_AUTO_MAX_DEGREE} requires an explicit modulus")
            else:
                modulus = _smallest_irreducible(self.p, self.k)
        else:
            modulus = tuple(int(c) % self.p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {k}: {modulus}")
            if k > 1 and not _is_irreducible(modulus, self.p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = tuple(modulus)
        self.order = self.p ** self.k
        self.prime = self.k == 1
        if self.prime:
            # object dtype keeps products exact for large p
            self.dtype = np.int64 if self.p < (1 << 24) else object
        else:
            self.dtype = np.int64
            self._build_tables()

    # --- construction helpers -------------------------------------------------

    def _build_tables(self):
        p, k, n = self.p, self.k, self.order
        powers = p ** np.arange(k, dtype=np.int64)
        codes = np.arange(n, dtype=np.int64)
        self._digits = (codes[:, None] // powers[None, :]) % p
        self._powers = powers
        # multiplication by t on codes, then search for a primitive element
        def mul_poly(a, b):
            prod = [0] * (2 * k - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
            red = _poly_mod(prod, self.modulus, p)
            return red + [0] * (k - len(red))

        def encode(c):
            return int(sum(int(ci) * int(pw) for ci, pw in zip(c, powers)))

        for g in range(2, n):
            gd = [int(c) for c in self._digits[g]]
            exp = np.zeros(n - 1, dtype=np.int64)
            cur = [1] + [0] * (k - 1)
            seen_one = False
            for e in range(n - 1):
                code = encode(cur)
                if e > 0 and code == 1:
                    seen_one = True
                    break
                exp[e] = code
                cur = mul_poly(cur, gd)
            if not seen_one:
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise FieldError("primitive element not found")
        log = np.zeros(n, dtype=np.int64)
        log[exp] = np.arange(n - 1, dtype=np.int64)
        self._exp = exp
        self._log = log
        inv = np.zeros(n, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (n - 1)]
        self._inv = inv
        neg = ((-self._digits) % p) @ powers
        self._neg = neg

    # --- vectorized operations on codes ---------------------------------------

    def asarray(self, a):
        return np.asarray(a, dtype=self.dtype)

    def zeros(self, shape):
        return np.zeros(shape, dtype=self.dtype)

    def add(self, a, b):
        if self.prime:
            return (np.asarray(a, dtype=self.dtype) + b) % self.p
        a, b = np.asarray(a), np.asarray(b)
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._powers

    def neg(self, a):
        if self.prime:
            return (-np.asarray(a, dtype=self.dtype)) % self.p
        return self._neg[np.asarray(a)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.prime:
            return (np.asarray(a, dtype=self.dtype) * b) % self.p
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.prime:
            if a.ndim == 0:
                return np.asarray(pow(int(a), self.p - 2, self.p), dtype=self.dtype)
            return np.vectorize(lambda v: pow(int(v), self.p - 2, self.p), otypes=[self.dtype])(a)
        return self._inv[a]

    def matmul(self, A, B):
        """Matrix product over the field; A is (..., n), B is (n, m)."""
        A = np.asarray(A)
        B = np.asarray(B)
        if self.prime:
            return (A.astype(self.dtype) @ B.astype(self.dtype)) % self.p
        out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
        for i in range(A.shape[-1]):
            out = self.add(out, self.mul(A[..., i, None], B[i]))
        return out

    def combine(self, coeffs, vectors):
        """Sum of coeffs[i] * vectors[i] (vectors stacked on axis 0)."""
        coeffs = np.asarray(coeffs)
        vectors = np.asarray(vectors)
        flat = vectors.reshape(vectors.shape[0], int(np.prod(vectors.shape[1:])))
        return self.matmul(coeffs[None, :], flat)[0].reshape(vectors.shape[1:])

    # --- scalars ---------------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (tuple, list)):
            return self.from_coeffs(value)
        return FieldElement(self, int(value) % self.p)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise FieldError(f"too many coefficients for GF({self.p}^{self.k})")
        code = sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))
        return FieldElement(self, code)

    def element(self, code: int) -> "FieldElement":
        code = int(code)
        if not 0 <= code < self.order:
            raise FieldError(f"code {code} out of range")
        return FieldElement(self, code)

    def coeffs_of(self, code: int) -> tuple:
        out = []
        code = int(code)
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for code in range(self.order):
            yield FieldElement(self, code)

    @cached_property
    def generator(self) -> "FieldElement":
        """The polynomial variable t (equal to 0 for prime fields)."""
        return self.from_coeffs([0, 1]) if self.k > 1 else self.zero

    def format_code(self, code: int) -> str:
        """Canonical text: nonzero terms ``c``, ``c*t``, ``c*t^i`` in ascending order."""
        parts = []
        for i, c in enumerate(self.coeffs_of(code)):
            if c == 0:
                continue
            parts.append(str(c) if i == 0 else (f"{c}*t" if i == 1 else f"{c}*t^{i}"))
        return "+".join(parts) if parts else "0"

    _TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(\*?\s*t\s*(?:\^\s*(\d+))?)?\s*")

    def parse(self, text: str) -> "FieldElement":
        """Parse ``c0+c1*t+...``; signs, repeated powers and bare ``t`` allowed."""
        s = text.strip()
        if not s:
            raise FieldError("empty field element")
        coeffs = [0] * self.k
        pos = 0
        first = True
        while pos < len(s):
            m = self._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise FieldError(f"cannot parse field element {text!r} at {pos}")
            sign, num, tpart, exp = m.groups()
            if not first and not sign:
                raise FieldError(f"expected '+' or '-' in {text!r} at {pos}")
            if not num and not tpart:
                raise FieldError(f"cannot parse field element {text!r} at {pos}")
            c = int(num) if num else 1
            if sign == "-":
                c = -c
            i = 0 if not tpart else (int(exp) if exp else 1)
            if tpart and num and not tpart.lstrip().startswith("*"):
                raise FieldError(f"missing '*' in {text!r}")
            if i >= self.k:
                raise FieldError(f"power t^{i} not reduced for k={self.k}")
            coeffs[i] = (coeffs[i] + c) % self.p
            pos = m.end()
            first = False
        return self.from_coeffs(coeffs)

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"


class FieldElement:
    """An element of a :class:`GF`; immutable and hashable."""

    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        self.field = field
        self.code = int(code)

    @property
    def coeffs(self) -> tuple:
        return self.field.coeffs_of(self.code)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("mixed fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, code):
        return FieldElement(self.field, int(code))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def inverse(self) -> "FieldElement":
        if self.code == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._wrap(self.field.inv(self.code))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FieldElement(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.field.p and (self.code < self.field.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def in_prime_field(self) -> bool:
        return self.code < self.field.p

    def __str__(self):
        return self.field.format_code(self.code)

    def __repr__(self):
        return f"FieldElement({self}, {self.field!r})"


def field_create(p: int, k: int = 1, modulus=None) -> GF:
    """Build GF(p^k); see :class:`GF`."""
    return GF(p, k, modulus)


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
