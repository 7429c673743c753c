"""Plain-text presentation files.

Layout::

    # comments start with '#', blank lines are ignored
    p=7 q=7 k=1 s=1 lambda=3
    [y x y]
    [y x^5 y x] + 2[y x^5 x y]
    ...

The first non-comment line is the header of ``key=value`` fields.  ``p``
and ``q`` are required.  Optional fields are ``k`` (default 1), ``s``,
``lambda``, ``modulus`` (coefficients ``c0,c1,...,ck`` of the field
modulus), and ``shift`` (comma-separated indices at which ``v_k`` takes
the ``y``-step).  Every further line is one relator in the bracket syntax.
"""

from __future__ import annotations

from pathlib import Path

from .bracketlang import BracketSyntaxError, VContext, emit, parse
from .ffield import GF, FieldError
from .nqengine import Presentation

__all__ = ["PresentationFileError", "format_presentation", "parse_presentation",
           "read_presentation", "write_presentation"]

_KEYS = ("p", "q", "k", "s", "lambda", "modulus", "shift")


class PresentationFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def format_presentation(P: Presentation) -> str:
    F = P.field
    fields = [f"p={F.p}", f"q={P.q}", f"k={F.k}"]
    if "s" in P.params:
        fields.append(f"s={P.params['s']}")
    if "lambda" in P.params:
        fields.append(f"lambda={P.params['lambda']}")
    if F.k > 1:
        fields.append("modulus=" + ",".join(map(str, F.modulus)))
    if P.ctx is not None and P.ctx.shifts:
        fields.append("shift=" + ",".join(map(str, sorted(P.ctx.shifts))))
    lines = []
    if P.label:
        lines.append(f"# {P.label}")
    lines.append(" ".join(fields))
    lines.extend(emit(r) for r in P.relators)
    return "\n".join(lines) + "\n"


def _header(text: str, lineno: int) -> dict:
    out = {}
    for tok in text.split():
        key, sep, val = tok.partition("=")
        if not sep or key not in _KEYS:
            raise PresentationFileError(f"bad header field {tok!r}", lineno)
        if key in out:
            raise PresentationFileError(f"duplicate header field {key!r}", lineno)
        out[key] = val
    for key in ("p", "q"):
        if key not in out:
            raise PresentationFileError(f"header lacks {key}=", lineno)
    return out


def _ints(text: str, key: str, lineno: int) -> list:
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise PresentationFileError(f"{key}= expects integers, got {text!r}", lineno) from None


def parse_presentation(text: str, label: str = "") -> Presentation:
    header = None
    body = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if header is None and raw.strip().startswith("#") and not label:
                label = raw.strip()[1:].strip()
            continue
        if header is None:
            header = (_header(line, lineno), lineno)
        else:
            body.append((line, lineno))
    if header is None:
        raise PresentationFileError("no header line")
    h, hline = header
    try:
        p, q = int(h["p"]), int(h["q"])
        k = int(h.get("k", 1))
        modulus = _ints(h["modulus"], "modulus", hline) if "modulus" in h else None
        F = GF(p, k, modulus)
        shifts = _ints(h.get("shift", ""), "shift", hline)
        ctx = VContext(p, q, frozenset(shifts))
        params = {"p": p, "q": q}
        if "s" in h:
            params["s"] = int(h["s"])
        if "lambda" in h:
            params["lambda"] = F.parse(h["lambda"])
    except (ValueError, FieldError) as exc:
        if isinstance(exc, PresentationFileError):
            raise
        raise PresentationFileError(str(exc), hline) from None
    rels = []
    for line, lineno in body:
        try:
            r = parse(line, ctx, F, homogeneous=True)
        except BracketSyntaxError as exc:
            raise PresentationFileError(str(exc), lineno) from None
        if r.terms:
            rels.append(r)
    try:
        return Presentation(F, q, rels, label=label, ctx=ctx, params=params)
    except ValueError as exc:
        raise PresentationFileError(str(exc)) from None


def read_presentation(path) -> Presentation:
    return parse_presentation(Path(path).read_text())


def write_presentation(P: Presentation, path) -> None:
    Path(path).write_text(format_presentation(P))
