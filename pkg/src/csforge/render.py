"""Text, LaTeX and JSON renderings of forms and potentials."""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import groupby
from typing import List, Optional, Tuple

from . import __version__
from .words import D, W, FormSum, canonicalize, degree, is_even, rotate

SCHEMA_VERSION = 1


class PotentialParseError(ValueError):
    """Malformed potential document; message carries line or term context."""


def omega_first(word: str) -> str:
    """Display rotation of an odd-degree word, starting with ``ω``.

    Prefers rotations whose leading ``ω``, turned back into ``dω``, leaves an
    even word (the shape integration by parts produces); ties go to the
    smallest remainder.
    """
    if degree(word) % 2 == 0:
        raise ValueError("only odd-degree words are sign free under rotation")
    rotations = {rotate(word, i) for i, f in enumerate(word) if f == W}
    preferred = [r for r in rotations if is_even(D + r[1:])]
    return min(preferred or rotations)


def _runs(word: str) -> List[Tuple[str, int]]:
    return [(f, len(list(g))) for f, g in groupby(word)]


def latex_word(word: str) -> str:
    parts = []
    for f, k in _runs(word):
        base = r"(\mathrm{d}\omega)" if f == D else r"\omega"
        parts.append(base if k == 1 else f"{base}^{k}")
    return r"\wedge".join(parts)


def text_word(word: str) -> str:
    parts = []
    for f, k in _runs(word):
        base = "(dω)" if f == D else "ω"
        parts.append(base if k == 1 else f"{base}^{k}")
    return "∧".join(parts)


def _latex_coeff(c: Fraction) -> str:
    c = abs(c)
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\tfrac{{{c.numerator}}}{{{c.denominator}}}"


def _text_coeff(c: Fraction) -> str:
    c = abs(c)
    return "" if c == 1 else f"{c} "


def _join(pieces: List[Tuple[Fraction, str]]) -> str:
    out = ""
    for i, (c, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def _factored(form: FormSum) -> Optional[List[Tuple[Fraction, str]]]:
    if not form or form.degree % 2 == 0:
        return None
    return [(c, omega_first(w)[1:]) for w, c in form.items()]


def to_latex(form: FormSum) -> str:
    """LaTeX for a form; odd-degree forms are written as ``ω∧(...)``."""
    factored = _factored(form)
    if factored is None:
        return _join([(c, _latex_coeff(c) + latex_word(w)) for w, c in form.items()])
    pieces = []
    for c, rest in factored:
        body = latex_word(rest) if rest else ""
        coeff = _latex_coeff(c)
        pieces.append((c, (coeff + body) if body else (coeff or "1")))
    return r"\omega\wedge\big(" + _join(pieces) + r"\big)"


def to_text(form: FormSum) -> str:
    factored = _factored(form)
    if factored is None:
        return _join([(c, _text_coeff(c) + text_word(w)) for w, c in form.items()])
    pieces = []
    for c, rest in factored:
        body = text_word(rest) if rest else ""
        coeff = _text_coeff(c)
        pieces.append((c, (coeff + body) if body else (coeff.strip() or "1")))
    return "ω∧(" + _join(pieces) + ")"


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def build_document(dimension: int, terms: FormSum, verified: Optional[bool] = None,
                   provenance: Optional[list] = None) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "dimension": dimension,
        "terms": [{"coeff": format_coeff(c), "word": w} for w, c in terms.items()],
        "verified": verified,
        "provenance": provenance or [],
        "toolVersion": __version__,
    }


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_document(text: str) -> Tuple[int, FormSum]:
    """Read ``(dimension, terms)`` from a potential document.

    Words may be given in any rotation; they are canonicalized on load.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PotentialParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise PotentialParseError("top level must be a JSON object")
    if doc.get("schemaVersion") != SCHEMA_VERSION:
        raise PotentialParseError(f"unsupported schemaVersion {doc.get('schemaVersion')!r}")
    dim = doc.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 4 or dim % 2:
        raise PotentialParseError(f"dimension must be an even integer >= 4, got {dim!r}")
    raw = doc.get("terms")
    if not isinstance(raw, list):
        raise PotentialParseError("'terms' must be a list")
    pairs = []
    for i, term in enumerate(raw):
        if not isinstance(term, dict) or set(term) != {"coeff", "word"}:
            raise PotentialParseError(f"term {i}: expected an object with 'coeff' and 'word'")
        word, coeff = term["word"], term["coeff"]
        if not isinstance(word, str) or not word or set(word) - {D, W}:
            raise PotentialParseError(f"term {i}: word {word!r} is not a binary string")
        if degree(word) != dim - 1:
            raise PotentialParseError(f"term {i}: word {word!r} has degree {degree(word)}, expected {dim - 1}")
        try:
            value = Fraction(coeff) if isinstance(coeff, str) else None
        except (ValueError, ZeroDivisionError):
            value = None
        if value is None:
            raise PotentialParseError(f"term {i}: coefficient {coeff!r} is not a 'p/q' string")
        assert canonicalize(word) is not None  # odd degree never vanishes
        pairs.append((word, value))
    return dim, FormSum(pairs)
