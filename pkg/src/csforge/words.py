"""Cyclic trace words over ``dω`` and ``ω`` and the graded exterior derivative.

A word is a string over ``"0"`` (``dω``, form degree 2) and ``"1"`` (``ω``,
form degree 1), read left to right as a wedge product under an implicit
matrix trace.  Rotating a factor of degree ``p`` from the front of a word of
total degree ``T`` to the back costs the sign ``(-1)**(p*(T-p))``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

D = "0"
W = "1"

Number = Union[int, Fraction]


def factor_degree(factor: str) -> int:
    if factor == D:
        return 2
    if factor == W:
        return 1
    raise ValueError(f"unknown factor {factor!r}")


def validate_word(word: str) -> str:
    if not word or set(word) - {D, W}:
        raise ValueError(f"a word is a non-empty string over '0'/'1', got {word!r}")
    return word


def degree(word: str) -> int:
    """Total form degree: 2 per ``dω`` and 1 per ``ω``."""
    return 2 * word.count(D) + word.count(W)


def rotate(word: str, steps: int) -> str:
    steps %= len(word)
    return word[steps:] + word[:steps]


def rotation_sign(word: str, steps: int) -> int:
    """Sign picked up when the first ``steps`` factors are moved to the end."""
    if not 0 <= steps < len(word):
        raise ValueError(f"steps must lie in [0, {len(word)}), got {steps}")
    total = degree(word)
    sign = 1
    for factor in word[:steps]:
        p = factor_degree(factor)
        if (p * (total - p)) % 2:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def canonicalize(word: str) -> Optional[Tuple[str, int]]:
    """Minimum-value rotation of ``word`` and its sign, or ``None`` if it vanishes.

    A word vanishes under the trace when some rotation maps it onto itself
    with sign -1.  Ties between equal rotations resolve to the smallest
    rotation count.
    """
    validate_word(word)
    total = degree(word)
    best, best_sign = word, 1
    sign = 1
    for steps in range(1, len(word)):
        p = factor_degree(word[steps - 1])
        if (p * (total - p)) % 2:
            sign = -sign
        rotated = word[steps:] + word[:steps]
        if rotated == word and sign == -1:
            return None
        if rotated < best:
            best, best_sign = rotated, sign
    return best, best_sign


def is_canonical(word: str) -> bool:
    result = canonicalize(word)
    return result is not None and result == (word, 1)


def w_runs(word: str) -> list:
    """Lengths of the maximal cyclic runs of ``ω`` (runs may wrap around)."""
    if D not in word:
        return [len(word)]
    start = word.index(D)
    rolled = word[start:] + word[:start]
    return [len(run) for run in rolled.split(D) if run]


def is_even(word: str) -> bool:
    """True when every maximal cyclic run of ``ω`` has even length."""
    return all(length % 2 == 0 for length in w_runs(word))


def collapse(word: str) -> str:
    """Write an even word with at least one ``dω`` as its ``n``-bit form (``ω²`` -> ``1``)."""
    if D not in word or not is_even(word):
        raise ValueError(f"{word!r} is not an even word containing dω")
    start = word.index(D)
    rolled = word[start:] + word[:start]
    out = []
    for chunk in rolled.split(D)[1:]:
        out.append(D + W * (len(chunk) // 2))
    return "".join(out)


def duplicate(bits: str) -> str:
    """Inverse of :func:`collapse`: each ``1`` (an ``ω²``) becomes ``11``."""
    return bits.replace(W, W + W)


def smallest_period(s: str) -> int:
    for p in range(1, len(s) + 1):
        if len(s) % p == 0 and s[p:] + s[:p] == s:
            return p
    return len(s)


def cyclic_class_size(word: str) -> int:
    """Multiplicity of an even word in the expansion of ``(dω + ω²)^n``.

    Counts distinct rotations of the ``n``-bit form, i.e. rotations by whole
    ``dω`` and ``ω²`` blocks.
    """
    if canonicalize(word) is None:
        raise ValueError(f"{word!r} vanishes identically")
    return smallest_period(collapse(word))


def sort_key(word: str) -> Tuple[int, int]:
    return (-word.count(D), int(word, 2))


class FormSum(Mapping):
    """Rational linear combination of canonical words of a common degree.

    Keys are canonicalized on construction; vanishing words and zero
    coefficients are dropped.  Iteration follows :func:`sort_key`.
    """

    __slots__ = ("_terms", "_order")

    def __init__(self, terms: Union[Mapping[str, Number], Iterable[Tuple[str, Number]], None] = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in items:
                if not coeff:
                    continue
                hit = canonicalize(validate_word(word))
                if hit is None:
                    continue
                canon, sign = hit
                acc[canon] = acc.get(canon, 0) + sign * Fraction(coeff)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        degrees = {degree(w) for w in self._terms}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees in FormSum: {sorted(degrees)}")
        self._order = None

    @classmethod
    def _raw(cls, terms: dict) -> "FormSum":
        # terms already canonical and nonzero
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._order = None
        return obj

    def __getitem__(self, word: str) -> Fraction:
        return self._terms[word]

    def get(self, word, default=Fraction(0)):
        return self._terms.get(word, default)

    def __iter__(self) -> Iterator[str]:
        if self._order is None:
            self._order = sorted(self._terms, key=sort_key)
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FormSum):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @property
    def degree(self) -> Optional[int]:
        for word in self._terms:
            return degree(word)
        return None

    def __add__(self, other: "FormSum") -> "FormSum":
        if not isinstance(other, FormSum):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            value = acc.get(w, 0) + c
            if value:
                acc[w] = value
            else:
                acc.pop(w, None)
        if acc and self and other and self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        return FormSum._raw(acc)

    def __neg__(self) -> "FormSum":
        return FormSum._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "FormSum") -> "FormSum":
        if not isinstance(other, FormSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Number) -> "FormSum":
        scalar = Fraction(scalar)
        if scalar == 0:
            return FormSum()
        return FormSum._raw({w: c * scalar for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> "FormSum":
        return self * (1 / Fraction(scalar))

    def __repr__(self) -> str:
        inner = ", ".join(f"{w!r}: {c}" for w, c in self.items())
        return f"FormSum({{{inner}}})"


def leibniz_terms(word: str) -> Iterator[Tuple[int, int, str]]:
    """Yield ``(position, sign, replaced_word)`` for ``d`` hitting each ``ω``."""
    prefix = 0
    for j, factor in enumerate(word):
        if factor == W:
            sign = -1 if prefix % 2 else 1
            yield j, sign, word[:j] + D + word[j + 1:]
        prefix += factor_degree(factor)


@lru_cache(maxsize=None)
def _d_word(word: str) -> FormSum:
    return FormSum((w, s) for _, s, w in leibniz_terms(word))


def exterior_derivative(form: Union[str, FormSum]) -> FormSum:
    """Graded Leibniz rule with ``d(dω) = 0`` and ``d(ω) = dω``, extended linearly."""
    if isinstance(form, str):
        return _d_word(validate_word(form))
    acc: dict = {}
    for word, coeff in form.items():
        for w, c in _d_word(word).items():
            acc[w] = acc.get(w, 0) + coeff * c
    return FormSum._raw({w: c for w, c in acc.items() if c})
