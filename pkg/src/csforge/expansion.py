"""Even-term classes in the expansion of ``(dω + ω²)^n``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .words import FormSum, canonicalize, duplicate


def check_half_dimension(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"half-dimension n must be an integer >= 2, got {n!r}")
    return n


@dataclass(frozen=True)
class PartitionSet:
    """Distinct cyclic classes of even words with ``a`` factors of ``dω``.

    ``representatives`` holds ``(canonical_word, class_size)`` pairs in the
    order the classes are met when walking ``n``-bit strings upward.  The
    ``a = 0`` set holds only ``ω^{2n}``, which vanishes and is flagged by
    ``vanished`` instead of being listed.
    """

    n: int
    a: int
    representatives: Tuple[Tuple[str, int], ...]
    vanished: bool = False

    @property
    def words(self) -> Tuple[str, ...]:
        return tuple(w for w, _ in self.representatives)

    @property
    def class_sizes(self) -> Tuple[int, ...]:
        return tuple(k for _, k in self.representatives)

    def class_size(self, word: str) -> int:
        for w, k in self.representatives:
            if w == word:
                return k
        raise KeyError(word)

    @property
    def count_total(self) -> int:
        """Size of the full permutation set, vanished class included."""
        return sum(self.class_sizes) + (1 if self.vanished else 0)


@lru_cache(maxsize=None)
def enumerate_partition_sets(n: int) -> Tuple[PartitionSet, ...]:
    """Split all ``n``-bit strings into cyclic classes, grouped by number of zeros.

    Returns one :class:`PartitionSet` per ``a = 0..n``.
    """
    check_half_dimension(n)
    seen = bytearray(1 << n)
    mask = (1 << n) - 1
    groups: Dict[int, List[Tuple[str, int]]] = {a: [] for a in range(n + 1)}
    vanished = {a: False for a in range(n + 1)}
    for x in range(1 << n):
        if seen[x]:
            continue
        orbit = set()
        y = x
        for _ in range(n):
            orbit.add(y)
            y = ((y << 1) | (y >> (n - 1))) & mask
        for y in orbit:
            seen[y] = 1
        bits = format(x, f"0{n}b")
        a = bits.count("0")
        hit = canonicalize(duplicate(bits))
        if hit is None:
            vanished[a] = True
            continue
        word, sign = hit
        # whole-block rotations of an even word never flip the sign
        assert sign == 1, (bits, word, sign)
        groups[a].append((word, len(orbit)))
    return tuple(
        PartitionSet(n=n, a=a, representatives=tuple(groups[a]), vanished=vanished[a])
        for a in range(n + 1)
    )


def partition_set(n: int, a: int) -> PartitionSet:
    check_half_dimension(n)
    if not 0 <= a <= n:
        raise ValueError(f"a must lie in [0, {n}], got {a}")
    return enumerate_partition_sets(n)[a]


@lru_cache(maxsize=None)
def pd_expansion(n: int) -> FormSum:
    """The unnormalized density ``Tr (dω + ω²)^n`` as a degree-``2n`` form."""
    terms = {}
    for part in enumerate_partition_sets(n):
        for word, size in part.representatives:
            terms[word] = size
    return FormSum(terms)


def coefficient_table(n: int) -> Dict[int, List[int]]:
    """Class sizes per ``a``, largest first; the vanished ``ω^{2n}`` class counts as 1."""
    table = {}
    for part in enumerate_partition_sets(n):
        sizes = list(part.class_sizes)
        if part.vanished:
            sizes.append(1)
        table[part.a] = sorted(sizes, reverse=True)
    return table


def format_multiset(sizes: List[int]) -> str:
    """Compact ``6^2 3`` style rendering of a class-size multiset."""
    counts = Counter(sizes)
    parts = []
    for value in sorted(counts, reverse=True):
        c = counts[value]
        parts.append(f"{value}^{c}" if c > 1 else str(value))
    return " ".join(parts)
