"""Integration by parts on the ``dω`` factors of even words."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .expansion import PartitionSet
from .words import D, W, FormSum, canonicalize, exterior_derivative, is_canonical, is_even, leibniz_terms


@dataclass(frozen=True)
class IbpEquation:
    """``lhs = dsign * d(dterm) + even_side + odd_side``.

    ``even_side`` may contain ``lhs`` itself (the regrouped self-term); see
    :attr:`self_coefficient`.
    """

    lhs: str
    position: int
    dterm: str
    dsign: int
    even_side: FormSum
    odd_side: FormSum

    @property
    def self_coefficient(self) -> Fraction:
        """Coefficient of ``lhs`` once self-terms are moved to the left."""
        return 1 - self.even_side.get(self.lhs)

    def residual(self) -> FormSum:
        rhs = exterior_derivative(self.dterm) * self.dsign + self.even_side + self.odd_side
        return FormSum({self.lhs: 1}) - rhs

    def verify(self) -> bool:
        return not self.residual()


def ibp_at(word: str, position: int) -> IbpEquation:
    """Trade the ``dω`` at ``position`` for ``d`` acting on an ``ω``."""
    if not is_canonical(word) or not is_even(word):
        raise ValueError(f"{word!r} is not a canonical even word")
    if not 0 <= position < len(word) or word[position] != D:
        raise ValueError(f"no dω at position {position} of {word!r}")
    lifted = word[:position] + W + word[position + 1:]
    self_sign = None
    corrections: Dict[str, int] = {}
    for j, sign, term in leibniz_terms(lifted):
        if j == position:
            self_sign = sign
        else:
            corrections[term] = corrections.get(term, 0) + sign
    # word = s*d(lifted) - s*sum(corrections)
    moved = FormSum((t, -self_sign * c) for t, c in corrections.items())
    even = FormSum({w: c for w, c in moved.items() if is_even(w)})
    odd = FormSum({w: c for w, c in moved.items() if not is_even(w)})
    dterm, rot = canonicalize(lifted)
    assert rot == 1  # odd total degree: rotations are sign free
    return IbpEquation(word, position, dterm, self_sign, even, odd)


def raw_equations(partition: PartitionSet) -> List[IbpEquation]:
    """Every IBP equation, one per ``dω`` of every representative."""
    out = []
    for word, _ in partition.representatives:
        for pos, factor in enumerate(word):
            if factor == D:
                out.append(ibp_at(word, pos))
    return out


def generate_equations(partition: PartitionSet) -> List[IbpEquation]:
    """IBP equations with duplicates removed, keyed on the canonical d-term."""
    kept: Dict[str, IbpEquation] = {}
    for eq in raw_equations(partition):
        kept.setdefault(eq.dterm, eq)
    return list(kept.values())
