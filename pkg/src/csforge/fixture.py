"""Replay of the full D = 8 derivation with every intermediate identity checked."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from .assembler import assemble, build_system, partition_contribution
from .expansion import enumerate_partition_sets, pd_expansion
from .ibp import ibp_at
from .linalg import RatMatrix, integer_content_normalize, left_null_space
from .render import to_text
from .words import FormSum

# reference values for D = 8, words in canonical rotation
P8 = FormSum({"0000": 1, "00011": 4, "001111": 4, "011011": 2, "0111111": 4})
K7_REFERENCE = FormSum({"0001": 1, "00111": Fraction(8, 5), "01011": Fraction(4, 5),
                        "011111": 2, "1111111": Fraction(4, 7)})


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    passed: bool


def _check(name: str, expected, actual) -> Check:
    return Check(name, str(expected), str(actual), expected == actual)


def d8_derivation_checks(echo: Optional[Callable[[str], None]] = None) -> List[Check]:
    say = echo or (lambda _line: None)
    checks: List[Check] = []
    parts = enumerate_partition_sets(4)

    say(f"P_8 = {to_text(pd_expansion(4))}")
    checks.append(_check("P_8 expansion", P8, pd_expansion(4)))

    eq = ibp_at("0000", 0)
    say(f"(dω)^4 = {eq.dsign:+d} d[{eq.dterm}] (corrections: {len(eq.even_side) + len(eq.odd_side)})")
    checks.append(_check("(dω)^4 is a pure total derivative",
                         ("0001", 1, 0), (eq.dterm, eq.dsign, len(eq.even_side) + len(eq.odd_side))))

    sys31 = build_system(parts[3])
    for r, e in enumerate(sys31.equations):
        say(f"a=3 row {r}: {e.lhs}@{e.position} -> d[{e.dterm}], even {dict(e.even_side)}, odd {dict(e.odd_side)}")
    checks.append(_check("a=3 even column", [Fraction(2), Fraction(1)], sys31.m_even.column(0)))
    checks.append(_check("a=3 d-terms", [FormSum({"00111": 4}), FormSum({"01011": 4})], list(sys31.u_d)))
    checks.append(_check("a=3 odd column (per unit of class size 4)",
                         [Fraction(1), Fraction(-2)], [x / 4 for x in sys31.m_odd.column(0)]))
    k31, _ = integer_content_normalize(left_null_space(sys31.m_odd).row(0))
    checks.append(_check("K for a=3 proportional to (2, 1)", [2, 1], k31))
    res31 = partition_contribution(sys31)
    say(f"a=3 contribution: {to_text(res31.contribution)}")
    checks.append(_check("a=3 contribution", FormSum({"00111": Fraction(8, 5), "01011": Fraction(4, 5)}),
                         res31.contribution))

    sys22 = build_system(parts[2])
    checks.append(_check("a=2 single equation", 1, sys22.m_even.rows))
    checks.append(_check("a=2 even row", [Fraction(2), Fraction(2)], sys22.m_even.row(0)))
    res22 = partition_contribution(sys22)
    checks.append(_check("K for a=2", Fraction(1, 2), Fraction(res22.kappa[0]) / res22.k))
    say(f"a=2 contribution: {to_text(res22.contribution)}")
    checks.append(_check("a=2 contribution", FormSum({"011111": 2}), res22.contribution))

    eq13 = ibp_at("0111111", 0)
    say(f"a=1: {eq13.self_coefficient} (dω)∧ω^6 = d[{eq13.dterm}] + ...")
    checks.append(_check("a=1 corrections all equal the lhs", FormSum({"0111111": -6}), eq13.even_side))
    res13 = partition_contribution(build_system(parts[1]))
    checks.append(_check("K for a=1", Fraction(1, 7), Fraction(res13.kappa[0]) / res13.k))
    checks.append(_check("a=1 contribution", FormSum({"1111111": Fraction(4, 7)}), res13.contribution))

    pot = assemble(4)
    say(f"K_7 = {to_text(pot.terms)}")
    checks.append(_check("assembled potential", K7_REFERENCE, pot.terms))
    return checks
