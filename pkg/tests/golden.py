"""Published reference data, transcribed by hand.

Potentials are written as ``ω∧( ... )`` with the bracket in a compact
notation: ``D^k`` for ``(dω)^k``, ``w^k`` for ``ω^k``, ``.`` for the wedge.
"""

from fractions import Fraction

from csforge.words import FormSum

POTENTIALS = {
    4: "D + 2/3 w^2",
    6: "D^2 + 3/2 D.w^2 + 3/5 w^4",
    8: "D^3 + 8/5 D^2.w^2 + 4/5 D.w^2.D + 2 D.w^4 + 4/7 w^6",
    10: "D^4 + 5/3 D^3.w^2 + 5/3 D^2.w^2.D + 15/7 D^2.w^4 + 5/7 D.w^4.D"
        " + 10/7 D.w^2.D.w^2 + 5/2 D.w^6 + 5/9 w^8",
    12: "D^5 + 12/7 D^4.w^2 + 12/7 D^3.w^2.D + 6/7 D^2.w^2.D^2 + 9/4 D^3.w^4"
        " + 9/4 D^2.w^4.D - 3/4 D.w^4.D^2 + 3 D^2.w^2.D.w^2 + 3/4 D.w^2.D.w^2.D"
        " + 8/3 D^2.w^6 + 2/3 D.w^6.D + 2 D.w^5.D.w + 4/3 D.w^3.D.w^3 + 3 D.w^8 + 6/11 w^10",
}

# (D, a) -> (|S_dist|, raw equation count, m)
EQUATION_TABLE = {
    (4, 1): (1, 1, 1),
    (6, 1): (1, 1, 1), (6, 2): (1, 2, 1),
    (8, 1): (1, 1, 1), (8, 2): (2, 4, 1), (8, 3): (1, 3, 2),
    (10, 1): (1, 1, 1), (10, 2): (2, 4, 1), (10, 3): (2, 6, 3), (10, 4): (1, 4, 2),
    (12, 1): (1, 1, 1), (12, 2): (3, 6, 1), (12, 3): (4, 12, 4), (12, 4): (3, 12, 4), (12, 5): (1, 5, 3),
}
# the D=12, a=4 cell is annotated: 5 distinct d-terms, reduced to 4 by one relation
D12_FOOTNOTE = {"distinct": 5, "m": 4}

EQUATION_TOTALS = {14: 24, 16: 49, 18: 87, 20: 165, 22: 302, 24: 598, 26: 1081, 28: 2137, 30: 3954, 32: 7513}


def _monomial(text):
    word = ""
    for factor in text.split("."):
        base, _, exp = factor.partition("^")
        word += {"D": "0", "w": "1"}[base] * int(exp or 1)
    return word


def parse_bracket(text):
    """``ω∧(bracket)`` as a FormSum."""
    terms = []
    sign = 1
    for tok in text.replace(" - ", " + -").split(" + "):
        tok = tok.strip()
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("- ")
        coeff, _, mono = tok.rpartition(" ")
        terms.append(("1" + _monomial(mono), sign * Fraction(coeff or 1)))
    return FormSum(terms)


def reference_potential(dim):
    return parse_bracket(POTENTIALS[dim])
