"""Exact linear algebra over the rationals.

Elimination runs on sparse integer rows (fraction free, each row divided by
its content after every update) and only converts back to ``Fraction`` for
the final reduced echelon output.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

SparseRow = Dict[int, int]


class NoNormalizedRow(ArithmeticError):
    """No combination of null-space rows reaches the all-ones direction."""


class RatMatrix:
    """Dense matrix of ``Fraction`` entries with explicit shape."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence], cols: Optional[int] = None):
        data = [[x if type(x) is Fraction else Fraction(x) for x in row] for row in entries]
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.entries = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> List[Fraction]:
        return list(self.entries[i])

    def column(self, j: int) -> List[Fraction]:
        return [r[j] for r in self.entries]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([list(c) for c in zip(*self.entries)] if self.rows else
                         [[] for _ in range(self.cols)], cols=self.rows)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return RatMatrix([a + b for a, b in zip(self.entries, other.entries)], cols=self.cols + other.cols)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.entries:
            acc = [Fraction(0)] * other.cols
            for k, x in enumerate(row):
                if x:
                    for j, y in enumerate(other.entries[k]):
                        if y:
                            acc[j] += x * y
            out.append(acc)
        return RatMatrix(out, cols=other.cols)

    def vecmul(self, vec: Sequence) -> List[Fraction]:
        """Row vector times matrix."""
        if len(vec) != self.rows:
            raise ValueError("length mismatch")
        acc = [Fraction(0)] * self.cols
        for x, row in zip(vec, self.entries):
            if x:
                for j, y in enumerate(row):
                    if y:
                        acc[j] += x * y
        return acc

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def _integer_row(values: Sequence, offset: int = 0) -> SparseRow:
    row = {j + offset: Fraction(x) for j, x in enumerate(values) if x}
    if not row:
        return {}
    lcm = 1
    for x in row.values():
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    return _reduce({j: int(x * lcm) for j, x in row.items()})


def _reduce(row: SparseRow) -> SparseRow:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        row = {j: x // g for j, x in row.items()}
    if row and row[min(row)] < 0:
        row = {j: -x for j, x in row.items()}
    return row


def _eliminate(row: SparseRow, pivot: SparseRow, col: int) -> SparseRow:
    p, q = pivot[col], row[col]
    g = gcd(p, q)
    p, q = p // g, q // g
    out = {j: p * x for j, x in row.items()}
    for j, y in pivot.items():
        v = out.get(j, 0) - q * y
        if v:
            out[j] = v
        else:
            out.pop(j, None)
    return _reduce(out) if out else out


def _echelon(rows: Iterable[SparseRow], limit: Optional[int] = None):
    """Incremental echelon form.

    Returns ``(pivots, leftovers)``: ``pivots`` maps leading column to row;
    ``leftovers`` are reduced rows with nothing left below column ``limit``.
    """
    pivots: Dict[int, SparseRow] = {}
    leftovers: List[SparseRow] = []
    for row in rows:
        while row:
            lead = min(row)
            if limit is not None and lead >= limit:
                leftovers.append(row)
                break
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            row = _eliminate(row, piv, lead)
    return pivots, leftovers


def _rref(rows: Iterable[SparseRow], ncols: int) -> List[List[Fraction]]:
    pivots, _ = _echelon(rows)
    order = sorted(pivots)
    for i in reversed(range(len(order))):
        col = order[i]
        for later in order[:i]:
            r = pivots[later]
            if col in r:
                pivots[later] = _eliminate(r, pivots[col], col)
    out = []
    for col in order:
        r = pivots[col]
        lead = r[col]
        dense = [Fraction(0)] * ncols
        for j, x in r.items():
            dense[j] = Fraction(x, lead)
        out.append(dense)
    return out


def rref(m: RatMatrix) -> RatMatrix:
    """Nonzero rows of the reduced row echelon form (leading entries 1)."""
    return RatMatrix(_rref((_integer_row(r) for r in m.entries), m.cols), cols=m.cols)


def rank(m: RatMatrix) -> int:
    pivots, _ = _echelon(_integer_row(r) for r in m.entries)
    return len(pivots)


def rank_sparse(rows: Iterable[Dict[int, Fraction]]) -> int:
    """Rank of a matrix given as sparse ``{column: value}`` rows."""
    ints = []
    for r in rows:
        cols = sorted(c for c in r if r[c])
        if cols:
            packed = _integer_row([r[c] for c in cols])
            ints.append(_reduce({cols[j]: x for j, x in packed.items()}))
    pivots, _ = _echelon(ints)
    return len(pivots)


def left_null_space(m: RatMatrix) -> RatMatrix:
    """Basis of ``{k : k m = 0}`` in reduced echelon form."""
    if m.rows == 0:
        raise ValueError("left null space of an empty matrix")
    augmented = []
    for i, r in enumerate(m.entries):
        tag = [0] * m.rows
        tag[i] = 1
        augmented.append(_integer_row(list(r) + tag))
    _, leftovers = _echelon(augmented, limit=m.cols)
    shifted = [{j - m.cols: x for j, x in r.items()} for r in leftovers]
    return RatMatrix(_rref(shifted, m.rows), cols=m.rows)


def solve_left(m: RatMatrix, target: Sequence) -> Optional[List[Fraction]]:
    """A particular ``x`` with ``x m = target`` (free variables zero), or ``None``."""
    mt = m.transpose()
    aug = [list(row) + [Fraction(t)] for row, t in zip(mt.entries, target)]
    if len(aug) != m.cols:
        raise ValueError("target length mismatch")
    reduced = _rref((_integer_row(r) for r in aug), m.rows + 1)
    x = [Fraction(0)] * m.rows
    for r in reduced:
        lead = next(j for j, v in enumerate(r) if v)
        if lead == m.rows:
            return None
        x[lead] = r[m.rows]
    return x


def integer_content_normalize(vec: Sequence) -> Tuple[List[int], Fraction]:
    """Scale ``vec`` to coprime integers with a positive leading entry; return ``(ints, factor)``."""
    fracs = [Fraction(x) for x in vec]
    nz = [x for x in fracs if x]
    if not nz:
        raise ValueError("zero vector")
    lcm = 1
    for x in nz:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    g = 0
    for x in nz:
        g = gcd(g, int(x * lcm))
    factor = Fraction(lcm, g)
    return [int(x * factor) for x in fracs], factor


def reduce_modulo(vec: Sequence, basis: RatMatrix) -> List[Fraction]:
    """Canonical representative of ``vec`` modulo the row span of ``basis``.

    The span is put in echelon form pivoting on the last nonzero column of
    each row, and ``vec`` is cleared at every such pivot.
    """
    out = [Fraction(x) for x in vec]
    if basis.rows == 0:
        return out
    flipped = RatMatrix([row[::-1] for row in basis.entries], cols=basis.cols)
    for row in rref(flipped).entries:
        row = row[::-1]
        pivot = max(j for j, x in enumerate(row) if x)
        c = out[pivot]
        if c:
            out = [x - c * y for x, y in zip(out, row)]
    return out


def solve_ones_normalization(k_basis: RatMatrix, m_even: RatMatrix,
                             relations: Optional[RatMatrix] = None) -> Tuple[List[int], Fraction]:
    """Combine null-space rows so that ``kappa m_even = k (1, ..., 1)``.

    Returns ``kappa`` as coprime integers together with ``k > 0``.  When
    ``relations`` (rows annihilating both ``m_even`` and the odd block) is
    given, ``kappa`` is reduced modulo their span via :func:`reduce_modulo`.
    """
    if k_basis.rows == 0:
        raise NoNormalizedRow("empty null-space basis")
    projected = k_basis @ m_even
    coeffs = solve_left(projected, [1] * m_even.cols)
    if coeffs is None:
        raise NoNormalizedRow("no null-space combination is proportional to the all-ones row")
    kappa = k_basis.vecmul(coeffs)
    if relations is not None:
        kappa = reduce_modulo(kappa, relations)
    ints, factor = integer_content_normalize(kappa)
    k = factor
    if k < 0:
        ints, k = [-x for x in ints], -k
    return ints, k
