"""Per-partition linear systems and assembly of the Chern-Simons potential."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .expansion import PartitionSet, check_half_dimension, enumerate_partition_sets, pd_expansion
from .ibp import IbpEquation, generate_equations
from .linalg import RatMatrix, integer_content_normalize, left_null_space, rank, solve_ones_normalization
from .words import FormSum, exterior_derivative, sort_key


class InconsistentEquation(RuntimeError):
    """An assembled row does not reproduce its IBP identity."""


@dataclass(frozen=True)
class PartitionSystem:
    """``m_even (k_i s_i) = d(u_d) + m_odd u_odd`` for one partition set.

    Row ``r`` is the IBP equation ``equations[r]`` multiplied by the class
    size of its left-hand word, so ``u_d[r]`` is a signed, scaled d-term.
    """

    n: int
    a: int
    u_even: Tuple[Tuple[int, str], ...]
    u_d: Tuple[FormSum, ...]
    u_odd: Tuple[str, ...]
    m_even: RatMatrix
    m_odd: RatMatrix
    equations: Tuple[IbpEquation, ...]

    @property
    def raw_count(self) -> int:
        return self.a * len(self.u_even)

    def row_identity(self, r: int) -> Tuple[FormSum, FormSum]:
        """``(left, right)`` forms of row ``r``; right carries ``d`` already applied."""
        even_row, odd_row = self.m_even.entries[r], self.m_odd.entries[r]
        left = FormSum((w, even_row[i] * k) for i, (k, w) in enumerate(self.u_even) if even_row[i])
        right = exterior_derivative(self.u_d[r]) + FormSum(
            (w, odd_row[j]) for j, w in enumerate(self.u_odd) if odd_row[j])
        return left, right


def build_system(partition: PartitionSet, equations: Optional[List[IbpEquation]] = None) -> PartitionSystem:
    if partition.a < 1:
        raise ValueError("partition sets with a = 0 carry no equations")
    if equations is None:
        equations = generate_equations(partition)
    index = {w: i for i, w in enumerate(partition.words)}
    sizes = partition.class_sizes
    odd_words = sorted({w for eq in equations for w in eq.odd_side}, key=sort_key)
    odd_index = {w: j for j, w in enumerate(odd_words)}
    even_rows, odd_rows, u_d = [], [], []
    for eq in equations:
        scale = sizes[index[eq.lhs]]
        even = [Fraction(0)] * len(sizes)
        even[index[eq.lhs]] += 1
        for w, c in eq.even_side.items():
            if w not in index:
                raise InconsistentEquation(f"even word {w} outside partition a={partition.a}")
            even[index[w]] -= c
        even_rows.append([scale * x / k for x, k in zip(even, sizes)])
        odd = [Fraction(0)] * len(odd_words)
        for w, c in eq.odd_side.items():
            odd[odd_index[w]] = scale * c
        odd_rows.append(odd)
        u_d.append(FormSum({eq.dterm: scale * eq.dsign}))
    system = PartitionSystem(
        n=partition.n,
        a=partition.a,
        u_even=tuple((k, w) for w, k in partition.representatives),
        u_d=tuple(u_d),
        u_odd=tuple(odd_words),
        m_even=RatMatrix(even_rows, cols=len(sizes)),
        m_odd=RatMatrix(odd_rows, cols=len(odd_words)),
        equations=tuple(equations),
    )
    for r in range(len(equations)):
        left, right = system.row_identity(r)
        if left != right:
            raise InconsistentEquation(f"row {r} of a={partition.a} fails re-verification")
    return system


@dataclass(frozen=True)
class PartitionResult:
    """Solved contribution of one partition set plus bookkeeping."""

    a: int
    contribution: FormSum
    k: Fraction
    kappa: Tuple[int, ...]
    raw_count: int
    distinct_dterms: int
    rank: int
    null_dimension: int
    relations: Tuple[FormSum, ...] = field(default=())

    def provenance(self) -> dict:
        return {
            "a": self.a,
            "k": str(self.k),
            "kappa": list(self.kappa),
            "rawEquations": self.raw_count,
            "distinctDterms": self.distinct_dterms,
            "rank": self.rank,
            "nullDimension": self.null_dimension,
            "relations": len(self.relations),
            "terms": len(self.contribution),
        }


def relation_rows(sys: PartitionSystem) -> RatMatrix:
    """Left null space of ``[m_even | m_odd]``: row combinations with closed d-terms."""
    return left_null_space(sys.m_even.hstack(sys.m_odd))


def derivative_relations(sys: PartitionSystem, null: Optional[RatMatrix] = None) -> Tuple[FormSum, ...]:
    """Combinations of d-terms whose exterior derivative vanishes."""
    if null is None:
        null = relation_rows(sys)
    out = []
    for r in range(null.rows):
        ints, _ = integer_content_normalize(null.row(r))
        rel = FormSum()
        for c, ud in zip(ints, sys.u_d):
            if c:
                rel = rel + ud * c
        out.append(rel)
    return tuple(out)


def partition_contribution(sys: PartitionSystem) -> PartitionResult:
    """``(1/k) kappa . u_d`` with ``kappa m_odd = 0`` and ``kappa m_even = k (1..1)``."""
    k_basis = left_null_space(sys.m_odd) if sys.m_odd.cols else RatMatrix.identity(sys.m_odd.rows)
    null = relation_rows(sys)
    kappa, k = solve_ones_normalization(k_basis, sys.m_even, relations=null)
    contribution = FormSum()
    for c, ud in zip(kappa, sys.u_d):
        if c:
            contribution = contribution + ud * Fraction(c, 1)
    contribution = contribution / k
    full_rank = sys.m_even.rows - null.rows
    return PartitionResult(
        a=sys.a,
        contribution=contribution,
        k=k,
        kappa=tuple(kappa),
        raw_count=sys.raw_count,
        distinct_dterms=len(sys.u_d),
        rank=full_rank,
        null_dimension=k_basis.rows,
        relations=derivative_relations(sys, null),
    )


def solve_partition(n: int, a: int) -> PartitionResult:
    return partition_contribution(build_system(enumerate_partition_sets(n)[a]))


@dataclass(frozen=True)
class CsPotential:
    n: int
    terms: FormSum
    partitions: Tuple[PartitionResult, ...]

    @property
    def dimension(self) -> int:
        return 2 * self.n

    def provenance(self) -> List[dict]:
        return [p.provenance() for p in self.partitions]


def default_jobs() -> int:
    env = os.environ.get("CSFORGE_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def assemble(n: int, jobs: Optional[int] = 1) -> CsPotential:
    """Sum the partition contributions for ``a = 1..n``."""
    check_half_dimension(n)
    jobs = default_jobs() if jobs is None else jobs
    a_values = list(range(1, n + 1))
    if jobs > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as pool:
            results = list(pool.map(solve_partition, [n] * n, a_values))
    else:
        results = [solve_partition(n, a) for a in a_values]
    total = FormSum()
    for res in results:
        total = total + res.contribution
    return CsPotential(n=n, terms=total, partitions=tuple(results))


@dataclass(frozen=True)
class VerifyResult:
    passed: bool
    residual: FormSum

    def __bool__(self) -> bool:
        return self.passed


def verify(n: int, potential) -> VerifyResult:
    """Check ``d(potential) == pd_expansion(n)`` exactly."""
    terms = potential.terms if isinstance(potential, CsPotential) else potential
    residual = exterior_derivative(terms) - pd_expansion(n)
    return VerifyResult(not residual, residual)


def compare_potential(n: int, computed: FormSum, reference: FormSum) -> str:
    """``"exact"``, ``"closed"`` (differs by a closed form, both verify) or ``"fail"``."""
    if computed == reference:
        return "exact"
    if verify(n, computed) and not exterior_derivative(computed - reference):
        return "closed"
    return "fail"


def independent_equation_count(n: int, jobs: Optional[int] = 1) -> Dict[str, int]:
    """Equation counts summed over ``a = 1..n`` under several definitions.

    ``distinctDterms``: IBP equations left after keying on the canonical
    d-term.  ``rankCount``: rank of the stacked ``[m_even | m_odd]`` blocks.
    ``usedEquations``: equations carrying a nonzero weight in ``kappa``.
    ``potentialTerms``: number of terms in the assembled potential.
    """
    pot = assemble(n, jobs=jobs)
    return {
        "distinctDterms": sum(p.distinct_dterms for p in pot.partitions),
        "rankCount": sum(p.rank for p in pot.partitions),
        "usedEquations": sum(sum(1 for c in p.kappa if c) for p in pot.partitions),
        "potentialTerms": len(pot.terms),
    }
