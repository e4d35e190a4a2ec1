"""Multiplicity solving: equate the generalized Schur function with the
orbital decomposition and solve the exact linear system.

The unknowns are the orbit multiplicities of the dominant weights obtained
from all partitions of the height; the equations come from matching
coefficients of x-monomials.  The system must be exactly consistent with a
unique, integral, nonnegative solution; anything else signals a bug in the
degeneration machinery and fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .lattice import (
    AlgebraContext,
    DominantWeight,
    height,
    orbit_size,
    sub_Q_lambda1,
)
from .orbitchar import orbit_char_x
from .polyengine import XPoly, _grlex_key
from .schur import generalized_schur, schur_context


class SolverError(RuntimeError):
    """Singular, inconsistent, or non-integral multiplicity system."""


@dataclass(frozen=True)
class MultiplicityTable:
    """Orbit multiplicities of one irreducible representation.

    ``entries`` pairs each dominant weight of the height class with its
    multiplicity, in the deterministic enumeration order.
    """

    highest_weight: DominantWeight
    entries: tuple[tuple[DominantWeight, int], ...]
    dimension: int

    def multiplicity(self, w: DominantWeight) -> int:
        for weight, mult in self.entries:
            if weight == w:
                return mult
        raise KeyError(f"{w} is not in the height class of {self.highest_weight}")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def solve_multiplicities(w: DominantWeight) -> MultiplicityTable:
    """Solve the x-monomial linear system for all orbit multiplicities.

    Asserts that the solution is unique, integral, and nonnegative, and
    that the highest weight itself carries multiplicity one.
    """
    ctx = w.context
    q = height(w)
    if q == 0:
        return MultiplicityTable(w, ((w, 1),), 1)

    members = sub_Q_lambda1(q, ctx)
    columns = [orbit_char_x(m.to_partition(), ctx) for m in members]
    rhs = generalized_schur(w.to_partition(), schur_context(ctx.N))

    support: set[tuple[int, ...]] = set(rhs.terms)
    for col in columns:
        support.update(col.terms)
    monomials = sorted(support, key=_grlex_key, reverse=True)

    solution = _solve_exact(columns, rhs, monomials)

    entries = []
    dim = 0
    for member, value in zip(members, solution):
        if value.denominator != 1 or value < 0:
            raise SolverError(
                f"multiplicity of {member} solved to {value}; expected a nonnegative integer"
            )
        mult = int(value)
        entries.append((member, mult))
        dim += mult * orbit_size(member)
    table = MultiplicityTable(w, tuple(entries), dim)
    if table.multiplicity(w) != 1:
        raise SolverError(f"highest weight {w} solved to multiplicity {table.multiplicity(w)}")
    return table


def _solve_exact(
    columns: list[XPoly],
    rhs: XPoly,
    monomials: list[tuple[int, ...]],
) -> list[Fraction]:
    """Unique exact solution of the (possibly overdetermined) system.

    Fraction-free elimination on the integer-scaled rows; pivot columns
    are visited largest-support first for reproducibility.  Raises
    :class:`SolverError` when a pivot is missing (non-unique solution) or
    a residual row is nonzero (inconsistent system).
    """
    n_unknowns = len(columns)
    rows: list[list[int]] = []
    for mono in monomials:
        vals = [col.terms.get(mono, Fraction(0)) for col in columns]
        vals.append(rhs.terms.get(mono, Fraction(0)))
        scale = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * scale) for v in vals])

    order = sorted(range(n_unknowns), key=lambda c: (-len(columns[c].terms), c))

    prev = 1
    for step, col in enumerate(order):
        pivot_row = next(
            (i for i in range(step, len(rows)) if rows[i][col]), None
        )
        if pivot_row is None:
            raise SolverError(f"no pivot for unknown {col}: system is singular")
        rows[step], rows[pivot_row] = rows[pivot_row], rows[step]
        pivot = rows[step][col]
        for i in range(step + 1, len(rows)):
            if not any(rows[i]):
                continue
            factor = rows[i][col]
            new_row = []
            for j in range(n_unknowns + 1):
                value, rem = divmod(pivot * rows[i][j] - factor * rows[step][j], prev)
                if rem:
                    raise SolverError("fraction-free elimination lost exactness")
                new_row.append(value)
            rows[i] = new_row
        prev = pivot

    for i in range(n_unknowns, len(rows)):
        if any(rows[i]):
            raise SolverError("system is inconsistent: residual equation is nonzero")

    solution: list[Fraction | None] = [None] * n_unknowns
    for step in reversed(range(n_unknowns)):
        col = order[step]
        row = rows[step]
        acc = Fraction(row[-1])
        for later in range(step + 1, n_unknowns):
            c = order[later]
            acc -= row[c] * solution[c]
        solution[col] = acc / row[col]
    return solution  # type: ignore[return-value]


def dimension(w: DominantWeight) -> int:
    """Dimension by the exact product formula over positive root pairs."""
    n = w.context.N
    vec = w.mu_vector()
    shifted = [vec[i] + n - 1 - i for i in range(n)]
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= shifted[i] - shifted[j]
            den *= j - i
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"dimension formula gave non-integer {num}/{den} for {w}")
    return value
