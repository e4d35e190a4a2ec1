"""Alternating sums over the Weyl group, specialized to the u-indeterminates.

The alternant of a shifted dominant weight is computed in production as an
N x N determinant of plain monomials; the signed sum over all permutations
exists only as a factorial-cost cross-check.  Characters come out of the
exact quotient of two alternants.  The product constraint on the u's is
never imposed here: alternants and their quotients live in the free
polynomial ring, where exact division is available, and the constraint
only enters when translating to and from the x-indeterminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .lattice import AlgebraContext, DominantWeight, Partition
from .orbitchar import orbit_char_u
from .polyengine import UPoly, XPoly, poly_det, poly_divide_exact, rationalize
from .schur import generalized_schur, schur_context


def _shifted_exponents(p: Partition, ctx: AlgebraContext) -> tuple[int, ...]:
    """Staircase-shifted part vector; strictly decreasing for a partition."""
    q = p.padded(ctx.N)
    n = ctx.N
    return tuple(q[j] + n - 1 - j for j in range(n))


def alternant_matrix(p: Partition, ctx: AlgebraContext) -> UPoly:
    """Alternant of the shifted weight as an exact monomial determinant.

    Entry (i, j) is u_i raised to the j-th shifted exponent.  The empty
    partition gives the Vandermonde determinant.
    """
    n = ctx.N
    exps = _shifted_exponents(p, ctx)
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            e = [0] * n
            e[i] = exps[j]
            row.append(UPoly.monomial(n, e, 1))
        matrix.append(row)
    return poly_det(matrix)


def alternant_sum(p: Partition, ctx: AlgebraContext) -> UPoly:
    """Alternant as the signed sum over all permutations (cross-check only).

    Factorial cost; restricted to N <= 8.  Cancellation handles repeated
    shifted exponents, so the result is zero whenever two coincide.
    """
    if ctx.N > 8:
        raise ValueError("permutation sum is a desk-scale cross-check; N <= 8 only")
    return _signed_permutation_sum(_shifted_exponents(p, ctx), ctx.N)


def _signed_permutation_sum(exps: tuple[int, ...], n: int) -> UPoly:
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        key = tuple(exps[perm[i]] for i in range(n))
        sign = -1 if inversions % 2 else 1
        acc = terms.get(key, 0) + sign
        if acc:
            terms[key] = acc
        else:
            del terms[key]
    return UPoly(n, terms)


def weyl_character_u(w: DominantWeight) -> UPoly:
    """Irreducible character as the exact quotient of two alternants.

    Inexact division cannot happen for a valid dominant weight; if it
    does, the alternant machinery is inconsistent and the error from the
    polynomial engine propagates.
    """
    ctx = w.context
    num = alternant_matrix(w.to_partition(), ctx)
    den = alternant_matrix(Partition(()), ctx)
    return poly_divide_exact(num, den)


def product_one_normal_form(p):
    """Canonical representative modulo (product of all variables) = 1.

    Each monomial is shifted down by its minimum exponent; the resulting
    minimum-zero monomials are a basis of the quotient ring, so two
    polynomials are congruent iff their normal forms are equal.
    """
    out: dict[tuple[int, ...], object] = {}
    for e, c in p.terms.items():
        low = min(e)
        if low:
            e = tuple(v - low for v in e)
        acc = out.get(e)
        if acc is None:
            out[e] = c
        else:
            acc = acc + c
            if acc:
                out[e] = acc
            else:
                del out[e]
    return type(p)._raw(p.nvars, out)


@dataclass(frozen=True)
class FactorizationReport:
    """Outcome of one alternant-factorization audit."""

    partition: Partition
    context: AlgebraContext
    ok: bool
    difference: XPoly

    def __str__(self) -> str:
        status = "ok" if self.ok else f"MISMATCH: {self.difference}"
        return f"{self.context} {self.partition}: {status}"


def verify_factorization(p: Partition, ctx: AlgebraContext) -> FactorizationReport:
    """Check that the shifted alternant equals Vandermonde times the Schur function.

    The generalized Schur function is pushed into the u-ring by replacing
    each x_i with the i-th power sum over i.  Degenerated Schur functions
    mix graded degrees, so both sides are compared in the normal form of
    the product-one quotient, where the factorization is an identity.
    Failure is reported as data, with the difference polynomial attached.
    """
    n = ctx.N
    power_sums = [
        rationalize(orbit_char_u(Partition((k,)), ctx)) * Fraction(1, k)
        for k in range(1, n)
    ]
    schur_u = generalized_schur(p, schur_context(n)).substitute(power_sums)
    lhs = product_one_normal_form(rationalize(alternant_matrix(p, ctx)))
    rhs = product_one_normal_form(
        rationalize(alternant_matrix(Partition(()), ctx)) * schur_u
    )
    difference = lhs - rhs
    return FactorizationReport(p, ctx, difference.is_zero, difference)
