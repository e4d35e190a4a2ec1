"""Weyl-orbit characters and their two polynomial realizations.

An orbit character is a monomial symmetric polynomial in u1..uN (each
distinct monomial exactly once).  It can equivalently be rewritten as a
polynomial in the power-sum generators and, from there, pushed into the
x-indeterminates via K(Q) -> Q*x_Q.  Because the product of all u's is
constrained to 1, the x-variables of degree >= N are not independent:
their expressions in x1..x(N-1) are produced here by the Newton recursion
with the top elementary symmetric polynomial pinned to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .lattice import AlgebraContext, Partition
from .polyengine import UPoly, XPoly


@dataclass(frozen=True)
class GeneratorExpr:
    """Formal polynomial in the power-sum generators with rational coefficients.

    Keys are descending-sorted multisets (Q1,...,Qm) standing for the
    product K(Q1)...K(Qm); the empty multiset is the constant 1.  A zero
    degree is dropped on construction since K(0) is 1 by convention.
    """

    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, ...], Fraction] = {}
        for multiset, coeff in self.terms.items():
            key = tuple(sorted((q for q in multiset if q != 0), reverse=True))
            if any(q < 0 for q in key):
                raise ValueError(f"generator degrees must be nonnegative, got {multiset}")
            c = clean.get(key, Fraction(0)) + Fraction(coeff)
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls) -> "GeneratorExpr":
        return cls({(): Fraction(1)})

    @classmethod
    def generator(cls, Q: int) -> "GeneratorExpr":
        return cls({(Q,): Fraction(1)})

    def __add__(self, other: "GeneratorExpr") -> "GeneratorExpr":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return GeneratorExpr(out)

    def __sub__(self, other: "GeneratorExpr") -> "GeneratorExpr":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, GeneratorExpr):
            out: dict[tuple[int, ...], Fraction] = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    key = tuple(sorted(ka + kb, reverse=True))
                    out[key] = out.get(key, Fraction(0)) + ca * cb
            return GeneratorExpr(out)
        return GeneratorExpr({k: c * Fraction(other) for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms, key=lambda k: (sum(k), len(k), k)):
            prod = "*".join(f"K({q})" for q in key) if key else "1"
            pieces.append(f"{self.terms[key]} {prod}")
        return " + ".join(pieces)


def orbit_char_u(p: Partition, ctx: AlgebraContext) -> UPoly:
    """Orbit character as a polynomial in u1..uN.

    Sum over all monomials with the parts of ``p`` placed at distinct
    variable indices, each distinct monomial counted once.  Partitions
    with more than N parts have no valid placement and give zero.
    """
    n = ctx.N
    if p.length > n:
        return UPoly.zero(n)
    groups = []
    for q in p.parts:
        if groups and groups[-1][0] == q:
            groups[-1][1] += 1
        else:
            groups.append([q, 1])
    terms: dict[tuple[int, ...], int] = {}

    def place(gi: int, free: tuple[int, ...], exps: list[int]):
        if gi == len(groups):
            terms[tuple(exps)] = 1
            return
        value, count = groups[gi]
        for chosen in combinations(free, count):
            for i in chosen:
                exps[i] = value
            remaining = tuple(i for i in free if i not in chosen)
            place(gi + 1, remaining, exps)
            for i in chosen:
                exps[i] = 0

    place(0, tuple(range(n)), [0] * n)
    return UPoly(n, terms)


_reduce_cache: dict[tuple[int, ...], GeneratorExpr] = {}


def reduce_to_generators(p: Partition) -> GeneratorExpr:
    """Rewrite an orbit character as a polynomial in the generators K(Q).

    Eliminates the largest part recursively: multiplying the shorter
    character by K(q1) reproduces the original (with multiplicity equal
    to the count of q1) plus characters where q1 merged into another
    part, each weighted by the merged value's multiplicity.  The result
    does not depend on the number of variables.
    """
    return _reduce(p.parts)


def _reduce(parts: tuple[int, ...]) -> GeneratorExpr:
    cached = _reduce_cache.get(parts)
    if cached is not None:
        return cached
    if len(parts) == 0:
        expr = GeneratorExpr.one()
    elif len(parts) == 1:
        expr = GeneratorExpr.generator(parts[0])
    else:
        q1 = parts[0]
        rest = parts[1:]
        r = parts.count(q1)
        expr = GeneratorExpr.generator(q1) * _reduce(rest)
        for v in sorted(set(rest), reverse=True):
            i = rest.index(v)
            merged = tuple(sorted(rest[:i] + (v + q1,) + rest[i + 1 :], reverse=True))
            expr = expr - merged.count(v + q1) * _reduce(merged)
        expr = expr * Fraction(1, r)
    _reduce_cache[parts] = expr
    return expr


_elem_cache: dict[tuple[int, int], XPoly] = {}
_psum_cache: dict[tuple[int, int], XPoly] = {}


def elementary_symmetric_x(n: int, k: int) -> XPoly:
    """Elementary symmetric polynomial of n variables, written in x1..x(n-1).

    Built by the Newton recursion from the power sums i*x_i; the top one
    is pinned to 1 (the degeneration constraint) and everything above
    vanishes.
    """
    nvars = n - 1
    if k == 0 or k == n:
        return XPoly.one(nvars)
    if k > n:
        return XPoly.zero(nvars)
    cached = _elem_cache.get((n, k))
    if cached is not None:
        return cached
    acc = XPoly.zero(nvars)
    for i in range(1, k + 1):
        term = elementary_symmetric_x(n, k - i) * XPoly.monomial(nvars, _unit(nvars, i), i)
        acc = acc + term if i % 2 == 1 else acc - term
    result = acc * Fraction(1, k)
    _elem_cache[(n, k)] = result
    return result


def _unit(nvars: int, i: int) -> tuple[int, ...]:
    exps = [0] * nvars
    exps[i - 1] = 1
    return tuple(exps)


def _power_sum_x(n: int, Q: int) -> XPoly:
    """Power sum of n constrained variables as a polynomial in x1..x(n-1).

    Independent degrees give Q*x_Q directly; degree zero counts the
    variables; higher degrees fall back on the Newton recursion with the
    elementary polynomials of :func:`elementary_symmetric_x`.
    """
    nvars = n - 1
    if Q == 0:
        return XPoly.constant(nvars, n)
    if Q < n:
        return XPoly.monomial(nvars, _unit(nvars, Q), Q)
    cached = _psum_cache.get((n, Q))
    if cached is not None:
        return cached
    acc = XPoly.zero(nvars)
    for i in range(1, n + 1):
        term = elementary_symmetric_x(n, i) * _power_sum_x(n, Q - i)
        acc = acc + term if i % 2 == 1 else acc - term
    _psum_cache[(n, Q)] = acc
    return acc


def degenerate_x(Q: int, ctx: AlgebraContext) -> XPoly:
    """The dependent indeterminate x_Q (Q >= N) in terms of x1..x(N-1)."""
    if Q < ctx.N:
        raise ValueError(f"x_{Q} is an independent indeterminate for {ctx}")
    return _power_sum_x(ctx.N, Q) * Fraction(1, Q)


def generator_to_x(g: GeneratorExpr, ctx: AlgebraContext) -> XPoly:
    """Substitute K(Q) -> Q*x_Q, degenerating dependent degrees, and expand."""
    nvars = ctx.N - 1
    out = XPoly.zero(nvars)
    for multiset, coeff in g.terms.items():
        term = XPoly.constant(nvars, coeff)
        for Q in multiset:
            term = term * _power_sum_x(ctx.N, Q)
        out = out + term
    return out


def orbit_char_x(p: Partition, ctx: AlgebraContext) -> XPoly:
    """Orbit character as a polynomial in the independent x-indeterminates."""
    return generator_to_x(reduce_to_generators(p), ctx)
