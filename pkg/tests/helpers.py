"""Shared builders and brute-force numeric oracles for the test suite."""

from fractions import Fraction

from schurmult.polyengine import UPoly, XPoly


def xp(nvars, terms, prefactor=1):
    """Build an XPoly from (coefficient, {var: exp}) pairs over a common prefactor.

    Variables are 1-based in the term dicts, e.g. {1: 2, 3: 1} is x1^2*x3.
    """
    out = {}
    for coeff, mono in terms:
        exps = [0] * nvars
        for var, e in mono.items():
            exps[var - 1] = e
        out[tuple(exps)] = Fraction(coeff, prefactor)
    return XPoly(nvars, out)


def up(nvars, terms):
    """Build a UPoly from (coefficient, {var: exp}) pairs (1-based variables)."""
    out = {}
    for coeff, mono in terms:
        exps = [0] * nvars
        for var, e in mono.items():
            exps[var - 1] = e
        out[tuple(exps)] = coeff
    return UPoly(nvars, out)


def product_one_point(n, rng):
    """Distinct random rationals whose product is one."""
    values = set()
    while len(values) < n - 1:
        values.add(Fraction(rng.randint(1, 30), rng.randint(1, 30)))
    us = sorted(values)
    prod = Fraction(1)
    for u in us:
        prod *= u
    last = 1 / prod
    if last in values:
        return product_one_point(n, rng)
    us.append(last)
    return us


def power_sum_values(us):
    """The x-coordinates induced by a u-point: i-th power sum over i."""
    return [sum(u**i for u in us) / i for i in range(1, len(us))]


def fraction_det(matrix):
    """Plain Gaussian-elimination determinant over Fractions (oracle use)."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] * inv
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return det


def character_value(parts, us):
    """Alternant-quotient character value at a u-point (bialternant oracle)."""
    n = len(us)
    q = list(parts) + [0] * (n - len(parts))
    num = fraction_det([[us[i] ** (q[j] + n - 1 - j) for j in range(n)] for i in range(n)])
    den = fraction_det([[us[i] ** (n - 1 - j) for j in range(n)] for i in range(n)])
    return num / den
