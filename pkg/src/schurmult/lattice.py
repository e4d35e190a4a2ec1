"""Weight-lattice bookkeeping for the rank-(N-1) special linear algebras.

Dominant weights are stored as coordinates over the fundamental dominant
weights; general weights as integer exponent vectors over the N auxiliary
weights of the defining representation, which sum to zero.  In that basis
a Weyl-orbit is just the set of distinct permutations of the exponent
vector, and adding a constant to every entry does not change the weight,
so the canonical representative has minimum entry zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator


@dataclass(frozen=True)
class AlgebraContext:
    """Fixes the algebra: N >= 2 selects the rank-(N-1) special linear algebra."""

    N: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("rank context requires N >= 2")

    @property
    def rank(self) -> int:
        return self.N - 1

    def __str__(self) -> str:
        return f"A{self.N - 1}"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, q in enumerate(parts):
            if not isinstance(q, int) or q <= 0:
                raise ValueError(f"partition parts must be positive integers, got {parts}")
            if i and parts[i - 1] < q:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length ``n``."""
        if len(self.parts) > n:
            raise ValueError(f"partition {self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(q) for q in self.parts) + ")"


@dataclass(frozen=True)
class DominantWeight:
    """Nonnegative integer coordinates over the fundamental dominant weights."""

    coords: tuple[int, ...]
    context: AlgebraContext

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.context.N - 1:
            raise ValueError(
                f"expected {self.context.N - 1} coordinates for {self.context}, got {len(coords)}"
            )
        if any(not isinstance(c, int) or c < 0 for c in coords):
            raise ValueError(f"dominant weight coordinates must be nonnegative, got {coords}")

    def mu_vector(self) -> tuple[int, ...]:
        """Canonical exponent vector (length N, weakly decreasing, last entry 0)."""
        n = self.context.N
        out = [0] * n
        acc = 0
        for i in range(n - 2, -1, -1):
            acc += self.coords[i]
            out[i] = acc
        return tuple(out)

    def to_partition(self) -> Partition:
        return Partition(tuple(q for q in self.mu_vector() if q > 0))

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            term = f"w{i + 1}" if c == 1 else f"{c} w{i + 1}"
            pieces.append(term)
        return " + ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class Weight:
    """A weight as an exponent vector, canonicalized to minimum entry zero."""

    mu_exponents: tuple[int, ...]
    context: AlgebraContext

    def __post_init__(self):
        exps = tuple(self.mu_exponents)
        if len(exps) != self.context.N:
            raise ValueError(f"expected {self.context.N} exponents, got {len(exps)}")
        low = min(exps)
        if low:
            exps = tuple(e - low for e in exps)
        object.__setattr__(self, "mu_exponents", exps)

    def dominant_representative(self) -> DominantWeight:
        vec = sorted(self.mu_exponents, reverse=True)
        coords = tuple(vec[i] - vec[i + 1] for i in range(self.context.N - 1))
        return DominantWeight(coords, self.context)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.mu_exponents) + ")"


def partition_to_dominant(p: Partition, ctx: AlgebraContext) -> DominantWeight:
    """Dominant weight of a partition with at most N rows.

    The padded part vector is reduced by its last entry (full columns act
    trivially) and differenced into fundamental-weight coordinates.
    """
    q = p.padded(ctx.N)
    coords = tuple(q[i] - q[i + 1] for i in range(ctx.N - 1))
    return DominantWeight(coords, ctx)


def height(w: DominantWeight) -> int:
    """Sum of the canonical exponent vector."""
    return sum((i + 1) * c for i, c in enumerate(w.coords))


def partitions_of(total: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` with at most ``max_parts`` parts, descending lex order."""
    if total == 0:
        yield ()
        return
    if max_parts <= 0:
        return
    top = total if max_part is None else min(max_part, total)
    for first in range(top, 0, -1):
        for rest in partitions_of(total - first, max_parts - 1, first):
            yield (first,) + rest


def sub_Q_lambda1(Q: int, ctx: AlgebraContext) -> list[DominantWeight]:
    """Dominant weights of all partitions of Q with at most N rows.

    Ordered by partition length, then reverse-lexicographically on parts,
    which keeps downstream linear systems and golden files reproducible.
    Full-column reduction lowers heights by multiples of N, so members
    share the height of Q only modulo N.
    """
    if Q < 1:
        raise ValueError("weight must be positive")
    shapes = sorted(
        partitions_of(Q, ctx.N),
        key=lambda parts: (len(parts), tuple(-q for q in parts)),
    )
    return [partition_to_dominant(Partition(parts), ctx) for parts in shapes]


def distinct_permutations(items) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, ascending lexicographic order."""
    seq = sorted(items)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


def orbit_weights(w: DominantWeight) -> list[Weight]:
    """Every weight of the Weyl orbit, each exactly once."""
    return [Weight(vec, w.context) for vec in distinct_permutations(w.mu_vector())]


def orbit_size(w: DominantWeight) -> int:
    """Multiset-permutation count of the exponent vector."""
    vec = w.mu_vector()
    count = factorial(w.context.N)
    for value in set(vec):
        count //= factorial(vec.count(value))
    return count
