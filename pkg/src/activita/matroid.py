"""Matroids on small ordered ground sets, stored by their list of bases.

The ground set is {1..n} with the natural integer order; subsets are bitmasks
(see bitsets).  Bases are enumerated at construction and the basis-exchange
axiom is verified exhaustively, so every Matroid instance is a genuine
matroid.  Rank, independence, circuits, fundamental circuits and duality are
derived from the bases list.  Instances are immutable after construction;
lazily cached fields are idempotent, so sharing across workers is safe.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .bitsets import MAX_GROUND, elems_of, mask_of, subset_str
from .errors import (
    ElementInBasis,
    EmptyBases,
    ExchangeAxiomViolated,
    NoEdges,
    NotABasis,
    NotPrime,
    RankOutOfRange,
    UnequalCardinality,
)


class Matroid:
    """A matroid given by its ground-set size and canonical sorted bases list.

    Do not call the constructor directly with unchecked data; use
    :func:`from_bases` (or the other constructors, which route through it).
    """

    def __init__(self, n: int, bases: Sequence[int], provenance: str = "explicit"):
        self.n = n
        self.bases = tuple(sorted(set(bases)))
        self.rank = self.bases[0].bit_count() if self.bases else 0
        self.provenance = provenance
        # cross-module memo space (activity profiles, posets, ...)
        self._cache: dict = {}

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_basis(self, subset: int) -> bool:
        return subset in self._basis_set

    def is_independent(self, subset: int) -> bool:
        """True iff the subset is contained in some basis."""
        return any(subset & ~b == 0 for b in self.bases)

    def rank_of(self, subset: int) -> int:
        """Rank of a subset: max |subset ∩ B| over bases B."""
        return max((subset & b).bit_count() for b in self.bases)

    @cached_property
    def _basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @cached_property
    def independent_sets(self) -> tuple[int, ...]:
        """All independent sets, sorted by mask value."""
        seen: set[int] = set()
        stack = list(self.bases)
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            rest = s
            while rest:
                low = rest & -rest
                rest ^= low
                if s ^ low not in seen:
                    stack.append(s ^ low)
        return tuple(sorted(seen))

    @cached_property
    def loops(self) -> int:
        """Mask of elements lying in no basis."""
        covered = 0
        for b in self.bases:
            covered |= b
        return self.full_mask & ~covered

    @cached_property
    def coloops(self) -> int:
        """Mask of elements lying in every basis."""
        common = self.full_mask
        for b in self.bases:
            common &= b
        return common

    # -- circuits ----------------------------------------------------------

    @cached_property
    def circuits(self) -> tuple[int, ...]:
        """All circuits (minimal dependent sets), sorted by mask value.

        Every circuit is the fundamental circuit of (B, e) for some basis B
        and e not in B, so collecting those and deduplicating is exhaustive.
        """
        found: set[int] = set()
        for b in self.bases:
            outside = self.full_mask & ~b
            while outside:
                low = outside & -outside
                outside ^= low
                found.add(self.fundamental_circuit(b, low.bit_length()))
        return tuple(sorted(found))

    def fundamental_circuit(self, basis: int, e: int) -> int:
        """The unique circuit inside basis ∪ {e}.

        An element b of the basis belongs to it iff swapping b for e gives a
        basis again (plus e itself).
        """
        if basis not in self._basis_set:
            raise NotABasis(f"{subset_str(basis, self.n)} is not a basis")
        ebit = 1 << (e - 1)
        if basis & ebit:
            raise ElementInBasis(f"element {e} already lies in the basis")
        circ = ebit
        rest = basis
        while rest:
            low = rest & -rest
            rest ^= low
            if (basis ^ low) | ebit in self._basis_set:
                circ |= low
        return circ

    # -- duality -----------------------------------------------------------

    @cached_property
    def dual(self) -> "Matroid":
        """The dual matroid (bases are complements), with the same order."""
        full = self.full_mask
        return Matroid(self.n, [full & ~b for b in self.bases], provenance="dual-of")

    # -- misc ----------------------------------------------------------------

    def subset_str(self, subset: int) -> str:
        return subset_str(subset, self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)}, {self.provenance})"


# -- constructors -------------------------------------------------------------


def _check_exchange(n: int, bases: Sequence[int]) -> None:
    basis_set = set(bases)
    for a in bases:
        for b in bases:
            if a == b:
                continue
            take = a & ~b
            while take:
                low = take & -take
                take ^= low
                give = b & ~a
                ok = False
                while give:
                    glow = give & -give
                    give ^= glow
                    if (a ^ low) | glow in basis_set:
                        ok = True
                        break
                if not ok:
                    raise ExchangeAxiomViolated(
                        subset_str(a, n), subset_str(b, n), low.bit_length()
                    )


def from_bases(n: int, bases: Iterable[int], provenance: str = "explicit") -> Matroid:
    """Build a matroid from an explicit bases list, verifying the axioms."""
    if not 1 <= n <= MAX_GROUND:
        raise RankOutOfRange(f"ground set size {n} outside 1..{MAX_GROUND}")
    blist = sorted(set(bases))
    if not blist:
        raise EmptyBases("a matroid needs at least one basis")
    full = (1 << n) - 1
    sizes = {b.bit_count() for b in blist}
    if len(sizes) != 1:
        raise UnequalCardinality(f"bases of different sizes: {sorted(sizes)}")
    for b in blist:
        if b & ~full:
            raise RankOutOfRange(f"basis {bin(b)} not within ground set 1..{n}")
    _check_exchange(n, blist)
    return Matroid(n, blist, provenance)


def uniform(r: int, n: int) -> Matroid:
    """The uniform matroid U(r, n): every r-subset is a basis."""
    if not 0 <= r <= n:
        raise RankOutOfRange(f"rank {r} outside 0..{n}")
    bases = [mask_of(c) for c in combinations(range(1, n + 1), r)]
    return from_bases(n, bases, provenance="uniform")


def graphic(vertices: int, edges: Sequence[tuple[int, int]]) -> Matroid:
    """Graphic matroid of an edge list; element i is the i-th edge.

    Bases are the spanning forests of maximum size.  Self-loops and parallel
    edges are allowed.
    """
    if not edges:
        raise NoEdges("edge list must be nonempty")
    for u, v in edges:
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise RankOutOfRange(f"edge ({u},{v}) references a vertex outside 1..{vertices}")
    m = len(edges)

    def forest_size(edge_idxs: Iterable[int]) -> int:
        parent = list(range(vertices + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        used = 0
        for i in edge_idxs:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                used += 1
        return used

    r = forest_size(range(m))
    bases = [
        mask_of(i + 1 for i in c)
        for c in combinations(range(m), r)
        if forest_size(c) == r
    ]
    return from_bases(m, bases, provenance="graphic")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def linear_over_prime_field(p: int, matrix: Sequence[Sequence[int]]) -> Matroid:
    """Column matroid of a matrix over GF(p), p a prime at most 13."""
    if not (_is_prime(p) and p <= 13):
        raise NotPrime(f"{p} is not a prime at most 13")
    rows = [[x % p for x in row] for row in matrix]
    if not rows or not rows[0]:
        raise EmptyBases("matrix must be nonempty")
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise UnequalCardinality("matrix rows of different lengths")

    def col_rank(cols: Sequence[int]) -> int:
        # Gaussian elimination on the selected columns, exact arithmetic mod p.
        mat = [[row[j] for j in cols] for row in rows]
        rank = 0
        for j in range(len(cols)):
            pivot = next((i for i in range(rank, len(mat)) if mat[i][j]), None)
            if pivot is None:
                continue
            mat[rank], mat[pivot] = mat[pivot], mat[rank]
            inv = pow(mat[rank][j], p - 2, p)
            mat[rank] = [(x * inv) % p for x in mat[rank]]
            for i in range(len(mat)):
                if i != rank and mat[i][j]:
                    f = mat[i][j]
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[rank])]
            rank += 1
        return rank

    r = col_rank(list(range(n)))
    if r == 0:
        # all-zero matrix: rank-0 matroid, single empty basis
        return from_bases(n, [0], provenance="linear")
    bases = [
        mask_of(j + 1 for j in c)
        for c in combinations(range(n), r)
        if col_rank(c) == r
    ]
    return from_bases(n, bases, provenance="linear")


def relabel(matroid: Matroid, perm: Sequence[int]) -> Matroid:
    """Relabel ground elements; perm[i-1] is the new label of element i.

    This is how activity with respect to a different linear order is obtained:
    relabel so that the desired order becomes the natural one.
    """
    if sorted(perm) != list(range(1, matroid.n + 1)):
        raise RankOutOfRange("perm must be a permutation of 1..n")
    bases = [
        mask_of(perm[e - 1] for e in elems_of(b)) for b in matroid.bases
    ]
    return from_bases(matroid.n, bases, provenance="explicit")
