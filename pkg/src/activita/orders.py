"""Las Vergnas active orders on bases and independent sets.

Three classical partial orders on the bases (external, internal, and the
external/internal order refining both), the extension of the external/internal
order to all independent sets, its block-flipped variant, linear-extension
enumeration and sampling, lattice operations, boolean cover intervals, and the
flip involution.

Each order definition is evaluated through *all* of its equivalent conditions
and any disagreement raises EquivalenceMismatch, so a transcription bug cannot
silently produce a consistent-looking wrong order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .activity import activity_profile, nbc_sets, related_basis
from .bitsets import submasks, subset_str
from .errors import (
    EquivalenceMismatch,
    LatticeFailure,
    NotABasis,
    NotACover,
    NotIndependent,
)
from .matroid import Matroid

BASIS_ORDER_KINDS = ("ext", "int", "extint")
POSET_KINDS = (
    "ext-bases",
    "int-bases",
    "extint-bases",
    "extint-ind",
    "flip-ind",
    "nbc-extint",
)


# -- pairwise comparisons ------------------------------------------------------


def compare_bases(matroid: Matroid, kind: str, a: int, b: int) -> bool:
    """Whether a <= b for bases in the external/internal/combined order."""
    if kind not in BASIS_ORDER_KINDS:
        raise ValueError(f"unknown basis order {kind!r}")
    for x in (a, b):
        if not matroid.is_basis(x):
            raise NotABasis(subset_str(x, matroid.n))
    pa = activity_profile(matroid, a)
    pb = activity_profile(matroid, b)
    if kind == "ext":
        conds = [
            a & ~(b | pb.ea) == 0,
            (a | pa.ea) & ~(b | pb.ea) == 0,
        ]
    elif kind == "int":
        conds = [
            (a & ~pa.ia) & ~b == 0,
            (a & ~pa.ia) & ~(b & ~pb.ia) == 0,
        ]
    else:
        conds = [
            pa.ip & pb.ep == 0,
            ((a & ~pa.ia) | pa.ea) & ~((b & ~pb.ia) | pb.ea) == 0,
            (pa.ip | pa.ea) & ~(pb.ip | pb.ea) == 0,
        ]
    if any(c != conds[0] for c in conds):
        raise EquivalenceMismatch(
            f"{kind}: conditions disagree on {subset_str(a, matroid.n)}, "
            f"{subset_str(b, matroid.n)}: {conds}"
        )
    return conds[0]


def leq_extint_ind(matroid: Matroid, i: int, k: int) -> bool:
    """The external/internal order extended to independent sets.

    Internally related sets compare by containment; unrelated sets compare by
    inclusion of I∖IA(I)∪EA(I) in the corresponding set for K.
    """
    for x in (i, k):
        if not matroid.is_independent(x):
            raise NotIndependent(subset_str(x, matroid.n))
    if related_basis(matroid, i) == related_basis(matroid, k):
        return i & ~k == 0
    pi = activity_profile(matroid, i)
    pk = activity_profile(matroid, k)
    return ((i & ~pi.ia) | pi.ea) & ~((k & ~pk.ia) | pk.ea) == 0


def leq_flip_ind(matroid: Matroid, i: int, k: int) -> bool:
    """Variant of the order on independent sets with each boolean block flipped."""
    for x in (i, k):
        if not matroid.is_independent(x):
            raise NotIndependent(subset_str(x, matroid.n))
    if related_basis(matroid, i) == related_basis(matroid, k):
        return k & ~i == 0
    pi = activity_profile(matroid, i)
    pk = activity_profile(matroid, k)
    return ((i & ~pi.ia) | pi.ea) & ~((k & ~pk.ia) | pk.ea) == 0


# -- materialized posets ---------------------------------------------------------


class Poset:
    """A finite poset on subset masks with a materialized comparability matrix.

    ``up_rows[i]`` is a bitmask over element indices j with elements[i] <= elements[j].
    The constructor verifies reflexivity, antisymmetry and transitivity.
    """

    def __init__(self, elements: tuple[int, ...], up_rows: tuple[int, ...], kind: str = ""):
        self.elements = elements
        self.up_rows = up_rows
        self.kind = kind
        self.index = {e: i for i, e in enumerate(elements)}
        m = len(elements)
        for i in range(m):
            if not up_rows[i] >> i & 1:
                raise EquivalenceMismatch(f"relation not reflexive at {elements[i]}")
            for j in _idx_bits(up_rows[i]):
                if j != i and up_rows[j] >> i & 1:
                    raise EquivalenceMismatch(
                        f"relation not antisymmetric on {elements[i]}, {elements[j]}"
                    )
                if up_rows[j] & ~up_rows[i]:
                    raise EquivalenceMismatch(
                        f"relation not transitive through {elements[j]}"
                    )

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a: int, b: int) -> bool:
        return self.up_rows[self.index[a]] >> self.index[b] & 1 == 1

    @cached_property
    def down_rows(self) -> tuple[int, ...]:
        m = len(self.elements)
        cols = [0] * m
        for i, row in enumerate(self.up_rows):
            for j in _idx_bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    @cached_property
    def cover_index_pairs(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction: (i, j) with elements[j] covering elements[i]."""
        out = []
        for i, row in enumerate(self.up_rows):
            strict = row & ~(1 << i)
            for j in _idx_bits(strict):
                between = strict & self.down_rows[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return tuple(sorted(out))

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover relations as (lower, upper) element pairs."""
        return tuple(
            (self.elements[i], self.elements[j]) for i, j in self.cover_index_pairs
        )

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain below each element (for Hasse ranking)."""
        lower: list[list[int]] = [[] for _ in self.elements]
        for i, j in self.cover_index_pairs:
            lower[j].append(i)
        h = [-1] * len(self.elements)

        def height(j: int) -> int:
            if h[j] < 0:
                h[j] = 1 + max((height(i) for i in lower[j]), default=-1)
            return h[j]

        return tuple(height(j) for j in range(len(self.elements)))

    def is_extension(self, order: tuple[int, ...]) -> bool:
        """True iff the listed elements form an order-preserving permutation."""
        if sorted(order) != sorted(self.elements):
            return False
        placed = 0
        for e in order:
            i = self.index[e]
            if self.down_rows[i] & ~placed & ~(1 << i):
                return False
            placed |= 1 << i
        return True


def _idx_bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def build_poset(matroid: Matroid, kind: str) -> Poset:
    """Materialize one of the active orders; cached per matroid and kind."""
    key = ("poset", kind)
    hit = matroid._cache.get(key)
    if hit is not None:
        return hit
    if kind in ("ext-bases", "int-bases", "extint-bases"):
        elements = matroid.bases
        base_kind = kind.split("-")[0]
        rel = lambda a, b: compare_bases(matroid, base_kind, a, b)
    elif kind == "extint-ind":
        elements = matroid.independent_sets
        rel = lambda a, b: leq_extint_ind(matroid, a, b)
    elif kind == "flip-ind":
        elements = matroid.independent_sets
        rel = lambda a, b: leq_flip_ind(matroid, a, b)
    elif kind == "nbc-extint":
        elements = nbc_sets(matroid)
        rel = lambda a, b: leq_extint_ind(matroid, a, b)
    else:
        raise ValueError(f"unknown poset kind {kind!r}")
    rows = tuple(
        sum(1 << j for j, b in enumerate(elements) if rel(a, b)) for a in elements
    )
    poset = Poset(elements, rows, kind=kind)
    matroid._cache[key] = poset
    return poset


# -- linear extensions -----------------------------------------------------------


@dataclass
class ExtensionSample:
    """Linear extensions of a poset: all of them, or a seeded sample."""

    orders: list[tuple[int, ...]]
    exhaustive: bool
    total: int | None  # exact count when exhaustive


def _enumerate_extensions(poset: Poset, limit: int):
    """Backtracking enumeration, choosing the minimal available element first."""
    m = len(poset.elements)
    down = poset.down_rows
    full = (1 << m) - 1
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(placed: int) -> bool:
        if placed == full:
            found.append(tuple(poset.elements[i] for i in prefix))
            return len(found) <= limit
        for i in range(m):
            bit = 1 << i
            if placed & bit or down[i] & ~placed & ~bit:
                continue
            prefix.append(i)
            ok = rec(placed | bit)
            prefix.pop()
            if not ok:
                return False
        return True

    completed = rec(0)
    return found, completed


def first_extension(poset: Poset) -> tuple[int, ...]:
    """The lexicographically first linear extension (greedy minimal element)."""
    m = len(poset.elements)
    down = poset.down_rows
    placed = 0
    order = []
    for _ in range(m):
        i = next(
            i
            for i in range(m)
            if not placed >> i & 1 and not down[i] & ~placed & ~(1 << i)
        )
        order.append(poset.elements[i])
        placed |= 1 << i
    return tuple(order)


def random_extension(poset: Poset, rng: random.Random) -> tuple[int, ...]:
    """One random linear extension via random topological sorting."""
    m = len(poset.elements)
    down = poset.down_rows
    placed = 0
    order = []
    for _ in range(m):
        avail = [
            i
            for i in range(m)
            if not placed >> i & 1 and not down[i] & ~placed & ~(1 << i)
        ]
        i = rng.choice(avail)
        order.append(poset.elements[i])
        placed |= 1 << i
    return tuple(order)


def linear_extensions(poset: Poset, cap: int = 200, seed: int = 0) -> ExtensionSample:
    """All linear extensions if there are at most ``cap``, else ``cap`` samples.

    Exhaustive enumeration follows lexicographic backtracking order; sampling
    uses seeded random topological sorting (uniformity is not required, only
    coverage diversity).  Every emitted order is verified order-preserving.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    found, completed = _enumerate_extensions(poset, cap)
    if completed:
        sample = ExtensionSample(found, exhaustive=True, total=len(found))
    else:
        rng = random.Random(seed)
        sample = ExtensionSample(
            [random_extension(poset, rng) for _ in range(cap)],
            exhaustive=False,
            total=None,
        )
    for order in sample.orders:
        if not poset.is_extension(order):
            raise EquivalenceMismatch("emitted order is not a linear extension")
    return sample


# -- lattice structure ------------------------------------------------------------


def _unique_bound(candidates: int, rows: tuple[int, ...]) -> int:
    """Index of the unique member of ``candidates`` dominating all others."""
    hits = [i for i in _idx_bits(candidates) if candidates & ~rows[i] == 0]
    if len(hits) != 1:
        raise LatticeFailure(f"bound not unique among {len(hits)} candidates")
    return hits[0]


def poset_meet_join(poset: Poset, a: int, b: int) -> tuple[int, int]:
    """Greatest lower bound and least upper bound in a materialized poset."""
    ia, ib = poset.index[a], poset.index[b]
    lower = poset.down_rows[ia] & poset.down_rows[ib]
    upper = poset.up_rows[ia] & poset.up_rows[ib]
    glb = _unique_bound(lower, poset.down_rows)
    lub = _unique_bound(upper, poset.up_rows)
    return poset.elements[glb], poset.elements[lub]


def meet_join_ind(matroid: Matroid, i: int, k: int) -> tuple[int, int]:
    """Meet and join of two independent sets in the external/internal order.

    Related sets meet and join by intersection and union.  Sets related to
    incomparable bases A, C meet at the basis A ∧ C and join at IP(A ∨ C),
    with the basis meet/join taken in the materialized bases poset.  Every
    answer is cross-checked against the generic bound search on the full
    independent-set poset; a mismatch raises LatticeFailure.
    """
    for x in (i, k):
        if not matroid.is_independent(x):
            raise NotIndependent(subset_str(x, matroid.n))
    a = related_basis(matroid, i)
    c = related_basis(matroid, k)
    ind_poset = build_poset(matroid, "extint-ind")
    if a == c:
        meet, join = i & k, i | k
    elif ind_poset.leq(i, k):
        meet, join = i, k
    elif ind_poset.leq(k, i):
        meet, join = k, i
    else:
        bases_poset = build_poset(matroid, "extint-bases")
        bmeet, bjoin = poset_meet_join(bases_poset, a, c)
        meet = bmeet
        join = activity_profile(matroid, bjoin).ip
    if poset_meet_join(ind_poset, i, k) != (meet, join):
        raise LatticeFailure(
            f"closed-form meet/join disagrees with poset bounds on "
            f"{subset_str(i, matroid.n)}, {subset_str(k, matroid.n)}"
        )
    return meet, join


def boolean_interval(matroid: Matroid, b: int, c: int) -> tuple[int, ...]:
    """The interval (B, C] for a basis cover B ⋖ C, as a boolean block.

    Returns {S ∪ IP(C) : S ⊆ IA(C)} sorted by mask, after verifying both that
    C covers B and that the set really equals the order interval.
    """
    bases_poset = build_poset(matroid, "extint-bases")
    if (b, c) not in bases_poset.covers():
        raise NotACover(
            f"{subset_str(c, matroid.n)} does not cover {subset_str(b, matroid.n)}"
        )
    prof = activity_profile(matroid, c)
    block = tuple(sorted(s | prof.ip for s in submasks(prof.ia)))
    ind_poset = build_poset(matroid, "extint-ind")
    interval = tuple(
        sorted(
            e
            for e in ind_poset.elements
            if ind_poset.leq(b, e) and e != b and ind_poset.leq(e, c)
        )
    )
    if block != interval:
        raise EquivalenceMismatch(
            f"boolean block differs from order interval above {subset_str(b, matroid.n)}"
        )
    return block


def flip_involution(matroid: Matroid, indep: int) -> int:
    """Flip an independent set inside its boolean block: S∪IP ↦ (IA∖S)∪IP."""
    if not matroid.is_independent(indep):
        raise NotIndependent(subset_str(indep, matroid.n))
    prof = activity_profile(matroid, related_basis(matroid, indep))
    return (prof.ia & ~indep) | prof.ip
