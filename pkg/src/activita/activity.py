"""External/internal activities, Crapo's decomposition, and broken circuits.

An element e outside S is externally active for S when some circuit inside
S ∪ {e} has e as its maximum; internal activity is external activity of the
complement taken in the dual matroid, which is the normative route here (the
exchange characterization for bases is kept as an independent cross-check).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import max_elem, subset_str
from .errors import DecompositionNotFound, DecompositionNotUnique, NotIndependent
from .matroid import Matroid


@dataclass(frozen=True)
class ActivityProfile:
    """The four activity sets of a subset S: EA ⊔ EP = E∖S and IA ⊔ IP = S."""

    ea: int
    ep: int
    ia: int
    ip: int


@dataclass(frozen=True)
class CrapoDecomposition:
    """The unique way of writing S as basis ∖ y ∪ x with y ⊆ IA, x ⊆ EA."""

    basis: int
    x: int
    y: int


def externally_active(matroid: Matroid, subset: int) -> int:
    """Mask of externally active elements for a subset.

    e is collected iff some circuit has maximum e, e ∉ S, and the rest of the
    circuit lies in S (i.e. S contains the corresponding broken circuit).
    """
    active = 0
    for circ in matroid.circuits:
        top = 1 << (circ.bit_length() - 1)
        if not (subset & top) and (circ ^ top) & ~subset == 0:
            active |= top
    return active


def activity_profile(matroid: Matroid, subset: int) -> ActivityProfile:
    """All four activity sets of a subset, memoized per matroid."""
    cache = matroid._cache.setdefault("profiles", {})
    hit = cache.get(subset)
    if hit is not None:
        return hit
    full = matroid.full_mask
    ea = externally_active(matroid, subset)
    ia = externally_active(matroid.dual, full & ~subset)
    prof = ActivityProfile(ea=ea, ep=full & ~subset & ~ea, ia=ia, ip=subset & ~ia)
    cache[subset] = prof
    return prof


def activity_profile_by_exchange(matroid: Matroid, basis: int) -> ActivityProfile:
    """Activity of a basis via the exchange characterization (cross-check oracle).

    e ∉ B is externally active iff no larger e' ∈ B gives a basis B∖e'∪e;
    e ∈ B is internally active iff no larger e' ∉ B gives a basis B∖e∪e'.
    """
    if not matroid.is_basis(basis):
        raise NotIndependent(f"{subset_str(basis, matroid.n)} is not a basis")
    full = matroid.full_mask
    ea = ia = 0
    for e in range(1, matroid.n + 1):
        ebit = 1 << (e - 1)
        bigger = full & ~((ebit << 1) - 1)
        if basis & ebit:
            swaps = bigger & ~basis
            if not any(
                matroid.is_basis((basis ^ ebit) | (1 << (x - 1)))
                for x in _bits(swaps)
            ):
                ia |= ebit
        else:
            swaps = bigger & basis
            if not any(
                matroid.is_basis((basis ^ (1 << (x - 1))) | ebit)
                for x in _bits(swaps)
            ):
                ea |= ebit
    return ActivityProfile(ea=ea, ep=full & ~basis & ~ea, ia=ia, ip=basis & ~ia)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length()


def crapo_decompose_subset(matroid: Matroid, subset: int) -> CrapoDecomposition:
    """Unique (B, X ⊆ EA(B), Y ⊆ IA(B)) with subset = B∖Y ∪ X.

    Found by scanning the bases in canonical order for the interval
    [B∖IA(B), B∪EA(B)] containing the subset; uniqueness is asserted.
    """
    hits = []
    for b in matroid.bases:
        prof = activity_profile(matroid, b)
        if (b & ~prof.ia) & ~subset == 0 and subset & ~(b | prof.ea) == 0:
            hits.append(CrapoDecomposition(basis=b, x=subset & ~b, y=b & ~subset))
    if not hits:
        raise DecompositionNotFound(subset_str(subset, matroid.n))
    if len(hits) > 1:
        raise DecompositionNotUnique(subset_str(subset, matroid.n))
    return hits[0]


def crapo_decompose_independent(matroid: Matroid, indep: int) -> CrapoDecomposition:
    """Unique (B, Y ⊆ IA(B)) with indep = B∖Y; B is the related basis."""
    if not matroid.is_independent(indep):
        raise NotIndependent(subset_str(indep, matroid.n))
    dec = crapo_decompose_subset(matroid, indep)
    assert dec.x == 0
    return dec


def related_basis(matroid: Matroid, indep: int) -> int:
    """The basis internally related to an independent set, memoized."""
    cache = matroid._cache.setdefault("related", {})
    hit = cache.get(indep)
    if hit is None:
        hit = crapo_decompose_independent(matroid, indep).basis
        cache[indep] = hit
    return hit


def broken_circuits(matroid: Matroid) -> tuple[int, ...]:
    """Circuits with their maximum element removed, deduplicated and sorted."""
    out = {circ ^ (1 << (max_elem(circ) - 1)) for circ in matroid.circuits}
    return tuple(sorted(out))


def is_nbc(matroid: Matroid, subset: int) -> bool:
    """True iff the subset contains no broken circuit."""
    return all(bc & ~subset for bc in broken_circuits(matroid))


def nbc_sets(matroid: Matroid) -> tuple[int, ...]:
    """All nbc sets, sorted by mask value (always independent sets)."""
    cache = matroid._cache.get("nbc_sets")
    if cache is None:
        cache = tuple(
            s for s in matroid.independent_sets if is_nbc(matroid, s)
        )
        matroid._cache["nbc_sets"] = cache
    return cache
