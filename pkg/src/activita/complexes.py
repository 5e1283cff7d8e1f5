"""Activity complexes on the tripled vertex set, with f- and h-vectors.

Four pure complexes are built from a matroid on vertices x_e, y_e, z_e:

* ``augmented-ea``: one facet per independent set I, namely
  x_{I∪EP(I)} y_Y z_{I∪EA(I)} where I = B∖Y is the Crapo decomposition;
* ``ea``: the basis facets x_{B∪EP(B)} z_{B∪EA(B)} on vertices E(x, z);
* ``nbc``: the no-broken-circuit complex on E(z);
* ``augmented-nbc``: one facet y_{B_I∖I} z_I per nbc set I on E(y, z).

Vertices are indexed flavor-major (all x, then y, then z, per the kind's
vertex universe) and faces are bitmasks over that universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .activity import (
    activity_profile,
    crapo_decompose_independent,
    is_nbc,
    nbc_sets,
    related_basis,
)
from .bitsets import subset_str, submasks
from .errors import NotIndependent, NotNBC, NotPure
from .matroid import Matroid

COMPLEX_KINDS = ("augmented-ea", "ea", "nbc", "augmented-nbc")

_FLAVORS = {
    "augmented-ea": "xyz",
    "ea": "xz",
    "nbc": "z",
    "augmented-nbc": "yz",
}


@dataclass(frozen=True)
class Facet:
    """A facet given by its x-, y- and z-supports plus the generating set."""

    xs: int
    ys: int
    zs: int
    tag: int

    def size(self) -> int:
        return self.xs.bit_count() + self.ys.bit_count() + self.zs.bit_count()


@dataclass(frozen=True)
class FHVector:
    """Face counts f_0..f_d and the h-vector obtained from them."""

    f: tuple[int, ...]
    h: tuple[int, ...]


class SimplicialComplex:
    """A pure simplicial complex: labeled vertex universe plus facet masks."""

    def __init__(
        self,
        vertices: tuple[tuple[str, int], ...],
        facets: tuple[int, ...],
        tags: tuple[int, ...] | None = None,
        name: str = "",
    ):
        self.vertices = vertices
        self.facets = facets
        self.tags = tags
        self.name = name
        sizes = {f.bit_count() for f in facets}
        if len(sizes) > 1:
            raise NotPure(f"facet sizes {sorted(sizes)}")
        self.facet_size = sizes.pop() if sizes else 0
        self.dimension = self.facet_size - 1
        fs = set(facets)
        if len(fs) != len(facets):
            raise NotPure("duplicate facets")
        for f in facets:
            for g in facets:
                if f != g and f & ~g == 0:
                    raise NotPure("facet contained in another facet")
        if tags is not None:
            self.facet_by_tag = dict(zip(tags, facets))

    def __len__(self) -> int:
        return len(self.facets)

    @cached_property
    def flavor_masks(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for idx, (flavor, _elem) in enumerate(self.vertices):
            out[flavor] = out.get(flavor, 0) | 1 << idx
        return out

    def vertex_index(self, flavor: str, elem: int) -> int:
        return self.vertices.index((flavor, elem))

    def supports(self, face: int) -> dict[str, int]:
        """Split a face mask into per-flavor element masks."""
        out: dict[str, int] = {}
        for idx, (flavor, elem) in enumerate(self.vertices):
            if face >> idx & 1:
                out[flavor] = out.get(flavor, 0) | 1 << (elem - 1)
        return out

    @cached_property
    def faces(self) -> frozenset[int]:
        """All faces, by downset traversal from the facets with dedup."""
        seen: set[int] = set()
        for f in self.facets:
            for sub in submasks(f):
                seen.add(sub)
        return frozenset(seen)

    @cached_property
    def fh(self) -> FHVector:
        if not self.facets:
            return FHVector(f=(), h=())
        d = self.facet_size
        f = [0] * (d + 1)
        for face in self.faces:
            f[face.bit_count()] += 1
        h = _h_from_f(tuple(f))
        return FHVector(f=tuple(f), h=h)


def _h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_i, the binomial convolution."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_vector(cx: SimplicialComplex) -> FHVector:
    """Face counts of a pure complex (h part included for convenience)."""
    return cx.fh


def h_vector(cx: SimplicialComplex) -> FHVector:
    """h-vector of a pure complex via the defining polynomial transform."""
    return cx.fh


def f_vector_by_inclusion_exclusion(cx: SimplicialComplex) -> tuple[int, ...]:
    """f-vector by inclusion-exclusion over facet intersections.

    Exponential in the number of facets; an independent oracle for small
    complexes rather than a production path.
    """
    if not cx.facets:
        return ()
    d = cx.facet_size
    f = [0] * (d + 1)
    s = len(cx.facets)
    for pick in range(1, 1 << s):
        inter = (1 << len(cx.vertices)) - 1
        for j in range(s):
            if pick >> j & 1:
                inter &= cx.facets[j]
        sign = -1 if pick.bit_count() % 2 == 0 else 1
        k = inter.bit_count()
        for i in range(min(k, d) + 1):
            f[i] += sign * comb(k, i)
    return tuple(f)


# -- matroid facets ---------------------------------------------------------------


def facet_F(matroid: Matroid, indep: int) -> Facet:
    """Facet of the augmented external activity complex for an independent set.

    Built both directly from the definition and by rewriting the related
    basis facet (replace z_Y by y_Y); the two constructions must agree.
    """
    if not matroid.is_independent(indep):
        raise NotIndependent(subset_str(indep, matroid.n))
    dec = crapo_decompose_independent(matroid, indep)
    prof = activity_profile(matroid, indep)
    direct = Facet(xs=indep | prof.ep, ys=dec.y, zs=indep | prof.ea, tag=indep)
    bprof = activity_profile(matroid, dec.basis)
    rewritten = Facet(
        xs=dec.basis | bprof.ep,
        ys=dec.y,
        zs=(dec.basis | bprof.ea) & ~dec.y,
        tag=indep,
    )
    assert direct == rewritten, "facet constructions disagree"
    return direct


def facet_G(matroid: Matroid, subset: int) -> Facet:
    """Facet of the augmented nbc complex for an nbc set."""
    if not (matroid.is_independent(subset) and is_nbc(matroid, subset)):
        raise NotNBC(subset_str(subset, matroid.n))
    basis = related_basis(matroid, subset)
    return Facet(xs=0, ys=basis & ~subset, zs=subset, tag=subset)


def _universe(n: int, flavors: str) -> tuple[tuple[str, int], ...]:
    return tuple((fl, e) for fl in flavors for e in range(1, n + 1))


def _facet_mask(vertices: tuple[tuple[str, int], ...], facet: Facet) -> int:
    mask = 0
    parts = {"x": facet.xs, "y": facet.ys, "z": facet.zs}
    for idx, (flavor, elem) in enumerate(vertices):
        if parts[flavor] >> (elem - 1) & 1:
            mask |= 1 << idx
    return mask


def build_complex(matroid: Matroid, kind: str) -> SimplicialComplex:
    """Build one of the four activity complexes; cached per matroid."""
    key = ("complex", kind)
    hit = matroid._cache.get(key)
    if hit is not None:
        return hit
    if kind not in COMPLEX_KINDS:
        raise ValueError(f"unknown complex kind {kind!r}")
    vertices = _universe(matroid.n, _FLAVORS[kind])
    if kind == "augmented-ea":
        fobjs = [facet_F(matroid, i) for i in matroid.independent_sets]
    elif kind == "ea":
        fobjs = [facet_F(matroid, b) for b in matroid.bases]
    elif kind == "augmented-nbc":
        fobjs = [facet_G(matroid, s) for s in nbc_sets(matroid)]
    else:  # plain nbc complex: facets are the maximal nbc sets
        sets = nbc_sets(matroid)
        maximal = [
            s for s in sets if not any(t != s and s & ~t == 0 for t in sets)
        ]
        fobjs = [Facet(xs=0, ys=0, zs=s, tag=s) for s in maximal]
    cx = SimplicialComplex(
        vertices,
        tuple(_facet_mask(vertices, f) for f in fobjs),
        tags=tuple(f.tag for f in fobjs),
        name=kind,
    )
    cx.facet_objs = tuple(fobjs)
    expected_dim = {
        "augmented-ea": matroid.n + matroid.rank - 1,
        "ea": matroid.n + matroid.rank - 1,
        "nbc": matroid.rank - 1,
        "augmented-nbc": matroid.rank - 1,
    }[kind]
    if cx.facets and cx.dimension != expected_dim:
        raise NotPure(f"{kind} complex has dimension {cx.dimension}, expected {expected_dim}")
    matroid._cache[key] = cx
    return cx


def induced_subcomplex(cx: SimplicialComplex, flavors: str) -> SimplicialComplex:
    """The subcomplex induced on the vertices of the given flavors.

    Faces are the restrictions of faces of ``cx``; facets are the maximal
    restrictions of the facets.
    """
    keep_mask = 0
    new_vertices = []
    remap: dict[int, int] = {}
    for idx, (flavor, elem) in enumerate(cx.vertices):
        if flavor in flavors:
            keep_mask |= 1 << idx
            remap[idx] = len(new_vertices)
            new_vertices.append((flavor, elem))
    restricted = {f & keep_mask for f in cx.facets}
    maximal = [
        f for f in restricted if not any(g != f and f & ~g == 0 for g in restricted)
    ]

    def remap_mask(mask: int) -> int:
        out = 0
        for idx in remap:
            if mask >> idx & 1:
                out |= 1 << remap[idx]
        return out

    return SimplicialComplex(
        tuple(new_vertices),
        tuple(sorted(remap_mask(f) for f in maximal)),
        name=f"{cx.name}|{flavors}",
    )


def independence_complex(matroid: Matroid) -> SimplicialComplex:
    """The independence complex (faces = independent sets) on plain vertices."""
    vertices = _universe(matroid.n, "z")
    return SimplicialComplex(
        vertices,
        tuple(_facet_mask(vertices, Facet(0, 0, b, b)) for b in matroid.bases),
        tags=matroid.bases,
        name="independence",
    )
