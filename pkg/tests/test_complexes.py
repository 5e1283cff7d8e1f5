"""Activity complexes: facets, purity, induced subcomplexes, f/h-vectors."""

import pytest

from activita.activity import related_basis
from activita.bitsets import parse_subset, subset_str
from activita.complexes import (
    SimplicialComplex,
    build_complex,
    f_vector,
    f_vector_by_inclusion_exclusion,
    facet_F,
    facet_G,
    h_vector,
    independence_complex,
    induced_subcomplex,
)
from activita.errors import NotIndependent, NotNBC, NotPure
from activita.matroid import from_bases, uniform
from activita.tutte import BiPoly

ps5 = lambda s: parse_subset(s, 5)

# the eight basis facets of the external activity complex
M5_EA_FACETS = {
    "345": ("12345", "345"),
    "135": ("12345", "135"),
    "245": ("12345", "245"),
    "235": ("12345", "235"),
    "125": ("1245", "1235"),
    "134": ("1234", "1345"),
    "234": ("1234", "2345"),
    "124": ("124", "12345"),
}

# facets generated by the independent sets related to the basis 245
M5_245_BLOCK = {
    "245": ("12345", "", "245"),
    "25": ("12345", "4", "25"),
    "24": ("12345", "5", "24"),
    "2": ("12345", "45", "2"),
}


class TestFacetF:
    @pytest.mark.parametrize(
        "basis,xs,zs", [(b, xs, zs) for b, (xs, zs) in sorted(M5_EA_FACETS.items())]
    )
    def test_basis_facets(self, m5_matroid, basis, xs, zs):
        f = facet_F(m5_matroid, ps5(basis))
        assert subset_str(f.xs, 5) == xs
        assert f.ys == 0
        assert subset_str(f.zs, 5) == zs

    @pytest.mark.parametrize(
        "indep,xs,ys,zs",
        [(i, xs, ys, zs) for i, (xs, ys, zs) in sorted(M5_245_BLOCK.items())],
    )
    def test_block_facets(self, m5_matroid, indep, xs, ys, zs):
        f = facet_F(m5_matroid, ps5(indep))
        assert (subset_str(f.xs, 5), subset_str(f.ys, 5), subset_str(f.zs, 5)) == (xs, ys, zs)

    def test_size_is_n_plus_r(self, corpus):
        for m in corpus.values():
            for i in m.independent_sets:
                assert facet_F(m, i).size() == m.n + m.rank

    def test_not_independent(self, m5_matroid):
        with pytest.raises(NotIndependent):
            facet_F(m5_matroid, ps5("123"))

    def test_support_propositions(self, corpus):
        for m in corpus.values():
            for i in m.independent_sets:
                b = related_basis(m, i)
                fi, fb = facet_F(m, i), facet_F(m, b)
                y = b & ~i
                assert fi.xs == fb.xs
                assert fi.zs == fb.zs & ~y
                assert fb.ys == 0
                assert fi.xs & fi.zs == i  # recovery of the generating set


class TestFacetG:
    def test_examples(self, m5_matroid):
        f = facet_G(m5_matroid, ps5("135"))
        assert (f.xs, f.ys, f.zs) == (0, 0, ps5("135"))
        f = facet_G(m5_matroid, ps5("13"))
        assert (f.xs, subset_str(f.ys, 5), subset_str(f.zs, 5)) == (0, "5", "13")
        f = facet_G(m5_matroid, 0)
        assert (f.xs, subset_str(f.ys, 5), f.zs) == (0, "345", 0)

    def test_not_nbc(self, m5_matroid):
        with pytest.raises(NotNBC):
            facet_G(m5_matroid, ps5("12"))

    def test_size_is_rank(self, corpus):
        from activita.activity import nbc_sets

        for m in corpus.values():
            for s in nbc_sets(m):
                assert facet_G(m, s).size() == m.rank


class TestBuildComplex:
    def test_m5_sizes(self, m5_matroid):
        assert len(build_complex(m5_matroid, "augmented-ea").facets) == 24
        assert len(build_complex(m5_matroid, "ea").facets) == 8
        assert len(build_complex(m5_matroid, "augmented-nbc").facets) == 18
        assert len(build_complex(m5_matroid, "nbc").facets) == 4

    def test_dimensions(self, corpus):
        for m in corpus.values():
            n, r = m.n, m.rank
            assert build_complex(m, "augmented-ea").dimension == n + r - 1
            assert build_complex(m, "ea").dimension == n + r - 1
            for kind in ("nbc", "augmented-nbc"):
                cx = build_complex(m, kind)
                if cx.facets:
                    assert cx.dimension == r - 1

    def test_induced_subcomplexes(self, corpus):
        for m in corpus.values():
            aug = build_complex(m, "augmented-ea")
            assert sorted(induced_subcomplex(aug, "xz").facets) == sorted(
                build_complex(m, "ea").facets
            )
            aug_nbc = build_complex(m, "augmented-nbc")
            assert sorted(induced_subcomplex(aug_nbc, "z").facets) == sorted(
                build_complex(m, "nbc").facets
            )

    def test_purity_enforced(self):
        with pytest.raises(NotPure):
            SimplicialComplex(
                (("z", 1), ("z", 2), ("z", 3)), (0b011, 0b100)
            )

    def test_antichain_enforced(self):
        with pytest.raises(NotPure):
            SimplicialComplex((("z", 1), ("z", 2)), (0b01, 0b11))

    def test_loopy_matroid_has_void_nbc_complexes(self):
        m = from_bases(3, [parse_subset("23", 3)])  # element 1 is a loop
        assert build_complex(m, "nbc").facets == ()
        assert build_complex(m, "augmented-nbc").facets == ()


class TestFHVectors:
    def test_m5_independence_complex(self, m5_matroid):
        cx = independence_complex(m5_matroid)
        assert f_vector(cx).f == (1, 5, 10, 8)

    def test_simplex(self):
        cx = SimplicialComplex(
            (("z", 1), ("z", 2), ("z", 3)), (0b111,)
        )
        assert f_vector(cx).f == (1, 3, 3, 1)
        assert h_vector(cx).h == (1, 0, 0, 0)

    def test_m5_nbc_complex(self, m5_matroid):
        assert f_vector(build_complex(m5_matroid, "nbc")).f == (1, 5, 8, 4)

    def test_inclusion_exclusion_agrees(self, m5_matroid):
        for cx in (
            build_complex(m5_matroid, "ea"),
            build_complex(m5_matroid, "nbc"),
            independence_complex(m5_matroid),
            independence_complex(uniform(2, 4)),
        ):
            assert f_vector_by_inclusion_exclusion(cx) == cx.fh.f

    def test_defining_polynomial_identity(self, corpus):
        # sum f_i (q-1)^(d-i) must equal sum h_i q^(d-i)
        q = BiPoly.monomial(1, 0)
        q_minus_1 = BiPoly({(1, 0): 1, (0, 0): -1})
        for m in corpus.values():
            for kind in ("augmented-ea", "ea", "nbc", "augmented-nbc"):
                fh = build_complex(m, kind).fh
                if not fh.f:
                    continue
                d = len(fh.f) - 1
                lhs = BiPoly.zero()
                rhs = BiPoly.zero()
                for i in range(d + 1):
                    lhs = lhs + BiPoly({(0, 0): fh.f[i]}) * q_minus_1 ** (d - i)
                    rhs = rhs + BiPoly({(0, 0): fh.h[i]}) * q ** (d - i)
                assert lhs == rhs

    def test_h_sums_to_facet_count(self, corpus):
        for m in corpus.values():
            for kind in ("augmented-ea", "ea", "nbc", "augmented-nbc"):
                cx = build_complex(m, kind)
                if cx.facets:
                    assert sum(cx.fh.h) == len(cx.facets)
                    assert cx.fh.h[0] == 1

    def test_m5_augmented_h_vector(self, m5_matroid):
        cx = build_complex(m5_matroid, "augmented-ea")
        assert cx.fh.h == (1, 5, 10, 8, 0, 0, 0, 0, 0)
