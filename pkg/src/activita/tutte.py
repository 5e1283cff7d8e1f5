"""Tutte polynomials via activities and deletion-contraction, plus identities.

Polynomials live in BiPoly: sparse integer Laurent polynomials in (q, t)
where the q-exponent may be negative (the bivariate restriction-set
polynomial has 1/q powers).  The identity report checks the h-polynomial
formulas tying the activity complexes to Tutte evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .activity import activity_profile
from .complexes import build_complex
from .matroid import Matroid
from .orders import build_poset, first_extension
from .shelling import verify_shelling


class BiPoly:
    """Sparse integer polynomial in (q, t); q-exponents may be negative."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, qexp: int, texp: int, coeff: int = 1) -> "BiPoly":
        return cls({(qexp, texp): coeff})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            out[key] = out.get(key, 0) + v
        return BiPoly(out)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (q1, t1), v1 in self.coeffs.items():
            for (q2, t2), v2 in other.coeffs.items():
                key = (q1 + q2, t1 + t2)
                out[key] = out.get(key, 0) + v1 * v2
        return BiPoly(out)

    def __pow__(self, e: int) -> "BiPoly":
        result = BiPoly.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def subst(self, qval: "BiPoly", tval: "BiPoly") -> "BiPoly":
        """Substitute polynomials for q and t; exponents must be nonnegative."""
        out = BiPoly.zero()
        for (qe, te), v in self.coeffs.items():
            if qe < 0 or te < 0:
                raise ValueError("cannot substitute into a Laurent exponent")
            out = out + BiPoly({(0, 0): v}) * qval**qe * tval**te
        return out

    def evaluate(self, qval: int, tval: int) -> int:
        """Numeric evaluation; exponents must be nonnegative."""
        total = 0
        for (qe, te), v in self.coeffs.items():
            if qe < 0 or te < 0:
                raise ValueError("cannot evaluate a Laurent exponent at an integer")
            total += v * qval**qe * tval**te
        return total

    def subst_t_equals_q(self) -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (qe, te), v in self.coeffs.items():
            key = (qe + te, 0)
            out[key] = out.get(key, 0) + v
        return BiPoly(out)

    def min_q_exponent(self) -> int:
        return min((qe for qe, _ in self.coeffs), default=0)

    def terms(self) -> list[tuple[int, int, int]]:
        """(q-exponent, t-exponent, coefficient), highest monomials first."""
        return [
            (qe, te, self.coeffs[qe, te])
            for qe, te in sorted(self.coeffs, reverse=True)
        ]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for qe, te, v in self.terms():
            factors = []
            if abs(v) != 1 or (qe == 0 and te == 0):
                factors.append(str(abs(v)))
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            if te:
                factors.append("t" if te == 1 else f"t^{te}")
            term = "*".join(factors)
            parts.append(("- " if v < 0 else "+ " if parts else "") + term)
        return " ".join(parts)


def tutte_by_activities(matroid: Matroid) -> BiPoly:
    """T(q, t) = sum over bases of q^(#internally active) t^(#externally active)."""
    total = BiPoly.zero()
    for b in matroid.bases:
        prof = activity_profile(matroid, b)
        total = total + BiPoly.monomial(prof.ia.bit_count(), prof.ea.bit_count())
    return total


def tutte_by_deletion_contraction(matroid: Matroid) -> BiPoly:
    """Independent oracle: the standard loop/coloop/delete+contract recursion.

    Memoized on the (ground set, bases) signature of each minor.
    """
    memo: dict[tuple[int, frozenset[int]], BiPoly] = {}
    q = BiPoly.monomial(1, 0)
    t = BiPoly.monomial(0, 1)

    def rec(ground: int, bases: frozenset[int]) -> BiPoly:
        if not ground:
            return BiPoly.one()
        key = (ground, bases)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ebit = ground & -ground
        rest = ground ^ ebit
        covered = 0
        common = ground
        for b in bases:
            covered |= b
            common &= b
        if not covered & ebit:  # loop
            out = t * rec(rest, bases)
        elif common & ebit:  # coloop
            out = q * rec(rest, frozenset(b ^ ebit for b in bases))
        else:
            deleted = frozenset(b for b in bases if not b & ebit)
            contracted = frozenset(b ^ ebit for b in bases if b & ebit)
            out = rec(rest, deleted) + rec(rest, contracted)
        memo[key] = out
        return out

    return rec(matroid.full_mask, frozenset(matroid.bases))


def h_polynomial(h: tuple[int, ...]) -> BiPoly:
    """The h-polynomial sum h_i q^(d-i) of an h-vector (zero for the void complex)."""
    d = len(h) - 1
    out = BiPoly.zero()
    for i, coeff in enumerate(h):
        out = out + BiPoly.monomial(d - i, 0, coeff)
    return out


def bivariate_restriction_polynomial(
    matroid: Matroid, restrictions: list[int]
) -> BiPoly:
    """Two-variable enrichment of the h-polynomial from flip-order restrictions.

    Each restriction set y_Y z_T contributes q^(-|Y|) t^(n+r-|T|); the
    restrictions come from a shelling of the augmented complex, whose
    universe is flavor-major (x block, then y, then z).
    """
    n = matroid.n
    d = n + matroid.rank
    ymask = ((1 << n) - 1) << n
    zmask = ((1 << n) - 1) << (2 * n)
    out = BiPoly.zero()
    for r in restrictions:
        ycount = (r & ymask).bit_count()
        zcount = (r & zmask).bit_count()
        out = out + BiPoly.monomial(-ycount, d - zcount)
    return out


@dataclass
class IdentityReport:
    """Exact polynomial identities tying complexes to Tutte evaluations."""

    tutte: BiPoly
    h_poly: BiPoly
    h_matches: bool
    nbc_h_poly: BiPoly
    nbc_matches: bool
    bivariate: BiPoly
    bivariate_matches: bool
    collapse_matches: bool
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.h_matches
            and self.nbc_matches
            and self.bivariate_matches
            and self.collapse_matches
        )


def identity_report(matroid: Matroid) -> IdentityReport:
    """Evaluate the h-polynomial and bivariate identities for one matroid.

    (a) h-poly of the augmented complex equals q^n T(1+q, 1);
    (b) h-poly of the augmented nbc complex equals T(1+q, 0);
    (c) the bivariate polynomial of a flip-order shelling equals
        t^n T((1/q+1)t, 1), compared both as Laurent polynomials and after
        clearing q^rank;
    (d) setting t = q in (c) recovers (a).
    """
    n, r = matroid.n, matroid.rank
    tutte = tutte_by_activities(matroid)
    one = BiPoly.one()
    q_plus_1 = BiPoly({(0, 0): 1, (1, 0): 1})

    h_poly = h_polynomial(build_complex(matroid, "augmented-ea").fh.h)
    rhs_a = BiPoly.monomial(n, 0) * tutte.subst(q_plus_1, one)
    h_matches = h_poly == rhs_a

    nbc_h_poly = h_polynomial(build_complex(matroid, "augmented-nbc").fh.h)
    rhs_b = tutte.subst(q_plus_1, BiPoly.zero())
    nbc_matches = nbc_h_poly == rhs_b

    order = first_extension(build_poset(matroid, "flip-ind"))
    cx = build_complex(matroid, "augmented-ea")
    report = verify_shelling(cx, [cx.facet_by_tag[i] for i in order], check_properties=False)
    bivariate = bivariate_restriction_polynomial(matroid, report.restrictions)
    inv_q_plus_1_t = BiPoly({(-1, 1): 1, (0, 1): 1})
    rhs_c = BiPoly.monomial(0, n) * tutte.subst(inv_q_plus_1_t, one)
    clear = BiPoly.monomial(r, 0)
    cleared_lhs = clear * bivariate
    cleared_rhs = clear * rhs_c
    bivariate_matches = (
        report.verdict
        and bivariate == rhs_c
        and cleared_lhs == cleared_rhs
        and cleared_lhs.min_q_exponent() >= 0
        and cleared_rhs.min_q_exponent() >= 0
    )

    collapse_matches = bivariate.subst_t_equals_q() == h_poly

    return IdentityReport(
        tutte=tutte,
        h_poly=h_poly,
        h_matches=h_matches,
        nbc_h_poly=nbc_h_poly,
        nbc_matches=nbc_matches,
        bivariate=bivariate,
        bivariate_matches=bivariate_matches,
        collapse_matches=collapse_matches,
    )
