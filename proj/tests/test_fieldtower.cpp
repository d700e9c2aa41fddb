#include <catch2/catch_amalgamated.hpp>

#include "towerforge/cyclotomic.hpp"
#include "towerforge/numberfield.hpp"
#include "towerforge/splitting.hpp"

#include <mpfr.h>

#include <random>

using namespace towerforge;

namespace {

// multiplies monic K[x] factors back together and compares against f/lc(f)
bool product_matches(const NumberField& k, const std::vector<KPoly>& factors, const IntPoly& f) {
    KPoly prod{QPoly::constant(mpq_class(1))};
    for (const auto& g : factors) prod = kx_mul(k, prod, g);
    KPoly expect = kx_monic(k, kx_from_int_poly(f));
    if (prod.size() != expect.size()) return false;
    for (std::size_t i = 0; i < prod.size(); ++i)
        if (!(prod[i] == expect[i])) return false;
    return true;
}

} // namespace

TEST_CASE("factor over Q(sqrt2)") {
    NumberField k = NumberField::make(IntPoly{-2, 0, 1});
    // x^2 - 2 = (x - theta)(x + theta)
    auto f1 = factor_over_field(IntPoly{-2, 0, 1}, k);
    REQUIRE(f1.size() == 2);
    CHECK(kx_degree(f1[0]) == 1);
    CHECK(kx_degree(f1[1]) == 1);
    CHECK(product_matches(k, f1, IntPoly{-2, 0, 1}));
    // the roots are +-theta
    CHECK(f1[0][0] == QPoly({mpq_class(0), mpq_class(1)}));   // x + theta -> root -theta
    CHECK(f1[1][0] == QPoly({mpq_class(0), mpq_class(-1)}));  // x - theta

    // x^2 - 3 stays irreducible over Q(sqrt2)
    auto f2 = factor_over_field(IntPoly{-3, 0, 1}, k);
    REQUIRE(f2.size() == 1);
    CHECK(kx_degree(f2[0]) == 2);

    // x^4 - 4 = (x^2-2)(x^2+2): over Q(sqrt2) the first splits
    auto f3 = factor_over_field(IntPoly{-4, 0, 0, 0, 1}, k);
    REQUIRE(f3.size() == 3);
    CHECK(product_matches(k, f3, IntPoly{-4, 0, 0, 0, 1}));
}

TEST_CASE("factor over Q(cbrt2)") {
    NumberField k = NumberField::make(IntPoly{-2, 0, 0, 1});
    auto f = factor_over_field(IntPoly{-2, 0, 0, 1}, k);
    REQUIRE(f.size() == 2);
    CHECK(kx_degree(f[0]) == 1);
    CHECK(kx_degree(f[1]) == 2);  // remaining roots are complex
    CHECK(product_matches(k, f, IntPoly{-2, 0, 0, 1}));
}

TEST_CASE("splitting degrees") {
    CHECK(*splitting_degree(IntPoly{-2, 0, 1}, 64).degree == 2);
    CHECK(*splitting_degree(IntPoly{-2, 0, 0, 1}, 64).degree == 6);
    CHECK(*splitting_degree(IntPoly{1, 0, -10, 0, 1}, 64).degree == 4);
    IntPoly cos17 = algebraic_cos2pi(mpq_class(1, 17)).minpoly();
    SplittingReport rep = splitting_degree(cos17, 64);
    CHECK(*rep.degree == 8);
    CHECK(rep.tower == std::vector<int>{8});

    // cap handling: x^5 - x + 1 has splitting degree 120; with cap 16 the
    // tower stops after the second adjunction would reach 20
    SplittingReport capped = splitting_degree(IntPoly{1, -1, 0, 0, 0, 1}, 16);
    CHECK(capped.cap_exceeded());
    CHECK(capped.tower.size() == 2);

    // reducible squarefree input: (x^2-2)(x^2-3) splits in degree 4
    IntPoly prod = IntPoly{-2, 0, 1} * IntPoly{-3, 0, 1};
    CHECK(*splitting_degree(prod, 64).degree == 4);

    // divisibility and factorial bound on a small corpus of irreducibles
    std::vector<IntPoly> corpus{
        IntPoly{-2, 0, 1}, IntPoly{-2, 0, 0, 1}, IntPoly{1, -6, 0, 8},
        IntPoly{1, 0, -10, 0, 1}, IntPoly{-3, 0, 0, 0, 1}, IntPoly{-1, -1, 0, 0, 1},
        IntPoly{-1, 1, 1}, IntPoly{7, -3, 1},
    };
    for (const IntPoly& f : corpus) {
        SplittingReport r = splitting_degree(f, 1000);
        REQUIRE(r.degree.has_value());
        unsigned long d = *r.degree;
        CHECK(d % static_cast<unsigned long>(f.degree()) == 0);
        unsigned long fact = 1;
        for (int i = 2; i <= f.degree(); ++i) fact *= static_cast<unsigned long>(i);
        CHECK(fact % d == 0);
    }
}

TEST_CASE("quartic resolvent classification") {
    CHECK(quartic_is_two_group(IntPoly{1, 0, -10, 0, 1}));
    CHECK_FALSE(quartic_is_two_group(IntPoly{-1, -1, 0, 0, 1}));
    CHECK(quartic_is_two_group(IntPoly{-3, 0, 0, 0, 1}));
    // x^4 - 3 has splitting degree 8 = 2^3; cross-check via the tower
    CHECK(*splitting_degree(IntPoly{-3, 0, 0, 0, 1}, 64).degree == 8);
    // x^4 - x - 1 has splitting degree 24 (S4)
    CHECK(*splitting_degree(IntPoly{-1, -1, 0, 0, 1}, 64).degree == 24);
}

TEST_CASE("smoothness verdicts") {
    auto v1 = smoothness_verdict(IntPoly{-2, 0, 0, 1}, 64);
    CHECK(v1.kind == Smoothness::TwoThreeSmooth);
    auto v2 = smoothness_verdict(IntPoly{-2, 0, 0, 0, 0, 1}, 64);  // x^5 - 2
    CHECK(v2.kind == Smoothness::NotSmooth);
    CHECK(v2.shortcut == "degree_prime_outside_2_3");
    IntPoly cos11 = algebraic_cos2pi(mpq_class(1, 11)).minpoly();
    CHECK(cos11.degree() == 5);
    CHECK(smoothness_verdict(cos11, 64).kind == Smoothness::NotSmooth);
    IntPoly cos17 = algebraic_cos2pi(mpq_class(1, 17)).minpoly();
    CHECK(smoothness_verdict(cos17, 64).kind == Smoothness::TwoGroup);
    IntPoly cos15 = algebraic_cos2pi(mpq_class(1, 15)).minpoly();
    CHECK(smoothness_verdict(cos15, 64).kind == Smoothness::TwoGroup);
    // forced cap: degree-9 two-three candidate with huge splitting field
    auto v3 = smoothness_verdict(IntPoly{-2, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 8);  // x^9-2, cap 8
    CHECK(v3.kind == Smoothness::Unknown);
    CHECK(v3.report.has_value());
    CHECK(v3.report->cap_exceeded());
}

TEST_CASE("shortcuts agree with full towers for degree <= 4") {
    std::vector<IntPoly> corpus{
        IntPoly{-5, 1}, IntPoly{-2, 0, 1}, IntPoly{-1, 1, 1}, IntPoly{-2, 0, 0, 1},
        IntPoly{1, -6, 0, 8}, IntPoly{1, 0, -10, 0, 1}, IntPoly{-1, -1, 0, 0, 1},
        IntPoly{-3, 0, 0, 0, 1}, IntPoly{2, 4, 0, 0, 1}, IntPoly{-1, -6, 0, 8},
    };
    for (const IntPoly& f : corpus) {
        if (!is_irreducible(f)) continue;
        SmoothnessVerdict quick = smoothness_verdict(f, 64);
        SplittingReport full = splitting_degree(f, 1000);
        REQUIRE(full.degree.has_value());
        CHECK(quick.kind == smoothness_from_degree(*full.degree));
    }
}

TEST_CASE("numeric cross-check of a tower") {
    // the real subfield of Q(zeta_17) is galois of degree 8: every root of the
    // cos minpoly lies in the field generated by any single root. check
    // numerically that the splitting tower didn't lie: all 8 roots are real.
    IntPoly cos17 = algebraic_cos2pi(mpq_class(1, 17)).minpoly();
    CHECK(cos17.degree() == 8);
    CHECK(isolate_real_roots(cos17).size() == 8);
}
