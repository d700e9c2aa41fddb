#include <catch2/catch_amalgamated.hpp>

#include "towerforge/bires.hpp"
#include "towerforge/dyadic.hpp"
#include "towerforge/factor.hpp"
#include "towerforge/intpoly.hpp"
#include "towerforge/sturm.hpp"

#include <random>

using namespace towerforge;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    while (true) {
        int d = dd(rng);
        std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = dc(rng);
        IntPoly p{std::move(c)};
        if (!p.is_zero()) return p;
    }
}

// Independent oracle: Sylvester matrix determinant by fraction-free Bareiss.
mpz_class sylvester_resultant(const IntPoly& p, const IntPoly& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) throw std::domain_error("zero polynomial");
    int N = m + n;
    if (N == 0) return 1;
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(N),
                                          std::vector<mpz_class>(static_cast<std::size_t>(N), mpz_class(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p.coeff(static_cast<std::size_t>(m - j));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = q.coeff(static_cast<std::size_t>(n - j));
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                mpz_class num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_class r;
                mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * a[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
}

} // namespace

TEST_CASE("dyadic arithmetic and rounding") {
    Dyadic a(mpz_class(3), -2);   // 0.75
    Dyadic b(mpz_class(-5), -3);  // -0.625
    CHECK((a + b).to_mpq() == mpq_class(1, 8));
    CHECK((a * b).to_mpq() == mpq_class(-15, 32));
    CHECK(Dyadic::cmp(a, b) > 0);
    Dyadic third_up = dyadic_div_up(Dyadic(1), Dyadic(3), 10);
    Dyadic third_dn = dyadic_div_down(Dyadic(1), Dyadic(3), 10);
    CHECK(third_dn.to_mpq() <= mpq_class(1, 3));
    CHECK(third_up.to_mpq() >= mpq_class(1, 3));
    CHECK((third_up - third_dn).to_mpq() <= mpq_class(1, 1024));

    Dyadic two(2);
    Dyadic s_dn = dyadic_sqrt_down(two, 30), s_up = dyadic_sqrt_up(two, 30);
    CHECK(s_dn.to_mpq() * s_dn.to_mpq() <= 2);
    CHECK(s_up.to_mpq() * s_up.to_mpq() >= 2);
    CHECK((s_up - s_dn).to_mpq() <= mpq_class(1, 1 << 29));

    DyadicInterval iv = dyadic_bracket(mpq_class(1, 3), 8);
    CHECK(iv.contains(mpq_class(1, 3)));
    CHECK(iv.lo().to_mpq() != mpq_class(1, 3));
    CHECK(Dyadic(mpz_class(7), -3).to_decimal_string() == "0.875");
}

TEST_CASE("polynomial ring arithmetic") {
    IntPoly xp1{1, 1}, xm1{-1, 1};
    CHECK((xp1 * xm1) == IntPoly{-1, 0, 1});
    IntPoly p{3, 0, 2};
    CHECK((p + IntPoly::zero()) == p);

    // pseudo-divide(x^3, x^2-2) -> q = x, r = 2x; verify by re-multiplying
    IntPoly x3 = IntPoly::monomial(1, 3), q2{-2, 0, 1};
    PseudoDivision pd = pseudo_divide(x3, q2);
    CHECK(pd.quotient == IntPoly{0, 1});
    CHECK(pd.remainder == IntPoly{0, 2});
    CHECK(pd.scale * x3 == pd.quotient * q2 + pd.remainder);

    CHECK(IntPoly({-2, 0, 1}).str() == "x^2 - 2");
    CHECK(IntPoly({1, -6, 0, 8}).str() == "8x^3 - 6x + 1");
    CHECK(parse_poly("8x^3 - 6x + 1") == IntPoly{1, -6, 0, 8});
    CHECK(parse_poly("x^2-2") == IntPoly{-2, 0, 1});
    CHECK(parse_poly("-x + 3") == IntPoly{3, -1});
    CHECK(parse_poly("5") == IntPoly::constant(5));
    CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
}

TEST_CASE("subresultant gcd") {
    CHECK(poly_gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 0, 0, 1}) == IntPoly{-1, 1});
    IntPoly p{6, -4, 2};
    CHECK(poly_gcd(p, p) == IntPoly{3, -2, 1});  // primitive part
    CHECK(poly_gcd(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == IntPoly::constant(1));

    std::mt19937_64 rng(20260809);
    for (int it = 0; it < 200; ++it) {
        IntPoly a = random_poly(rng, 6, 20), b = random_poly(rng, 6, 20);
        IntPoly g = poly_gcd(a, b);
        CHECK(pseudo_divide(a, g).remainder.is_zero());
        CHECK(pseudo_divide(b, g).remainder.is_zero());
    }
}

TEST_CASE("resultants") {
    // degree-1: res(x-a, x-b) = a-b
    CHECK(resultant(IntPoly{-7, 1}, IntPoly{-3, 1}) == 7 - 3);
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == 1);
    CHECK(resultant(IntPoly{5, -1, 4, 1}, IntPoly::constant(1)) == 1);

    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        IntPoly a = random_poly(rng, 5, 12), b = random_poly(rng, 5, 12);
        if (a.degree() < 1 && b.degree() < 1) continue;
        mpz_class r1 = resultant(a, b);
        mpz_class r2 = sylvester_resultant(a, b);
        CHECK(r1 == r2);
        bool gcd_nonconst = poly_gcd(a, b).degree() > 0;
        CHECK((r1 == 0) == gcd_nonconst);
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(IntPoly{1, -2, 1}) == IntPoly{-1, 1});
    CHECK(squarefree_part(IntPoly{-2, 0, 1}) == IntPoly{-2, 0, 1});
    CHECK(squarefree_part(IntPoly{0, 0, 1, 1}) == IntPoly{0, 1, 1});
}

TEST_CASE("rational factorization") {
    // x^4 - 4 = (x^2-2)(x^2+2)
    Factorization f = factor_rational(IntPoly{-4, 0, 0, 0, 1});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == IntPoly{-2, 0, 1});
    CHECK(f.factors[1].first == IntPoly{2, 0, 1});
    CHECK(f.unit == 1);

    Factorization g = factor_rational(IntPoly{-2, 0, 1});
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == IntPoly{-2, 0, 1});

    Factorization h = factor_rational(IntPoly{0, 6});
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].first == IntPoly{0, 1});
    CHECK(h.unit == 6);

    // classic cyclotomic-ish and multiplicities
    Factorization k = factor_rational(IntPoly{0, 0, 2, 4, 2});  // 2x^2(x+1)^2
    CHECK(k.unit == 2);
    REQUIRE(k.factors.size() == 2);
    CHECK(k.factors[0].second == 2);
    CHECK(k.factors[1].second == 2);

    std::mt19937_64 rng(99);
    for (int it = 0; it < 120; ++it) {
        IntPoly p = random_poly(rng, 6, 20);
        Factorization fr = factor_rational(p);
        // re-expand exactly
        mpq_class unit = fr.unit;
        IntPoly prod = IntPoly::constant(unit.get_num());
        for (auto& [fac, mult] : fr.factors) {
            CHECK(is_irreducible(fac));
            CHECK(fac == fac.normalized());
            for (int i = 0; i < mult; ++i) prod = prod * fac;
        }
        if (unit.get_den() != 1) prod = prod.divexact_scalar(unit.get_den());
        CHECK(prod == p);
    }
}

TEST_CASE("real root isolation") {
    auto iv2 = isolate_real_roots(IntPoly{-2, 0, 1});
    REQUIRE(iv2.size() == 2);
    CHECK(iv2[0].lo().to_mpq() >= -2);
    CHECK(iv2[0].hi().to_mpq() <= -1);
    CHECK(iv2[1].lo().to_mpq() >= 1);
    CHECK(iv2[1].hi().to_mpq() <= 2);

    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());

    // 8x^3 - 6x + 1 has roots cos(8pi/9), cos(4pi/9), cos(2pi/9)
    auto iv3 = isolate_real_roots(IntPoly{1, -6, 0, 8});
    REQUIRE(iv3.size() == 3);
    CHECK(iv3[0].contains(mpq_class(-93969, 100000)));
    CHECK(iv3[1].contains(mpq_class(17364, 100000)));
    CHECK(iv3[2].contains(mpq_class(76604, 100000)));

    // dyadic rational roots land on bisection points
    auto ivh = isolate_real_roots(IntPoly{-1, 2});  // root 1/2
    REQUIRE(ivh.size() == 1);
    CHECK(ivh[0].contains(mpq_class(1, 2)));

    auto ivm = isolate_real_roots(IntPoly{0, -1, 0, 2});  // x(2x^2-1): 0, +-sqrt(1/2)
    REQUIRE(ivm.size() == 3);

    std::mt19937_64 rng(12345);
    for (int it = 0; it < 100; ++it) {
        IntPoly p = random_poly(rng, 6, 20);
        if (p.degree() < 1) continue;
        IntPoly sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        auto roots = isolate_real_roots(sf);
        SturmChain chain(sf);
        CHECK(static_cast<int>(roots.size()) == chain.count_all_real_roots());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(chain.count_roots(roots[i]) == 1);
            CHECK(sf.sign_at(roots[i].lo()) != 0);
            CHECK(sf.sign_at(roots[i].hi()) != 0);
            if (i + 1 < roots.size()) CHECK(roots[i].hi() <= roots[i + 1].lo());
        }
    }
}

TEST_CASE("refinement keeps the root") {
    IntPoly p{-2, 0, 1};
    auto roots = isolate_real_roots(p);
    DyadicInterval iv = refine_isolating(p, roots[1], Dyadic::pow2(-10));
    CHECK(iv.width() <= Dyadic::pow2(-10));
    CHECK(iv.lo().to_mpq() * iv.lo().to_mpq() <= 2);
    CHECK(iv.hi().to_mpq() * iv.hi().to_mpq() >= 2);
}

TEST_CASE("bivariate resultant composes algebraic sums and products") {
    IntPoly p{-2, 0, 1}, q{-3, 0, 1};
    // roots +-sqrt2 +- sqrt3: x^4 - 10x^2 + 1
    IntPoly sum = resultant_y(p, bipoly_shift_compose(q, 1));
    CHECK(sum.normalized() == IntPoly{1, 0, -10, 0, 1});
    // roots +-sqrt6 (double): (x^2-6)^2
    IntPoly prod = resultant_y(p, bipoly_homogenize(q));
    CHECK(prod.normalized() == IntPoly{36, 0, -12, 0, 1});
    CHECK(squarefree_part(prod).normalized() == IntPoly{-6, 0, 1});
}
