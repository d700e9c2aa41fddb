#pragma once

// Cyclotomic polynomials and exact cosines of rational multiples of 2*pi.
// cos(2*pi*p/q) is located by eliminating the root of unity through the
// 2cos substitution: the q-th cyclotomic polynomial is palindromic, so
// Phi_q(z)/z^(phi(q)/2) rewrites as H(z + 1/z) with deg H = phi(q)/2, and the
// minimal polynomial of cos is H(2x) normalized. Root indexing is exact:
// cos(2*pi*k/q) is decreasing in k on 0 < k < q/2.

#include "towerforge/algebraic.hpp"
#include "towerforge/intpoly.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace towerforge {

inline const IntPoly& cyclotomic(unsigned long n) {
    static std::map<unsigned long, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) throw std::domain_error("cyclotomic index must be positive");
    IntPoly xn_minus_1 = IntPoly::monomial(1, n) - IntPoly::constant(1);
    IntPoly quot = xn_minus_1;
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d == 0) quot = divexact(quot, cyclotomic(d));
    }
    return cache.emplace(n, std::move(quot)).first->second;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Minimal polynomial of 2*cos(2*pi/q) for q >= 3, degree phi(q)/2 (minimality
// is the classical theorem on the real cyclotomic subfield; the degree is
// asserted).
inline IntPoly two_cos_minpoly(unsigned long q) {
    if (q < 3) throw std::domain_error("two_cos_minpoly needs q >= 3");
    const IntPoly& phi = cyclotomic(q);
    int d = phi.degree();
    if (d % 2 != 0) throw std::logic_error("cyclotomic degree expected even for q >= 3");
    int half = d / 2;
    for (int i = 0; i <= d; ++i) {
        if (phi.coeff(static_cast<std::size_t>(i)) != phi.coeff(static_cast<std::size_t>(d - i)))
            throw std::logic_error("cyclotomic polynomial expected palindromic");
    }
    // V_k(y) = z^k + z^-k as a polynomial in y = z + 1/z
    IntPoly v_prev = IntPoly::constant(2);  // V_0
    IntPoly v_cur{0, 1};                    // V_1 = y
    IntPoly h = IntPoly::constant(phi.coeff(static_cast<std::size_t>(half)));
    for (int k = 1; k <= half; ++k) {
        h = h + v_cur * phi.coeff(static_cast<std::size_t>(half + k));
        if (k < half) {
            IntPoly v_next = IntPoly{0, 1} * v_cur - v_prev;
            v_prev = v_cur;
            v_cur = v_next;
        }
    }
    if (h.degree() != half) throw std::logic_error("two_cos_minpoly degree mismatch");
    return h;
}

// Exact cos(2*pi * p/q) as an algebraic number; the fraction need not be
// reduced or in range.
inline AlgebraicNumber algebraic_cos2pi(const mpq_class& frac) {
    mpq_class f = frac;
    f.canonicalize();
    // shift into [0, 1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), f.get_num().get_mpz_t(), f.get_den().get_mpz_t());
    f -= mpq_class(fl);
    unsigned long q = f.get_den().get_ui();
    if (!f.get_den().fits_ulong_p() || q > 100000)
        throw std::domain_error("cos2pi denominator too large");
    unsigned long r = f.get_num().get_ui();  // 0 <= r < q, gcd(r, q) = 1
    if (q == 1) return AlgebraicNumber::from_int(1);
    if (q == 2) return AlgebraicNumber::from_int(-1);
    unsigned long k0 = std::min(r, q - r);
    IntPoly m = two_cos_minpoly(q).compose_scale_int(2).normalized();
    unsigned long expected = euler_phi(q) / 2;
    if (static_cast<unsigned long>(m.degree()) != expected)
        throw std::logic_error("cos minimal polynomial degree mismatch");
    auto roots = isolate_real_roots(m);
    if (roots.size() != expected) throw std::logic_error("cos root count mismatch");
    // ascending roots correspond to descending k among 1 <= k < q/2 coprime
    unsigned long rank_above = 0;
    for (unsigned long k = k0 + 1; 2 * k < q; ++k) {
        if (std::gcd(k, q) == 1) ++rank_above;
    }
    const DyadicInterval& iv = roots.at(rank_above);
    if (m.degree() == 1)
        return AlgebraicNumber::from_rational(mpq_class(-m.coeff(0), m.coeff(1)));
    return AlgebraicNumber::from_certified(m, iv);
}

} // namespace towerforge
