#pragma once

// Resultants Res_y(m(y), G(x, y)) for integer bivariate G, computed by
// evaluation at integer sample points and exact Lagrange interpolation.
// This one primitive carries algebraic-number addition/multiplication and
// Trager-style norms.

#include "towerforge/intpoly.hpp"

#include <stdexcept>
#include <vector>

namespace towerforge {

// G(x, y) = sum coeff_y[i](x) * y^i
struct BiPoly {
    std::vector<IntPoly> coeff_y;

    void trim() { while (!coeff_y.empty() && coeff_y.back().is_zero()) coeff_y.pop_back(); }
    int degree_y() const { return static_cast<int>(coeff_y.size()) - 1; }
    bool is_zero() const { return coeff_y.empty(); }
    int max_degree_x() const {
        int d = 0;
        for (const auto& c : coeff_y) d = std::max(d, c.degree());
        return d;
    }
    // univariate in y after substituting x = t
    IntPoly at_x(const mpz_class& t) const {
        std::vector<mpz_class> c(coeff_y.size());
        for (std::size_t i = 0; i < coeff_y.size(); ++i) c[i] = coeff_y[i].eval(t);
        return IntPoly(std::move(c));
    }
};

// G(x, y) = q(x - s*y)
inline BiPoly bipoly_shift_compose(const IntPoly& q, const mpz_class& s) {
    int n = q.degree();
    BiPoly g;
    g.coeff_y.assign(static_cast<std::size_t>(n) + 1, IntPoly());
    // (x - s y)^j = sum_i C(j,i) (-s)^i x^(j-i) y^i
    for (int j = 0; j <= n; ++j) {
        const mpz_class& qj = q.coeff(static_cast<std::size_t>(j));
        if (qj == 0) continue;
        mpz_class binom(1), spow(1);  // C(j,i) and (-s)^i
        for (int i = 0; i <= j; ++i) {
            mpz_class term = qj * binom * spow;
            g.coeff_y[static_cast<std::size_t>(i)] =
                g.coeff_y[static_cast<std::size_t>(i)] +
                IntPoly::monomial(term, static_cast<std::size_t>(j - i));
            // update binom C(j,i+1) and power (-s)^(i+1)
            binom = binom * (j - i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i + 1));
            spow *= -s;
        }
    }
    g.trim();
    return g;
}

// G(x, y) = y^n * q(x/y), n = deg q
inline BiPoly bipoly_homogenize(const IntPoly& q) {
    int n = q.degree();
    BiPoly g;
    g.coeff_y.assign(static_cast<std::size_t>(n) + 1, IntPoly());
    for (int j = 0; j <= n; ++j) {
        const mpz_class& qj = q.coeff(static_cast<std::size_t>(j));
        if (qj == 0) continue;
        g.coeff_y[static_cast<std::size_t>(n - j)] = IntPoly::monomial(qj, static_cast<std::size_t>(j));
    }
    g.trim();
    return g;
}

// Res_y(m(y), G(x, y)) as a polynomial in x. m must be nonconstant.
inline IntPoly resultant_y(const IntPoly& m, const BiPoly& g) {
    int n = m.degree();
    if (n < 1) throw std::domain_error("resultant_y: m must be nonconstant");
    if (g.is_zero()) return IntPoly();
    int dy = g.degree_y();
    long bound = static_cast<long>(n) * g.max_degree_x();
    long points = bound + 1;
    std::vector<mpz_class> ts;
    std::vector<mpz_class> values;
    ts.reserve(static_cast<std::size_t>(points));
    long t = 0;
    while (static_cast<long>(ts.size()) < points) {
        ts.emplace_back(t);
        t = (t > 0) ? -t : (-t + 1);
    }
    mpz_class lead_m = m.lc();
    for (const mpz_class& tv : ts) {
        IntPoly gt = g.at_x(tv);
        if (gt.is_zero()) {
            values.emplace_back(0);
            continue;
        }
        int drop = dy - gt.degree();
        mpz_class corr(1);
        if (drop > 0) mpz_pow_ui(corr.get_mpz_t(), lead_m.get_mpz_t(), static_cast<unsigned long>(drop));
        if (gt.degree() == 0 && n == 0) throw std::logic_error("unreachable");
        mpz_class r = resultant(m, gt);
        values.push_back(corr * r);
    }
    // Lagrange interpolation, exact over Z
    IntPoly master = IntPoly::constant(1);
    for (const mpz_class& tv : ts) master = master * IntPoly(std::vector<mpz_class>{-tv, mpz_class(1)});
    std::vector<IntPoly> basis(ts.size());
    std::vector<mpz_class> denom(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        std::vector<mpz_class> lin{-ts[j], mpz_class(1)};
        basis[j] = divexact(master, IntPoly(std::move(lin)));
        mpz_class d(1);
        for (std::size_t k = 0; k < ts.size(); ++k)
            if (k != j) d *= (ts[j] - ts[k]);
        denom[j] = d;
    }
    mpz_class L(1);
    for (const auto& d : denom) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
    IntPoly sum;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        if (values[j] == 0) continue;
        mpz_class w;
        mpz_divexact(w.get_mpz_t(), L.get_mpz_t(), denom[j].get_mpz_t());
        sum = sum + basis[j] * (values[j] * w);
    }
    if (sum.is_zero()) return IntPoly();
    // the resultant has integer coefficients, so L divides exactly
    return sum.divexact_scalar(L);
}

} // namespace towerforge
