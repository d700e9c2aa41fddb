#pragma once

// Simple number fields Q(theta), elements as polynomials in the generator,
// and factorization of integer polynomials over a field by Trager's norm
// method: factor Norm(f(x - s*theta)) over Q for a shift s making the norm
// squarefree, then recover the factors by gcds in K[x].

#include "towerforge/bires.hpp"
#include "towerforge/factor.hpp"
#include "towerforge/intpoly.hpp"
#include "towerforge/qpoly.hpp"
#include "towerforge/sturm.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace towerforge {

struct NumberField {
    IntPoly gen_minpoly;                      // normalized irreducible, degree >= 2
    int degree = 0;                           // == gen_minpoly.degree()
    std::optional<DyadicInterval> gen_isol;   // real embedding when one exists

    static NumberField make(IntPoly minpoly) {
        NumberField k;
        k.gen_minpoly = minpoly.normalized();
        k.degree = k.gen_minpoly.degree();
        if (k.degree < 2) throw std::invalid_argument("NumberField generator must have degree >= 2");
        auto roots = isolate_real_roots(k.gen_minpoly);
        if (!roots.empty()) k.gen_isol = roots.front();
        return k;
    }
};

// Field elements are residues mod the generator's minimal polynomial,
// represented as QPoly of degree < field degree.
using FieldElement = QPoly;

inline FieldElement fe_reduce(const NumberField& k, const QPoly& a) {
    QPoly m = QPoly::from_int_poly(k.gen_minpoly).monic();
    return qp_divmod(a, m).second;
}
inline FieldElement fe_mul(const NumberField& k, const FieldElement& a, const FieldElement& b) {
    return fe_reduce(k, a * b);
}
inline FieldElement fe_inv(const NumberField& k, const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("field inverse of zero");
    QPoly m = QPoly::from_int_poly(k.gen_minpoly).monic();
    // extended euclid over Q[x]
    QPoly r0 = m, r1 = a;
    QPoly t0, t1 = QPoly::constant(mpq_class(1));
    while (!r1.is_zero()) {
        auto [q, r] = qp_divmod(r0, r1);
        QPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw std::logic_error("generator minpoly not irreducible?");
    return fe_reduce(k, t0 * (1 / r0.lc()));
}

// Polynomials over K, coefficient index = exponent.
using KPoly = std::vector<FieldElement>;

inline void kx_trim(KPoly& a) { while (!a.empty() && a.back().is_zero()) a.pop_back(); }
inline int kx_degree(const KPoly& a) { return static_cast<int>(a.size()) - 1; }
inline KPoly kx_from_int_poly(const IntPoly& f) {
    KPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(QPoly::constant(mpq_class(c)));
    kx_trim(r);
    return r;
}
inline KPoly kx_mul(const NumberField& k, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    for (auto& c : r) c = fe_reduce(k, c);
    kx_trim(r);
    return r;
}
inline KPoly kx_sub(const KPoly& a, const KPoly& b) {
    KPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    kx_trim(r);
    return r;
}
inline KPoly kx_monic(const NumberField& k, const KPoly& a) {
    if (a.empty()) return a;
    FieldElement inv = fe_inv(k, a.back());
    KPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fe_mul(k, a[i], inv);
    return r;
}
inline std::pair<KPoly, KPoly> kx_divmod(const NumberField& k, const KPoly& a, const KPoly& b) {
    if (b.empty()) throw std::domain_error("K[x] division by zero");
    KPoly r = a, q;
    if (kx_degree(a) >= kx_degree(b))
        q.assign(static_cast<std::size_t>(kx_degree(a) - kx_degree(b)) + 1, FieldElement());
    FieldElement inv = fe_inv(k, b.back());
    while (!r.empty() && kx_degree(r) >= kx_degree(b)) {
        long shift = kx_degree(r) - kx_degree(b);
        FieldElement coef = fe_mul(k, r.back(), inv);
        q[static_cast<std::size_t>(shift)] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::size_t idx = i + static_cast<std::size_t>(shift);
            r[idx] = r[idx] - fe_mul(k, coef, b[i]);
        }
        kx_trim(r);
    }
    kx_trim(q);
    return {q, r};
}
inline KPoly kx_gcd_monic(const NumberField& k, KPoly a, KPoly b) {
    while (!b.empty()) {
        KPoly r = kx_divmod(k, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) throw std::domain_error("gcd of zero polynomials in K[x]");
    return kx_monic(k, a);
}
// substitute x -> x + c
inline KPoly kx_shift(const NumberField& k, const KPoly& a, const FieldElement& c) {
    KPoly lin{c, QPoly::constant(mpq_class(1))};
    KPoly res;
    for (std::size_t i = a.size(); i-- > 0;) {
        res = kx_mul(k, res, lin);
        if (res.empty()) res = KPoly{a[i]};
        else res[0] = res[0] + a[i];
        kx_trim(res);
    }
    return res;
}

// Norm from K[x] down to Q[x]: Res_y(m(y), sum_j rep_j(y) (x - c*y)^j) up to
// the positive constant den^deg(m) from clearing denominators.
inline IntPoly kx_norm_shifted(const NumberField& k, const KPoly& g, const mpz_class& c) {
    mpz_class den(1);
    for (const auto& rep : g)
        for (const auto& co : rep.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), co.get_den().get_mpz_t());
    BiPoly acc;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j].is_zero()) continue;
        // integer version of rep_j(y)
        std::vector<mpz_class> ry(g[j].coeffs().size());
        for (std::size_t i = 0; i < ry.size(); ++i) {
            mpq_class scaled = g[j].coeff(i) * mpq_class(den);
            ry[i] = scaled.get_num();
        }
        // (x - c y)^j expanded: coeff of y^i is C(j,i) (-c)^i x^(j-i)
        BiPoly term = bipoly_shift_compose(IntPoly::monomial(1, j), c);
        // multiply by rep_j(y)
        BiPoly scaled;
        scaled.coeff_y.assign(term.coeff_y.size() + ry.size() - 1, IntPoly());
        for (std::size_t i = 0; i < term.coeff_y.size(); ++i) {
            if (term.coeff_y[i].is_zero()) continue;
            for (std::size_t t = 0; t < ry.size(); ++t) {
                if (ry[t] == 0) continue;
                scaled.coeff_y[i + t] = scaled.coeff_y[i + t] + term.coeff_y[i] * ry[t];
            }
        }
        if (acc.coeff_y.size() < scaled.coeff_y.size()) acc.coeff_y.resize(scaled.coeff_y.size());
        for (std::size_t i = 0; i < scaled.coeff_y.size(); ++i)
            acc.coeff_y[i] = acc.coeff_y[i] + scaled.coeff_y[i];
    }
    acc.trim();
    return resultant_y(k.gen_minpoly, acc);
}

// Irreducible monic factors of a squarefree integer polynomial over K.
inline std::vector<KPoly> factor_over_field(const IntPoly& f, const NumberField& k) {
    if (f.degree() < 1) throw std::invalid_argument("factor_over_field needs degree >= 1");
    if (!is_squarefree(f)) throw std::invalid_argument("factor_over_field requires squarefree input");
    KPoly fk = kx_monic(k, kx_from_int_poly(f));
    if (f.degree() == 1) return {fk};
    const IntPoly& m = k.gen_minpoly;
    for (mpz_class s(1);; ++s) {
        IntPoly norm = resultant_y(m, bipoly_shift_compose(f, s));
        if (norm.is_zero()) continue;
        if (!is_squarefree(norm)) continue;
        Factorization fac = factor_rational(norm);
        std::vector<KPoly> out;
        FieldElement stheta = QPoly({mpq_class(0), mpq_class(s)});  // s * theta
        for (const auto& [h, mult] : fac.factors) {
            (void)mult;
            KPoly hk = kx_shift(k, kx_from_int_poly(h), stheta);
            KPoly d = kx_gcd_monic(k, fk, hk);
            if (kx_degree(d) >= 1) out.push_back(std::move(d));
        }
        int total = 0;
        for (const auto& g : out) total += kx_degree(g);
        if (total != f.degree()) throw std::logic_error("Trager factorization degree mismatch");
        std::sort(out.begin(), out.end(), [](const KPoly& a, const KPoly& b) {
            if (kx_degree(a) != kx_degree(b)) return kx_degree(a) < kx_degree(b);
            for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
                const QPoly& ca = i < a.size() ? a[i] : QPoly();
                const QPoly& cb = i < b.size() ? b[i] : QPoly();
                if (ca.coeffs() != cb.coeffs())
                    return ca.coeffs() < cb.coeffs();
            }
            return false;
        });
        return out;
    }
}

} // namespace towerforge
