#pragma once

// Splitting-field degree computation over Q by repeated root adjunction with
// primitive-element recombination, plus the fast degree-based shortcuts that
// decide the constructibility criteria for low degrees.

#include "towerforge/factor.hpp"
#include "towerforge/intpoly.hpp"
#include "towerforge/numberfield.hpp"
#include "towerforge/qpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace towerforge {

struct SplittingReport {
    std::optional<unsigned long> degree;  // empty means the cap was exceeded
    std::vector<int> tower;               // degrees of the adjoined factors
    std::optional<std::string> shortcut;  // rule name when no tower was computed

    bool cap_exceeded() const { return !degree.has_value(); }
};

namespace detail {

// Work guard: a tower step whose Trager norm would exceed this degree is
// reported as CapExceeded instead of ground out. Keeps runtime bounded with
// honest output; every degree that actually decides the paper's criteria
// stays far below it.
inline constexpr long kNormWorkCap = 192;

} // namespace detail

// Degree of the splitting field of a squarefree polynomial over Q, bounded by
// `cap`; reports the tower of adjoined factor degrees.
inline SplittingReport splitting_degree(const IntPoly& f_in, unsigned long cap) {
    if (f_in.degree() < 1) throw std::invalid_argument("splitting_degree needs degree >= 1");
    if (!is_squarefree(f_in)) throw std::invalid_argument("splitting_degree requires squarefree input");
    if (cap < static_cast<unsigned long>(f_in.degree()))
        throw std::invalid_argument("splitting_degree cap below polynomial degree");
    IntPoly f = f_in.normalized();
    SplittingReport report;
    unsigned long deg = 1;
    std::optional<NumberField> field;  // empty = base field Q
    while (true) {
        // smallest nonlinear irreducible factor of f over the current field
        std::optional<IntPoly> next_q;       // when over Q
        std::optional<KPoly> next_k;         // when over an extension
        if (!field) {
            Factorization fac = factor_rational(f);
            for (const auto& [g, mult] : fac.factors) {
                (void)mult;
                if (g.degree() >= 2) { next_q = g; break; }
            }
            if (!next_q) { report.degree = deg; return report; }
        } else {
            if (static_cast<long>(field->degree) * f.degree() > detail::kNormWorkCap)
                return report;  // degree empty: treated as cap exceeded
            std::vector<KPoly> factors;
            try {
                factors = factor_over_field(f, *field);
            } catch (const std::runtime_error&) {
                return report;  // factorization resource cap: report as cap exceeded
            }
            for (const auto& g : factors) {
                if (kx_degree(g) >= 2) { next_k = g; break; }
            }
            if (!next_k) { report.degree = deg; return report; }
        }
        int gdeg = next_q ? next_q->degree() : kx_degree(*next_k);
        unsigned long newdeg = deg * static_cast<unsigned long>(gdeg);
        if (newdeg > cap) {
            report.tower.push_back(gdeg);
            return report;  // degree empty: cap exceeded
        }
        if (!field) {
            field = NumberField::make(*next_q);
        } else {
            // primitive element theta' = beta + c*theta for the smallest
            // natural c giving a squarefree norm
            NumberField next_field;
            for (mpz_class c(1);; ++c) {
                IntPoly norm = kx_norm_shifted(*field, *next_k, c);
                if (norm.is_zero()) continue;
                if (!is_squarefree(norm)) continue;
                if (norm.degree() != field->degree * gdeg)
                    throw std::logic_error("primitive element norm degree mismatch");
                next_field.gen_minpoly = norm.normalized();
                next_field.degree = next_field.gen_minpoly.degree();
                break;
            }
            field = next_field;
        }
        report.tower.push_back(gdeg);
        deg = newdeg;
    }
}

// True iff the Galois closure of an irreducible quartic has 2-power order,
// decided by reducibility of the resolvent cubic of the depressed quartic.
inline bool quartic_is_two_group(const IntPoly& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_is_two_group needs degree 4");
    QPoly q = QPoly::from_int_poly(f).monic();
    // depress: x -> x - a3/4
    mpq_class a3 = q.coeff(3);
    QPoly dep = q.shift(-a3 / 4);
    if (dep.coeff(3) != 0) throw std::logic_error("depressed quartic retains cubic term");
    mpq_class p = dep.coeff(2), r = dep.coeff(1), s = dep.coeff(0);
    // resolvent cubic of x^4 + p x^2 + r x + s: y^3 - p y^2 - 4 s y + (4 p s - r^2)
    QPoly resolvent({4 * p * s - r * r, -4 * s, -p, mpq_class(1)});
    IntPoly rz = resolvent.clear_denominators().first;
    Factorization fac = factor_rational(rz);
    return fac.factors.size() > 1 || fac.factors[0].first.degree() < 3;
}

enum class Smoothness { TwoGroup, TwoThreeSmooth, NotSmooth, Unknown };

struct SmoothnessVerdict {
    Smoothness kind = Smoothness::Unknown;
    std::optional<SplittingReport> report;  // present when a tower was computed
    std::optional<std::string> shortcut;    // present when a shortcut decided
};

inline Smoothness smoothness_from_degree(unsigned long d) {
    while (d % 2 == 0) d /= 2;
    if (d == 1) return Smoothness::TwoGroup;
    while (d % 3 == 0) d /= 3;
    return d == 1 ? Smoothness::TwoThreeSmooth : Smoothness::NotSmooth;
}

// Classification of the splitting degree of an irreducible polynomial as a
// 2-group / 2-3-smooth / neither, with shortcuts applied before any tower
// computation:
//  (i)  deg has a prime factor outside {2,3}: NotSmooth (degree divides the
//       splitting degree)
//  (ii) deg 1 or 2: TwoGroup
//  (iii) deg 3: TwoThreeSmooth
//  (iv) deg 4: resolvent cubic decides TwoGroup vs TwoThreeSmooth
inline SmoothnessVerdict smoothness_verdict(const IntPoly& f, unsigned long cap) {
    if (f.degree() < 1) throw std::invalid_argument("smoothness_verdict needs degree >= 1");
    SmoothnessVerdict v;
    unsigned long n = static_cast<unsigned long>(f.degree());
    unsigned long rest = n;
    while (rest % 2 == 0) rest /= 2;
    while (rest % 3 == 0) rest /= 3;
    if (rest != 1) {
        v.kind = Smoothness::NotSmooth;
        v.shortcut = "degree_prime_outside_2_3";
        return v;
    }
    if (n <= 2) {
        v.kind = Smoothness::TwoGroup;
        v.shortcut = "degree_le_2";
        return v;
    }
    if (n == 3) {
        v.kind = Smoothness::TwoThreeSmooth;
        v.shortcut = "cubic";
        return v;
    }
    if (n == 4) {
        v.kind = quartic_is_two_group(f) ? Smoothness::TwoGroup : Smoothness::TwoThreeSmooth;
        v.shortcut = "resolvent_cubic";
        return v;
    }
    SplittingReport rep = splitting_degree(f, cap);
    if (rep.cap_exceeded()) {
        v.kind = Smoothness::Unknown;
    } else {
        v.kind = smoothness_from_degree(*rep.degree);
    }
    v.report = std::move(rep);
    return v;
}

} // namespace towerforge
