#pragma once

// Exact real algebraic numbers: a normalized irreducible minimal polynomial
// plus a certified isolating interval (Sturm count one, endpoints not roots).
// Arithmetic composes minimal polynomials through resultants and re-isolates
// by refining operand intervals until exactly one candidate root survives.

#include "towerforge/bires.hpp"
#include "towerforge/dyadic.hpp"
#include "towerforge/factor.hpp"
#include "towerforge/intpoly.hpp"
#include "towerforge/sturm.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace towerforge {

enum class Ordering { Less, Equal, Greater };

class AlgebraicNumber {
public:
    AlgebraicNumber() : AlgebraicNumber(from_rational(mpq_class(0))) {}

    static AlgebraicNumber from_rational(const mpq_class& v) {
        mpq_class q = v;
        q.canonicalize();
        std::vector<mpz_class> c{-q.get_num(), q.get_den()};
        return AlgebraicNumber(IntPoly(std::move(c)), dyadic_bracket(q, 8));
    }
    static AlgebraicNumber from_int(long v) { return from_rational(mpq_class(v)); }

    // Internal constructor: callers certify that minpoly is normalized
    // irreducible and iv isolates exactly one of its roots.
    static AlgebraicNumber from_certified(IntPoly minpoly, DyadicInterval iv) {
        return AlgebraicNumber(std::move(minpoly), std::move(iv));
    }

    const IntPoly& minpoly() const { return minpoly_; }
    const DyadicInterval& interval() const { return isol_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    mpq_class to_rational() const {
        if (!is_rational()) throw std::domain_error("not a rational number");
        mpq_class q(-minpoly_.coeff(0), minpoly_.coeff(1));
        q.canonicalize();
        return q;
    }
    bool is_zero() const { return is_rational() && minpoly_.coeff(0) == 0; }

    // Interval of width <= target containing the root; endpoints dyadic.
    DyadicInterval refine(const Dyadic& target) const {
        return refine_isolating(minpoly_, isol_, target);
    }
    DyadicInterval refine_bits(long bits) const { return refine(Dyadic::pow2(-bits)); }

    int sign() const {
        if (is_rational()) return sgn(to_rational());
        DyadicInterval iv = isol_;
        long bits = 8;
        while (iv.sign() == 0) {
            bits *= 2;
            iv = refine_bits(bits);
        }
        return iv.sign();
    }

    friend Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.is_rational() && b.is_rational()) {
            int c = cmp(a.to_rational(), b.to_rational());
            return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
        }
        bool same_poly = a.minpoly_ == b.minpoly_;
        DyadicInterval ia = a.isol_, ib = b.isol_;
        long bits = 8;
        std::optional<SturmChain> chain;
        while (true) {
            if (ia.hi() <= ib.lo()) return Ordering::Less;
            if (ib.hi() <= ia.lo()) return Ordering::Greater;
            if (same_poly) {
                if (!chain) chain.emplace(a.minpoly_);
                Dyadic lo = std::min(ia.lo(), ib.lo()), hi = std::max(ia.hi(), ib.hi());
                if (chain->count_roots(lo.to_mpq(), hi.to_mpq()) == 1) return Ordering::Equal;
            }
            bits *= 2;
            ia = a.refine_bits(bits);
            ib = b.refine_bits(bits);
        }
    }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return compare(a, b) == Ordering::Equal;
    }
    friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return compare(a, b) == Ordering::Less;
    }

    friend AlgebraicNumber operator-(const AlgebraicNumber& a) {
        if (a.is_rational()) return from_rational(-a.to_rational());
        return AlgebraicNumber(a.minpoly_.compose_neg().normalized(), -a.isol_);
    }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.is_rational() && b.is_rational())
            return from_rational(a.to_rational() + b.to_rational());
        if (a.is_rational()) return b + a;
        if (b.is_rational()) {
            mpq_class r = b.to_rational();
            if (r == 0) return a;
            // minpoly of alpha + u/v: v^n p(x - u/v)
            IntPoly m = a.minpoly_.compose_affine(r.get_den(), -r.get_num(), r.get_den()).normalized();
            return select_irreducible(m, [&](long prec) {
                DyadicInterval ia = a.refine_bits(prec);
                DyadicInterval ir(dyadic_floor(r, prec), dyadic_ceil(r, prec));
                return ia + ir;
            });
        }
        IntPoly composed = resultant_y(a.minpoly_, bipoly_shift_compose(b.minpoly_, 1));
        return select_root(composed, [&](long prec) {
            return a.refine_bits(prec) + b.refine_bits(prec);
        });
    }

    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a + (-b);
    }

    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.is_rational() && b.is_rational())
            return from_rational(a.to_rational() * b.to_rational());
        if (a.is_rational()) return b * a;
        if (b.is_rational()) {
            mpq_class r = b.to_rational();
            if (r == 0) return from_int(0);
            if (r == 1) return a;
            // minpoly of alpha * u/v: coefficients q_j v^j u^(n-j)
            const IntPoly& p = a.minpoly_;
            int n = p.degree();
            std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
            mpz_class vp(1);
            for (int j = 0; j <= n; ++j) {
                mpz_class up;
                mpz_pow_ui(up.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(n - j));
                c[static_cast<std::size_t>(j)] = p.coeff(static_cast<std::size_t>(j)) * vp * up;
                vp *= r.get_den();
            }
            IntPoly m = IntPoly(std::move(c)).normalized();
            return select_irreducible(m, [&, r](long prec) {
                DyadicInterval ia = a.refine_bits(prec);
                DyadicInterval ir(dyadic_floor(r, prec), dyadic_ceil(r, prec));
                return ia * ir;
            });
        }
        if (a.is_zero() || b.is_zero()) return from_int(0);
        IntPoly composed = resultant_y(a.minpoly_, bipoly_homogenize(b.minpoly_));
        return select_root(composed, [&](long prec) {
            return a.refine_bits(prec) * b.refine_bits(prec);
        });
    }

    AlgebraicNumber inverse() const {
        if (is_rational()) {
            mpq_class r = to_rational();
            if (r == 0) throw std::domain_error("division by zero");
            return from_rational(1 / r);
        }
        IntPoly m = minpoly_.reversed().normalized();
        const AlgebraicNumber& self = *this;
        return select_irreducible(m, [&self](long prec) {
            long bits = prec;
            DyadicInterval iv = self.refine_bits(bits);
            while (iv.contains_zero()) {
                bits *= 2;
                iv = self.refine_bits(bits);
            }
            return ival_div(DyadicInterval::exact(Dyadic(1)), iv, prec);
        });
    }

    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (a.is_rational() && b.is_rational())
            return from_rational(a.to_rational() / b.to_rational());
        return a * b.inverse();
    }

    // Real k-th root; for even k the operand must be >= 0. For odd k and
    // negative operand this is the negative real root.
    friend AlgebraicNumber real_root(unsigned k, const AlgebraicNumber& a) {
        if (k < 2) throw std::domain_error("real_root needs k >= 2");
        if (a.is_zero()) return from_int(0);
        int sgn_a = a.sign();
        if (k % 2 == 0 && sgn_a < 0) throw std::domain_error("even root of negative number");
        if (a.is_rational()) {
            mpq_class r = a.to_rational();
            mpq_class ar = abs(r);
            mpz_class nr, dr;
            int exact_n = mpz_root(nr.get_mpz_t(), ar.get_num().get_mpz_t(), k);
            int exact_d = mpz_root(dr.get_mpz_t(), r.get_den().get_mpz_t(), k);
            if (exact_n && exact_d) {
                mpq_class root(nr, dr);
                if (sgn_a < 0) root = -root;
                return from_rational(root);
            }
        }
        IntPoly composed = a.minpoly_.compose_xpow(k);
        return select_root(composed, [&a, k](long prec) {
            DyadicInterval iv = a.refine_bits(prec);
            return DyadicInterval(dyadic_root_down(iv.lo(), k, prec), dyadic_root_up(iv.hi(), k, prec));
        });
    }

    AlgebraicNumber pow(long e) const {
        if (e == 0) return from_int(1);
        if (e < 0) return inverse().pow(-e);
        AlgebraicNumber base = *this, acc = from_int(1);
        unsigned long k = static_cast<unsigned long>(e);
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    // Correctly rounded fixed-point decimal (round half to even), `digits`
    // digits after the point, no exponent notation.
    std::string to_decimal(unsigned digits) const {
        mpz_class ten_d;
        mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, digits);
        mpz_class n;
        if (is_rational()) {
            n = round_half_even(to_rational() * mpq_class(ten_d));
        } else {
            long bits = 64;
            while (true) {
                DyadicInterval iv = refine_bits(bits);
                mpz_class nlo = round_half_even(iv.lo().to_mpq() * mpq_class(ten_d));
                mpz_class nhi = round_half_even(iv.hi().to_mpq() * mpq_class(ten_d));
                if (nlo == nhi) { n = nlo; break; }
                bits *= 2;
            }
        }
        bool neg = n < 0;
        mpz_class mag = abs(n);
        std::string s = mag.get_str();
        if (digits > 0) {
            if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
            s.insert(s.size() - digits, ".");
        }
        return neg ? "-" + s : s;
    }

    static mpz_class round_half_even(const mpq_class& q) {
        mpz_class fl, rem;
        mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        mpz_class twice = rem * 2;
        int c = cmp(twice, mpz_class(q.get_den()));
        if (c < 0) return fl;
        if (c > 0) return fl + 1;
        return mpz_even_p(fl.get_mpz_t()) ? fl : fl + 1;
    }

    // Resultant compositions exposed so tests can check the divisibility
    // invariant independently of the selection step.
    static IntPoly sum_composition(const IntPoly& pa, const IntPoly& pb) {
        return resultant_y(pa, bipoly_shift_compose(pb, 1));
    }
    static IntPoly product_composition(const IntPoly& pa, const IntPoly& pb) {
        return resultant_y(pa, bipoly_homogenize(pb));
    }

private:
    AlgebraicNumber(IntPoly minpoly, DyadicInterval isol)
        : minpoly_(std::move(minpoly)), isol_(std::move(isol)) {}

    // Selects the unique (irreducible factor, isolating interval) compatible
    // with a shrinking enclosure of the true value.
    template <typename Encloser>
    static AlgebraicNumber select_root(const IntPoly& composed, Encloser enclose) {
        if (composed.is_zero()) throw std::logic_error("composed polynomial is zero");
        IntPoly sf = squarefree_part(composed).normalized();
        Factorization fac = factor_rational(sf);
        std::vector<std::pair<IntPoly, DyadicInterval>> pairs;
        for (const auto& [f, mult] : fac.factors) {
            (void)mult;
            for (const DyadicInterval& iv : isolate_real_roots(f)) pairs.emplace_back(f, iv);
        }
        return pick_unique(std::move(pairs), enclose);
    }

    template <typename Encloser>
    static AlgebraicNumber select_irreducible(const IntPoly& m, Encloser enclose) {
        std::vector<std::pair<IntPoly, DyadicInterval>> pairs;
        for (const DyadicInterval& iv : isolate_real_roots(m)) pairs.emplace_back(m, iv);
        return pick_unique(std::move(pairs), enclose);
    }

    template <typename Encloser>
    static AlgebraicNumber pick_unique(std::vector<std::pair<IntPoly, DyadicInterval>> pairs,
                                       Encloser enclose) {
        long prec = 32;
        while (true) {
            DyadicInterval target = enclose(prec);
            std::vector<std::pair<IntPoly, DyadicInterval>> keep;
            for (auto& pr : pairs)
                if (!pr.second.disjoint_from(target)) keep.push_back(pr);
            if (keep.size() == 1) {
                auto& [f, iv] = keep.front();
                if (f.degree() == 1) return from_rational(mpq_class(-f.coeff(0), f.coeff(1)));
                return AlgebraicNumber(f, iv);
            }
            if (keep.empty()) throw std::logic_error("algebraic selection lost the value");
            // shrink both the enclosure and the candidate intervals
            for (auto& pr : keep)
                pr.second = refine_isolating(pr.first, pr.second, Dyadic::pow2(-prec));
            pairs = std::move(keep);
            prec *= 2;
        }
    }

    IntPoly minpoly_;
    DyadicInterval isol_;
};

} // namespace towerforge
