#pragma once

// Dense univariate polynomials over Q; support for field-element arithmetic
// and the resolvent-cubic computation.

#include "towerforge/intpoly.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace towerforge {

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
        for (auto& x : c_) x.canonicalize();
        trim();
    }
    static QPoly from_int_poly(const IntPoly& p) {
        std::vector<mpq_class> c;
        c.reserve(p.coeffs().size());
        for (const auto& a : p.coeffs()) c.emplace_back(a);
        return QPoly(std::move(c));
    }
    static QPoly constant(mpq_class v) {
        QPoly p;
        v.canonicalize();
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static QPoly x() { return QPoly({mpq_class(0), mpq_class(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& lc() const {
        static const mpq_class z(0);
        return c_.empty() ? z : c_.back();
    }
    const mpq_class& coeff(std::size_t i) const {
        static const mpq_class z(0);
        return i < c_.size() ? c_[i] : z;
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    friend QPoly operator-(const QPoly& a) {
        std::vector<mpq_class> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(r));
    }
    friend QPoly operator*(const QPoly& a, const mpq_class& s) {
        if (s == 0) return QPoly();
        std::vector<mpq_class> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return QPoly(std::move(r));
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    QPoly derivative() const {
        if (c_.size() <= 1) return QPoly();
        std::vector<mpq_class> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return QPoly(std::move(r));
    }

    QPoly monic() const {
        if (is_zero()) return QPoly();
        return *this * (1 / lc());
    }

    // p(x + t)
    QPoly shift(const mpq_class& t) const {
        QPoly lin({t, mpq_class(1)});
        QPoly res;
        for (std::size_t i = c_.size(); i-- > 0;) res = res * lin + constant(c_[i]);
        return res;
    }

    // (numerator, common denominator) with numerator primitive-free content kept
    std::pair<IntPoly, mpz_class> clear_denominators() const {
        mpz_class den(1);
        for (const auto& q : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            mpq_class scaled = c_[i] * mpq_class(den);
            c[i] = scaled.get_num();
        }
        return {IntPoly(std::move(c)), den};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

inline std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<mpq_class> r(a.coeffs());
    std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
    mpq_class inv = 1 / b.lc();
    for (long i = a.degree(); i >= b.degree(); --i) {
        mpq_class coef = r[static_cast<std::size_t>(i)] * inv;
        coef.canonicalize();
        if (coef == 0) continue;
        q[static_cast<std::size_t>(i - b.degree())] = coef;
        for (long j = 0; j <= b.degree(); ++j)
            r[static_cast<std::size_t>(i - b.degree() + j)] -= coef * b.coeff(static_cast<std::size_t>(j));
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

inline QPoly qp_gcd_monic(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qp_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) throw std::domain_error("gcd of zero polynomials");
    return a.monic();
}

} // namespace towerforge
