#pragma once

// Dense univariate polynomials over Z: exact ring arithmetic, pseudo-division,
// subresultant gcd and resultant, squarefree part, and the text syntax used by
// the CLI and program files (`8x^3 - 6x + 1`).

#include "towerforge/dyadic.hpp"

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace towerforge {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(mpz_class v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static IntPoly monomial(mpz_class coeff, std::size_t deg) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(deg + 1, mpz_class(0));
            p.c_[deg] = std::move(coeff);
        }
        return p;
    }
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lc() const {
        static const mpz_class z(0);
        return c_.empty() ? z : c_.back();
    }
    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class z(0);
        return i < c_.size() ? c_[i] : z;
    }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator-(const IntPoly& a) {
        std::vector<mpz_class> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const mpz_class& s) {
        if (s == 0) return IntPoly();
        std::vector<mpz_class> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const mpz_class& s, const IntPoly& a) { return a * s; }

    IntPoly mul_xpow(std::size_t k) const {
        if (is_zero()) return IntPoly();
        std::vector<mpz_class> r(c_.size() + k, mpz_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return IntPoly(std::move(r));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<mpz_class> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return IntPoly(std::move(r));
    }

    // gcd of |coefficients|; content of the zero polynomial is 0.
    mpz_class content() const {
        mpz_class g(0);
        for (const auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        return g;
    }
    IntPoly divexact_scalar(const mpz_class& s) const {
        std::vector<mpz_class> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
        }
        return IntPoly(std::move(r));
    }
    // content 1, sign of leading coefficient preserved
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        return divexact_scalar(content());
    }
    // content 1 and positive leading coefficient
    IntPoly normalized() const {
        if (is_zero()) return IntPoly();
        IntPoly p = primitive_part();
        if (p.lc() < 0) p = -p;
        return p;
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    mpq_class eval(const mpq_class& x) const {
        mpq_class r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + mpq_class(c_[i]);
        return r;
    }
    int sign_at(const mpq_class& x) const { return sgn(eval(x)); }
    int sign_at(const Dyadic& x) const { return sign_at(x.to_mpq()); }

    DyadicInterval eval_interval(const DyadicInterval& x, long prec) const {
        DyadicInterval r = DyadicInterval::exact(Dyadic(0));
        for (std::size_t i = c_.size(); i-- > 0;) {
            DyadicInterval ci = DyadicInterval::exact(Dyadic(c_[i], 0));
            r = ival_add(ival_mul(r, x, prec), ci, prec);
        }
        return r;
    }

    // p(x^k)
    IntPoly compose_xpow(unsigned k) const {
        if (is_zero()) return IntPoly();
        std::vector<mpz_class> r(static_cast<std::size_t>(degree()) * k + 1, mpz_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return IntPoly(std::move(r));
    }
    // p(s*x)
    IntPoly compose_scale_int(const mpz_class& s) const {
        std::vector<mpz_class> r(c_.size());
        mpz_class pw(1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i] = c_[i] * pw;
            pw *= s;
        }
        return IntPoly(std::move(r));
    }
    // p(-x)
    IntPoly compose_neg() const {
        std::vector<mpz_class> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (i % 2 == 0) ? c_[i] : -c_[i];
        return IntPoly(std::move(r));
    }
    // x^deg * p(1/x)
    IntPoly reversed() const {
        std::vector<mpz_class> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r));
    }
    // den^deg * p((num x - shift_num)/den)-style composition for rational
    // shift/scale: p((a x + b)/d) * d^deg, all integers.
    IntPoly compose_affine(const mpz_class& a, const mpz_class& b, const mpz_class& d) const {
        if (is_zero()) return IntPoly();
        std::size_t n = c_.size() - 1;
        // Horner: result = sum c_i (a x + b)^i d^(n-i)
        IntPoly lin({0, 0});
        {
            std::vector<mpz_class> l{b, a};
            lin = IntPoly(std::move(l));
        }
        IntPoly res = IntPoly::constant(c_[n]);
        mpz_class dp(1);
        for (std::size_t i = n; i-- > 0;) {
            dp *= d;
            res = res * lin + IntPoly::constant(c_[i] * dp);
        }
        return res;
    }

    // Cauchy bound 1 + max|a_i|/|a_n|, rounded up to a power of two: returns
    // exponent k with all real roots inside (-2^k, 2^k).
    long root_bound_pow2() const {
        if (degree() < 1) return 0;
        mpz_class mx(0);
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            mpz_class a = abs(c_[i]);
            if (a > mx) mx = a;
        }
        mpz_class lead = abs(lc());
        // bound = 1 + mx/lead <= 1 + ceil(mx/lead)
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
        q += 1;
        return static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
    }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

struct PseudoDivision {
    IntPoly quotient;
    IntPoly remainder;
    mpz_class scale;  // scale * dividend = quotient * divisor + remainder
};

// Pseudo-division with scale = lc(v)^(deg u - deg v + 1); deg r < deg v.
inline PseudoDivision pseudo_divide(const IntPoly& u, const IntPoly& v) {
    if (v.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    int du = u.degree(), dv = v.degree();
    if (du < dv) return {IntPoly::zero(), u, mpz_class(1)};
    mpz_class d = v.lc();
    IntPoly r = u, q;
    long steps = du - dv + 1;
    mpz_class scale(1);
    for (long i = 0; i < steps; ++i) scale *= d;
    // classical loop: repeatedly kill the leading term, premultiplying by d
    long k = du - dv;
    while (!r.is_zero() && r.degree() >= dv) {
        long shift = r.degree() - dv;
        mpz_class coef = r.lc();
        q = q * d + IntPoly::monomial(coef, static_cast<std::size_t>(shift));
        r = r * d - v.mul_xpow(static_cast<std::size_t>(shift)) * coef;
        --k;
    }
    // normalize so the identity uses the full advertised scale
    if (k >= 0) {
        mpz_class extra(1);
        for (long i = 0; i <= k; ++i) extra *= d;
        q = q * extra;
        r = r * extra;
    }
    return {q, r, scale};
}

// Exact division; throws if v does not divide u over Z.
inline IntPoly divexact(const IntPoly& u, const IntPoly& v) {
    if (v.is_zero()) throw std::domain_error("division by zero polynomial");
    if (u.is_zero()) return IntPoly();
    int du = u.degree(), dv = v.degree();
    if (du < dv) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> q(static_cast<std::size_t>(du - dv) + 1, mpz_class(0));
    IntPoly r = u;
    while (!r.is_zero() && r.degree() >= dv) {
        long shift = r.degree() - dv;
        mpz_class c;
        if (!mpz_divisible_p(r.lc().get_mpz_t(), v.lc().get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_divexact(c.get_mpz_t(), r.lc().get_mpz_t(), v.lc().get_mpz_t());
        q[static_cast<std::size_t>(shift)] = c;
        r = r - v.mul_xpow(static_cast<std::size_t>(shift)) * c;
    }
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(q));
}

// Exact integer division u / v, or nullopt when v does not divide u over Z.
// Aborts on the first non-divisible leading coefficient, so failed trials
// never inflate coefficients the way pseudo-division would.
inline std::optional<IntPoly> try_divexact(const IntPoly& u, const IntPoly& v) {
    if (v.is_zero()) return std::nullopt;
    if (u.is_zero()) return IntPoly();
    int du = u.degree(), dv = v.degree();
    if (du < dv) return std::nullopt;
    std::vector<mpz_class> q(static_cast<std::size_t>(du - dv) + 1, mpz_class(0));
    IntPoly r = u;
    while (!r.is_zero() && r.degree() >= dv) {
        long shift = r.degree() - dv;
        if (!mpz_divisible_p(r.lc().get_mpz_t(), v.lc().get_mpz_t())) return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r.lc().get_mpz_t(), v.lc().get_mpz_t());
        q[static_cast<std::size_t>(shift)] = c;
        r = r - v.mul_xpow(static_cast<std::size_t>(shift)) * c;
    }
    if (!r.is_zero()) return std::nullopt;
    return IntPoly(std::move(q));
}

// Divisibility over Q (equivalently: the primitive part of v divides u).
inline bool divides(const IntPoly& v, const IntPoly& u) {
    if (v.is_zero()) return u.is_zero();
    if (u.is_zero()) return true;
    if (u.degree() < v.degree()) return false;
    return try_divexact(u, v.primitive_part()).has_value();
}

// Primitive gcd with positive leading coefficient (subresultant PRS).
inline IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    IntPoly a = p.primitive_part(), b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    mpz_class g(1), h(1);
    while (true) {
        if (b.is_zero()) return a.normalized();
        if (b.degree() == 0) return IntPoly::constant(1);
        long delta = a.degree() - b.degree();
        IntPoly r = pseudo_divide(a, b).remainder;
        a = b;
        if (r.is_zero()) { b = IntPoly(); continue; }
        mpz_class div = g, hp(1);
        for (long i = 0; i < delta; ++i) hp *= h;
        div *= hp;
        b = r.divexact_scalar(div);
        g = a.lc();
        // h = h^(1-delta) g^delta
        if (delta > 0) {
            mpz_class gp(1);
            for (long i = 0; i < delta; ++i) gp *= g;
            mpz_class hd(1);
            for (long i = 0; i < delta - 1; ++i) hd *= h;
            mpz_class nh;
            mpz_divexact(nh.get_mpz_t(), gp.get_mpz_t(), hd.get_mpz_t());
            h = nh;
        }
    }
}

// Resultant via the subresultant PRS (sign-exact).
inline mpz_class resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    IntPoly a = p, b = q;
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        std::swap(a, b);
    }
    mpz_class ca = a.content(), cb = b.content();
    mpz_class t(1);
    {
        mpz_class cap, cbp;
        mpz_pow_ui(cap.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
        mpz_pow_ui(cbp.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
        t = cap * cbp;
    }
    a = a.divexact_scalar(ca);
    b = b.divexact_scalar(cb);
    mpz_class g(1), h(1);
    while (true) {
        if (b.degree() == 0) {
            if (a.degree() == 0) return t * mpz_class(s);  // both constants (primitive: +-1)
            // res = s*t*lc(b)^deg(a)/h^(deg a - 1)
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), b.lc().get_mpz_t(), static_cast<unsigned long>(a.degree()));
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(a.degree() - 1));
            mpz_class r;
            mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return mpz_class(s) * t * r;
        }
        long delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        IntPoly r = pseudo_divide(a, b).remainder;
        if (r.is_zero()) return mpz_class(0);  // nontrivial common factor
        a = b;
        mpz_class div = g, hp(1);
        for (long i = 0; i < delta; ++i) hp *= h;
        div *= hp;
        b = r.divexact_scalar(div);
        g = a.lc();
        if (delta > 0) {
            mpz_class gp(1);
            for (long i = 0; i < delta; ++i) gp *= g;
            mpz_class hd(1);
            for (long i = 0; i < delta - 1; ++i) hd *= h;
            mpz_class nh;
            mpz_divexact(nh.get_mpz_t(), gp.get_mpz_t(), hd.get_mpz_t());
            h = nh;
        }
        if (b.is_zero()) return mpz_class(0);
    }
}

// Same root set with multiplicity one: p / gcd(p, p').
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(1);
    IntPoly pp = p.primitive_part();
    IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return divexact(pp, g);
}

inline bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

// ---- text syntax: integer coefficients, `^` powers, variable x ----

inline std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& a = coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str();
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

// Parses the syntax produced by str(); '*' between coefficient and x is
// accepted. Throws std::invalid_argument with a short reason on bad input.
inline IntPoly parse_poly(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("polynomial syntax error at offset " + std::to_string(i) + ": " + why);
    };
    std::vector<mpz_class> acc;
    auto add_term = [&](const mpz_class& coef, unsigned long exp) {
        if (acc.size() <= exp) acc.resize(exp + 1, mpz_class(0));
        acc[exp] += coef;
    };
    skip();
    if (i >= text.size()) fail("empty input");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip();
        if (i >= text.size()) break;
        char ch = text[i];
        if (expect_term) {
            if (ch == '+') { ++i; continue; }
            if (ch == '-') { sign = -sign; ++i; continue; }
            mpz_class coef(1);
            bool saw_digits = false;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                coef = mpz_class(text.substr(i, j - i));
                i = j;
                saw_digits = true;
                skip();
                if (i < text.size() && text[i] == '*') { ++i; skip(); }
            }
            unsigned long exp = 0;
            if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
                ++i;
                exp = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        fail("expected exponent digits after '^'");
                    std::size_t j = i;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                    exp = std::stoul(text.substr(i, j - i));
                    i = j;
                }
            } else if (!saw_digits) {
                fail("expected coefficient or 'x'");
            }
            add_term(sign * coef, exp);
            sign = 1;
            expect_term = false;
        } else {
            if (ch == '+') { sign = 1; ++i; expect_term = true; }
            else if (ch == '-') { sign = -1; ++i; expect_term = true; }
            else fail("expected '+' or '-' between terms");
        }
    }
    if (expect_term) fail("dangling sign");
    return IntPoly(std::move(acc));
}

} // namespace towerforge
