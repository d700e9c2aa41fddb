#pragma once

// Dyadic rationals m * 2^e and closed intervals with dyadic endpoints.
// All operations are exact unless a rounding precision is passed, in which
// case results are rounded outward to the grid 2^-prec so mantissas stay
// bounded in long interval computations.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace towerforge {

class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    Dyadic(long v) : m_(v), e_(0) { normalize(); }
    Dyadic(mpz_class m, long e) : m_(std::move(m)), e_(e) { normalize(); }

    static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }

    const mpz_class& mantissa() const { return m_; }
    long exponent() const { return e_; }
    bool is_zero() const { return m_ == 0; }
    int sign() const { return sgn(m_); }

    mpq_class to_mpq() const {
        mpq_class q;
        if (e_ >= 0) {
            mpz_class n = m_ << e_;
            q = mpq_class(n);
        } else {
            mpz_class d = mpz_class(1) << (-e_);
            q = mpq_class(m_, d);
        }
        q.canonicalize();
        return q;
    }

    // Exact terminating decimal representation.
    std::string to_decimal_string() const {
        if (e_ >= 0) {
            mpz_class n = m_ << e_;
            return n.get_str();
        }
        mpz_class five;
        mpz_ui_pow_ui(five.get_mpz_t(), 5, static_cast<unsigned long>(-e_));
        mpz_class scaled = m_ * five;  // value = scaled / 10^-e
        bool neg = scaled < 0;
        mpz_class mag = abs(scaled);
        std::string digits = mag.get_str();
        std::size_t frac = static_cast<std::size_t>(-e_);
        if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
        digits.insert(digits.size() - frac, ".");
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
        return neg ? "-" + digits : digits;
    }

    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.m_, a.e_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long e = std::min(a.e_, b.e_);
        return Dyadic((a.m_ << (a.e_ - e)) + (b.m_ << (b.e_ - e)), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.m_ * b.m_, a.e_ + b.e_);
    }

    // value * 2^k, exact.
    Dyadic mul_pow2(long k) const { return is_zero() ? Dyadic() : Dyadic(m_, e_ + k); }

    static int cmp(const Dyadic& a, const Dyadic& b) {
        if (a.e_ == b.e_) return ::cmp(a.m_, b.m_);
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : (sa > sb ? 1 : 0);
        long e = std::min(a.e_, b.e_);
        mpz_class x = a.m_ << (a.e_ - e), y = b.m_ << (b.e_ - e);
        return ::cmp(x, y);
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

    // Largest multiple of 2^-prec that is <= value.
    Dyadic round_down(long prec) const {
        if (e_ >= -prec) return *this;
        long shift = -prec - e_;
        mpz_class q;
        mpz_fdiv_q_2exp(q.get_mpz_t(), m_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        return Dyadic(q, -prec);
    }
    // Smallest multiple of 2^-prec that is >= value.
    Dyadic round_up(long prec) const {
        if (e_ >= -prec) return *this;
        long shift = -prec - e_;
        mpz_class q;
        mpz_cdiv_q_2exp(q.get_mpz_t(), m_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        return Dyadic(q, -prec);
    }

private:
    void normalize() {
        if (m_ == 0) { e_ = 0; return; }
        mp_bitcnt_t s = mpz_scan1(m_.get_mpz_t(), 0);
        if (s > 0) {
            mpz_class q;
            mpz_fdiv_q_2exp(q.get_mpz_t(), m_.get_mpz_t(), s);
            m_ = q;
            e_ += static_cast<long>(s);
        }
    }

    mpz_class m_;
    long e_;
};

// Scaled integer against which a dyadic is an exact multiple: round q down/up
// to the grid 2^-prec.
inline Dyadic dyadic_floor(const mpq_class& q, long prec) {
    mpz_class num = q.get_num() << prec;  // may be negative
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return Dyadic(r, -prec);
}
inline Dyadic dyadic_ceil(const mpq_class& q, long prec) {
    mpz_class num = q.get_num() << prec;
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return Dyadic(r, -prec);
}

// Directed division: a/b rounded to the grid 2^-prec. b must be nonzero.
inline Dyadic dyadic_div_down(const Dyadic& a, const Dyadic& b, long prec) {
    assert(!b.is_zero());
    mpz_class num = a.mantissa(), den = b.mantissa();
    if (den < 0) { num = -num; den = -den; }
    long t = a.exponent() - b.exponent() + prec;
    if (t >= 0) num <<= t; else den <<= -t;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(q, -prec);
}
inline Dyadic dyadic_div_up(const Dyadic& a, const Dyadic& b, long prec) {
    assert(!b.is_zero());
    mpz_class num = a.mantissa(), den = b.mantissa();
    if (den < 0) { num = -num; den = -den; }
    long t = a.exponent() - b.exponent() + prec;
    if (t >= 0) num <<= t; else den <<= -t;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(q, -prec);
}

namespace detail {
inline mpz_class isqrt_floor(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}
// floor(value * 2^k) for nonnegative value, as an integer.
inline mpz_class floor_scaled(const Dyadic& d, long k) {
    mpz_class m = d.mantissa();
    long t = d.exponent() + k;
    if (t >= 0) return m << t;
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
    return q;
}
inline mpz_class ceil_scaled(const Dyadic& d, long k) {
    mpz_class m = d.mantissa();
    long t = d.exponent() + k;
    if (t >= 0) return m << t;
    mpz_class q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
    return q;
}
} // namespace detail

// sqrt with directed rounding to the grid 2^-prec; d must be >= 0.
inline Dyadic dyadic_sqrt_down(const Dyadic& d, long prec) {
    if (d.sign() < 0) throw std::domain_error("dyadic_sqrt of negative");
    mpz_class n = detail::floor_scaled(d, 2 * prec);
    return Dyadic(detail::isqrt_floor(n), -prec);
}
inline Dyadic dyadic_sqrt_up(const Dyadic& d, long prec) {
    if (d.sign() < 0) throw std::domain_error("dyadic_sqrt of negative");
    mpz_class n = detail::ceil_scaled(d, 2 * prec);
    mpz_class r = detail::isqrt_floor(n);
    if (r * r < n) r += 1;
    return Dyadic(r, -prec);
}

// k-th root with directed rounding; for even k, d must be >= 0.
inline Dyadic dyadic_root_down(const Dyadic& d, unsigned k, long prec);
inline Dyadic dyadic_root_up(const Dyadic& d, unsigned k, long prec) {
    if (d.sign() < 0) {
        if (k % 2 == 0) throw std::domain_error("even dyadic_root of negative");
        return -dyadic_root_down(-d, k, prec);
    }
    mpz_class n = detail::ceil_scaled(d, static_cast<long>(k) * prec);
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
    if (p < n) r += 1;
    return Dyadic(r, -prec);
}
inline Dyadic dyadic_root_down(const Dyadic& d, unsigned k, long prec) {
    if (d.sign() < 0) {
        if (k % 2 == 0) throw std::domain_error("even dyadic_root of negative");
        return -dyadic_root_up(-d, k, prec);
    }
    mpz_class n = detail::floor_scaled(d, static_cast<long>(k) * prec);
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return Dyadic(r, -prec);
}

// Closed interval [lo, hi], lo <= hi.
class DyadicInterval {
public:
    DyadicInterval() = default;
    DyadicInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
    }
    static DyadicInterval exact(const Dyadic& v) { return DyadicInterval(v, v); }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic midpoint() const { return (lo_ + hi_).mul_pow2(-1); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Dyadic& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const mpq_class& v) const {
        return lo_.to_mpq() <= v && v <= hi_.to_mpq();
    }
    // Certified sign: -1, +1, or 0 when the interval straddles zero.
    int sign() const {
        if (hi_.sign() < 0) return -1;
        if (lo_.sign() > 0) return 1;
        return 0;
    }
    bool is_subset_of(const DyadicInterval& o) const {
        return o.lo_ <= lo_ && hi_ <= o.hi_;
    }
    bool disjoint_from(const DyadicInterval& o) const {
        return hi_ < o.lo_ || o.hi_ < lo_;
    }

    DyadicInterval rounded_out(long prec) const {
        return DyadicInterval(lo_.round_down(prec), hi_.round_up(prec));
    }

    friend DyadicInterval operator-(const DyadicInterval& a) {
        return DyadicInterval(-a.hi_, -a.lo_);
    }
    friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
        return DyadicInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
        return a + (-b);
    }
    friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
        Dyadic p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        Dyadic lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Dyadic hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return DyadicInterval(lo, hi);
    }

    std::string str() const {
        return "[" + lo_.to_decimal_string() + ", " + hi_.to_decimal_string() + "]";
    }

private:
    Dyadic lo_, hi_;
};

inline DyadicInterval ival_add(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    return (a + b).rounded_out(prec);
}
inline DyadicInterval ival_sub(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    return (a - b).rounded_out(prec);
}
inline DyadicInterval ival_mul(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    return (a * b).rounded_out(prec);
}
// Requires b to have certified sign (no zero inside).
inline DyadicInterval ival_div(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    if (b.sign() == 0) throw std::domain_error("interval division by interval containing zero");
    Dyadic q1 = dyadic_div_down(a.lo(), b.lo(), prec), q2 = dyadic_div_down(a.lo(), b.hi(), prec);
    Dyadic q3 = dyadic_div_down(a.hi(), b.lo(), prec), q4 = dyadic_div_down(a.hi(), b.hi(), prec);
    Dyadic lo = std::min(std::min(q1, q2), std::min(q3, q4));
    Dyadic r1 = dyadic_div_up(a.lo(), b.lo(), prec), r2 = dyadic_div_up(a.lo(), b.hi(), prec);
    Dyadic r3 = dyadic_div_up(a.hi(), b.lo(), prec), r4 = dyadic_div_up(a.hi(), b.hi(), prec);
    Dyadic hi = std::max(std::max(r1, r2), std::max(r3, r4));
    return DyadicInterval(lo, hi);
}
// Requires lo >= 0 (callers certify nonnegativity first).
inline DyadicInterval ival_sqrt(const DyadicInterval& a, long prec) {
    return DyadicInterval(dyadic_sqrt_down(a.lo(), prec), dyadic_sqrt_up(a.hi(), prec));
}

// Strict dyadic enclosure of a rational with endpoints distinct from it,
// width <= 2^(1-prec).
inline DyadicInterval dyadic_bracket(const mpq_class& q, long prec) {
    Dyadic lo = dyadic_floor(q, prec), hi = dyadic_ceil(q, prec);
    Dyadic step = Dyadic::pow2(-prec);
    if (lo.to_mpq() == q) lo = lo - step;
    if (hi.to_mpq() == q) hi = hi + step;
    return DyadicInterval(lo, hi);
}

} // namespace towerforge
