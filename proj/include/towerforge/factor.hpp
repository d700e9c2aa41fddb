#pragma once

// Rational factorization of integer polynomials: Yun squarefree decomposition,
// then per squarefree part a deterministic Zassenhaus round — Berlekamp
// factorization modulo a small prime with squarefree reduction, quadratic
// Hensel lifting to a Mignotte-bound modulus, and subset recombination capped
// at 2^20 candidate subsets.

#include "towerforge/intpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace towerforge {

namespace detail {

// ---- arithmetic in F_p[x], p a small odd prime ----

using u64 = std::uint64_t;

inline u64 addm(u64 a, u64 b, u64 p) { u64 r = a + b; return r >= p ? r - p : r; }
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

struct ZpPoly {
    std::vector<u64> c;
    u64 p = 0;

    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lc() const { return c.empty() ? 0 : c.back(); }

    static ZpPoly from_int(const IntPoly& f, u64 p) {
        ZpPoly r;
        r.p = p;
        r.c.resize(f.coeffs().size());
        mpz_class pz(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            mpz_class m = f.coeff(i) % pz;
            if (m < 0) m += pz;
            r.c[i] = m.get_ui();
        }
        r.trim();
        return r;
    }
    static ZpPoly one(u64 p) { return ZpPoly{{1}, p}; }
    static ZpPoly xpoly(u64 p) { return ZpPoly{{0, 1}, p}; }
};

inline ZpPoly zp_add(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly r{std::vector<u64>(std::max(a.c.size(), b.c.size()), 0), a.p ? a.p : b.p};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = addm(r.c[i], b.c[i], r.p);
    r.trim();
    return r;
}
inline ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly r{std::vector<u64>(std::max(a.c.size(), b.c.size()), 0), a.p ? a.p : b.p};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = subm(r.c[i], b.c[i], r.p);
    r.trim();
    return r;
}
inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZpPoly{{}, a.p ? a.p : b.p};
    ZpPoly r{std::vector<u64>(a.c.size() + b.c.size() - 1, 0), a.p};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = addm(r.c[i + j], mulm(a.c[i], b.c[j], a.p), a.p);
    }
    r.trim();
    return r;
}
inline ZpPoly zp_scale(const ZpPoly& a, u64 s) {
    ZpPoly r = a;
    for (auto& x : r.c) x = mulm(x, s, a.p);
    r.trim();
    return r;
}
inline std::pair<ZpPoly, ZpPoly> zp_divmod(const ZpPoly& a, const ZpPoly& b) {
    if (b.is_zero()) throw std::domain_error("Zp division by zero");
    u64 p = b.p;
    if (a.degree() < b.degree()) return {ZpPoly{{}, p}, a};
    u64 inv = invm(b.lc(), p);
    ZpPoly r = a;
    ZpPoly q{std::vector<u64>(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0), p};
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        u64 coef = mulm(r.lc(), inv, p);
        q.c[static_cast<std::size_t>(shift)] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::size_t k = i + static_cast<std::size_t>(shift);
            r.c[k] = subm(r.c[k], mulm(coef, b.c[i], p), p);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}
inline ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b) { return zp_divmod(a, b).second; }
inline ZpPoly zp_monic(const ZpPoly& a) {
    if (a.is_zero()) return a;
    return zp_scale(a, invm(a.lc(), a.p));
}
inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b) {
    while (!b.is_zero()) {
        ZpPoly r = zp_mod(a, b);
        a = b;
        b = r;
    }
    return zp_monic(a);
}
inline ZpPoly zp_derivative(const ZpPoly& a) {
    if (a.c.size() <= 1) return ZpPoly{{}, a.p};
    ZpPoly r{std::vector<u64>(a.c.size() - 1, 0), a.p};
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulm(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}
// extended euclid: s*a + t*b = gcd (monic)
inline void zp_eea(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t, ZpPoly& g) {
    u64 p = a.p ? a.p : b.p;
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0 = ZpPoly::one(p), s1{{}, p};
    ZpPoly t0{{}, p}, t1 = ZpPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = zp_divmod(r0, r1);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1));
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    u64 inv = invm(r0.lc(), p);
    g = zp_scale(r0, inv);
    s = zp_scale(s0, inv);
    t = zp_scale(t0, inv);
}
inline ZpPoly zp_powmod(const ZpPoly& base, const mpz_class& e, const ZpPoly& mod) {
    ZpPoly r = ZpPoly::one(base.p);
    ZpPoly b = zp_mod(base, mod);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = zp_mod(zp_mul(r, b), mod);
        b = zp_mod(zp_mul(b, b), mod);
        k >>= 1;
    }
    return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p; fully
// deterministic (exhaustive scan over c in F_p on each kernel vector).
inline std::vector<ZpPoly> berlekamp(const ZpPoly& f) {
    u64 p = f.p;
    int n = f.degree();
    if (n <= 1) return {f};
    // rows of Q: x^(p*i) mod f
    ZpPoly xp = zp_powmod(ZpPoly::xpoly(p), mpz_class(static_cast<unsigned long>(p)), f);
    std::vector<std::vector<u64>> Q(static_cast<std::size_t>(n), std::vector<u64>(n, 0));
    ZpPoly row = ZpPoly::one(p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= row.degree(); ++j) Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = row.c[static_cast<std::size_t>(j)];
        if (i + 1 < n) row = zp_mod(zp_mul(row, xp), f);
    }
    // M = (Q - I)^T ; kernel vectors v give v(x)^p = v(x) mod f
    std::vector<std::vector<u64>> M(static_cast<std::size_t>(n), std::vector<u64>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            u64 v = Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j) v = subm(v, 1, p);
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    // gaussian elimination; record pivot columns
    std::vector<int> pivot_of_row(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(M[static_cast<std::size_t>(sel)], (M[static_cast<std::size_t>(rank)]));
        u64 inv = invm(M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < n; ++j) M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] = mulm(M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], inv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            u64 c = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    subm(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], mulm(c, M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], p), p);
        }
        pivot_of_row[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = true;
    std::vector<ZpPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        std::vector<u64> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            int pc = pivot_of_row[static_cast<std::size_t>(r)];
            v[static_cast<std::size_t>(pc)] = subm(0, M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], p);
        }
        ZpPoly vp{std::move(v), p};
        vp.trim();
        basis.push_back(std::move(vp));
    }
    std::size_t nfactors = basis.size() + 0;  // kernel contains the constants
    // kernel dimension equals the number of irreducible factors; the all-ones
    // direction (constants) is part of it
    std::size_t r_expected = static_cast<std::size_t>(n - rank);
    nfactors = r_expected;
    std::vector<ZpPoly> factors{f};
    if (nfactors <= 1) return factors;
    for (const ZpPoly& v : basis) {
        if (v.degree() < 1) continue;
        for (u64 cc = 0; cc < p && factors.size() < nfactors; ++cc) {
            ZpPoly shift = v;
            if (shift.c.empty()) shift.c.push_back(0);
            shift.c[0] = subm(shift.c[0], cc % p, p);
            shift.trim();
            std::vector<ZpPoly> next;
            for (const ZpPoly& g : factors) {
                if (g.degree() <= 1) { next.push_back(g); continue; }
                ZpPoly d = zp_gcd(g, zp_mod(shift, g));
                if (d.degree() > 0 && d.degree() < g.degree()) {
                    next.push_back(d);
                    next.push_back(zp_divmod(g, d).first);
                } else {
                    next.push_back(g);
                }
            }
            factors = std::move(next);
        }
        if (factors.size() >= nfactors) break;
    }
    for (auto& g : factors) g = zp_monic(g);
    return factors;
}

// ---- arithmetic in (Z/m)[x] for Hensel lifting (m = p^k) ----

struct ZmPoly {
    std::vector<mpz_class> c;

    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

inline ZmPoly zm_reduce(const ZmPoly& a, const mpz_class& m) {
    ZmPoly r = a;
    for (auto& x : r.c) {
        x %= m;
        if (x < 0) x += m;
    }
    r.trim();
    return r;
}
inline ZmPoly zm_from_int(const IntPoly& f, const mpz_class& m) {
    ZmPoly r;
    r.c = f.coeffs();
    return zm_reduce(r, m);
}
inline ZmPoly zm_from_zp(const ZpPoly& f) {
    ZmPoly r;
    r.c.reserve(f.c.size());
    for (u64 v : f.c) r.c.emplace_back(static_cast<unsigned long>(v));
    r.trim();
    return r;
}
inline ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const mpz_class& m) {
    ZmPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return zm_reduce(r, m);
}
inline ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const mpz_class& m) {
    ZmPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    return zm_reduce(r, m);
}
inline ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const mpz_class& m) {
    if (a.is_zero() || b.is_zero()) return ZmPoly{};
    ZmPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return zm_reduce(r, m);
}
// division by a monic divisor
inline std::pair<ZmPoly, ZmPoly> zm_divmod_monic(const ZmPoly& a, const ZmPoly& b, const mpz_class& m) {
    if (b.is_zero() || b.c.back() != 1) throw std::logic_error("zm_divmod_monic: divisor not monic");
    ZmPoly r = a, q;
    if (a.degree() >= b.degree())
        q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        mpz_class coef = r.c.back();
        q.c[static_cast<std::size_t>(shift)] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::size_t k = i + static_cast<std::size_t>(shift);
            r.c[k] -= coef * b.c[i];
        }
        r = zm_reduce(r, m);
    }
    q.trim();
    return {q, r};
}
// coefficients in (-m/2, m/2]
inline IntPoly zm_symmetric(const ZmPoly& a, const mpz_class& m) {
    std::vector<mpz_class> c = a.c;
    mpz_class half = m / 2;
    for (auto& x : c) {
        x %= m;
        if (x < 0) x += m;
        if (x > half) x -= m;
    }
    return IntPoly(std::move(c));
}

// One quadratic Hensel step: modulus m -> m^2.
struct HenselPair { ZmPoly g, h, s, t; };

inline HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const mpz_class& m) {
    mpz_class M = m * m;
    ZmPoly g = zm_reduce(in.g, M), h = zm_reduce(in.h, M);
    ZmPoly s = zm_reduce(in.s, M), t = zm_reduce(in.t, M);
    ZmPoly e = zm_sub(zm_reduce(f, M), zm_mul(g, h, M), M);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, M), h, M);
    ZmPoly gs = zm_add(zm_add(g, zm_mul(t, e, M), M), zm_mul(q, g, M), M);
    ZmPoly hs = zm_add(h, r, M);
    ZmPoly b = zm_sub(zm_add(zm_mul(s, gs, M), zm_mul(t, hs, M), M),
                      zm_reduce(ZmPoly{{mpz_class(1)}}, M), M);
    auto [cq, d] = zm_divmod_monic(zm_mul(s, b, M), hs, M);
    ZmPoly ss = zm_sub(s, d, M);
    ZmPoly ts = zm_sub(zm_sub(t, zm_mul(t, b, M), M), zm_mul(cq, gs, M), M);
    return {gs, hs, ss, ts};
}

// Lifts the factorization f = lc(f) * prod(monic factors) from mod p to mod
// target (target = p^(2^j)). Returns the lifted monic factors in symmetric
// representation. The leading coefficient is handled as a degree-0 cofactor,
// so f need not be monic.
inline std::vector<IntPoly> hensel_lift_tree(const IntPoly& f, const std::vector<ZpPoly>& factors,
                                             u64 p, const mpz_class& target) {
    std::vector<IntPoly> out(factors.size());
    // recursive lift over index ranges [lo, hi): F == prod factors[lo..hi) mod target
    auto rec = [&](auto&& self, const ZmPoly& F, std::size_t lo, std::size_t hi) -> void {
        if (hi - lo == 1) {
            out[lo] = zm_symmetric(zm_reduce(F, target), target);
            return;
        }
        std::size_t mid = lo + (hi - lo) / 2;
        ZpPoly g0{{1}, p}, h0{{1}, p};
        for (std::size_t i = lo; i < mid; ++i) g0 = zp_mul(g0, factors[i]);
        for (std::size_t i = mid; i < hi; ++i) h0 = zp_mul(h0, factors[i]);
        ZpPoly sp, tp, gp;
        zp_eea(g0, h0, sp, tp, gp);
        if (gp.degree() != 0) throw std::logic_error("hensel: factors not coprime mod p");
        HenselPair cur{zm_from_zp(g0), zm_from_zp(h0), zm_from_zp(sp), zm_from_zp(tp)};
        mpz_class m(static_cast<unsigned long>(p));
        while (m < target) {
            cur = hensel_step(F, cur, m);
            m = m * m;
        }
        self(self, zm_reduce(cur.g, target), lo, mid);
        self(self, zm_reduce(cur.h, target), mid, hi);
    };

    const mpz_class& b = f.lc();
    ZmPoly monic_part = zm_from_int(f, target);
    if (b != 1) {
        // split off the constant cofactor: f == b * (monic product)
        mpz_class bp = b % static_cast<unsigned long>(p);
        if (bp < 0) bp += static_cast<unsigned long>(p);
        ZpPoly g0{{bp.get_ui()}, p};
        ZpPoly h0 = ZpPoly::from_int(f, p);
        h0 = zp_scale(h0, invm(g0.c[0], p));
        ZpPoly sp, tp, gp;
        zp_eea(g0, h0, sp, tp, gp);
        if (gp.degree() != 0) throw std::logic_error("hensel: lc not coprime to monic part");
        HenselPair cur{zm_from_zp(g0), zm_from_zp(h0), zm_from_zp(sp), zm_from_zp(tp)};
        mpz_class m(static_cast<unsigned long>(p));
        ZmPoly F = zm_from_int(f, target);
        while (m < target) {
            cur = hensel_step(F, cur, m);
            m = m * m;
        }
        monic_part = zm_reduce(cur.h, target);
    }
    rec(rec, monic_part, 0, factors.size());
    return out;
}

// ceil(sqrt(sum of squares of coefficients))
inline mpz_class l2_norm_ceil(const IntPoly& f) {
    mpz_class s(0);
    for (const auto& a : f.coeffs()) s += a * a;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    return r;
}

inline constexpr std::uint64_t kRecombinationCap = 1ull << 20;

// Factors a primitive squarefree polynomial with positive leading coefficient
// into normalized irreducibles.
inline std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    int n = f.degree();
    if (n <= 0) throw std::logic_error("factor_squarefree: constant input");
    if (n == 1) return {f.normalized()};
    const mpz_class& b = f.lc();

    // pick the usable prime giving the fewest modular factors (first 5 tried)
    u64 best_p = 0;
    std::vector<ZpPoly> best_factors;
    mpz_class prime(2);
    int tried = 0;
    while (tried < 5) {
        mpz_class np;
        mpz_nextprime(np.get_mpz_t(), prime.get_mpz_t());
        prime = np;
        if (!prime.fits_ulong_p() || prime.get_ui() > (1u << 20)) break;
        u64 p = prime.get_ui();
        if (mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ZpPoly fp = ZpPoly::from_int(f, p);
        if (zp_gcd(fp, zp_derivative(fp)).degree() != 0) continue;  // not squarefree mod p
        ++tried;
        std::vector<ZpPoly> fac = berlekamp(zp_monic(fp));
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(fac);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("factor_squarefree: no usable prime found");
    if (best_factors.size() == 1) return {f.normalized()};

    std::sort(best_factors.begin(), best_factors.end(), [](const ZpPoly& a, const ZpPoly& c) {
        if (a.degree() != c.degree()) return a.degree() < c.degree();
        return a.c < c.c;
    });

    // Hensel lift past the Mignotte bound; candidates below are lc * (monic
    // product), so the modulus covers |lc| * 2^n * ||f||_2 with slack
    mpz_class bound = (l2_norm_ceil(f) + 1) * abs(b);
    bound <<= (n + 2);
    mpz_class target(static_cast<unsigned long>(best_p));
    while (target <= bound) target *= target;
    std::vector<IntPoly> lifted = hensel_lift_tree(f, best_factors, best_p, target);

    // subset recombination: candidate = primitive part of lc * prod(subset)
    std::vector<IntPoly> result;
    std::vector<std::size_t> active(lifted.size());
    std::iota(active.begin(), active.end(), 0);
    IntPoly remaining = f;
    std::uint64_t tries = 0;
    auto candidate_for = [&](const std::vector<std::size_t>& idxs) {
        ZmPoly prod{{remaining.lc()}};
        for (std::size_t i : idxs) prod = zm_mul(prod, zm_from_int(lifted[i], target), target);
        return zm_symmetric(prod, target).normalized();
    };
    mpz_class rem_at1 = remaining.eval(mpz_class(1)), rem_atm1 = remaining.eval(mpz_class(-1));
    std::size_t s = 1;
    while (active.size() > 0 && s <= active.size() / 2) {
        // enumerate size-s index combinations over `active`
        std::vector<std::size_t> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        while (true) {
            if (++tries > kRecombinationCap)
                throw std::runtime_error("factorization recombination cap exceeded");
            std::vector<std::size_t> subset(s);
            for (std::size_t i = 0; i < s; ++i) subset[i] = active[comb[i]];
            IntPoly cand = candidate_for(subset);
            bool plausible = !cand.is_zero() && cand.degree() >= 1;
            if (plausible && rem_at1 != 0) {
                mpz_class c1 = cand.eval(mpz_class(1));
                plausible = c1 != 0 && mpz_divisible_p(rem_at1.get_mpz_t(), c1.get_mpz_t());
            }
            if (plausible && rem_atm1 != 0) {
                mpz_class cm1 = cand.eval(mpz_class(-1));
                plausible = cm1 != 0 && mpz_divisible_p(rem_atm1.get_mpz_t(), cm1.get_mpz_t());
            }
            std::optional<IntPoly> quot;
            if (plausible) quot = try_divexact(remaining, cand);
            if (quot) {
                result.push_back(cand);
                remaining = *quot;
                rem_at1 = remaining.eval(mpz_class(1));
                rem_atm1 = remaining.eval(mpz_class(-1));
                std::vector<std::size_t> na;
                for (std::size_t i : active)
                    if (std::find(subset.begin(), subset.end(), i) == subset.end()) na.push_back(i);
                active = std::move(na);
                found = true;
                break;
            }
            // next combination
            long k = static_cast<long>(s) - 1;
            while (k >= 0 && comb[static_cast<std::size_t>(k)] == active.size() - s + static_cast<std::size_t>(k)) --k;
            if (k < 0) break;
            ++comb[static_cast<std::size_t>(k)];
            for (std::size_t j = static_cast<std::size_t>(k) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (remaining.degree() > 0) result.push_back(remaining.normalized());
    return result;
}

} // namespace detail

// Yun's squarefree decomposition of a primitive polynomial with positive
// leading coefficient: returns (part, multiplicity) with parts normalized,
// pairwise coprime, and prod part^mult == input.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("squarefree decomposition needs degree >= 1");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f.normalized(), 1);
        return out;
    }
    IntPoly b = divexact(f, g);
    IntPoly c = divexact(f.derivative(), g);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a.normalized(), i);
        IntPoly bn = a.degree() > 0 ? divexact(b, a) : b;
        IntPoly cn = a.degree() > 0 ? divexact(d, a) : d;
        b = bn;
        d = cn - b.derivative();
        ++i;
    }
    return out;
}

struct Factorization {
    mpq_class unit;  // unit * prod factor^mult == input exactly
    std::vector<std::pair<IntPoly, int>> factors;
};

// Full rational factorization into normalized irreducibles; deterministic.
inline Factorization factor_rational(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_rational of zero polynomial");
    Factorization out;
    mpz_class cont = p.content();
    if (sgn(p.lc()) < 0) cont = -cont;
    out.unit = mpq_class(cont);
    if (p.degree() == 0) return out;
    IntPoly pp = p.divexact_scalar(cont);
    for (auto& [part, mult] : squarefree_decomposition(pp)) {
        for (IntPoly& irr : detail::factor_squarefree(part)) {
            out.factors.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
                  if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
                  return a.second < b.second;
              });
    return out;
}

inline bool is_irreducible(const IntPoly& p) {
    if (p.degree() < 1) return false;
    Factorization f = factor_rational(p);
    return f.factors.size() == 1 && f.factors[0].second == 1 &&
           f.factors[0].first.degree() == p.degree();
}

} // namespace towerforge
