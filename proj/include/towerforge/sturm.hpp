#pragma once

// Sturm sequences and certified real-root isolation with dyadic intervals.

#include "towerforge/dyadic.hpp"
#include "towerforge/intpoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace towerforge {

// Signed remainder sequence; terms are scaled by positive constants only, so
// sign variations match the classical Sturm chain.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p) {
        if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
        chain_.push_back(p.primitive_part());
        if (p.degree() == 0) return;
        chain_.push_back(p.derivative().primitive_part());
        while (chain_.back().degree() > 0) {
            const IntPoly& a = chain_[chain_.size() - 2];
            const IntPoly& b = chain_.back();
            PseudoDivision pd = pseudo_divide(a, b);
            if (pd.remainder.is_zero()) break;
            IntPoly next = (sgn(pd.scale) > 0) ? -pd.remainder : pd.remainder;
            chain_.push_back(next.primitive_part());
        }
    }

    const IntPoly& poly() const { return chain_.front(); }

    int variations_at(const mpq_class& x) const {
        int prev = 0, var = 0;
        for (const IntPoly& f : chain_) {
            int s = f.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // Number of distinct real roots in (a, b], a < b. Exact for squarefree
    // input (and counts distinct roots in general).
    int count_roots(const mpq_class& a, const mpq_class& b) const {
        return variations_at(a) - variations_at(b);
    }
    int count_roots(const DyadicInterval& iv) const {
        return count_roots(iv.lo().to_mpq(), iv.hi().to_mpq());
    }

    int count_all_real_roots() const {
        long k = poly().root_bound_pow2();
        Dyadic b = Dyadic::pow2(k);
        return count_roots((-b).to_mpq(), b.to_mpq());
    }

private:
    std::vector<IntPoly> chain_;
};

inline DyadicInterval refine_isolating(const IntPoly& p, DyadicInterval iv, const Dyadic& target);

// Pairwise-disjoint dyadic intervals in ascending order, one per real root;
// endpoints are never roots. Requires squarefree input.
inline std::vector<DyadicInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("root isolation of zero polynomial");
    if (!is_squarefree(p)) throw std::domain_error("root isolation requires squarefree input");
    std::vector<DyadicInterval> out;
    if (p.degree() < 1) return out;
    if (p.degree() == 1) {
        mpq_class root(-p.coeff(0), p.coeff(1));
        root.canonicalize();
        out.push_back(dyadic_bracket(root, 4));
        return out;
    }
    SturmChain chain(p);
    long k = p.root_bound_pow2();
    Dyadic bound = Dyadic::pow2(k);
    // Cauchy bound is strict, so +-bound are never roots.
    struct Item { Dyadic lo, hi; int count; };
    std::vector<Item> stack;
    int total = chain.count_roots((-bound).to_mpq(), bound.to_mpq());
    if (total > 0) stack.push_back({-bound, bound, total});
    std::vector<DyadicInterval> found;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.count == 1 && p.sign_at(it.lo) != 0 && p.sign_at(it.hi) != 0) {
            found.emplace_back(it.lo, it.hi);
            continue;
        }
        Dyadic mid = (it.lo + it.hi).mul_pow2(-1);
        if (p.sign_at(mid) == 0) {
            // dyadic root exactly at the split point: capture it in a shrinking
            // bracket, then recurse on the two outer pieces
            Dyadic w = (it.hi - it.lo).mul_pow2(-2);
            while (true) {
                Dyadic lo = mid - w, hi = mid + w;
                if (p.sign_at(lo) != 0 && p.sign_at(hi) != 0 &&
                    chain.count_roots(lo.to_mpq(), hi.to_mpq()) == 1) {
                    found.emplace_back(lo, hi);
                    int left = chain.count_roots(it.lo.to_mpq(), lo.to_mpq());
                    if (left > 0) stack.push_back({it.lo, lo, left});
                    int right = chain.count_roots(hi.to_mpq(), it.hi.to_mpq());
                    if (right > 0) stack.push_back({hi, it.hi, right});
                    break;
                }
                w = w.mul_pow2(-1);
            }
            continue;
        }
        int left = chain.count_roots(it.lo.to_mpq(), mid.to_mpq());
        if (left > 0) stack.push_back({it.lo, mid, left});
        int right = it.count - left;
        if (right > 0) stack.push_back({mid, it.hi, right});
    }
    std::sort(found.begin(), found.end(), [](const DyadicInterval& a, const DyadicInterval& b) {
        return a.lo() < b.lo();
    });
    // tighten so each root sits well inside its interval
    for (auto& iv : found) iv = refine_isolating(p, iv, Dyadic::pow2(-2));
    return found;
}

// Shrinks an isolating interval of p by bisection until width <= target.
// The interval must bracket a sign change or a degree-1 rational root.
inline DyadicInterval refine_isolating(const IntPoly& p, DyadicInterval iv, const Dyadic& target) {
    if (p.degree() == 1) {
        mpq_class root(-p.coeff(0), p.coeff(1));
        root.canonicalize();
        long prec = 4;
        DyadicInterval r = iv;
        while (r.width() > target) {
            prec *= 2;
            r = dyadic_bracket(root, prec);
        }
        return r;
    }
    int slo = p.sign_at(iv.lo());
    int shi = p.sign_at(iv.hi());
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::logic_error("refine_isolating: interval does not bracket a simple root");
    Dyadic lo = iv.lo(), hi = iv.hi();
    while (hi - lo > target) {
        Dyadic mid = (lo + hi).mul_pow2(-1);
        int sm = p.sign_at(mid);
        if (sm == 0) {
            // the unique root inside is the dyadic midpoint itself (possible
            // for reducible squarefree inputs); bracket it tightly
            Dyadic w = target.mul_pow2(-1);
            while (!(lo < mid - w && mid + w < hi)) w = w.mul_pow2(-1);
            return DyadicInterval(mid - w, mid + w);
        }
        if (sm == slo) lo = mid; else hi = mid;
    }
    return DyadicInterval(lo, hi);
}

} // namespace towerforge
