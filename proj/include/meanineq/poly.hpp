#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "meanineq/errors.hpp"

namespace meanineq {

using Rat = mpq_class;

// Dense univariate polynomial over exact rationals, coefficients ascending.
// Empty coefficient vector is the zero polynomial.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
    static Poly monomial(int deg, const Rat& v) {
        std::vector<Rat> w(static_cast<size_t>(deg) + 1, Rat(0));
        w.back() = v;
        return Poly(std::move(w));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out;
        out.reserve(c.size());
        for (const auto& v : c) out.push_back(v.get_d());
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> w(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) w[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) w[i] += b.c[i];
        return Poly(std::move(w));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> w(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) w[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) w[i] -= b.c[i];
        return Poly(std::move(w));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> w(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) w[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(w));
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        std::vector<Rat> w = a.c;
        for (auto& v : w) v *= s;
        return Poly(std::move(w));
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<Rat> w(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) w[i - 1] = Rat(static_cast<long>(i)) * c[i];
        return Poly(std::move(w));
    }

    // Exact division with remainder over Q.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly r = a, q;
        if (a.degree() >= b.degree())
            q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int d = r.degree() - b.degree();
            const Rat f = r.lead() / b.lead();
            q.c[static_cast<size_t>(d)] += f;
            for (size_t i = 0; i < b.c.size(); ++i)
                r.c[static_cast<size_t>(d) + i] -= f * b.c[i];
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }

    // Divide out an exact linear root: p / (x - root); remainder must vanish.
    Poly deflate(const Rat& root) const {
        std::vector<Rat> w(c.size() - 1, Rat(0));
        Rat carry = c.back();
        for (int i = degree() - 1; i >= 0; --i) {
            w[static_cast<size_t>(i)] = carry;
            carry = c[static_cast<size_t>(i)] + carry * root;
        }
        if (carry != 0) throw std::domain_error("Poly::deflate: not a root");
        return Poly(std::move(w));
    }

    Poly monic_abs() const {  // scale by the positive 1/|lead|, preserving signs
        if (is_zero()) return Poly();
        return (Rat(1) / abs(lead())) * (*this);
    }
};

inline Poly poly_gcd(Poly a, Poly b) {
    a = a.monic_abs();
    b = b.monic_abs();
    while (!b.is_zero()) {
        Poly r = Poly::divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.monic_abs();
    }
    return a;
}

// Yun's squarefree decomposition: p = prod f_i^i (positive leading scale lost,
// which is fine for root finding). Returns (factor, multiplicity) pairs.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    Poly a = poly_gcd(p, p.derivative());
    if (a.degree() == 0) {
        out.emplace_back(p.monic_abs(), 1);
        return out;
    }
    Poly b = Poly::divrem(p, a).first;
    Poly c = Poly::divrem(p.derivative(), a).first;
    Poly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Poly f = poly_gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f, mult);
        b = Poly::divrem(b, f).first;
        c = Poly::divrem(d, f).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p.monic_abs());
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.monic_abs());
    while (true) {
        Poly r = Poly::divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((Rat(-1) * r).monic_abs());
    }
    return chain;
}

inline int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

} // namespace detail

// Cauchy bound: all real roots lie in (-B, B).
inline Rat root_bound(const Poly& p) {
    Rat mx(0);
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rat v = abs(p.c[i] / p.lead());
        if (v > mx) mx = v;
    }
    return mx + 1;
}

struct RootInterval {
    Rat lo;
    Rat hi;     // lo == hi means the root is exactly rational
    int multiplicity = 1;
};

namespace detail {

// Distinct real roots of squarefree q isolated then refined to width <= eps.
inline void isolate_squarefree(Poly q, const Rat& eps, int multiplicity,
                               std::vector<RootInterval>& out) {
restart:
    if (q.degree() <= 0) return;
    const auto chain = sturm_chain(q);
    Rat bound = root_bound(q);
    while (q.eval(bound) == 0 || q.eval(-bound) == 0) bound += 1;
    struct Seg { Rat lo, hi; int count; };
    std::vector<Seg> work;
    {
        const int n = sign_variations_at(chain, -bound) - sign_variations_at(chain, bound);
        if (n <= 0) return;
        work.push_back({-bound, bound, n});
    }
    std::vector<Seg> isolated;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            isolated.push_back(s);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (q.eval(mid) == 0) {
            out.push_back({mid, mid, multiplicity});
            q = q.deflate(mid);
            goto restart;  // chain is stale after deflation
        }
        const int vl = sign_variations_at(chain, s.lo);
        const int vm = sign_variations_at(chain, mid);
        const int vr = sign_variations_at(chain, s.hi);
        if (vl - vm > 0) work.push_back({s.lo, mid, vl - vm});
        if (vm - vr > 0) work.push_back({mid, s.hi, vm - vr});
    }
    for (auto& s : isolated) {
        // simple root of squarefree q: bisect on the sign change
        Rat lo = s.lo, hi = s.hi;
        int slo = sgn(q.eval(lo));
        while (hi - lo > eps) {
            Rat mid = (lo + hi) / 2;
            const int sm = sgn(q.eval(mid));
            if (sm == 0) { lo = hi = mid; break; }
            if (sm == slo) lo = mid; else hi = mid;
        }
        out.push_back({lo, hi, multiplicity});
    }
}

} // namespace detail

// All real roots with multiplicities; intervals of width <= eps (default 1e-9).
inline std::vector<RootInterval> isolate_real_roots(const Poly& p,
                                                    const Rat& eps = Rat(1, 1000000000)) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    std::vector<RootInterval> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        detail::isolate_squarefree(factor, eps, mult, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Distinct roots of the squarefree part strictly inside (0, +inf).
inline int count_positive_roots(const Poly& p) {
    int n = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        (void)mult;
        Poly q = factor;
        while (!q.is_zero() && q.c.front() == 0) {  // strip x^k, x=0 is not positive
            std::vector<Rat> w(q.c.begin() + 1, q.c.end());
            q = Poly(std::move(w));
        }
        if (q.degree() <= 0) continue;
        const auto chain = detail::sturm_chain(q);
        Rat bound = root_bound(q);
        while (q.eval(bound) == 0) bound += 1;
        n += detail::sign_variations_at(chain, Rat(0)) -
             detail::sign_variations_at(chain, bound);
    }
    return n;
}

} // namespace meanineq
