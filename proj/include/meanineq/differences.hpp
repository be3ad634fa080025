#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "meanineq/hpoly_tables.hpp"
#include "meanineq/means.hpp"
#include "meanineq/poly.hpp"

namespace meanineq {

// Ordered pair of chain-comparable means, upper >= lower in the mean-chain
// partial order.
// Parametric kinds that coincide with a named mean are stored normalized.
struct DifferencePair {
    MeanKind upper;
    MeanKind lower;

    DifferencePair(MeanKind up, MeanKind lo)
        : upper(detail::normalize_kind(up)), lower(detail::normalize_kind(lo)) {
        if (upper == lower)
            throw std::domain_error("DifferencePair: degenerate pair " + upper.str());
        if (!detail::chain_leq(lower, upper))
            throw std::domain_error("DifferencePair: (" + up.str() + "," + lo.str() +
                                    ") is not chain-ordered");
    }

    bool has_certificate() const;
    std::string str() const { return "D(" + upper.str() + "," + lower.str() + ")"; }

    friend bool operator==(const DifferencePair& x, const DifferencePair& y) {
        return x.upper == y.upper && x.lower == y.lower;
    }
    friend bool operator<(const DifferencePair& x, const DifferencePair& y) {
        return x.str() < y.str();
    }
};

namespace detail {

inline double horner(const std::vector<double>& c, double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

template <size_t N>
inline double horner(const std::array<long, N>& c, double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

// f_M(u^2) = (pn/pd) * sqrt(rn/rd) with u = sqrt(x); rn/rd = 1 when rational.
struct URep {
    Poly pn, pd, rn, rd;
    bool radical = false;
};

inline Poly upoly(std::initializer_list<long> ascending) {
    std::vector<Rat> w;
    for (long v : ascending) w.emplace_back(v);
    return Poly(std::move(w));
}

inline URep urep(MeanTag t) {
    const Poly one = upoly({1});
    switch (t) {
        case MeanTag::P1: return {upoly({0, 0, 1, 0, 0, 0, 1}), upoly({1, 0, 0, 0, 0, 0, 1}), one, one, false};
        case MeanTag::P2: return {upoly({0, 0, 1, 0, 1}), upoly({1, 0, 0, 0, 1}), one, one, false};
        case MeanTag::P3: return {upoly({0, 0, 1, 1}), upoly({1, 0, 0, 1}), one, one, false};
        case MeanTag::H:  return {upoly({0, 0, 2}), upoly({1, 0, 1}), one, one, false};
        case MeanTag::P4: return {upoly({0, 0, 4}), upoly({1, 2, 1}), one, one, false};
        case MeanTag::G:  return {upoly({0, 1}), one, one, one, false};
        case MeanTag::N1: return {upoly({1, 2, 1}), upoly({4}), one, one, false};
        case MeanTag::N3: return {upoly({1, 1, 1}), upoly({3}), one, one, false};
        case MeanTag::N2: return {upoly({1, 1}), upoly({2}), upoly({1, 0, 1}), upoly({2}), true};
        case MeanTag::A:  return {upoly({1, 0, 1}), upoly({2}), one, one, false};
        case MeanTag::P5: return {upoly({1, 0, 2, 0, 1}), upoly({1, 2, 1}), one, one, false};
        case MeanTag::S:  return {one, one, upoly({1, 0, 0, 0, 1}), upoly({2}), true};
        case MeanTag::P6: return {upoly({1, 0, 0, 0, 1}), upoly({1, 0, 1}), one, one, false};
        default: throw std::domain_error("urep: parametric kind");
    }
}

// Factored, cancellation-free form of g_tp(u^2) = f_t - f_p:
//   g = (u-1)^k * num(u) / den(u)                      (both rational)
//   g = (u-1)^k * num(u) / (den(u) * (f_t + f_p))      (radical pair, via
//                                                       the square-difference
//                                                       rationalization)
struct StableDiff {
    int k = 0;
    std::vector<double> num, den;
    bool radical = false;
    MeanKind upper, lower;

    double eval_x(double x) const {
        // g(x) = x g(1/x); the cofactors reach degree ~16 in u, so keep u <= 1e4
        if (x > 1e8) return x * eval_x(1.0 / x);
        const double u = std::sqrt(x);
        const double um1 = (x - 1.0) / (u + 1.0);
        double pw = 1.0;
        for (int i = 0; i < k; ++i) pw *= um1;
        double v = pw * horner(num, u) / horner(den, u);
        if (radical) v /= generator(upper, x) + generator(lower, x);
        return v;
    }
};

inline StableDiff make_stable(const MeanKind& upper, const MeanKind& lower) {
    const URep t = urep(upper.tag), p = urep(lower.tag);
    Poly num, den;
    const bool radical = t.radical || p.radical;
    if (!radical) {
        num = t.pn * p.pd - p.pn * t.pd;
        den = t.pd * p.pd;
    } else {
        num = t.pn * t.pn * t.rn * p.pd * p.pd * p.rd -
              p.pn * p.pn * p.rn * t.pd * t.pd * t.rd;
        den = t.pd * t.pd * t.rd * p.pd * p.pd * p.rd;
    }
    int k = 0;
    while (!num.is_zero() && num.eval(Rat(1)) == 0) {
        num = num.deflate(Rat(1));
        ++k;
    }
    return {k, num.to_doubles(), den.to_doubles(), radical, upper, lower};
}

inline const StableDiff* stable_form(MeanTag up, MeanTag lo) {
    static const std::map<std::pair<int, int>, StableDiff> table = [] {
        std::map<std::pair<int, int>, StableDiff> m;
        const MeanKind all[] = {kinds::P1, kinds::P2, kinds::P3, kinds::H, kinds::P4,
                                kinds::G, kinds::N1, kinds::N3, kinds::N2, kinds::A,
                                kinds::P5, kinds::S, kinds::P6};
        for (const auto& hi : all)
            for (const auto& lo2 : all) {
                if (hi == lo2 || !chain_leq(lo2, hi)) continue;
                m.emplace(std::make_pair(static_cast<int>(hi.tag), static_cast<int>(lo2.tag)),
                          make_stable(hi, lo2));
            }
        return m;
    }();
    const auto it = table.find({static_cast<int>(up), static_cast<int>(lo)});
    return it == table.end() ? nullptr : &it->second;
}

} // namespace detail

inline bool DifferencePair::has_certificate() const {
    if (!upper.is_named() || !lower.is_named()) return false;
    static const std::pair<MeanTag, MeanTag> certified[] = {
        {MeanTag::P6, MeanTag::S},  {MeanTag::P6, MeanTag::N2}, {MeanTag::P6, MeanTag::N3},
        {MeanTag::P6, MeanTag::N1}, {MeanTag::P6, MeanTag::G},  {MeanTag::P6, MeanTag::P4},
        {MeanTag::P6, MeanTag::P2}, {MeanTag::P6, MeanTag::P1}, {MeanTag::P5, MeanTag::A},
        {MeanTag::P5, MeanTag::N2}, {MeanTag::P5, MeanTag::N3}, {MeanTag::P5, MeanTag::N1},
        {MeanTag::P5, MeanTag::G},  {MeanTag::P5, MeanTag::H},  {MeanTag::P5, MeanTag::P3},
        {MeanTag::P5, MeanTag::P2}, {MeanTag::P5, MeanTag::P1}, {MeanTag::S, MeanTag::P4},
        {MeanTag::A, MeanTag::P4},  {MeanTag::S, MeanTag::A},   {MeanTag::S, MeanTag::N2},
        {MeanTag::S, MeanTag::N1},  {MeanTag::A, MeanTag::N2},  {MeanTag::A, MeanTag::G},
        {MeanTag::A, MeanTag::H},   {MeanTag::N2, MeanTag::N1}, {MeanTag::S, MeanTag::G},
    };
    for (const auto& [u, l] : certified)
        if (upper.tag == u && lower.tag == l) return true;
    return false;
}

// Mean-value route: exact zero on the diagonal, may round to a tiny negative
// very close to it.
inline double difference(const DifferencePair& dp, const PositivePair& p) {
    if (p.a == p.b) return 0.0;
    return mean_value(dp.upper, p) - mean_value(dp.lower, p);
}

// Generator route: evaluated through the factored form for named pairs, so it
// is nonnegative and fully accurate arbitrarily close to x = 1.
inline double generator_difference(const DifferencePair& dp, double x) {
    if (!std::isfinite(x) || x <= 0)
        throw std::domain_error("generator_difference: x must be finite and positive");
    if (dp.upper.is_named() && dp.lower.is_named())
        if (const auto* sd = detail::stable_form(dp.upper.tag, dp.lower.tag))
            return sd->eval_x(x);
    return generator(dp.upper, x) - generator(dp.lower, x);
}

// Closed-form second derivatives of the 27 certificated generator differences.
inline double second_derivative_closed(const DifferencePair& dp, double x) {
    if (!std::isfinite(x) || x <= 0)
        throw std::domain_error("second_derivative_closed: x must be finite and positive");
    if (!dp.has_certificate())
        throw std::domain_error("second_derivative_closed: no closed form for " + dp.str());
    const double u = std::sqrt(x);
    const double x32 = x * u;
    auto sq = [](double v) { return v * v; };
    auto cube = [](double v) { return v * v * v; };
    auto quart = [](double v) { return (v * v) * (v * v); };
    auto pow32 = [](double v) { return v * std::sqrt(v); };

    const MeanTag U = dp.upper.tag, L = dp.lower.tag;
    using T = MeanTag;
    if (U == T::P6 && L == T::S)
        return 2.0 * (2.0 * pow32(2 * x * x + 2) - cube(x + 1)) /
               (cube(x + 1) * pow32(2 * x * x + 2));
    if (U == T::P6 && L == T::N2)
        return (cube(x + 1) * (x32 + 1) + 16.0 * x32 * pow32(2 * x + 2)) /
               (4.0 * x32 * cube(x + 1) * pow32(2 * x + 2));
    if (U == T::P6 && L == T::N3)
        return (48.0 * x32 + cube(x + 1)) / (12.0 * x32 * cube(x + 1));
    if (U == T::P6 && L == T::N1)
        return (32.0 * x32 + cube(x + 1)) / (8.0 * x32 * cube(x + 1));
    if (U == T::P6 && L == T::G)
        return (16.0 * x32 + cube(x + 1)) / (4.0 * x32 * cube(x + 1));
    if (U == T::P6 && L == T::P4)
        return 2.0 * (3.0 * (x * x * x + 1) + 17.0 * x * (x + 1) + 2.0 * u * (x * x + 6 * x + 1)) /
               (u * quart(u + 1) * cube(x + 1));
    if (U == T::P6 && L == T::P2) {
        const double x2 = x * x, x3 = x2 * x;
        return 2.0 * (x3 * x3 + 15.0 * x2 * x2 + 16.0 * x3 + 15.0 * x2 + 1) /
               (cube(x + 1) * cube(x2 + 1));
    }
    if (U == T::P6 && L == T::P1)
        return (2.0 * (x * x + 1) *
                    (sq(sq(x - 1) - x) + x * x + quart(x - 1) + x * sq(x - 1)) +
                8.0 * x * x * x) /
               cube(x * x * x + 1);
    if (U == T::P5 && L == T::A)
        return (4.0 * u * (sq(u - 1) + u) + sq(x - 1)) / (2.0 * x32 * quart(u + 1));
    if (U == T::P5 && L == T::N2)
        // published display drops the 4th power on the denominator's
        // (sqrt(x)+1); the fd oracle confirms this corrected form
        return (quart(u + 1) * (x32 + 1) +
                4.0 * std::sqrt(2 * x + 2) * (x + 1) *
                    (4.0 * u * (sq(u - 1) + u) + sq(x - 1))) /
               (8.0 * quart(u + 1) * x32 * (x + 1) * std::sqrt(2 * x + 2));
    if (U == T::P5 && L == T::N3)
        return (7.0 * sq(u - 1) * (x + 6.0 * u + 1) + 40.0 * x) / (12.0 * x32 * quart(u + 1));
    if (U == T::P5 && L == T::N1)
        return (5.0 * sq(u - 1) * (x + 6.0 * u + 1) + 32.0 * x) / (8.0 * x32 * quart(u + 1));
    if (U == T::P5 && L == T::G)
        return 3.0 * (4.0 * u * (x + 1) + sq(x - 1)) / (4.0 * x32 * quart(u + 1));
    if (U == T::P5 && L == T::H)
        return ((x + 1) * (quart(x - 1) + 16.0 * x * x) +
                4.0 * u * (quart(x + 1) + 2.0 * x * (x * x + 6 * x + 1))) /
               (2.0 * x32 * cube(x + 1) * quart(u + 1));
    if (U == T::P5 && L == T::P3)
        return detail::horner(tables::h1, u) / (4.0 * x32 * cube(x32 + 1) * (u + 1));
    if (U == T::P5 && L == T::P2)
        return detail::horner(tables::h2, u) / (2.0 * x32 * cube(x * x + 1) * quart(u + 1));
    if (U == T::P5 && L == T::P1)
        return detail::horner(tables::h3, u) / (2.0 * x32 * cube(x * x * x + 1) * quart(u + 1));
    if (U == T::S && L == T::P4)
        return 2.0 * (u * quart(u + 1) + 3.0 * pow32(2 * x * x + 2)) /
               (u * quart(u + 1) * pow32(2 * x * x + 2));
    if (U == T::A && L == T::P4) return 6.0 / (u * quart(u + 1));
    if (U == T::S && L == T::A)
        return 1.0 / ((x * x + 1) * std::sqrt(2 * x * x + 2));
    if (U == T::S && L == T::N2) {
        const double r2 = std::sqrt(2 * x * x + 2), r1 = std::sqrt(2 * x + 2);
        return (r2 * (x32 + 1) * (x * x + 1) + 8.0 * x32 * (x + 1) * r1) /
               (8.0 * x32 * (x * x + 1) * (x + 1) * r2 * r1);
    }
    if (U == T::S && L == T::N1) {
        const double r2 = std::sqrt(2 * x * x + 2);
        return (8.0 * x32 + (x * x + 1) * r2) / (8.0 * x32 * (x * x + 1) * r2);
    }
    if (U == T::A && L == T::N2)
        return (x32 + 1) / (8.0 * x32 * (x + 1) * std::sqrt(2 * x + 2));
    if (U == T::A && L == T::G) return 1.0 / (4.0 * x32);
    if (U == T::A && L == T::H) return 4.0 / cube(x + 1);
    if (U == T::N2 && L == T::N1) {
        const double r1 = std::sqrt(2 * x + 2);
        return ((x + 1) * r1 - (x32 + 1)) / (8.0 * x32 * (x + 1) * r1);
    }
    if (U == T::S && L == T::G) {
        const double r2 = std::sqrt(2 * x * x + 2);
        return (4.0 * x32 + r2 * (x * x + 1)) / (4.0 * x32 * r2 * (x * x + 1));
    }
    throw std::domain_error("second_derivative_closed: no closed form for " + dp.str());
}

namespace detail {

// Named generators over GMP floats. Only +,-,*,/ and sqrt appear, so the
// whole family evaluates exactly enough for second differences with tiny h,
// where double arithmetic would drown in (f(x+h)-2f(x)+f(x-h)) roundoff.
inline mpf_class generator_mpf(MeanTag t, const mpf_class& x) {
    const mpf_class u = sqrt(x);
    switch (t) {
        case MeanTag::P1: return x * (x * x + 1) / (x * x * x + 1);
        case MeanTag::P2: return x * (x + 1) / (x * x + 1);
        case MeanTag::P3: return x * (u + 1) / (x * u + 1);
        case MeanTag::H:  return 2 * x / (1 + x);
        case MeanTag::P4: return 4 * x / ((u + 1) * (u + 1));
        case MeanTag::G:  return u;
        case MeanTag::N1: return (u + 1) * (u + 1) / 4;
        case MeanTag::N3: return (x + u + 1) / 3;
        case MeanTag::N2: return (u + 1) / 2 * sqrt((x + 1) / 2);
        case MeanTag::A:  return (x + 1) / 2;
        case MeanTag::P5: {
            const mpf_class q = (x + 1) / (u + 1);
            return q * q;
        }
        case MeanTag::S:  return sqrt((x * x + 1) / 2);
        case MeanTag::P6: return (x * x + 1) / (x + 1);
        default: throw std::domain_error("generator_mpf: parametric kind");
    }
}

} // namespace detail

// Central second difference of the generator difference; truncation O(h^2).
// Named pairs difference the defining formulas in 256-bit arithmetic so the
// oracle stays accurate even where h^2 is below the double roundoff floor.
inline double second_derivative_fd(const DifferencePair& dp, double x, double h) {
    if (!std::isfinite(x) || x <= 0)
        throw std::domain_error("second_derivative_fd: x must be finite and positive");
    if (!std::isfinite(h) || h <= 0 || h >= 0.5 * x)
        throw std::domain_error("second_derivative_fd: need 0 < h < x/2");
    if (dp.upper.is_named() && dp.lower.is_named()) {
        // explicit return type: gmpxx expression templates must not outlive
        // their operands
        const auto g = [&](const mpf_class& xx) -> mpf_class {
            return detail::generator_mpf(dp.upper.tag, xx) -
                   detail::generator_mpf(dp.lower.tag, xx);
        };
        const mpf_class xm(x, 256), hm(h, 256);
        const mpf_class d2 = (g(xm + hm) - 2 * g(xm) + g(xm - hm)) / (hm * hm);
        return d2.get_d();
    }
    const double gm = generator_difference(dp, x - h);
    const double g0 = generator_difference(dp, x);
    const double gp = generator_difference(dp, x + h);
    return (gp - 2.0 * g0 + gm) / (h * h);
}

// Lift of a convex univariate f with f(1) = 0 to a bivariate 1-homogeneous
// measure: phi_f(a,b) = a * f(b/a).
inline double phi_transform(const std::function<double(double)>& f, const PositivePair& p) {
    return p.a * f(p.b / p.a);
}

// The four V_k measures spun off the beta-table proofs, V_k(a,b) = b * f_k(a/b).
inline double vk_measure(int k, const PositivePair& p) {
    if (k < 1 || k > 4) throw std::domain_error("vk_measure: k must be in 1..4");
    const double x = p.a / p.b;
    const double u = std::sqrt(x);
    const double um1 = (x - 1.0) / (u + 1.0);  // sqrt(x) - 1, cancellation-free
    auto sq = [](double v) { return v * v; };
    double f = 0;
    switch (k) {
        case 1: {
            const double xm1 = x - 1.0;
            f = sq(x + 1) * sq(xm1) * sq(xm1) / ((x * x * x + 1) * (x * x + 1));
            break;
        }
        case 2: f = sq(um1) / (x + 1); break;
        case 3: f = u * sq(um1) * sq(um1) / ((x + 1) * sq(u + 1)); break;
        case 4: f = sq(um1) * sq(um1) * (sq(um1) + u) / (12.0 * (x + 1)); break;
    }
    return p.b * f;
}

} // namespace meanineq
