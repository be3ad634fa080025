#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "meanineq/errors.hpp"

namespace meanineq {

struct PositivePair {
    double a;
    double b;
    PositivePair(double a_, double b_) : a(a_), b(b_) {
        if (!(std::isfinite(a) && std::isfinite(b)) || a <= 0 || b <= 0)
            throw std::domain_error("PositivePair: arguments must be finite and positive");
    }
};

enum class MeanTag {
    Gini, Power, Lehmer,
    H, G, A, S, N1, N2, N3, P1, P2, P3, P4, P5, P6
};

struct MeanKind {
    MeanTag tag = MeanTag::A;
    double r = 0.0;
    double s = 0.0;

    static MeanKind gini(double r, double s) {
        if (!std::isfinite(r) || !std::isfinite(s))
            throw std::domain_error("gini parameters must be finite");
        return MeanKind{MeanTag::Gini, r, s};
    }
    static MeanKind power(double r) {
        if (!std::isfinite(r)) throw std::domain_error("power parameter must be finite");
        return MeanKind{MeanTag::Power, r, 0.0};
    }
    static MeanKind lehmer(double r) {
        if (!std::isfinite(r)) throw std::domain_error("lehmer parameter must be finite");
        return MeanKind{MeanTag::Lehmer, r, 0.0};
    }

    bool is_named() const {
        return tag != MeanTag::Gini && tag != MeanTag::Power && tag != MeanTag::Lehmer;
    }

    // Named kinds mapped to their defining parametric family. N2/N3 have none.
    std::optional<MeanKind> parametric_form() const {
        switch (tag) {
            case MeanTag::P1: return lehmer(-2.0);
            case MeanTag::P2: return lehmer(-1.0);
            case MeanTag::P3: return lehmer(-0.5);
            case MeanTag::H:  return power(-1.0);
            case MeanTag::P4: return power(-0.5);
            case MeanTag::G:  return power(0.0);
            case MeanTag::N1: return power(0.5);
            case MeanTag::A:  return power(1.0);
            case MeanTag::S:  return power(2.0);
            case MeanTag::P6: return lehmer(2.0);
            case MeanTag::P5: return gini(0.5, 1.0);
            default: return std::nullopt;
        }
    }

    // Canonical Gini parameters (r, s) with r >= s, when the kind has them.
    std::optional<std::pair<double, double>> gini_params() const {
        switch (tag) {
            case MeanTag::Gini: return std::make_pair(std::max(r, s), std::min(r, s));
            case MeanTag::Power: return std::make_pair(std::max(r, 0.0), std::min(r, 0.0));
            case MeanTag::Lehmer: return std::make_pair(r, r - 1.0);
            default: {
                auto pf = parametric_form();
                if (!pf) return std::nullopt;
                return pf->gini_params();
            }
        }
    }

    std::string str() const {
        switch (tag) {
            case MeanTag::Gini:   return "gini:" + format_param(r) + ":" + format_param(s);
            case MeanTag::Power:  return "power:" + format_param(r);
            case MeanTag::Lehmer: return "lehmer:" + format_param(r);
            case MeanTag::H: return "H";  case MeanTag::G: return "G";
            case MeanTag::A: return "A";  case MeanTag::S: return "S";
            case MeanTag::N1: return "N1"; case MeanTag::N2: return "N2";
            case MeanTag::N3: return "N3"; case MeanTag::P1: return "P1";
            case MeanTag::P2: return "P2"; case MeanTag::P3: return "P3";
            case MeanTag::P4: return "P4"; case MeanTag::P5: return "P5";
            case MeanTag::P6: return "P6";
        }
        return "?";
    }

    // "A" | "N2" | "gini:R:S" | "power:R" | "lehmer:R"
    static MeanKind parse(const std::string& spec);

    friend bool operator==(const MeanKind& x, const MeanKind& y) {
        if (x.tag != y.tag) return false;
        if (x.tag == MeanTag::Gini) return x.r == y.r && x.s == y.s;
        if (x.tag == MeanTag::Power || x.tag == MeanTag::Lehmer) return x.r == y.r;
        return true;
    }
    friend bool operator!=(const MeanKind& x, const MeanKind& y) { return !(x == y); }

private:
    static std::string format_param(double v) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }
};

namespace kinds {
inline const MeanKind H{MeanTag::H};
inline const MeanKind G{MeanTag::G};
inline const MeanKind A{MeanTag::A};
inline const MeanKind S{MeanTag::S};
inline const MeanKind N1{MeanTag::N1};
inline const MeanKind N2{MeanTag::N2};
inline const MeanKind N3{MeanTag::N3};
inline const MeanKind P1{MeanTag::P1};
inline const MeanKind P2{MeanTag::P2};
inline const MeanKind P3{MeanTag::P3};
inline const MeanKind P4{MeanTag::P4};
inline const MeanKind P5{MeanTag::P5};
inline const MeanKind P6{MeanTag::P6};
} // namespace kinds

namespace detail {

// The r=s branch of the Gini mean, weights kept in [0,1] to dodge overflow.
inline double gini_equal_order(double rm, double M, double m) {
    if (std::fabs(rm) < 1e-12) return std::sqrt(M) * std::sqrt(m);
    const double z = rm * std::log(m / M); // m <= M so log <= 0
    if (z <= 0) {
        const double w = std::exp(z); // weight of the smaller argument
        return std::exp((std::log(M) + w * std::log(m)) / (1.0 + w));
    }
    const double v = std::exp(-z); // rm < 0: weight of the larger argument
    return std::exp((v * std::log(M) + std::log(m)) / (v + 1.0));
}

// log(t^e + 1) for t in (0,1], stable for any magnitude of e*log(t).
inline double log_pow_plus_one(double e, double log_t) {
    const double z = e * log_t;
    return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z)));
}

inline constexpr double param_join_tol = 1e-12;
inline constexpr double log_space_threshold = 500.0;

} // namespace detail

inline double gini_mean(double r, double s, const PositivePair& p) {
    if (!std::isfinite(r) || !std::isfinite(s))
        throw std::domain_error("gini_mean: r and s must be finite");
    if (p.a == p.b) return p.a;
    const double M = std::max(p.a, p.b), m = std::min(p.a, p.b);
    const double t = m / M, lt = std::log(t);
    if (std::fabs(r - s) < detail::param_join_tol)
        return detail::gini_equal_order(0.5 * (r + s), M, m);
    if (std::max(std::fabs(r), std::fabs(s)) * std::fabs(lt) > detail::log_space_threshold) {
        const double num = detail::log_pow_plus_one(r, lt) - detail::log_pow_plus_one(s, lt);
        return M * std::exp(num / (r - s));
    }
    return M * std::pow((std::pow(t, r) + 1.0) / (std::pow(t, s) + 1.0), 1.0 / (r - s));
}

inline double power_mean(double r, const PositivePair& p) {
    if (!std::isfinite(r)) throw std::domain_error("power_mean: r must be finite");
    if (p.a == p.b) return p.a;
    if (std::fabs(r) < detail::param_join_tol) return std::sqrt(p.a) * std::sqrt(p.b);
    const double M = std::max(p.a, p.b), m = std::min(p.a, p.b);
    const double t = m / M, lt = std::log(t);
    if (std::fabs(r) * std::fabs(lt) > detail::log_space_threshold)
        return M * std::exp((detail::log_pow_plus_one(r, lt) - std::log(2.0)) / r);
    return M * std::pow((std::pow(t, r) + 1.0) / 2.0, 1.0 / r);
}

inline double lehmer_mean(double r, const PositivePair& p) {
    if (!std::isfinite(r)) throw std::domain_error("lehmer_mean: r must be finite");
    if (p.a == p.b) return p.a;
    const double M = std::max(p.a, p.b), m = std::min(p.a, p.b);
    const double t = m / M, lt = std::log(t);
    if (std::max(std::fabs(r), std::fabs(r - 1.0)) * std::fabs(lt) > detail::log_space_threshold)
        return M * std::exp(detail::log_pow_plus_one(r, lt) - detail::log_pow_plus_one(r - 1.0, lt));
    return M * (std::pow(t, r) + 1.0) / (std::pow(t, r - 1.0) + 1.0);
}

// Closed defining formulas per kind; the parametric-constant consistency test
// cross-checks these against gini/power/lehmer. Huge arguments are rescaled
// through 1-homogeneity so the cubic/quartic terms below cannot overflow.
inline double mean_value(const MeanKind& k, const PositivePair& p) {
    if (std::max(p.a, p.b) > 1e90 && k.is_named()) {
        const double m = std::max(p.a, p.b);
        return m * mean_value(k, PositivePair(p.a / m, p.b / m));
    }
    const double a = p.a, b = p.b;
    const double sa = std::sqrt(a), sb = std::sqrt(b);
    switch (k.tag) {
        case MeanTag::Gini:   return gini_mean(k.r, k.s, p);
        case MeanTag::Power:  return power_mean(k.r, p);
        case MeanTag::Lehmer: return lehmer_mean(k.r, p);
        case MeanTag::H:  return 2.0 / (1.0 / a + 1.0 / b);
        case MeanTag::G:  return sa * sb;
        case MeanTag::A:  return 0.5 * (a + b);
        case MeanTag::S:  return std::hypot(a, b) / std::sqrt(2.0);
        case MeanTag::N1: { const double h = 0.5 * (sa + sb); return h * h; }
        case MeanTag::N2: return 0.5 * (sa + sb) * std::sqrt(0.5 * (a + b));
        case MeanTag::N3: return (a + sa * sb + b) / 3.0;
        case MeanTag::P1: return a * b * (a * a + b * b) / (a * a * a + b * b * b);
        case MeanTag::P2: return a * b * (a + b) / (a * a + b * b);
        case MeanTag::P3: return a * b * (sa + sb) / (a * sa + b * sb);
        case MeanTag::P4: { const double d = sa + sb; return 4.0 * a * b / (d * d); }
        case MeanTag::P5: { const double q = (a + b) / (sa + sb); return q * q; }
        case MeanTag::P6: return (a * a + b * b) / (a + b);
    }
    throw std::domain_error("mean_value: unknown kind");
}

namespace detail {

// Gini generator ((x^r+1)/(x^s+1))^(1/(r-s)) on (x,1); same branch logic as
// gini_mean but written against x directly so the two stay independent code.
inline double gini_generator(double r, double s, double x) {
    const double lx = std::log(x);
    if (std::fabs(r - s) < param_join_tol) {
        const double rm = 0.5 * (r + s);
        if (std::fabs(rm) < param_join_tol) return std::sqrt(x);
        const double z = rm * lx;
        if (std::fabs(z) > 700.0) return z > 0 ? x : 1.0;
        const double w = std::pow(x, rm);
        return std::exp(w * lx / (1.0 + w));
    }
    if (std::max(std::fabs(r), std::fabs(s)) * std::fabs(lx) > log_space_threshold) {
        auto L = [&](double e) {
            const double z = e * lx;
            return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z)));
        };
        return std::exp((L(r) - L(s)) / (r - s));
    }
    return std::pow((std::pow(x, r) + 1.0) / (std::pow(x, s) + 1.0), 1.0 / (r - s));
}

} // namespace detail

// Normalized generator f_M with M(a,b) = b * f_M(a/b) and f_M(1) = 1.
// f_M(x) = x * f_M(1/x) (symmetry plus homogeneity) keeps the closed forms
// out of overflow territory for extreme x.
inline double generator(const MeanKind& k, double x) {
    if (!std::isfinite(x) || x <= 0)
        throw std::domain_error("generator: x must be finite and positive");
    if (x > 1e90 && k.is_named()) return x * generator(k, 1.0 / x);
    const double u = std::sqrt(x);
    switch (k.tag) {
        case MeanTag::Gini:   return detail::gini_generator(k.r, k.s, x);
        case MeanTag::Power:  return detail::gini_generator(k.r, 0.0, x);
        case MeanTag::Lehmer: return detail::gini_generator(k.r, k.r - 1.0, x);
        case MeanTag::P1: return x * (x * x + 1.0) / (x * x * x + 1.0);
        case MeanTag::P2: return x * (x + 1.0) / (x * x + 1.0);
        case MeanTag::P3: return x * (u + 1.0) / (x * u + 1.0);
        case MeanTag::H:  return 2.0 * x / (1.0 + x);
        case MeanTag::P4: { const double d = u + 1.0; return 4.0 * x / (d * d); }
        case MeanTag::G:  return u;
        case MeanTag::N1: { const double h = 0.5 * (u + 1.0); return h * h; }
        case MeanTag::N3: return (x + u + 1.0) / 3.0;
        case MeanTag::N2: return 0.5 * (u + 1.0) * std::sqrt(0.5 * (x + 1.0));
        case MeanTag::A:  return 0.5 * (x + 1.0);
        case MeanTag::P5: { const double q = (x + 1.0) / (u + 1.0); return q * q; }
        case MeanTag::S:  return std::sqrt(0.5 * (x * x + 1.0));
        case MeanTag::P6: return (x * x + 1.0) / (x + 1.0);
    }
    throw std::domain_error("generator: unknown kind");
}

namespace detail {

// Chain position in the mean ordering; S and P5 share a slot and are
// incomparable with each other.
inline int chain_rank(MeanTag t) {
    switch (t) {
        case MeanTag::P1: return 0;  case MeanTag::P2: return 1;
        case MeanTag::P3: return 2;  case MeanTag::H:  return 3;
        case MeanTag::P4: return 4;  case MeanTag::G:  return 5;
        case MeanTag::N1: return 6;  case MeanTag::N3: return 7;
        case MeanTag::N2: return 8;  case MeanTag::A:  return 9;
        case MeanTag::P5: return 10; case MeanTag::S:  return 10;
        case MeanTag::P6: return 11;
        default: return -1;
    }
}

// Collapse a parametric kind onto its named equivalent when the Gini-plane
// parameters match exactly, so e.g. Power(1) and Lehmer(1) both become A.
// E_{r,s} with r+s = 0 is the geometric mean for every r.
inline MeanKind normalize_kind(const MeanKind& k) {
    if (k.is_named()) return k;
    const auto gp = k.gini_params();
    if (!gp) return k;
    if (gp->first + gp->second == 0.0) return kinds::G;
    const MeanKind named[] = {kinds::P1, kinds::P2, kinds::P3, kinds::H, kinds::P4,
                              kinds::N1, kinds::A, kinds::S, kinds::P6, kinds::P5};
    for (const auto& n : named) {
        const auto np = n.parametric_form()->gini_params();
        if (np->first == gp->first && np->second == gp->second) return n;
    }
    return k;
}

// Mean-chain partial order, extended to purely parametric kinds through the
// componentwise monotonicity of the two-parameter family.
inline bool chain_leq(const MeanKind& lo_in, const MeanKind& hi_in) {
    const MeanKind lo = normalize_kind(lo_in), hi = normalize_kind(hi_in);
    if (lo == hi) return true;
    if (lo.is_named() && hi.is_named()) {
        if ((lo.tag == MeanTag::S && hi.tag == MeanTag::P5) ||
            (lo.tag == MeanTag::P5 && hi.tag == MeanTag::S))
            return false;
        return chain_rank(lo.tag) <= chain_rank(hi.tag);
    }
    const auto gl = lo.gini_params(), gh = hi.gini_params();
    if (gl && gh) return gl->first <= gh->first && gl->second <= gh->second;
    return false;
}

} // namespace detail

inline MeanKind MeanKind::parse(const std::string& spec) {
    static const std::pair<const char*, MeanKind> named[] = {
        {"H", kinds::H}, {"G", kinds::G}, {"A", kinds::A}, {"S", kinds::S},
        {"N1", kinds::N1}, {"N2", kinds::N2}, {"N3", kinds::N3},
        {"P1", kinds::P1}, {"P2", kinds::P2}, {"P3", kinds::P3},
        {"P4", kinds::P4}, {"P5", kinds::P5}, {"P6", kinds::P6},
    };
    for (const auto& [name, k] : named)
        if (spec == name) return k;
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw parse_error("unknown mean kind: " + spec);
    const std::string family = spec.substr(0, colon);
    auto parse_num = [&](const std::string& text) {
        try {
            size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size() || !std::isfinite(v))
                throw parse_error("bad mean parameter: " + text);
            return v;
        } catch (const std::invalid_argument&) {
            throw parse_error("bad mean parameter: " + text);
        } catch (const std::out_of_range&) {
            throw parse_error("mean parameter out of range: " + text);
        }
    };
    if (family == "gini") {
        const auto colon2 = spec.find(':', colon + 1);
        if (colon2 == std::string::npos) throw parse_error("gini spec needs two parameters: " + spec);
        return gini(parse_num(spec.substr(colon + 1, colon2 - colon - 1)),
                    parse_num(spec.substr(colon2 + 1)));
    }
    if (family == "power") return power(parse_num(spec.substr(colon + 1)));
    if (family == "lehmer") return lehmer(parse_num(spec.substr(colon + 1)));
    throw parse_error("unknown mean kind: " + spec);
}

} // namespace meanineq
