#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "meanineq/differences.hpp"
#include "meanineq/inequalities.hpp"

#include "json.hpp"

namespace meanineq {

// Complete finite discrete probability distribution with strictly positive
// entries (the Gamma_n set).
struct Distribution {
    std::vector<double> p;
    double tolerance = 1e-9;

    explicit Distribution(std::vector<double> probs, double tol = 1e-9)
        : p(std::move(probs)), tolerance(tol) {
        if (p.size() < 2) throw std::domain_error("Distribution: need at least 2 entries");
        double sum = 0;
        for (const double v : p) {
            if (!std::isfinite(v) || v <= 0)
                throw std::domain_error("Distribution: probabilities must be positive");
            sum += v;
        }
        if (std::fabs(sum - 1.0) > tolerance)
            throw std::domain_error("Distribution: probabilities sum to " + std::to_string(sum) +
                                    ", not 1");
    }

    // Explicit repair modes; construction never normalizes or smooths silently.
    static Distribution make(std::vector<double> v, bool normalize, bool smooth,
                             double tol = 1e-9) {
        if (smooth) {
            const double eps = 1e-12;
            const double n = static_cast<double>(v.size());
            for (auto& x : v) {
                if (!std::isfinite(x) || x < 0)
                    throw std::domain_error("Distribution: negative or non-finite probability");
                x = (x + eps) / (1.0 + n * eps);
            }
        }
        if (normalize) {
            double sum = 0;
            for (const double x : v) sum += x;
            if (!(sum > 0)) throw std::domain_error("Distribution: nonpositive total mass");
            for (auto& x : v) x /= sum;
        }
        return Distribution(std::move(v), tol);
    }

    std::size_t size() const { return p.size(); }
};

enum class DivergenceTag {
    JensenShannonI,
    JDivergence,
    AGMeanT,
    SymChiSquarePsi,
    TriangularDelta,
    HellingerH,
    MeanDiff,
};

struct DivergenceKind {
    DivergenceTag tag = DivergenceTag::JensenShannonI;
    std::optional<DifferencePair> pair;  // MeanDiff only

    static DivergenceKind meandiff(DifferencePair p) {
        return {DivergenceTag::MeanDiff, std::move(p)};
    }

    std::string str() const {
        switch (tag) {
            case DivergenceTag::JensenShannonI: return "I";
            case DivergenceTag::JDivergence: return "J";
            case DivergenceTag::AGMeanT: return "T";
            case DivergenceTag::SymChiSquarePsi: return "Psi";
            case DivergenceTag::TriangularDelta: return "Delta";
            case DivergenceTag::HellingerH: return "h";
            case DivergenceTag::MeanDiff: return "MeanDiff:" + pair->upper.str() + ":" + pair->lower.str();
        }
        return "?";
    }

    // "i"/"jensen-shannon", "j", "t", "psi", "delta", "hellinger"/"h",
    // "meandiff:UPPER:LOWER"
    static DivergenceKind parse(const std::string& spec) {
        std::string s;
        for (char c : spec) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (s == "i" || s == "jensen-shannon") return {DivergenceTag::JensenShannonI, {}};
        if (s == "j" || s == "jeffreys") return {DivergenceTag::JDivergence, {}};
        if (s == "t" || s == "ag-mean") return {DivergenceTag::AGMeanT, {}};
        if (s == "psi" || s == "chi") return {DivergenceTag::SymChiSquarePsi, {}};
        if (s == "delta" || s == "triangular") return {DivergenceTag::TriangularDelta, {}};
        if (s == "h" || s == "hellinger") return {DivergenceTag::HellingerH, {}};
        if (s.rfind("meandiff:", 0) == 0) {
            const std::string rest = spec.substr(9);
            const auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw parse_error("meandiff kind needs meandiff:UPPER:LOWER");
            try {
                return meandiff(DifferencePair(MeanKind::parse(rest.substr(0, colon)),
                                               MeanKind::parse(rest.substr(colon + 1))));
            } catch (const std::domain_error& e) {
                throw parse_error(e.what());
            }
        }
        throw parse_error("unknown divergence kind: " + spec);
    }
};

namespace detail {

// Coordinate-wise terms, written to stay accurate when p ~ q.
inline double term_jensen_shannon(double p, double q) {
    const double d = (p - q) / (p + q);
    return 0.5 * (p * std::log1p(d) + q * std::log1p(-d));
}
inline double term_jeffreys(double p, double q) {
    return (p - q) * std::log1p((p - q) / q);
}
inline double term_ag_mean(double p, double q) {
    const double ds = (p - q) / (std::sqrt(p) + std::sqrt(q));  // sqrt p - sqrt q
    return 0.5 * (p + q) * std::log1p(ds * ds / (2.0 * std::sqrt(p * q)));
}
inline double term_sym_chi_square(double p, double q) {
    return (p - q) * (p - q) * (p + q) / (p * q);
}
inline double term_triangular(double p, double q) {
    return (p - q) * (p - q) / (p + q);
}
inline double term_hellinger(double p, double q) {
    const double ds = (p - q) / (std::sqrt(p) + std::sqrt(q));
    return 0.5 * ds * ds;
}

} // namespace detail

inline double divergence(const DivergenceKind& kind, const Distribution& P,
                         const Distribution& Q) {
    if (P.size() != Q.size())
        throw std::domain_error("divergence: distributions must have equal length");
    double sum = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const double p = P.p[i], q = Q.p[i];
        switch (kind.tag) {
            case DivergenceTag::JensenShannonI: sum += detail::term_jensen_shannon(p, q); break;
            case DivergenceTag::JDivergence: sum += detail::term_jeffreys(p, q); break;
            case DivergenceTag::AGMeanT: sum += detail::term_ag_mean(p, q); break;
            case DivergenceTag::SymChiSquarePsi: sum += detail::term_sym_chi_square(p, q); break;
            case DivergenceTag::TriangularDelta: sum += detail::term_triangular(p, q); break;
            case DivergenceTag::HellingerH: sum += detail::term_hellinger(p, q); break;
            case DivergenceTag::MeanDiff:
                sum += p == q ? 0.0 : q * generator_difference(*kind.pair, p / q);
                break;
        }
    }
    return sum;
}

// Every term of the classical divergence sandwich plus the mean-difference
// extension terms, with all adjacent comparisons.
struct DivergenceChainReport {
    struct Term {
        std::string label;
        double value;
    };
    struct Comparison {
        std::string label;
        double slack;          // rhs - lhs (nonnegative when the edge holds)
        double rel_violation;  // (lhs - rhs) / max(|rhs|, tiny)
        bool pass;
    };
    std::vector<Term> terms;
    std::vector<Comparison> comparisons;
    double tolerance = 1e-10;
    bool pass = true;
};

inline DivergenceChainReport verify_divergence_chain(const Distribution& P,
                                                     const Distribution& Q,
                                                     double tolerance = 1e-10) {
    if (P.size() != Q.size())
        throw std::domain_error("verify_divergence_chain: length mismatch");
    using namespace kinds;
    auto MD = [](MeanKind u, MeanKind l) {
        return DivergenceKind::meandiff(DifferencePair(u, l));
    };
    struct Entry {
        const char* label;
        double coeff;
        DivergenceKind kind;
    };
    const Entry entries[] = {
        {"1/2*D(A,H)", 0.5, MD(A, H)},
        {"2/3*D(A,P4)", 2.0 / 3.0, MD(A, P4)},
        {"2/5*D(P5,H)", 0.4, MD(P5, H)},
        {"I", 1.0, {DivergenceTag::JensenShannonI, {}}},
        {"4*D(N2,N1)", 4.0, MD(N2, N1)},
        {"4/3*D(N2,G)", 4.0 / 3.0, MD(N2, G)},
        {"D(A,G)", 1.0, MD(A, G)},
        {"4*D(A,N2)", 4.0, MD(A, N2)},
        {"2/3*D(P5,G)", 2.0 / 3.0, MD(P5, G)},
        {"1/8*J", 0.125, {DivergenceTag::JDivergence, {}}},
        {"D(P5,N1)", 1.0, MD(P5, N1)},
        {"6/5*D(P5,N3)", 1.2, MD(P5, N3)},
        {"4/3*D(P5,N2)", 4.0 / 3.0, MD(P5, N2)},
        {"2*D(P5,A)", 2.0, MD(P5, A)},
        {"T", 1.0, {DivergenceTag::AGMeanT, {}}},
        {"1/16*Psi", 0.0625, {DivergenceTag::SymChiSquarePsi, {}}},
    };
    DivergenceChainReport rep;
    rep.tolerance = tolerance;
    std::vector<double> v;
    for (const auto& e : entries) {
        const double val = e.coeff * divergence(e.kind, P, Q);
        rep.terms.push_back({e.label, val});
        v.push_back(val);
    }
    // indices into the term list above
    const std::pair<int, int> edges[] = {
        {0, 3},  {1, 3},  {2, 4},  {3, 4},  {4, 5},  {5, 6},  {6, 7},  {7, 9},  {7, 8},
        {8, 9},  {8, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {9, 14}, {14, 15},
    };
    for (const auto& [li, ri] : edges) {
        DivergenceChainReport::Comparison c;
        c.label = rep.terms[static_cast<size_t>(li)].label + " <= " +
                  rep.terms[static_cast<size_t>(ri)].label;
        const double l = v[static_cast<size_t>(li)], r = v[static_cast<size_t>(ri)];
        c.slack = r - l;
        c.rel_violation = (l - r) / std::max(std::fabs(r), 1e-300);
        c.pass = c.rel_violation <= tolerance;
        rep.pass = rep.pass && c.pass;
        rep.comparisons.push_back(std::move(c));
    }
    return rep;
}

// Second derivatives of the divergence generators (f such that the divergence
// is sum q_i f(p_i/q_i)).
inline double divergence_generator_second_derivative(DivergenceTag tag, double x) {
    switch (tag) {
        case DivergenceTag::JensenShannonI: return 1.0 / (2.0 * x * (x + 1.0));
        case DivergenceTag::JDivergence: return (x + 1.0) / (x * x);
        case DivergenceTag::AGMeanT: return (x * x + 1.0) / (4.0 * x * x * (x + 1.0));
        case DivergenceTag::SymChiSquarePsi: return 2.0 + 2.0 / (x * x * x);
        default: throw std::domain_error("no generator second derivative for this kind");
    }
}

enum class RatioCheckKind { AP4_vs_I, P5G_vs_J, P5A_vs_T };

struct RatioMonotonicityReport {
    std::string which;
    bool sign_pattern_ok = false;  // increasing below 1, decreasing above 1
    double ratio_below = 0;        // at x = 1 - 1e-5
    double ratio_above = 0;        // at x = 1 + 1e-5
    double limit_estimate = 0;
};

inline RatioMonotonicityReport ratio_monotonicity_check(RatioCheckKind which,
                                                        const std::vector<double>& grid) {
    using namespace kinds;
    DifferencePair pair = which == RatioCheckKind::AP4_vs_I   ? DifferencePair(A, P4)
                          : which == RatioCheckKind::P5G_vs_J ? DifferencePair(P5, G)
                                                              : DifferencePair(P5, A);
    const DivergenceTag tag = which == RatioCheckKind::AP4_vs_I   ? DivergenceTag::JensenShannonI
                              : which == RatioCheckKind::P5G_vs_J ? DivergenceTag::JDivergence
                                                                  : DivergenceTag::AGMeanT;
    for (const double x : grid)
        if (!(x > 0) || !std::isfinite(x))
            throw std::domain_error("ratio_monotonicity_check: grid must be positive");
    auto ratio = [&](double x) {
        return second_derivative_closed(pair, x) /
               divergence_generator_second_derivative(tag, x);
    };
    std::vector<double> xs = grid;
    std::sort(xs.begin(), xs.end());
    RatioMonotonicityReport rep;
    rep.which = which == RatioCheckKind::AP4_vs_I   ? "AP4_vs_I"
                : which == RatioCheckKind::P5G_vs_J ? "P5G_vs_J"
                                                    : "P5A_vs_T";
    rep.sign_pattern_ok = true;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double a = xs[i], b = xs[i + 1];
        if (b <= 1.0 && !(ratio(a) < ratio(b))) rep.sign_pattern_ok = false;
        if (a >= 1.0 && !(ratio(a) > ratio(b))) rep.sign_pattern_ok = false;
    }
    rep.ratio_below = ratio(1.0 - 1e-5);
    rep.ratio_above = ratio(1.0 + 1e-5);
    rep.limit_estimate = 0.5 * (rep.ratio_below + rep.ratio_above);
    return rep;
}

// ------------------------------------------------------------- file ingestion
//
// CSV: one probability per line, blank lines and '#' comments ignored.
// JSON: a numeric array. The format is sniffed from the first non-space byte.
inline Distribution read_distribution_file(const std::string& path, bool normalize,
                                           bool smooth, double tol = 1e-9) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read distribution file: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t i = 0;
    while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
    std::vector<double> values;
    if (i < content.size() && content[i] == '[') {
        nlohmann::json j = nlohmann::json::parse(content, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw parse_error("distribution JSON must be a numeric array: " + path);
        for (const auto& v : j) {
            if (!v.is_number()) throw parse_error("distribution JSON must be numeric: " + path);
            values.push_back(v.get<double>());
        }
    } else {
        std::istringstream ls(content);
        std::string line;
        while (std::getline(ls, line)) {
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') continue;
            try {
                std::size_t pos = 0;
                const double v = std::stod(line.substr(b), &pos);
                const std::size_t rest = line.find_first_not_of(" \t\r", b + pos);
                if (rest != std::string::npos && line[rest] != '#')
                    throw parse_error("bad distribution line: " + line);
                values.push_back(v);
            } catch (const std::invalid_argument&) {
                throw parse_error("bad distribution line: " + line);
            } catch (const std::out_of_range&) {
                throw parse_error("distribution value out of range: " + line);
            }
        }
    }
    return Distribution::make(std::move(values), normalize, smooth, tol);
}

} // namespace meanineq
