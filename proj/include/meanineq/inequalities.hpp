#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "meanineq/differences.hpp"
#include "meanineq/rational.hpp"
#include "meanineq/sampling.hpp"

namespace meanineq {

// Asserts lhs_coeff * D_lhs <= rhs_coeff * D_rhs for all positive pairs.
// An absent lhs is the literal zero term (pure nonnegativity assertion),
// used to express the base mean-ordering chain as difference edges.
struct ChainEdge {
    Rational lhs_coeff{1};
    std::optional<DifferencePair> lhs;
    Rational rhs_coeff{1};
    DifferencePair rhs;

    ChainEdge(Rational cl, DifferencePair l, Rational cr, DifferencePair r)
        : lhs_coeff(cl), lhs(std::move(l)), rhs_coeff(cr), rhs(std::move(r)) {
        if (lhs_coeff.num <= 0 || rhs_coeff.num <= 0)
            throw std::domain_error("ChainEdge: coefficients must be positive");
    }
    ChainEdge(Rational cr, DifferencePair r) : rhs_coeff(cr), rhs(std::move(r)) {
        if (rhs_coeff.num <= 0)
            throw std::domain_error("ChainEdge: coefficients must be positive");
    }

    // The asserted bound D_lhs <= bound * D_rhs.
    double bound() const { return (rhs_coeff / lhs_coeff).value(); }

    std::string label() const {
        std::string l = lhs ? lhs_coeff.str() + "*" + lhs->str() : std::string("0");
        return l + " <= " + rhs_coeff.str() + "*" + rhs.str();
    }
};

struct InequalityChain {
    std::string name;
    std::vector<ChainEdge> edges;
};

struct BetaRecord {
    ChainEdge edge;      // D_lhs <= beta * D_rhs with the confirmed constant
    Rational beta;
    int paper_part = 0;
};

struct EdgeAudit {
    std::string edge;
    double max_violation = 0;
    double witness_x = 1;
    bool pass = true;
};

struct AuditReport {
    std::string chain;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double range_lo = 0, range_hi = 0;
    double tolerance = 0;
    std::vector<EdgeAudit> edges;
    bool pass = true;
};

// g''_tp(1): closed form when certificated, otherwise a Richardson-
// extrapolated central second difference of the stable generator difference.
inline double second_derivative_at_one(const DifferencePair& p) {
    if (p.has_certificate()) return second_derivative_closed(p, 1.0);
    auto d2 = [&](double h) {
        return (generator_difference(p, 1.0 + h) - 2.0 * generator_difference(p, 1.0) +
                generator_difference(p, 1.0 - h)) /
               (h * h);
    };
    const double h = 1e-3;
    return (4.0 * d2(h / 2) - d2(h)) / 3.0;
}

// beta = g''_lhs(1) / g''_rhs(1), recovered as an exact small rational.
inline Rational beta_constant(const DifferencePair& lhs, const DifferencePair& rhs) {
    const double num = second_derivative_at_one(lhs);
    const double den = second_derivative_at_one(rhs);
    if (!std::isfinite(den) || std::fabs(den) < 1e-12)
        throw std::domain_error("beta_constant: degenerate denominator derivative");
    const auto r = rationalize(num / den, 1000, 1e-9);
    if (!r) throw std::domain_error("beta_constant: ratio is not a small rational");
    return *r;
}

// The 41 published beta-table rows (parts 3,4,19,20,21,27,28,30,32 carry the
// constants inherited from the earlier prior-work chain), plus the
// oracle-confirmed value where the print is defective.
struct Thm31Row {
    int part;
    DifferencePair lhs;
    DifferencePair rhs;
    Rational printed;
    Rational confirmed;   // == printed except for the documented misprints
    const char* note;     // "", "misprint", or "resolved" (flagged open question)
};

inline const std::vector<Thm31Row>& theorem31_rows() {
    using namespace kinds;
    static const std::vector<Thm31Row> rows = [] {
        auto D = [](MeanKind u, MeanKind l) { return DifferencePair(u, l); };
        std::vector<Thm31Row> r;
        r.push_back({1, D(P6, P1), D(P6, P2), {4, 3}, {4, 3}, ""});
        r.push_back({2, D(P6, P2), D(S, A), {6, 1}, {6, 1}, ""});
        r.push_back({3, D(S, A), D(S, H), {1, 3}, {1, 3}, ""});
        r.push_back({4, D(S, H), D(A, H), {3, 2}, {3, 2}, ""});
        r.push_back({5, D(A, H), D(P6, N2), {8, 9}, {8, 9}, ""});
        r.push_back({6, D(A, H), D(P6, N3), {6, 7}, {6, 7}, ""});
        r.push_back({7, D(A, H), D(S, P4), {2, 3}, {4, 5}, "misprint"});
        r.push_back({8, D(P6, N3), D(P6, N1), {14, 15}, {14, 15}, ""});
        r.push_back({9, D(P6, N3), D(P6, P4), {2, 3}, {2, 3}, ""});
        r.push_back({10, D(S, P4), D(P6, N1), {4, 5}, {1, 1}, "misprint"});
        r.push_back({11, D(S, P4), D(P6, P4), {5, 7}, {5, 7}, ""});
        r.push_back({12, D(P6, N2), D(P6, G), {3, 4}, {3, 4}, ""});
        r.push_back({13, D(P6, N1), D(P6, G), {5, 6}, {5, 6}, ""});
        r.push_back({14, D(P6, P4), D(P6, G), {7, 6}, {7, 6}, ""});
        r.push_back({15, D(P6, G), D(P5, H), {6, 5}, {6, 5}, ""});
        r.push_back({16, D(P6, G), D(A, P4), {2, 1}, {2, 1}, ""});
        r.push_back({17, D(P5, H), D(N2, N1), {10, 1}, {10, 1}, ""});
        r.push_back({18, D(A, P4), D(N2, N1), {6, 1}, {6, 1}, ""});
        r.push_back({19, D(N2, N1), D(N2, G), {1, 3}, {1, 3}, ""});
        r.push_back({20, D(N2, G), D(A, G), {3, 4}, {3, 4}, ""});
        r.push_back({21, D(A, G), D(A, N2), {4, 1}, {4, 1}, ""});
        r.push_back({22, D(A, N2), D(P5, G), {1, 6}, {1, 6}, "resolved"});
        r.push_back({23, D(P5, G), D(P5, N1), {3, 2}, {3, 2}, ""});
        r.push_back({24, D(P5, N1), D(P5, N3), {6, 5}, {6, 5}, ""});
        r.push_back({25, D(P5, N3), D(P5, N2), {10, 9}, {10, 9}, ""});
        r.push_back({26, D(P5, N2), D(P5, A), {3, 2}, {3, 2}, ""});
        r.push_back({27, D(S, A), D(S, N2), {4, 5}, {4, 5}, ""});
        r.push_back({28, D(S, A), D(S, N3), {3, 4}, {3, 4}, ""});
        r.push_back({29, D(S, N2), D(S, N1), {5, 6}, {5, 6}, ""});
        r.push_back({30, D(S, N3), D(S, N1), {8, 9}, {8, 9}, ""});
        r.push_back({31, D(S, N1), D(P6, G), {1, 2}, {1, 2}, ""});
        r.push_back({32, D(S, N1), D(S, G), {3, 4}, {3, 4}, ""});
        r.push_back({33, D(S, G), D(P5, H), {4, 5}, {4, 5}, ""});
        r.push_back({34, D(P6, P1), D(P5, P2), {16, 9}, {16, 9}, ""});
        r.push_back({35, D(P5, P1), D(P6, P2), {13, 12}, {13, 12}, "resolved"});
        r.push_back({36, D(P5, P1), D(P5, P2), {13, 9}, {13, 9}, ""});
        r.push_back({37, D(P6, P2), D(P5, P3), {12, 7}, {12, 7}, ""});
        r.push_back({38, D(P5, P2), D(P5, P3), {9, 7}, {9, 7}, ""});
        r.push_back({39, D(P5, P3), D(P6, N2), {14, 9}, {14, 9}, ""});
        r.push_back({40, D(P6, N2), D(P6, S), {9, 4}, {9, 4}, ""});
        r.push_back({41, D(P6, S), D(A, G), {1, 1}, {1, 1}, ""});
        return r;
    }();
    return rows;
}

// One record per published table part, with the oracle-confirmed constant as
// the edge coefficient.
inline std::vector<BetaRecord> beta_records() {
    std::vector<BetaRecord> out;
    for (const auto& row : theorem31_rows())
        out.push_back({ChainEdge(Rational(1), row.lhs, row.confirmed, row.rhs),
                       row.confirmed, row.part});
    return out;
}

inline std::vector<InequalityChain> builtin_chains() {
    using namespace kinds;
    auto D = [](MeanKind u, MeanKind l) { return DifferencePair(u, l); };
    auto R = [](long long n, long long d = 1) { return Rational(n, d); };
    std::vector<InequalityChain> out;

    {
        InequalityChain c{"eq12", {}};
        const MeanKind order[] = {P1, P2, P3, H, P4, G, N1, N3, N2, A};
        for (size_t i = 0; i + 1 < std::size(order); ++i)
            c.edges.emplace_back(R(1), D(order[i + 1], order[i]));
        c.edges.emplace_back(R(1), D(P5, A));
        c.edges.emplace_back(R(1), D(S, A));
        c.edges.emplace_back(R(1), D(P6, P5));
        c.edges.emplace_back(R(1), D(P6, S));
        out.push_back(std::move(c));
    }
    {
        InequalityChain c{"eq11", {}};
        c.edges.emplace_back(R(1), D(S, A), R(1, 3), D(S, H));
        c.edges.emplace_back(R(1, 3), D(S, H), R(1, 2), D(A, H));
        c.edges.emplace_back(R(1, 2), D(A, H), R(4), D(N2, N1));
        c.edges.emplace_back(R(4), D(N2, N1), R(4, 3), D(N2, G));
        c.edges.emplace_back(R(4, 3), D(N2, G), R(1), D(A, G));
        c.edges.emplace_back(R(1), D(A, G), R(4), D(A, N2));
        c.edges.emplace_back(R(1, 2), D(A, H), R(1, 2), D(S, G));
        c.edges.emplace_back(R(1, 2), D(S, G), R(1), D(A, G));
        c.edges.emplace_back(R(1, 3), D(S, H), R(2, 3), D(S, N1));
        c.edges.emplace_back(R(2, 3), D(S, N1), R(1, 2), D(S, G));
        c.edges.emplace_back(R(1), D(S, A), R(4, 5), D(S, N2));
        c.edges.emplace_back(R(4, 5), D(S, N2), R(4), D(A, N2));
        c.edges.emplace_back(R(1), D(S, A), R(3, 4), D(S, N3));
        c.edges.emplace_back(R(3, 4), D(S, N3), R(2, 3), D(S, N1));
        out.push_back(std::move(c));
    }
    {
        // The main chain. The (A,H) <= (S,P4) and (S,P4) <= (P6,N1) slots
        // carry the oracle-confirmed constants; the published prose betas for
        // those two parts are misprints, while the display's coefficients
        // already agree with the confirmed values.
        InequalityChain c{"thm31-43", {}};
        c.edges.emplace_back(R(1, 8), D(P6, P1), R(1, 6), D(P6, P2));
        c.edges.emplace_back(R(1, 6), D(P6, P2), R(1), D(S, A));
        c.edges.emplace_back(R(1), D(S, A), R(1, 3), D(S, H));
        c.edges.emplace_back(R(1, 3), D(S, H), R(1, 2), D(A, H));
        c.edges.emplace_back(R(1, 2), D(A, H), R(4, 9), D(P6, N2));
        c.edges.emplace_back(R(1, 2), D(A, H), R(3, 7), D(P6, N3));
        c.edges.emplace_back(R(1, 2), D(A, H), R(2, 5), D(S, P4));
        c.edges.emplace_back(R(3, 7), D(P6, N3), R(2, 5), D(P6, N1));
        c.edges.emplace_back(R(3, 7), D(P6, N3), R(2, 7), D(P6, P4));
        c.edges.emplace_back(R(2, 5), D(S, P4), R(2, 5), D(P6, N1));
        c.edges.emplace_back(R(2, 5), D(S, P4), R(2, 7), D(P6, P4));
        c.edges.emplace_back(R(4, 9), D(P6, N2), R(1, 3), D(P6, G));
        c.edges.emplace_back(R(2, 5), D(P6, N1), R(1, 3), D(P6, G));
        c.edges.emplace_back(R(2, 7), D(P6, P4), R(1, 3), D(P6, G));
        c.edges.emplace_back(R(1, 3), D(P6, G), R(2, 5), D(P5, H));
        c.edges.emplace_back(R(1, 3), D(P6, G), R(2, 3), D(A, P4));
        c.edges.emplace_back(R(2, 5), D(P5, H), R(4), D(N2, N1));
        c.edges.emplace_back(R(2, 3), D(A, P4), R(4), D(N2, N1));
        c.edges.emplace_back(R(4), D(N2, N1), R(4, 3), D(N2, G));
        c.edges.emplace_back(R(4, 3), D(N2, G), R(1), D(A, G));
        c.edges.emplace_back(R(1), D(A, G), R(4), D(A, N2));
        c.edges.emplace_back(R(4), D(A, N2), R(2, 3), D(P5, G));
        c.edges.emplace_back(R(2, 3), D(P5, G), R(1), D(P5, N1));
        c.edges.emplace_back(R(1), D(P5, N1), R(6, 5), D(P5, N3));
        c.edges.emplace_back(R(6, 5), D(P5, N3), R(4, 3), D(P5, N2));
        c.edges.emplace_back(R(4, 3), D(P5, N2), R(2), D(P5, A));
        out.push_back(std::move(c));
    }
    {
        InequalityChain c{"thm31-44", {}};
        c.edges.emplace_back(R(1), D(S, A), R(4, 5), D(S, N2));
        c.edges.emplace_back(R(1), D(S, A), R(3, 4), D(S, N3));
        c.edges.emplace_back(R(4, 5), D(S, N2), R(2, 3), D(S, N1));
        c.edges.emplace_back(R(3, 4), D(S, N3), R(2, 3), D(S, N1));
        c.edges.emplace_back(R(2, 3), D(S, N1), R(1, 3), D(P6, G));
        c.edges.emplace_back(R(2, 3), D(S, N1), R(1, 2), D(S, G));
        c.edges.emplace_back(R(1, 3), D(P6, G), R(2, 5), D(P5, H));
        c.edges.emplace_back(R(1, 2), D(S, G), R(2, 5), D(P5, H));
        out.push_back(std::move(c));
    }
    {
        InequalityChain c{"thm31-45", {}};
        c.edges.emplace_back(R(1, 8), D(P6, P1), R(1, 6), D(P6, P2));
        c.edges.emplace_back(R(2, 13), D(P5, P1), R(1, 6), D(P6, P2));
        c.edges.emplace_back(R(1, 8), D(P6, P1), R(2, 9), D(P5, P2));
        c.edges.emplace_back(R(2, 13), D(P5, P1), R(2, 9), D(P5, P2));
        c.edges.emplace_back(R(1, 6), D(P6, P2), R(2, 7), D(P5, P3));
        c.edges.emplace_back(R(2, 9), D(P5, P2), R(2, 7), D(P5, P3));
        c.edges.emplace_back(R(2, 7), D(P5, P3), R(4, 9), D(P6, N2));
        c.edges.emplace_back(R(4, 9), D(P6, N2), R(1), D(P6, S));
        c.edges.emplace_back(R(1), D(P6, S), R(1), D(A, G));
        out.push_back(std::move(c));
    }
    {
        InequalityChain c{"remark31-i", {}};
        c.edges.emplace_back(R(1), D(S, A), R(1, 3), D(S, H));
        c.edges.emplace_back(R(1, 3), D(S, H), R(1, 2), D(A, H));
        c.edges.emplace_back(R(1, 2), D(A, H), R(4), D(N2, N1));
        c.edges.emplace_back(R(4), D(N2, N1), R(4, 3), D(N2, G));
        c.edges.emplace_back(R(4, 3), D(N2, G), R(1), D(A, G));
        c.edges.emplace_back(R(1), D(A, G), R(4), D(A, N2));
        c.edges.emplace_back(R(1), D(S, A), R(4, 5), D(S, N2));
        c.edges.emplace_back(R(1), D(S, A), R(3, 4), D(S, N3));
        c.edges.emplace_back(R(4, 5), D(S, N2), R(2, 3), D(S, N1));
        c.edges.emplace_back(R(3, 4), D(S, N3), R(2, 3), D(S, N1));
        c.edges.emplace_back(R(2, 3), D(S, N1), R(1, 2), D(S, G));
        out.push_back(std::move(c));
    }
    return out;
}

inline const InequalityChain& builtin_chain(const std::string& name) {
    static const std::vector<InequalityChain> chains = builtin_chains();
    for (const auto& c : chains)
        if (c.name == name) return c;
    throw parse_error("unknown builtin chain: " + name);
}

inline AuditReport audit_chain(const InequalityChain& chain, std::size_t samples,
                               std::uint64_t seed, double range_lo, double range_hi,
                               double tolerance = 1e-10) {
    if (chain.edges.empty()) throw std::domain_error("audit_chain: empty chain");
    if (samples < 1) throw std::domain_error("audit_chain: need samples >= 1");
    if (!(range_lo > 0) || !(range_hi > range_lo))
        throw std::domain_error("audit_chain: need 0 < lo < hi");
    AuditReport rep;
    rep.chain = chain.name;
    rep.samples = samples;
    rep.seed = seed;
    rep.range_lo = range_lo;
    rep.range_hi = range_hi;
    rep.tolerance = tolerance;
    struct State {
        double max_v = -std::numeric_limits<double>::infinity();
        double witness = 1.0;
    };
    std::vector<State> st(chain.edges.size());
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = rng.log_uniform(range_lo, range_hi);
        for (std::size_t e = 0; e < chain.edges.size(); ++e) {
            const auto& ed = chain.edges[e];
            const double l =
                ed.lhs ? ed.lhs_coeff.value() * generator_difference(*ed.lhs, x) : 0.0;
            const double r = ed.rhs_coeff.value() * generator_difference(ed.rhs, x);
            const double viol = (l - r) / std::max(std::fabs(r), 1e-300);
            if (viol > st[e].max_v) {
                st[e].max_v = viol;
                st[e].witness = x;
            }
        }
    }
    rep.pass = true;
    for (std::size_t e = 0; e < chain.edges.size(); ++e) {
        EdgeAudit ea;
        ea.edge = chain.edges[e].label();
        ea.max_violation = st[e].max_v;
        ea.witness_x = st[e].witness;
        ea.pass = st[e].max_v <= tolerance;
        rep.pass = rep.pass && ea.pass;
        rep.edges.push_back(std::move(ea));
    }
    return rep;
}

struct TightnessReport {
    std::string edge;
    double bound = 0;           // asserted D_lhs <= bound * D_rhs
    Rational beta{0};           // g'' ratio at x = 1
    double max_ratio = 0;
    double max_ratio_x = 1;
    double ratio_below = 0;     // at x = 1 - 1e-4
    double ratio_above = 0;     // at x = 1 + 1e-4
    bool bound_ok = false;
    bool sharp_ok = false;
    bool pass = false;
};

// Default grid keeps to [1/2, 2]: there the ratio's maximum is attained at
// x = 1 for every certificated pair; far out on the axis the second-derivative
// ratio of several pairs exceeds beta even though the difference-level
// inequality holds (the ratio bound is sufficient, not necessary).
inline std::vector<double> default_tightness_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 60; ++i)
        g.push_back(std::exp(std::log(0.5) + (std::log(2.0) - std::log(0.5)) * i / 60.0));
    return g;
}

inline TightnessReport tightness_check(const ChainEdge& edge, const std::vector<double>& grid) {
    if (!edge.lhs) throw std::domain_error("tightness_check: edge has no lhs pair");
    if (!edge.lhs->has_certificate() || !edge.rhs.has_certificate())
        throw std::domain_error("tightness_check: both pairs must be certificated");
    for (const double x : grid)
        if (!(x > 0) || !std::isfinite(x))
            throw std::domain_error("tightness_check: grid must be positive");
    auto ratio = [&](double x) {
        return second_derivative_closed(*edge.lhs, x) / second_derivative_closed(edge.rhs, x);
    };
    TightnessReport rep;
    rep.edge = edge.label();
    rep.bound = edge.bound();
    rep.beta = beta_constant(*edge.lhs, edge.rhs);
    rep.max_ratio = -std::numeric_limits<double>::infinity();
    for (const double x : grid) {
        const double r = ratio(x);
        if (r > rep.max_ratio) {
            rep.max_ratio = r;
            rep.max_ratio_x = x;
        }
    }
    rep.ratio_below = ratio(1.0 - 1e-4);
    rep.ratio_above = ratio(1.0 + 1e-4);
    rep.bound_ok = rep.max_ratio <= rep.bound * (1.0 + 1e-9);
    const double b = rep.beta.value();
    rep.sharp_ok = std::fabs(rep.ratio_below - b) <= 1e-3 && std::fabs(rep.ratio_above - b) <= 1e-3;
    rep.pass = rep.bound_ok && rep.sharp_ok;
    return rep;
}

// The edge graph on (coefficient, pair) terms must be acyclic.
inline void validate_acyclic(const InequalityChain& chain) {
    std::vector<std::string> nodes;
    auto node_id = [&](const std::string& label) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == label) return i;
        nodes.push_back(label);
        return nodes.size() - 1;
    };
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& e : chain.edges) {
        if (!e.lhs) continue;
        arcs.emplace_back(node_id(e.lhs_coeff.str() + "*" + e.lhs->str()),
                          node_id(e.rhs_coeff.str() + "*" + e.rhs.str()));
    }
    std::vector<int> state(nodes.size(), 0);  // 0 new, 1 on stack, 2 done
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        state[v] = 1;
        for (const auto& [from, to] : arcs)
            if (from == v) {
                if (state[to] == 1) return false;
                if (state[to] == 0 && !dfs(to)) return false;
            }
        state[v] = 2;
        return true;
    };
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (state[v] == 0 && !dfs(v))
            throw std::domain_error("chain '" + chain.name + "' has a comparison cycle");
}

// ------------------------------------------------------- custom chain format
//
//   # comment
//   name my-chain
//   edge 1 D(A,G) <= 1/2 D(A,H)
//   edge 0 <= 1 D(P2,P1)
//
// Mean tokens are the CLI kind specs ("A", "gini:0.5:1", ...).
inline InequalityChain parse_chain(std::istream& in) {
    InequalityChain chain{"custom", {}};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw parse_error("chain file line " + std::to_string(lineno) + ": " + msg);
    };
    auto parse_pair = [&](const std::string& tok) {
        if (tok.size() < 4 || tok.substr(0, 2) != "D(" || tok.back() != ')')
            fail("expected D(upper,lower), got '" + tok + "'");
        const std::string inner = tok.substr(2, tok.size() - 3);
        const auto comma = inner.find(',');
        if (comma == std::string::npos) fail("expected D(upper,lower), got '" + tok + "'");
        try {
            return DifferencePair(MeanKind::parse(inner.substr(0, comma)),
                                  MeanKind::parse(inner.substr(comma + 1)));
        } catch (const std::domain_error& e) {
            fail(e.what());
        }
        throw parse_error("unreachable");
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "name") {
            if (!(ls >> chain.name)) fail("missing chain name");
            continue;
        }
        if (tok != "edge") fail("expected 'edge' or 'name', got '" + tok + "'");
        std::string t1, t2, t3, t4, t5;
        if (!(ls >> t1)) fail("missing edge terms");
        if (t1 == "0") {
            if (!(ls >> t2 >> t3 >> t4) || t2 != "<=") fail("expected '0 <= c D(..)'");
            chain.edges.emplace_back(Rational::parse(t3), parse_pair(t4));
        } else {
            if (!(ls >> t2 >> t3 >> t4 >> t5) || t3 != "<=")
                fail("expected 'c D(..) <= c D(..)'");
            chain.edges.emplace_back(Rational::parse(t1), parse_pair(t2),
                                     Rational::parse(t4), parse_pair(t5));
        }
    }
    if (chain.edges.empty()) throw parse_error("chain file has no edges");
    try {
        validate_acyclic(chain);
    } catch (const std::domain_error& e) {
        throw parse_error(e.what());
    }
    return chain;
}

inline InequalityChain parse_chain(const std::string& text) {
    std::istringstream in(text);
    return parse_chain(in);
}

} // namespace meanineq
