#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "meanineq/errors.hpp"
#include "meanineq/hpoly_tables.hpp"
#include "meanineq/poly.hpp"

namespace meanineq {

// Polynomial in x with exponents that are nonnegative multiples of 1/2,
// keyed by twice the exponent.
struct HalfPowerPoly {
    std::map<long, Rat> terms;  // twice_exponent -> coefficient

    void add(long twice_exponent, const Rat& coeff) {
        if (twice_exponent < 0)
            throw std::domain_error("HalfPowerPoly: negative exponent");
        auto [it, inserted] = terms.emplace(twice_exponent, coeff);
        if (!inserted) it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
    long max_twice_exponent() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

// x = t^2: exponent e maps to degree 2e, i.e. the twice-exponent key.
inline Poly substitute_t_squared(const HalfPowerPoly& p) {
    std::vector<Rat> c(static_cast<size_t>(p.max_twice_exponent()) + 1, Rat(0));
    for (const auto& [k, v] : p.terms) c[static_cast<size_t>(k)] = v;
    return Poly(std::move(c));
}

inline std::vector<RootInterval> real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
    return isolate_real_roots(p);
}

enum class PositivityVerdict { StrictlyPositive, NonnegativeZeroOnlyAtOne, Indefinite };

inline const char* to_string(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::StrictlyPositive: return "strictly-positive-on-positive-axis";
        case PositivityVerdict::NonnegativeZeroOnlyAtOne: return "nonnegative-with-zeros-only-at-one";
        case PositivityVerdict::Indefinite: return "indefinite";
    }
    return "?";
}

struct PositivityCertificate {
    Poly poly;
    std::vector<RootInterval> roots;  // all real roots
    Rat value_at_one;
    PositivityVerdict verdict = PositivityVerdict::Indefinite;
};

// The certification argument: isolate real roots exactly; with no roots on the
// positive axis the sign is constant there and one sample (t=1) decides.
// Roots on the positive axis are admissible only at t=1 with even
// multiplicity.
inline PositivityCertificate certify_positive(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("certify_positive: zero polynomial");
    PositivityCertificate cert;
    cert.poly = p;
    cert.value_at_one = p.eval(Rat(1));
    if (p.degree() > 0) cert.roots = isolate_real_roots(p);

    Poly q = p;
    int mult_at_one = 0;
    while (q.degree() > 0 && q.eval(Rat(1)) == 0) {
        q = q.deflate(Rat(1));
        ++mult_at_one;
    }
    const int other_positive = count_positive_roots(q);
    const bool rest_positive_at_one = q.eval(Rat(1)) > 0;

    if (other_positive == 0 && mult_at_one == 0)
        cert.verdict = rest_positive_at_one ? PositivityVerdict::StrictlyPositive
                                            : PositivityVerdict::Indefinite;
    else if (other_positive == 0 && mult_at_one % 2 == 0 && rest_positive_at_one)
        cert.verdict = PositivityVerdict::NonnegativeZeroOnlyAtOne;
    else
        cert.verdict = PositivityVerdict::Indefinite;
    return cert;
}

enum class Ordering { Less, Equal, Greater };

// For positive a, b: a > b iff a^2 - b^2 > 0 (a - b = (a^2-b^2)/(a+b)).
// The verdict from the squared-difference sign must agree with the direct
// comparison; a disagreement means the caller's sign was wrong.
inline Ordering square_difference_gate(double a, double b, int squared_difference_sign) {
    if (!(a > 0) || !(b > 0))
        throw std::domain_error("square_difference_gate: values must be positive");
    const Ordering from_sign = squared_difference_sign > 0   ? Ordering::Greater
                               : squared_difference_sign < 0 ? Ordering::Less
                                                             : Ordering::Equal;
    const Ordering direct = a > b ? Ordering::Greater : a < b ? Ordering::Less : Ordering::Equal;
    if (from_sign != direct)
        throw std::domain_error("square_difference_gate: sign disagrees with direct comparison");
    return from_sign;
}

namespace detail {

template <size_t N>
inline HalfPowerPoly half_power_from_table(const std::array<long, N>& coeffs) {
    HalfPowerPoly hp;
    for (size_t i = 0; i < N; ++i)
        if (coeffs[i] != 0) hp.add(static_cast<long>(i), Rat(coeffs[i]));
    return hp;
}

// (u-1)^e (u+1)^f * cofactor, all as u-polynomials (u = sqrt x): the factored
// positivity displays behind the builtin chain constants.
inline Poly factored_uprod(int e_minus, int e_plus, std::initializer_list<long> cof,
                           long scale = 1) {
    Poly p = Poly::constant(Rat(scale));
    const Poly um1({Rat(-1), Rat(1)});
    const Poly up1({Rat(1), Rat(1)});
    for (int i = 0; i < e_minus; ++i) p = p * um1;
    for (int i = 0; i < e_plus; ++i) p = p * up1;
    std::vector<Rat> w;
    for (long v : cof) w.emplace_back(v);
    return p * Poly(std::move(w));
}

} // namespace detail

// Builtin polynomials: the three root-isolation witnesses h1/h2/h3 from the
// convexity certificates, plus the factored proof polynomials behind the
// builtin chains, in their t-substituted form.
inline Poly builtin_polynomial(const std::string& name) {
    using detail::factored_uprod;
    if (name == "h1") return substitute_t_squared(detail::half_power_from_table(tables::h1));
    if (name == "h2") return substitute_t_squared(detail::half_power_from_table(tables::h2));
    if (name == "h3") return substitute_t_squared(detail::half_power_from_table(tables::h3));
    static const std::map<std::string, Poly> thm31 = [] {
        std::map<std::string, Poly> m;
        m["thm31-p2"]  = factored_uprod(4, 4, {2, 0, 4, 0, 3, 0, 4, 0, 2});
        m["thm31-p5"]  = factored_uprod(4, 0, {17, 4, 38, 4, 17});
        m["thm31-p7"]  = factored_uprod(6, 0, {7, 70, 201, 340, 201, 70, 7});
        m["thm31-p10"] = factored_uprod(4, 0, {1, -4, 8, 20, 78, 20, 8, -4, 1});
        m["thm31-p11"] = factored_uprod(4, 0, {1, 8, 94, 264, 386, 264, 94, 8, 1}, 2);
        m["thm31-p12"] = factored_uprod(4, 0, {1, 2, 1, 2, 1});
        m["thm31-p17"] = factored_uprod(4, 0, {1, 24, 72, 120, 126, 120, 72, 24, 1});
        m["thm31-p18"] = factored_uprod(4, 0, {1, 2, 0, 2, 1}, 2);
        m["thm31-p25"] = factored_uprod(4, 0, {7, 22, 32, 22, 7}, 2);
        m["thm31-p26"] = factored_uprod(4, 0, {1, 4, 1}) * Poly({Rat(1), Rat(0), Rat(1)});
        {
            const Poly s({Rat(721), Rat(3116), Rat(4806), Rat(3116), Rat(721)});
            m["thm31-p29"] = factored_uprod(4, 0, {1}) * s * s;
        }
        m["thm31-p31"] = factored_uprod(4, 4, {1});
        m["thm31-p33"] = factored_uprod(4, 0, {7, 8, 64, 120, 242, 120, 64, 8, 7}, 2);
        m["thm31-p40"] = factored_uprod(
            4, 0, {71, 2316, 4090, 11180, 12021, 11960, 6004, 11960, 12021, 11180, 4090, 2316, 71},
            4);
        m["thm31-p41"] = factored_uprod(6, 2, {1});
        return m;
    }();
    const auto it = thm31.find(name);
    if (it == thm31.end()) throw parse_error("unknown builtin polynomial: " + name);
    return it->second;
}

// ------------------------------------------------------------------ parsing
//
// Literal format: terms "c", "c*t", "c*t^5", "x^(9/2)", "-27x^4", with
// rational coefficients "p/q". Variable t has integer exponents; variable x
// admits half-integer exponents (read as a HalfPowerPoly before the t = x^2
// substitution).
namespace detail {

struct PolyParser {
    const std::string& s;
    size_t i = 0;
    char var = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    long parse_long() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw parse_error("polynomial literal: expected number");
        try {
            return std::stol(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw parse_error("polynomial literal: number out of range");
        }
    }
    Rat parse_rational_or(const Rat& fallback, bool* found) {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
            *found = false;
            return fallback;
        }
        long num = parse_long();
        long den = 1;
        if (eat('/')) den = parse_long();
        *found = true;
        return Rat(num, den);
    }

    HalfPowerPoly parse() {
        HalfPowerPoly out;
        skip();
        if (i >= s.size()) throw parse_error("empty polynomial literal");
        while (true) {
            skip();
            if (i >= s.size()) break;
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            skip();
            bool have_coeff = false;
            Rat coeff = parse_rational_or(Rat(1), &have_coeff);
            bool have_var = false;
            long twice_exp = 0;
            eat('*');
            skip();
            if (i < s.size() && (s[i] == 't' || s[i] == 'x')) {
                if (var == 0) var = s[i];
                else if (var != s[i]) throw parse_error("polynomial literal mixes t and x");
                ++i;
                have_var = true;
                twice_exp = 2;  // variable alone: exponent 1
                if (eat('^')) twice_exp = parse_exponent();
            }
            if (!have_coeff && !have_var)
                throw parse_error("polynomial literal: unexpected text at '" + s.substr(i) + "'");
            out.add(twice_exp, sign > 0 ? coeff : Rat(-coeff));
        }
        return out;
    }

    long parse_exponent() {  // returns twice the exponent
        const bool paren = eat('(');
        const bool brace = !paren && eat('{');
        long num = parse_long();
        long twice = 2 * num;
        if (eat('/')) {
            if (parse_long() != 2)
                throw parse_error("polynomial literal: only half-integer exponents supported");
            twice = num;
            if (var == 't') throw parse_error("polynomial literal: t takes integer exponents");
        }
        if (paren && !eat(')')) throw parse_error("polynomial literal: missing ')'");
        if (brace && !eat('}')) throw parse_error("polynomial literal: missing '}'");
        return twice;
    }
};

} // namespace detail

// Parses a literal; x-polynomials are substituted (x = t^2) so the result is
// always a plain polynomial in t.
inline Poly parse_polynomial(const std::string& text) {
    detail::PolyParser p(text);
    HalfPowerPoly hp = p.parse();
    if (p.var == 'x') return substitute_t_squared(hp);
    for (const auto& [k, v] : hp.terms) {
        (void)v;
        if (k % 2 != 0) throw parse_error("t-polynomial with half exponent");
    }
    std::vector<Rat> c(static_cast<size_t>(hp.max_twice_exponent() / 2) + 1, Rat(0));
    for (const auto& [k, v] : hp.terms) c[static_cast<size_t>(k / 2)] = v;
    return Poly(std::move(c));
}

// Half-power literal kept as such (no substitution), for callers that want
// the x-form.
inline HalfPowerPoly parse_half_power(const std::string& text) {
    detail::PolyParser p(text);
    return p.parse();
}

} // namespace meanineq
