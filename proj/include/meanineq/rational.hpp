#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "meanineq/errors.hpp"

namespace meanineq {

// Exact small rational on int64; big enough for chain coefficients and the
// beta table (denominators <= 1000 by construction).
struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                size_t pos = 0;
                const long long n = std::stoll(s, &pos);
                if (pos != s.size()) throw parse_error("bad rational: " + s);
                return Rational(n);
            }
            size_t p1 = 0, p2 = 0;
            const long long n = std::stoll(s.substr(0, slash), &p1);
            const long long d = std::stoll(s.substr(slash + 1), &p2);
            if (p1 != slash || p2 != s.size() - slash - 1)
                throw parse_error("bad rational: " + s);
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational: " + s);
        } catch (const std::out_of_range&) {
            throw parse_error("rational out of range: " + s);
        }
    }
};

// Continued-fraction rationalization: best convergent p/q with q <= max_den.
// Returns nothing when no convergent reproduces v within rel_tol.
inline std::optional<Rational> rationalize(double v, long long max_den = 1000,
                                           double rel_tol = 1e-9) {
    if (!std::isfinite(v)) return std::nullopt;
    const double sign = v < 0 ? -1.0 : 1.0;
    double y = std::fabs(v);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(y);
        if (fl > 9e17) break;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        if (q2 > max_den || p2 < 0 || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::fabs(approx - std::fabs(v)) <= rel_tol * std::max(1.0, std::fabs(v)))
            return Rational(static_cast<long long>(sign) * p1, q1);
        const double frac = y - fl;
        if (frac <= 0) break;
        y = 1.0 / frac;
    }
    return std::nullopt;
}

} // namespace meanineq
