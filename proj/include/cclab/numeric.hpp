// Shared numeric primitives: big integers/rationals (GMP-backed) and
// log-domain values with log-sum-exp accumulation.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cclab {

using BigCount = mpz_class;
using Rational = mpq_class;

// Nonnegative real carried as its natural log, with an explicit zero flag.
struct LogValue {
    double log_value = 0.0;
    bool is_zero = false;

    static LogValue zero() { return {0.0, true}; }
    static LogValue one() { return {0.0, false}; }
    static LogValue from_log(double lv) { return {lv, false}; }
    static LogValue from_linear(double x) {
        if (x < 0.0) throw std::domain_error("LogValue: negative value");
        return x == 0.0 ? zero() : from_log(std::log(x));
    }

    double value() const { return is_zero ? 0.0 : std::exp(log_value); }

    LogValue operator*(const LogValue& o) const {
        if (is_zero || o.is_zero) return zero();
        return from_log(log_value + o.log_value);
    }
    LogValue operator/(const LogValue& o) const {
        if (o.is_zero) throw std::domain_error("LogValue: division by zero");
        if (is_zero) return zero();
        return from_log(log_value - o.log_value);
    }
    LogValue operator+(const LogValue& o) const {
        if (is_zero) return o;
        if (o.is_zero) return *this;
        double a = log_value, b = o.log_value;
        if (a < b) std::swap(a, b);
        return from_log(a + std::log1p(std::exp(b - a)));
    }
    bool operator<(const LogValue& o) const {
        if (is_zero) return !o.is_zero;
        if (o.is_zero) return false;
        return log_value < o.log_value;
    }
};

// log(1 - e^x) for x < 0, stable near both ends.
inline double log1mexp(double x) {
    if (x >= 0.0) throw std::domain_error("log1mexp: argument must be negative");
    // Cutoff from the standard two-branch formulation.
    return x > -M_LN2 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

inline double log_sum_exp(std::span<const double> xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

// log C(n, k) for real-sized n (n may be far beyond 2^53 / k small).
inline double log_binomial(double n, std::uint64_t k) {
    if (k == 0) return 0.0;
    if (n < static_cast<double>(k)) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(n - static_cast<double>(k) + 1.0);
}

inline BigCount binomial_exact(unsigned long n, unsigned long k) {
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigCount factorial_exact(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Natural log of a positive big integer, accurate to ~1e-15 relative.
inline double log_of(const BigCount& z) {
    if (z <= 0) throw std::domain_error("log_of: nonpositive integer");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

inline double log_of(const Rational& q) {
    if (q <= 0) throw std::domain_error("log_of: nonpositive rational");
    return log_of(BigCount(q.get_num())) - log_of(BigCount(q.get_den()));
}

// Parses "a/b", an integer, or a decimal like "0.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        Rational q(s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q(s);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    BigCount num(digits.empty() ? "0" : digits);
    BigCount den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace cclab
