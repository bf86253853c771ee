// Exact first-moment engine: connectivity probability of G(k,p), the
// max-component-order distribution, and the expected number of
// t-component k-sets. Dual numeric mode: exact rationals for k <= 64,
// log-domain with log-sum-exp accumulation beyond.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cclab/numeric.hpp"

namespace cclab {

enum class ProbMode { exact, logdomain };

// Probability tagged by numeric mode.
struct Prob {
    ProbMode mode = ProbMode::exact;
    Rational exact_value;  // valid iff mode == exact
    LogValue log_value;    // valid iff mode == logdomain

    static Prob from_exact(Rational q) { return {ProbMode::exact, std::move(q), {}}; }
    static Prob from_log(LogValue lv) { return {ProbMode::logdomain, {}, lv}; }

    double to_double() const {
        return mode == ProbMode::exact ? exact_value.get_d() : log_value.value();
    }
    // Natural log, -inf for zero.
    double log() const {
        if (mode == ProbMode::exact)
            return exact_value == 0 ? -std::numeric_limits<double>::infinity() : log_of(exact_value);
        return log_value.is_zero ? -std::numeric_limits<double>::infinity() : log_value.log_value;
    }
};

namespace detail {

inline Rational rational_pow(const Rational& x, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

// C_conn[1..k], C_conn[j] = Pr(G(j,p) connected), via the component-of-
// vertex-1 recurrence Q(j) = sum_{i<j} C(j-1,i-1) C_conn(i) q^{i(j-i)}.
inline std::vector<Rational> connectivity_table_exact(int k, const Rational& p) {
    Rational q = Rational(1) - p;
    std::vector<Rational> conn(k + 1);
    if (k >= 1) conn[1] = 1;
    for (int j = 2; j <= k; ++j) {
        Rational disc = 0;
        for (int i = 1; i < j; ++i) {
            Rational term = Rational(binomial_exact(j - 1, i - 1)) * conn[i] *
                            rational_pow(q, static_cast<unsigned long>(i) * (j - i));
            disc += term;
        }
        conn[j] = Rational(1) - disc;
    }
    return conn;
}

// Log-domain twin. When the disconnection probability Q is within 1e-12
// of 1 the complement log1p(-exp(logQ)) loses all precision, so the whole
// table is recomputed exactly with p taken as the exact dyadic rational
// of the double.
inline std::vector<double> connectivity_table_log(int k, double p) {
    double logq = std::log1p(-p);  // -inf at p = 1
    std::vector<double> lconn(k + 1, 0.0);
    std::vector<double> terms;
    for (int j = 2; j <= k; ++j) {
        terms.clear();
        for (int i = 1; i < j; ++i) {
            double lt = log_binomial(j - 1, i - 1) + lconn[i] +
                        static_cast<double>(i) * (j - i) * logq;
            if (std::isfinite(lt)) terms.push_back(lt);
        }
        double logQ = terms.empty() ? -std::numeric_limits<double>::infinity()
                                    : log_sum_exp(terms);
        if (logQ > -1e-12) {
            auto exact = connectivity_table_exact(k, Rational(p));
            for (int i = 1; i <= k; ++i)
                lconn[i] = exact[i] == 0 ? -std::numeric_limits<double>::infinity()
                                         : log_of(exact[i]);
            return lconn;
        }
        lconn[j] = logQ == -std::numeric_limits<double>::infinity() ? 0.0 : log1mexp(logQ);
    }
    return lconn;
}

}  // namespace detail

// Pr(G(k,p) connected), exact rational arithmetic.
inline Prob connectivity_prob(int k, const Rational& p) {
    if (k < 1) throw std::invalid_argument("connectivity_prob: k must be >= 1");
    if (p < 0 || p > 1) throw std::invalid_argument("connectivity_prob: p outside [0,1]");
    return Prob::from_exact(detail::connectivity_table_exact(k, p).back());
}

inline Prob connectivity_prob_log(int k, double p) {
    if (k < 1) throw std::invalid_argument("connectivity_prob_log: k must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("connectivity_prob_log: p outside [0,1]");
    double l = detail::connectivity_table_log(k, p).back();
    return Prob::from_log(LogValue::from_log(l));
}

// Pr(max component order of G(k,p) <= t), exact:
//   P(j) = sum_{i=1..min(t,j)} C(j-1,i-1) C_conn(i) q^{i(j-i)} P(j-i), P(0)=1.
inline Prob max_comp_le_prob(int k, int t, const Rational& p) {
    if (k < 0) throw std::invalid_argument("max_comp_le_prob: k must be >= 0");
    if (t < 1) throw std::invalid_argument("max_comp_le_prob: t must be >= 1");
    if (p < 0 || p > 1) throw std::invalid_argument("max_comp_le_prob: p outside [0,1]");
    Rational q = Rational(1) - p;
    auto conn = detail::connectivity_table_exact(std::min(k, t) == 0 ? 1 : std::min(k, t), p);
    std::vector<Rational> P(k + 1);
    P[0] = 1;
    for (int j = 1; j <= k; ++j) {
        Rational acc = 0;
        for (int i = 1; i <= std::min(t, j); ++i) {
            acc += Rational(binomial_exact(j - 1, i - 1)) * conn[i] *
                   detail::rational_pow(q, static_cast<unsigned long>(i) * (j - i)) * P[j - i];
        }
        P[j] = acc;
    }
    return Prob::from_exact(P[k]);
}

inline Prob max_comp_le_prob_log(int k, int t, double p) {
    if (k < 0) throw std::invalid_argument("max_comp_le_prob_log: k must be >= 0");
    if (t < 1) throw std::invalid_argument("max_comp_le_prob_log: t must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("max_comp_le_prob_log: p outside [0,1]");
    double logq = std::log1p(-p);
    auto lconn = detail::connectivity_table_log(std::max(std::min(k, t), 1), p);
    std::vector<double> P(k + 1, 0.0);  // log P, P(0) = 1
    std::vector<double> terms;
    for (int j = 1; j <= k; ++j) {
        terms.clear();
        for (int i = 1; i <= std::min(t, j); ++i) {
            double lt = log_binomial(j - 1, i - 1) + lconn[i] +
                        static_cast<double>(i) * (j - i) * logq + P[j - i];
            if (std::isfinite(lt)) terms.push_back(lt);
        }
        P[j] = terms.empty() ? -std::numeric_limits<double>::infinity() : log_sum_exp(terms);
    }
    return Prob::from_log(std::isfinite(P[k]) ? LogValue::from_log(P[k]) : LogValue::zero());
}

struct ExpectationReport {
    std::uint64_t n = 0;
    int k = 0;
    int t = 0;
    double p = 0.0;
    double log_expectation = 0.0;
    std::optional<Rational> exact_expectation;
};

// E|S_{n,t,k}| = C(n,k) * Pr(max component order of G(k,p) <= t).
// Exact rational value alongside the log-domain one whenever k <= 64 and
// an exact p is supplied.
inline ExpectationReport expected_tcomp_sets(std::uint64_t n, int k, int t, double p,
                                             const std::optional<Rational>& p_exact = std::nullopt) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n)
        throw std::invalid_argument("expected_tcomp_sets: need 0 <= k <= n");
    ExpectationReport rep{n, k, t, p, 0.0, std::nullopt};
    double logP = k == 0 ? 0.0 : max_comp_le_prob_log(k, t, p).log();
    rep.log_expectation = log_binomial(static_cast<double>(n), k) + logP;
    if (p_exact && k <= 64) {
        Rational pr = max_comp_le_prob(k, t, *p_exact).exact_value;
        Rational e = Rational(binomial_exact(static_cast<unsigned long>(n), k)) * pr;
        rep.exact_expectation = e;
    }
    return rep;
}

// Pr(max component order of G(k,p) is exactly t) for t = 1..k.
inline std::vector<Prob> max_comp_distribution(int k, const Rational& p) {
    if (k < 1) throw std::invalid_argument("max_comp_distribution: k must be >= 1");
    std::vector<Prob> out;
    Rational prev = 0;
    for (int t = 1; t <= k; ++t) {
        Rational cur = max_comp_le_prob(k, t, p).exact_value;
        out.push_back(Prob::from_exact(cur - prev));
        prev = cur;
    }
    return out;
}

inline std::vector<Prob> max_comp_distribution_log(int k, double p) {
    if (k < 1) throw std::invalid_argument("max_comp_distribution_log: k must be >= 1");
    std::vector<Prob> out;
    double prev = -std::numeric_limits<double>::infinity();
    for (int t = 1; t <= k; ++t) {
        double cur = max_comp_le_prob_log(k, t, p).log();
        double entry;
        if (!std::isfinite(prev))
            entry = cur;
        else if (prev >= cur)
            entry = -std::numeric_limits<double>::infinity();
        else
            entry = cur + log1mexp(prev - cur);
        out.push_back(Prob::from_log(std::isfinite(entry) ? LogValue::from_log(entry) : LogValue::zero()));
        prev = cur;
    }
    return out;
}

// Full-enumeration oracle over all 2^C(k,2) graphs; k is capped at 6.
inline Prob brute_force_max_comp_le_prob(int k, int t, const Rational& p) {
    if (k > 6) throw std::invalid_argument("brute_force_max_comp_le_prob: k > 6 refused");
    if (k < 0 || t < 1) throw std::invalid_argument("brute_force_max_comp_le_prob: bad parameters");
    if (k <= 1) return Prob::from_exact(Rational(1));
    int m = k * (k - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
    std::vector<std::uint64_t> count_by_edges(m + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        // union-find over k vertices
        int parent[6], size[6];
        for (int v = 0; v < k; ++v) parent[v] = v, size[v] = 1;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int max_order = 1;
        for (int e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            int a = find(pairs[e].first), b = find(pairs[e].second);
            if (a != b) {
                parent[a] = b;
                size[b] += size[a];
                max_order = std::max(max_order, size[b]);
            }
        }
        if (max_order <= t) count_by_edges[std::popcount(mask)]++;
    }
    Rational q = Rational(1) - p, total = 0;
    for (int e = 0; e <= m; ++e) {
        if (!count_by_edges[e]) continue;
        total += Rational(BigCount(static_cast<unsigned long>(count_by_edges[e]))) *
                 detail::rational_pow(p, e) * detail::rational_pow(q, m - e);
    }
    return Prob::from_exact(total);
}

}  // namespace cclab
