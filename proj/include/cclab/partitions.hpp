// Exact counts of set partitions with bounded block sizes, and the
// analytic bounds attached to them (saddle-point upper bound, general
// asymptotic bound, Stirling lower bound for maximally-packed partitions).
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cclab/numeric.hpp"

namespace cclab {

// Number of set partitions of [k] with every block of size at most t.
// Recurrence on the block containing element 1:
//   SP(j) = sum_{i=1..min(t,j)} C(j-1, i-1) * SP(j-i),  SP(0) = 1.
inline BigCount sp_bounded(int t, int k) {
    if (t < 1) throw std::invalid_argument("sp_bounded: t must be >= 1");
    if (k < 0) throw std::invalid_argument("sp_bounded: k must be >= 0");
    std::vector<BigCount> dp(k + 1);
    dp[0] = 1;
    for (int j = 1; j <= k; ++j) {
        BigCount acc = 0;
        BigCount c = 1;  // C(j-1, i-1), updated multiplicatively
        int imax = std::min(t, j);
        for (int i = 1; i <= imax; ++i) {
            acc += c * dp[j - i];
            c *= j - i;
            c /= i;
        }
        dp[j] = acc;
    }
    return dp[k];
}

inline BigCount bell(int k) { return sp_bounded(std::max(k, 1), k); }

// Number of set partitions of [k] with the maximum possible number of
// blocks of size exactly t:  k! / ((khat/t)! (t!)^(khat/t) (k-khat)!)
// where khat = t*floor(k/t).
inline BigCount ep_exact(int t, int k) {
    if (t < 1) throw std::invalid_argument("ep_exact: t must be >= 1");
    if (k < 0) throw std::invalid_argument("ep_exact: k must be >= 0");
    int khat = t * (k / t);
    int blocks = khat / t;
    BigCount den = factorial_exact(blocks) * factorial_exact(k - khat);
    BigCount tf = factorial_exact(t);
    for (int i = 0; i < blocks; ++i) den *= tf;
    return factorial_exact(k) / den;
}

// Unique positive root r of  sum_{i=0..t-1} r^{i+1}/i! = k.  The left side
// is strictly increasing in r, so bisection converges; r = k is always an
// upper bracket because the i = 0 term alone equals r.
inline double saddle_point_radius(int t, int k) {
    if (t < 1 || k < 1) throw std::invalid_argument("saddle_point_radius: need t >= 1, k >= 1");
    auto f = [&](double r) {
        double term = r;  // r^{i+1}/i! at i = 0
        double acc = 0.0;
        for (int i = 0; i < t; ++i) {
            acc += term;
            term *= r / (i + 1);
        }
        return acc;
    };
    double lo = 0.0, hi = static_cast<double>(k);
    double r = hi;
    const double tol = 1e-10 * k;
    for (int it = 0; it < 500; ++it) {
        r = 0.5 * (lo + hi);
        double fr = f(r);
        if (std::abs(fr - k) <= tol) return r;
        (fr < k ? lo : hi) = r;
    }
    if (std::abs(f(r) - k) > tol) throw std::runtime_error("saddle_point_radius: no convergence");
    return r;
}

// Saddle-point upper bound for bounded-block partition counts, valid for
// t <= log k and k large:  exp(k log k - (k/t) log k - k log t + 3k).
inline LogValue sp_saddle_upper(int t, int k) {
    if (t < 1 || k < 2) throw std::invalid_argument("sp_saddle_upper: need t >= 1, k >= 2");
    double kd = k, td = t;
    return LogValue::from_log(kd * std::log(kd) - (kd / td) * std::log(kd) - kd * std::log(td) + 3.0 * kd);
}

// General partition-count bound exp(k log k - k log log k - k), the o(k)
// term dropped. Heuristic evaluator: audited against exact Bell numbers,
// never asserted as a pointwise bound.
inline LogValue sp_general_upper(int k) {
    if (k < 3) throw std::invalid_argument("sp_general_upper: need k >= 3");
    double kd = k;
    return LogValue::from_log(kd * std::log(kd) - kd * std::log(std::log(kd)) - kd);
}

// Stirling-based lower bound on ep_exact with the constant factor fixed
// to 1:  log of  k^k * t^(khat/(2t)) / (k^(k/t) * t^k).
inline LogValue ep_stirling_lower(int t, int k) {
    if (t < 1 || k < 1) throw std::invalid_argument("ep_stirling_lower: need t >= 1, k >= 1");
    double kd = k, td = t;
    double khat = td * std::floor(kd / td);
    return LogValue::from_log(kd * std::log(kd) + (khat / (2.0 * td)) * std::log(td) -
                              (kd / td) * std::log(kd) - kd * std::log(td));
}

// Smallest k in [2, k_max] at which the saddle-point bound dominates the
// exact count for this t, or -1 if none found. The bound only promises
// dominance for k large enough; this reports where that starts.
inline int sp_saddle_domination_onset(int t, int k_max) {
    for (int k = 2; k <= k_max; ++k) {
        if (t > std::log(static_cast<double>(k))) continue;  // outside hypothesis
        bool dominates = true;
        for (int kk = k; kk <= k_max; kk += std::max(1, (k_max - k) / 8)) {
            if (t > std::log(static_cast<double>(kk))) continue;
            if (log_of(sp_bounded(t, kk)) > sp_saddle_upper(t, kk).log_value) {
                dominates = false;
                break;
            }
        }
        if (dominates) return k;
    }
    return -1;
}

}  // namespace cclab
