// Reproducible experiment harness: concentration runs, expectation scans,
// threshold-curve data and the Monte Carlo overlap-probability estimator.
// Every experiment is a pure function of (parameters, seed); per-sample
// sub-seeds are seed XOR sample-index so results do not depend on
// scheduling order. CSV artifacts carry a schema tag line and contain no
// timestamps, so identical runs are byte-identical.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cclab/exact_prob.hpp"
#include "cclab/graph.hpp"
#include "cclab/solver.hpp"
#include "cclab/theory.hpp"

namespace cclab {

struct ExperimentRecord {
    std::string experiment_id;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    double p = 0.0;
    int t = 0;
    int k = -1;
    double measured = 0.0;
};

enum class SolveMethod { exact, heuristic };

struct ConcentrationResult {
    std::vector<ExperimentRecord> records;
    int min_value = 0;
    int max_value = 0;
    double median = 0.0;
    PredictionWindow window;  // alpha_small_window for the run parameters
};

// Per-sample alpha_t of G(n,p) under derived sub-seeds, summarized against
// the prediction window. The exact method is guarded to configurations the
// branch-and-bound solver handles comfortably.
inline ConcentrationResult concentration_experiment(std::uint64_t n, double p, int t, int samples,
                                                    RngSeed seed, SolveMethod method) {
    if (samples < 1) throw std::invalid_argument("concentration_experiment: samples must be >= 1");
    if (method == SolveMethod::exact && !(n <= 120 && p >= 0.4 && t <= 3))
        throw std::invalid_argument(
            "concentration_experiment: exact method refused (guard: n <= 120, p >= 0.4, t <= 3)");
    ConcentrationResult res;
    res.window = alpha_small_window(n, p, t);
    std::vector<int> values;
    for (int i = 0; i < samples; ++i) {
        std::uint64_t sub = seed.seed ^ static_cast<std::uint64_t>(i);
        Graph g = sample_gnp(static_cast<int>(n), p, {sub});
        int alpha = method == SolveMethod::exact ? alpha_t_exact(g, t).size
                                                 : alpha_t_heuristic(g, t, {sub}).size;
        res.records.push_back({"concentration", sub, n, p, t, -1, static_cast<double>(alpha)});
        values.push_back(alpha);
    }
    std::sort(values.begin(), values.end());
    res.min_value = values.front();
    res.max_value = values.back();
    int m = samples / 2;
    res.median = samples % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
    return res;
}

inline std::string concentration_csv(const ConcentrationResult& r) {
    std::ostringstream os;
    os << "# schema cclab.concentration.v1\n";
    os << "experiment_id,seed,n,p,t,measured_alpha,window_lower,window_center,window_upper\n";
    for (const auto& rec : r.records) {
        os << rec.experiment_id << ',' << rec.seed << ',' << rec.n << ',' << rec.p << ',' << rec.t
           << ',' << rec.measured << ',' << r.window.lower << ',' << r.window.center << ','
           << r.window.upper << '\n';
    }
    return os.str();
}

struct ExpectationScanRow {
    int k = 0;
    double log_expectation = 0.0;
};

struct ExpectationScanResult {
    std::vector<ExpectationScanRow> rows;
    PredictionWindow window;      // constant-width window around the E = 1 crossing
    bool window_defined = false;  // false when n is too small for the window formula
    bool crossing_found = false;
    double crossing = 0.0;        // interpolated k with E = 1
    bool crossing_in_window = false;
};

// log E|S_{n,t,k}| for k in [k_min, k_max], flagging where the expectation
// crosses 1 relative to the constant-width window.
inline ExpectationScanResult expectation_scan(std::uint64_t n, double p, int t, int k_min,
                                              int k_max) {
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("expectation_scan: bad k range");
    ExpectationScanResult res;
    try {
        res.window = alpha_small_window(n, p, t);
        res.window_defined = true;
    } catch (const std::invalid_argument&) {
        res.window = {0.0, 0.0, 0.0, "alpha-small-undefined", false};
    }
    for (int k = k_min; k <= k_max; ++k)
        res.rows.push_back({k, expected_tcomp_sets(n, k, t, p).log_expectation});
    for (std::size_t i = 0; i + 1 < res.rows.size(); ++i) {
        double a = res.rows[i].log_expectation, b = res.rows[i + 1].log_expectation;
        if (a >= 0.0 && b < 0.0) {
            res.crossing_found = true;
            res.crossing = res.rows[i].k + a / (a - b);
            break;
        }
    }
    if (res.crossing_found && res.window_defined)
        res.crossing_in_window = res.crossing >= res.window.lower && res.crossing <= res.window.upper;
    return res;
}

inline std::string expectation_scan_csv(const ExpectationScanResult& r, std::uint64_t n, double p,
                                        int t) {
    std::ostringstream os;
    os << "# schema cclab.expectation_scan.v1\n";
    os << "n,p,t,k,log_expectation,window_lower,window_center,window_upper,crossing\n";
    for (const auto& row : r.rows) {
        os << n << ',' << p << ',' << t << ',' << row.k << ',' << row.log_expectation << ','
           << r.window.lower << ',' << r.window.center << ',' << r.window.upper << ','
           << (r.crossing_found ? std::to_string(r.crossing) : std::string("nan")) << '\n';
    }
    return os.str();
}

// Smallest n in [n_lo, n_hi] whose E = 1 crossing lands inside the
// constant-width window, by doubling then bisecting on the threshold.
// Returns 0 if none found.
inline std::uint64_t find_smallest_n_with_crossing_in_window(double p, int t, std::uint64_t n_lo,
                                                             std::uint64_t n_hi) {
    auto in_window = [&](std::uint64_t n) {
        double center = alpha_small_window(n, p, t).center;
        int k_min = std::max(1, static_cast<int>(center) - 40);
        int k_max = static_cast<int>(center) + 40;
        return expectation_scan(n, p, t, k_min, k_max).crossing_in_window;
    };
    std::uint64_t lo = n_lo, hi = n_lo;
    while (hi <= n_hi && !in_window(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > n_hi) return 0;
    if (hi == n_lo) return n_lo;
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (in_window(mid) ? hi : lo) = mid;
    }
    return hi;
}

struct Figure1Point {
    double tau = 0.0;
    double kappa = 0.0;
    double residual = 0.0;
};

// Points on the curve iota(tau, kappa) = 0 for external plotting.
inline std::vector<Figure1Point> figure1_data(double tau_min, double tau_max, double step) {
    if (!(tau_min > 0.0) || !(tau_max > tau_min) || !(step > 0.0))
        throw std::invalid_argument("figure1_data: need 0 < tau_min < tau_max and step > 0");
    std::vector<Figure1Point> out;
    for (double tau = tau_min; tau <= tau_max + 1e-12; tau += step) {
        ThresholdParams tp = kappa_of_tau(tau);
        out.push_back({tau, tp.kappa, tp.residual});
    }
    return out;
}

inline std::string figure1_csv(const std::vector<Figure1Point>& pts) {
    std::ostringstream os;
    os << "# schema cclab.figure1.v1\n";
    os << "tau,kappa,residual\n";
    os.precision(15);
    for (const auto& pt : pts) os << pt.tau << ',' << pt.kappa << ',' << pt.residual << '\n';
    return os.str();
}

struct OverlapEstimate {
    std::uint64_t n = 0;
    double p = 0.0;
    int t = 0;
    int k = 0;
    int ell = 0;
    int samples = 0;
    double p_hat = 0.0;
    double ci_halfwidth = 0.0;  // 95%, normal approximation, floor of 30 samples
    double log_f_ell = 0.0;     // log C(n,k) + log C(k,l) + log C(n-k,k-l) + log p_hat
};

// Monte Carlo estimate of the probability that two fixed k-sets sharing
// exactly ell vertices are both t-component sets, sampling only the union.
inline OverlapEstimate overlap_probability_mc(std::uint64_t n, double p, int t, int k, int ell,
                                              int samples, RngSeed seed) {
    if (ell < 2 || ell >= k) throw std::invalid_argument("overlap_probability_mc: need 2 <= ell < k");
    int u = 2 * k - ell;
    if (static_cast<std::uint64_t>(u) > n)
        throw std::invalid_argument("overlap_probability_mc: union exceeds n");
    if (samples < 30)
        throw std::invalid_argument("overlap_probability_mc: need >= 30 samples for the CI");
    VertexSet a(k), b(k);
    for (int i = 0; i < k; ++i) a[i] = i;             // [0, k)
    for (int i = 0; i < k; ++i) b[i] = k - ell + i;   // [k-ell, 2k-ell)
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
        Graph g = sample_gnp(u, p, {seed.seed ^ static_cast<std::uint64_t>(s)});
        if (is_t_component_set(g, a, t) && is_t_component_set(g, b, t)) ++hits;
    }
    OverlapEstimate est;
    est.n = n;
    est.p = p;
    est.t = t;
    est.k = k;
    est.ell = ell;
    est.samples = samples;
    est.p_hat = static_cast<double>(hits) / samples;
    est.ci_halfwidth = 1.96 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / samples);
    est.log_f_ell = log_binomial(static_cast<double>(n), k) + log_binomial(k, ell) +
                    log_binomial(static_cast<double>(n - k), k - ell) +
                    (est.p_hat > 0.0 ? std::log(est.p_hat)
                                     : -std::numeric_limits<double>::infinity());
    return est;
}

inline std::string overlap_csv(const OverlapEstimate& e) {
    std::ostringstream os;
    os << "# schema cclab.overlap.v1\n";
    os << "n,p,t,k,ell,samples,p_hat,ci_halfwidth,log_f_ell\n";
    os << e.n << ',' << e.p << ',' << e.t << ',' << e.k << ',' << e.ell << ',' << e.samples << ','
       << e.p_hat << ',' << e.ci_halfwidth << ',' << e.log_f_ell << '\n';
    return os.str();
}

}  // namespace cclab
