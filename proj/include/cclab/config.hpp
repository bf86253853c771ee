// Batch experiment runner: a JSON config declares a list of experiments,
// each producing one CSV artifact and an optional set of assertions. The
// run passes iff every declared assertion passes.
//
// Config layout:
//   {
//     "seed": 17,
//     "out_dir": "artifacts",
//     "experiments": [
//       { "id": "conc-1", "type": "concentration",
//         "n": 30, "p": 0.5, "t": 1, "samples": 20, "method": "exact",
//         "assert": { "max_minus_min_le": 4, "median_center_slack": 4 } },
//       { "id": "scan-1", "type": "expectation-scan",
//         "n": 1000000, "p": 0.5, "t": 2, "k_min": 20, "k_max": 60,
//         "assert": { "crossing_in_window": true, "log_e_decreasing": true } },
//       { "id": "fig1", "type": "figure1",
//         "tau_min": 0.05, "tau_max": 10.0, "step": 0.05,
//         "assert": { "max_abs_residual": 1e-9, "kappa_monotone": true } },
//       { "id": "ov-1", "type": "overlap-mc",
//         "n": 40, "p": 0.5, "t": 2, "k": 6, "ell": 3, "samples": 200 }
//     ]
//   }
// Per-experiment "seed" overrides the global one.
#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cclab/experiments.hpp"

namespace cclab {

struct ConfigRunResult {
    bool all_passed = true;
    std::vector<std::string> artifacts;
    std::vector<std::string> failures;
};

inline ConfigRunResult run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("run_config: cannot open " + path);
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("run_config: parse error: ") + e.what());
    }

    std::uint64_t global_seed = cfg.value("seed", 0ULL);
    std::string out_dir = cfg.value("out_dir", std::string("."));
    std::filesystem::create_directories(out_dir);

    ConfigRunResult res;
    auto fail = [&](const std::string& id, const std::string& what) {
        res.all_passed = false;
        res.failures.push_back(id + ": " + what);
    };
    auto write_artifact = [&](const std::string& id, const std::string& ext,
                              const std::string& content) {
        std::string file = out_dir + "/" + id + ext;
        std::ofstream out(file, std::ios::binary);
        out << content;
        res.artifacts.push_back(file);
    };

    int index = 0;
    for (const auto& exp : cfg.value("experiments", nlohmann::json::array())) {
        std::string type = exp.value("type", std::string());
        std::string id = exp.value("id", "experiment-" + std::to_string(index));
        ++index;
        std::uint64_t seed = exp.value("seed", global_seed);
        nlohmann::json asserts = exp.value("assert", nlohmann::json::object());

        if (type == "concentration") {
            auto method = exp.value("method", std::string("exact")) == "exact"
                              ? SolveMethod::exact
                              : SolveMethod::heuristic;
            auto r = concentration_experiment(exp.at("n").get<std::uint64_t>(),
                                              exp.at("p").get<double>(), exp.at("t").get<int>(),
                                              exp.at("samples").get<int>(), {seed}, method);
            write_artifact(id, ".csv", concentration_csv(r));
            if (asserts.contains("max_minus_min_le") &&
                r.max_value - r.min_value > asserts["max_minus_min_le"].get<double>())
                fail(id, "spread " + std::to_string(r.max_value - r.min_value) + " exceeds bound");
            if (asserts.contains("median_center_slack")) {
                double slack = asserts["median_center_slack"].get<double>();
                if (std::abs(r.median - r.window.center) > slack)
                    fail(id, "median " + std::to_string(r.median) + " outside center +- " +
                                 std::to_string(slack));
            }
        } else if (type == "expectation-scan") {
            std::uint64_t n = exp.at("n").get<std::uint64_t>();
            double p = exp.at("p").get<double>();
            int t = exp.at("t").get<int>();
            auto r = expectation_scan(n, p, t, exp.at("k_min").get<int>(),
                                      exp.at("k_max").get<int>());
            write_artifact(id, ".csv", expectation_scan_csv(r, n, p, t));
            if (asserts.value("crossing_in_window", false) && !r.crossing_in_window)
                fail(id, "E=1 crossing not inside the window");
            if (asserts.value("log_e_decreasing", false)) {
                for (std::size_t i = 0; i + 1 < r.rows.size(); ++i)
                    if (r.rows[i + 1].log_expectation >= r.rows[i].log_expectation) {
                        fail(id, "log expectation not strictly decreasing at k=" +
                                     std::to_string(r.rows[i + 1].k));
                        break;
                    }
            }
        } else if (type == "figure1") {
            auto pts = figure1_data(exp.at("tau_min").get<double>(),
                                    exp.at("tau_max").get<double>(), exp.at("step").get<double>());
            write_artifact(id, ".csv", figure1_csv(pts));
            if (asserts.contains("max_abs_residual")) {
                double tol = asserts["max_abs_residual"].get<double>();
                for (const auto& pt : pts)
                    if (std::abs(pt.residual) > tol) {
                        fail(id, "residual above tolerance at tau=" + std::to_string(pt.tau));
                        break;
                    }
            }
            if (asserts.value("kappa_monotone", false)) {
                for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                    if (pts[i + 1].kappa < pts[i].kappa) {
                        fail(id, "kappa not monotone at tau=" + std::to_string(pts[i + 1].tau));
                        break;
                    }
            }
        } else if (type == "overlap-mc") {
            auto e = overlap_probability_mc(exp.at("n").get<std::uint64_t>(),
                                            exp.at("p").get<double>(), exp.at("t").get<int>(),
                                            exp.at("k").get<int>(), exp.at("ell").get<int>(),
                                            exp.at("samples").get<int>(), {seed});
            write_artifact(id, ".csv", overlap_csv(e));
        } else {
            throw std::runtime_error("run_config: unknown experiment type '" + type +
                                     "' in entry " + std::to_string(index - 1));
        }
    }
    return res;
}

}  // namespace cclab
