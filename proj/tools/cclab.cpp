// cclab: command-line surface for the t-component colouring laboratory.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cclab/config.hpp"
#include "cclab/exact_prob.hpp"
#include "cclab/experiments.hpp"
#include "cclab/graph.hpp"
#include "cclab/partitions.hpp"
#include "cclab/solver.hpp"
#include "cclab/theory.hpp"

using nlohmann::json;

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << content;
    }
}

cclab::Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file " + path);
    return cclab::parse_edge_list(f);
}

json window_json(const cclab::PredictionWindow& w) {
    return {{"center", w.center},
            {"lower", w.lower},
            {"upper", w.upper},
            {"formula_id", w.formula_id},
            {"hypothesis_in_range", w.hypothesis_in_range}};
}

const char* regime_name(cclab::RegimeCase c) {
    switch (c) {
        case cclab::RegimeCase::smallest_t: return "smallest_t";
        case cclab::RegimeCase::small_t: return "small_t";
        case cclab::RegimeCase::medium_t: return "medium_t";
        case cclab::RegimeCase::large_t_1: return "large_t_1";
        case cclab::RegimeCase::large_t_2: return "large_t_2";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-component chromatic/stability laboratory for G(n,p)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    app.add_option("--seed", seed, "RNG seed (decimal u64)")->capture_default_str();
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--format", format, "csv|json where applicable")->capture_default_str();

    // sample
    auto* sample = app.add_subcommand("sample", "sample G(n,p) and emit its edge list");
    std::uint64_t s_n = 0;
    double s_p = 0.5;
    sample->add_option("--n", s_n, "vertex count")->required();
    sample->add_option("--p", s_p, "edge probability")->required();

    // solve-alpha / solve-chi
    auto* salpha = app.add_subcommand("solve-alpha", "t-component stability number of a graph");
    auto* schi = app.add_subcommand("solve-chi", "t-component chromatic number of a graph");
    std::string g_path;
    int g_t = 1;
    bool use_heuristic = false;
    std::uint64_t node_budget = 0;
    for (auto* sc : {salpha, schi}) {
        sc->add_option("--graph", g_path, "edge-list file")->required();
        sc->add_option("--t", g_t, "component order bound")->required();
        sc->add_flag("--heuristic", use_heuristic, "use the heuristic instead of the exact solver");
        sc->add_option("--node-budget", node_budget, "search node budget (0 = unlimited)");
    }

    // greedy-color
    auto* gcolor = app.add_subcommand("greedy-color", "greedy-extraction t-component colouring");
    int gc_k = 1, gc_restarts = 8;
    gcolor->add_option("--graph", g_path, "edge-list file")->required();
    gcolor->add_option("--t", g_t, "component order bound")->required();
    gcolor->add_option("--k", gc_k, "target class size")->required();
    gcolor->add_option("--restarts", gc_restarts, "greedy fills per extraction")
        ->capture_default_str();

    // predict
    auto* predict = app.add_subcommand("predict", "emit all applicable prediction windows");
    std::uint64_t p_n = 0;
    double p_p = 0.5;
    int p_t = 1;
    double p_slack = 0.25;
    predict->add_option("--n", p_n)->required();
    predict->add_option("--p", p_p)->required();
    predict->add_option("--t", p_t)->required();
    predict->add_option("--slack", p_slack, "multiplicative slack for o(1) factors")
        ->capture_default_str();

    // kappa
    auto* kap = app.add_subcommand("kappa", "root of iota(tau, .)");
    double k_tau = 1.0, k_tol = 1e-12;
    kap->add_option("--tau", k_tau)->required();
    kap->add_option("--tol", k_tol)->capture_default_str();

    // expectation
    auto* expc = app.add_subcommand("expectation", "E|S_{n,t,k}|");
    std::uint64_t e_n = 0;
    int e_k = 0, e_t = 1;
    std::string e_p = "1/2", e_mode = "log";
    expc->add_option("--n", e_n)->required();
    expc->add_option("--k", e_k)->required();
    expc->add_option("--t", e_t)->required();
    expc->add_option("--p", e_p, "probability; rational like 1/2 in exact mode")->required();
    expc->add_option("--mode", e_mode, "exact|log")->capture_default_str();

    // partition-count
    auto* pc = app.add_subcommand("partition-count", "bounded-block set partition counts");
    int pc_t = 1, pc_k = 0;
    std::string pc_which = "sp";
    pc->add_option("--t", pc_t)->required();
    pc->add_option("--k", pc_k)->required();
    pc->add_option("--which", pc_which, "sp|ep|bell|bounds")->capture_default_str();

    // bounds-check
    auto* bc = app.add_subcommand("bounds-check", "first-moment bound vs exact expectation");
    std::string bc_id;
    std::uint64_t bc_n = 0;
    double bc_p = 0.5;
    int bc_t = 1, bc_k = 1;
    bc->add_option("--id", bc_id, "bound identifier, e.g. prop22a")->required();
    bc->add_option("--n", bc_n)->required();
    bc->add_option("--p", bc_p)->required();
    bc->add_option("--t", bc_t)->required();
    bc->add_option("--k", bc_k)->required();

    // experiment
    auto* exper = app.add_subcommand("experiment", "run a batch config");
    std::string config_path;
    exper->add_option("--config", config_path, "JSON config file")->required();

    // figure1
    auto* fig = app.add_subcommand("figure1", "curve data for iota(tau, kappa) = 0");
    double f_min = 0.05, f_max = 10.0, f_step = 0.05;
    fig->add_option("--tau-min", f_min)->capture_default_str();
    fig->add_option("--tau-max", f_max)->capture_default_str();
    fig->add_option("--step", f_step)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) {
            auto g = cclab::sample_gnp(static_cast<int>(s_n), s_p, {seed});
            emit(out_path, cclab::to_edge_list(g));
        } else if (*salpha) {
            auto g = load_graph(g_path);
            cclab::SolverLimits limits;
            if (node_budget) limits.node_budget = node_budget;
            json j;
            if (use_heuristic) {
                auto r = cclab::alpha_t_heuristic(g, g_t, {seed});
                j = {{"size", r.size}, {"witness", r.witness}, {"status", "heuristic"}};
            } else {
                auto r = cclab::alpha_t_exact(g, g_t, limits);
                j = {{"size", r.size},
                     {"witness", r.witness},
                     {"status", r.status == cclab::SolveStatus::optimal ? "optimal" : "incomplete"},
                     {"nodes", r.nodes}};
            }
            emit(out_path, j.dump(2) + "\n");
        } else if (*schi) {
            auto g = load_graph(g_path);
            cclab::SolverLimits limits;
            if (node_budget) limits.node_budget = node_budget;
            json j;
            if (use_heuristic) {
                auto c = cclab::chi_t_heuristic(g, g_t, {seed});
                j = {{"num_colors", c.num_colors}, {"assignment", c.assignment},
                     {"status", "heuristic"}};
            } else {
                auto r = cclab::chi_t_exact(g, g_t, limits);
                j = {{"num_colors", r.num_colors},
                     {"assignment", r.coloring.assignment},
                     {"status", r.status == cclab::SolveStatus::optimal ? "optimal" : "incomplete"}};
            }
            j["valid"] = true;
            emit(out_path, j.dump(2) + "\n");
        } else if (*gcolor) {
            auto g = load_graph(g_path);
            auto r = cclab::chi_t_greedy_extraction(g, g_t, gc_k, {seed}, gc_restarts);
            json j = {{"num_colors", r.coloring.num_colors},
                      {"assignment", r.coloring.assignment},
                      {"extracted_classes", r.extracted_classes},
                      {"tail_classes", r.tail_classes},
                      {"used_tail_fallback", r.used_tail_fallback},
                      {"target_k", r.target_k},
                      {"valid", cclab::validate_coloring(g, r.coloring, g_t)}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*predict) {
            json j;
            j["chi_medium"] = window_json(cclab::chi_medium_prediction(p_n, p_p, p_t, p_slack));
            try {
                j["alpha_small"] = window_json(cclab::alpha_small_window(p_n, p_p, p_t));
                j["chi_small"] = window_json(cclab::chi_small_prediction(p_n, p_p, p_t));
            } catch (const std::invalid_argument& e) {
                j["alpha_small"] = {{"error", e.what()}};
            }
            auto regime = cclab::classify_sparse_regime(p_n, p_p, p_t);
            j["sparse_regime"] = {{"case", regime_name(regime.regime)},
                                  {"window", window_json(regime.predicted)}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*kap) {
            auto tp = cclab::kappa_of_tau(k_tau, k_tol);
            json j = {{"tau", tp.tau}, {"kappa", tp.kappa}, {"residual", tp.residual}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*expc) {
            json j;
            if (e_mode == "exact") {
                if (e_k > 64) throw std::runtime_error("exact mode supports k <= 64");
                cclab::Rational pr = cclab::parse_rational(e_p);
                auto rep = cclab::expected_tcomp_sets(e_n, e_k, e_t, pr.get_d(), pr);
                j["log_expectation"] = rep.log_expectation;
                j["exact_numerator"] = rep.exact_expectation->get_num().get_str();
                j["exact_denominator"] = rep.exact_expectation->get_den().get_str();
            } else if (e_mode == "log") {
                auto rep = cclab::expected_tcomp_sets(e_n, e_k, e_t, std::stod(e_p));
                j["log_expectation"] = rep.log_expectation;
            } else {
                throw std::runtime_error("--mode must be exact or log");
            }
            emit(out_path, j.dump(2) + "\n");
        } else if (*pc) {
            json j = {{"t", pc_t}, {"k", pc_k}};
            if (pc_which == "sp") {
                j["sp_bounded"] = cclab::sp_bounded(pc_t, pc_k).get_str();
            } else if (pc_which == "ep") {
                j["ep_exact"] = cclab::ep_exact(pc_t, pc_k).get_str();
            } else if (pc_which == "bell") {
                j["bell"] = cclab::bell(pc_k).get_str();
            } else if (pc_which == "bounds") {
                auto sp = cclab::sp_bounded(pc_t, pc_k);
                j["sp_bounded"] = sp.get_str();
                j["log_sp_bounded"] = cclab::log_of(sp);
                j["saddle_point_radius"] = cclab::saddle_point_radius(pc_t, std::max(pc_k, 1));
                j["log_sp_saddle_upper"] = cclab::sp_saddle_upper(pc_t, pc_k).log_value;
                if (pc_k >= 3) j["log_sp_general_upper"] = cclab::sp_general_upper(pc_k).log_value;
                auto ep = cclab::ep_exact(pc_t, pc_k);
                j["ep_exact"] = ep.get_str();
                j["log_ep_exact"] = ep > 0 ? cclab::log_of(ep) : 0.0;
                j["log_ep_stirling_lower"] = cclab::ep_stirling_lower(pc_t, pc_k).log_value;
            } else {
                throw std::runtime_error("--which must be sp|ep|bell|bounds");
            }
            emit(out_path, j.dump(2) + "\n");
        } else if (*bc) {
            auto rep = cclab::first_moment_bound_report(cclab::bound_id_from_string(bc_id), bc_n,
                                                        bc_p, bc_t, bc_k);
            json j = {{"bound_id", bc_id},
                      {"is_upper", rep.is_upper},
                      {"asserted", rep.asserted},
                      {"hypothesis_met", rep.hypothesis_met},
                      {"claimed_log_bound", rep.claimed_log_bound},
                      {"exact_log_expectation", rep.exact_log_expectation},
                      {"holds", rep.holds}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*exper) {
            auto r = cclab::run_config(config_path);
            json j = {{"all_passed", r.all_passed},
                      {"artifacts", r.artifacts},
                      {"failures", r.failures}};
            emit(out_path, j.dump(2) + "\n");
            return r.all_passed ? 0 : 1;
        } else if (*fig) {
            auto pts = cclab::figure1_data(f_min, f_max, f_step);
            if (format == "json") {
                json arr = json::array();
                for (const auto& pt : pts)
                    arr.push_back({{"tau", pt.tau}, {"kappa", pt.kappa}, {"residual", pt.residual}});
                emit(out_path, arr.dump(2) + "\n");
            } else {
                emit(out_path, cclab::figure1_csv(pts));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
