#include <catch2/catch_amalgamated.hpp>

#include "cclab/solver.hpp"
#include "cclab/theory.hpp"

using namespace cclab;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5));  // outer cycle
        g.add_edge(v, v + 5);                                            // spokes
        g.add_edge(std::min(v + 5, (v + 2) % 5 + 5), std::max(v + 5, (v + 2) % 5 + 5));
    }
    return g;
}

Graph from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
            if (mask >> e & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("alpha_t_exact examples") {
    auto k5 = alpha_t_exact(complete(5), 2);
    CHECK(k5.size == 2);
    CHECK(k5.status == SolveStatus::optimal);
    CHECK(is_t_component_set(complete(5), k5.witness, 2));

    CHECK(alpha_t_exact(Graph(7), 1).size == 7);
    CHECK(alpha_t_exact(Graph(7), 3).size == 7);

    auto p4 = alpha_t_exact(path(4), 2);
    CHECK(p4.size == 3);
    CHECK(is_t_component_set(path(4), p4.witness, 2));
}

TEST_CASE("alpha_t_brute examples") {
    CHECK(alpha_t_brute(cycle(6), 2) == 4);
    CHECK(alpha_t_brute(complete(4), 1) == 1);
    CHECK(alpha_t_brute(star(4), 1) == 4);
    CHECK_THROWS_AS(alpha_t_brute(Graph(21), 1), std::invalid_argument);
}

TEST_CASE("alpha_t_exact matches brute force on random graphs") {
    std::uint64_t seed = 0;
    for (int trial = 0; trial < 60; ++trial, ++seed) {
        int n = 8 + static_cast<int>(seed % 7);
        double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
        Graph g = sample_gnp(n, p, {seed});
        for (int t : {1, 2, 3}) {
            auto r = alpha_t_exact(g, t);
            REQUIRE(r.status == SolveStatus::optimal);
            CHECK(r.size == alpha_t_brute(g, t));
            CHECK(static_cast<int>(r.witness.size()) == r.size);
            CHECK(is_t_component_set(g, r.witness, t));
        }
    }
}

TEST_CASE("alpha_t_exact respects budgets") {
    Graph g = sample_gnp(40, 0.5, {5});
    SolverLimits limits;
    limits.node_budget = 10;
    auto r = alpha_t_exact(g, 2, limits);
    CHECK(r.status == SolveStatus::incomplete);
    CHECK(is_t_component_set(g, r.witness, 2));
}

TEST_CASE("chi_t_exact examples") {
    auto k5 = chi_t_exact(complete(5), 2);
    CHECK(k5.num_colors == 3);
    CHECK(validate_coloring(complete(5), k5.coloring, 2));

    CHECK(chi_t_exact(cycle(5), 1).num_colors == 3);

    auto c6 = chi_t_exact(cycle(6), 2);
    CHECK(c6.num_colors == 2);
    CHECK(validate_coloring(cycle(6), c6.coloring, 2));
}

TEST_CASE("chromatic_number examples") {
    CHECK(chromatic_number(complete(4)) == 4);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK_THROWS_AS(chromatic_number(Graph(17)), std::invalid_argument);
}

TEST_CASE("sandwich, duality and monotonicity on exhaustive n = 5 graphs") {
    // the acceptance binary runs the full n = 6 family; n = 5 keeps the
    // unit suite quick
    const int n = 5, m = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Graph g = from_mask(n, mask);
        int chi1 = chi_t_exact(g, 1).num_colors;
        int prev_chi = n + 1, prev_alpha = 0;
        for (int t = 1; t <= n; ++t) {
            int chit = chi_t_exact(g, t).num_colors;
            int alphat = alpha_t_brute(g, t);
            CHECK(chit * t >= chi1);
            CHECK(chit <= std::min((n + t - 1) / t, chi1));
            CHECK(chit * alphat >= n);
            CHECK(chit <= prev_chi);
            CHECK(alphat >= prev_alpha);
            prev_chi = chit;
            prev_alpha = alphat;
        }
    }
}

TEST_CASE("heuristics are valid and bounded by exact values") {
    CHECK(alpha_t_heuristic(Graph(100), 1, {3}).size == 100);
    CHECK(alpha_t_heuristic(complete(10), 3, {3}).size == 3);

    Graph g = sample_gnp(60, 0.5, {9});
    auto h = alpha_t_heuristic(g, 2, {9});
    CHECK(is_t_component_set(g, h.witness, 2));
    auto ex = alpha_t_exact(g, 2);
    REQUIRE(ex.status == SolveStatus::optimal);
    CHECK(h.size <= ex.size);

    auto col = chi_t_heuristic(g, 2, {9});
    CHECK(validate_coloring(g, col, 2));
}

TEST_CASE("greedy extraction colourings") {
    auto edgeless = chi_t_greedy_extraction(Graph(10), 1, 5, {1});
    CHECK(edgeless.coloring.num_colors == 2);
    CHECK(validate_coloring(Graph(10), edgeless.coloring, 1));

    auto k6 = chi_t_greedy_extraction(complete(6), 2, 2, {1});
    CHECK(k6.coloring.num_colors == 3);
    CHECK(validate_coloring(complete(6), k6.coloring, 2));

    Graph g = sample_gnp(50, 0.5, {3});
    auto w = alpha_small_window(50, 0.5, 2);
    auto res = chi_t_greedy_extraction(g, 2, static_cast<int>(w.lower), {3});
    CHECK(validate_coloring(g, res.coloring, 2));
    auto ex = alpha_t_exact(g, 2);
    REQUIRE(ex.status == SolveStatus::optimal);
    CHECK(res.coloring.num_colors * ex.size >= 50);
    CHECK(res.coloring.num_colors <= 50);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(alpha_t_exact(Graph(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(chi_t_exact(Graph(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(chi_t_greedy_extraction(Graph(3), 1, 4, {0}), std::invalid_argument);
}
