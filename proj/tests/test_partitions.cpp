#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "cclab/partitions.hpp"

using namespace cclab;

namespace {

// Oracle: count partitions of [k] with block sizes <= t by enumerating
// restricted growth strings.
BigCount rgs_count(int t, int k) {
    if (k == 0) return 1;
    BigCount total = 0;
    std::vector<int> a(k, 0);
    auto rec = [&](auto&& self, int i, int maxlab, std::vector<int>& sizes) -> void {
        if (i == k) {
            ++total;
            return;
        }
        for (int lab = 0; lab <= maxlab + 1; ++lab) {
            int sz = lab < static_cast<int>(sizes.size()) ? sizes[lab] : 0;
            if (sz + 1 > t) continue;
            if (lab >= static_cast<int>(sizes.size())) sizes.push_back(0);
            sizes[lab]++;
            self(self, i + 1, std::max(maxlab, lab), sizes);
            sizes[lab]--;
            if (sizes.back() == 0 && lab == static_cast<int>(sizes.size()) - 1) sizes.pop_back();
        }
    };
    std::vector<int> sizes;
    rec(rec, 0, -1, sizes);
    return total;
}

}  // namespace

TEST_CASE("sp_bounded examples") {
    CHECK(sp_bounded(1, 7) == 1);
    CHECK(sp_bounded(2, 3) == 4);
    CHECK(sp_bounded(2, 4) == 10);
    CHECK(sp_bounded(3, 0) == 1);
    CHECK_THROWS_AS(sp_bounded(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sp_bounded(2, -1), std::invalid_argument);
}

TEST_CASE("sp_bounded matches the restricted-growth-string oracle") {
    for (int k = 0; k <= 10; ++k)
        for (int t = 1; t <= std::max(k, 1); ++t) CHECK(sp_bounded(t, k) == rgs_count(t, k));
}

TEST_CASE("sp_bounded nondecreasing in t, bell agreement") {
    for (int k = 1; k <= 20; ++k)
        for (int t = 1; t < k; ++t) CHECK(sp_bounded(t, k) <= sp_bounded(t + 1, k));
    for (int k = 0; k <= 60; ++k) CHECK(bell(k) == sp_bounded(std::max(k, 1), k));
}

TEST_CASE("bell examples") {
    CHECK(bell(0) == 1);
    CHECK(bell(3) == 5);
    CHECK(bell(5) == 52);
}

TEST_CASE("ep_exact examples") {
    CHECK(ep_exact(2, 4) == 3);
    CHECK(ep_exact(7, 7) == 1);
    CHECK(ep_exact(1, 5) == 1);
    for (int k = 0; k <= 12; ++k)
        for (int t = 1; t <= std::max(k, 1); ++t) CHECK(ep_exact(t, k) <= sp_bounded(t, k));
}

TEST_CASE("saddle_point_radius examples") {
    CHECK(saddle_point_radius(1, 5) == Catch::Approx(5.0).margin(1e-8));
    CHECK(saddle_point_radius(2, 6) == Catch::Approx(2.0).margin(1e-8));
    double r = saddle_point_radius(5, 100);
    double acc = 0.0, term = r;
    for (int i = 0; i < 5; ++i) {
        acc += term;
        term *= r / (i + 1);
    }
    CHECK(std::abs(acc - 100.0) <= 1e-10 * 100);
}

TEST_CASE("saddle point radius lower bounds") {
    // r >= log(k)/2 holds for every finite k (k <= r e^r <= e^{2r});
    // the asymptotic estimate r >= log k kicks in later the larger t is,
    // so it is checked at per-t onsets found empirically.
    for (int k : {100, 200, 500})
        for (int t = 2; t <= static_cast<int>(std::log(static_cast<double>(k))); ++t)
            CHECK(saddle_point_radius(t, k) >= 0.5 * std::log(static_cast<double>(k)));
    std::pair<int, int> anchors[] = {{2, 100}, {3, 100}, {4, 500}, {5, 5000}, {6, 20000}};
    for (auto [t, k] : anchors)
        CHECK(saddle_point_radius(t, k) >= std::log(static_cast<double>(k)));
}

TEST_CASE("sp_saddle_upper examples and dominance") {
    int k = 8;
    CHECK(sp_saddle_upper(1, k).log_value == Catch::Approx(3.0 * k));
    CHECK(sp_saddle_upper(3, 200).log_value >= log_of(sp_bounded(3, 200)));
    CHECK(sp_saddle_upper(5, 1000).log_value >= log_of(sp_bounded(5, 1000)));
}

TEST_CASE("sp_general_upper stays within a sane band of exact Bell counts") {
    double v3 = 3.0 * std::log(3.0) - 3.0 * std::log(std::log(3.0)) - 3.0;
    CHECK(sp_general_upper(3).log_value == Catch::Approx(v3));
    CHECK_THROWS_AS(sp_general_upper(2), std::invalid_argument);
    // audited heuristic: record ratios, never assert pointwise dominance.
    // The dropped o(k) term is still ~15% of the total at k = 300; the
    // ratio approaches 1 from below as k grows.
    double r100 = sp_general_upper(100).log_value / log_of(bell(100));
    double r300 = sp_general_upper(300).log_value / log_of(bell(300));
    double r3000 = sp_general_upper(3000).log_value / log_of(bell(3000));
    INFO("evaluator/exact log ratios: " << r100 << " " << r300 << " " << r3000);
    CHECK(r100 > 0.7);
    CHECK(r100 < r300);
    CHECK(r300 < r3000);
    CHECK(r3000 > 0.9);
    CHECK(r3000 < 1.1);
}

TEST_CASE("ep_stirling_lower examples") {
    CHECK(ep_stirling_lower(1, 4).log_value == Catch::Approx(0.0).margin(1e-12));
    CHECK(ep_exact(1, 4) == 1);
    CHECK(ep_stirling_lower(2, 4).log_value <= log_of(ep_exact(2, 4)));
    CHECK(ep_stirling_lower(3, 30).log_value <= log_of(ep_exact(3, 30)));
}

TEST_CASE("saddle bound dominates the exact count on the declared grid") {
    for (int k : {100, 200, 500}) {
        int tmax = static_cast<int>(std::log(static_cast<double>(k)));
        for (int t = 2; t <= tmax; ++t)
            CHECK(log_of(sp_bounded(t, k)) <= sp_saddle_upper(t, k).log_value);
    }
}
