#include <catch2/catch_amalgamated.hpp>

#include "cclab/exact_prob.hpp"

using namespace cclab;

TEST_CASE("connectivity_prob examples") {
    Rational half(1, 2);
    for (Rational p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)})
        CHECK(connectivity_prob(2, p).exact_value == p);
    CHECK(connectivity_prob(3, half).exact_value == half);
    CHECK(connectivity_prob(1, half).exact_value == 1);
    CHECK_THROWS_AS(connectivity_prob(0, half), std::invalid_argument);
}

TEST_CASE("connectivity matches max_comp at t = k - 1 complement structure") {
    // k = 4, p = 1/2: cross-check the recurrence against full enumeration
    // through brute_force_max_comp_le_prob: connected iff max comp = 4.
    Rational half(1, 2);
    Rational le3 = brute_force_max_comp_le_prob(4, 3, half).exact_value;
    CHECK(connectivity_prob(4, half).exact_value == Rational(1) - le3);
}

TEST_CASE("max_comp_le_prob examples") {
    Rational half(1, 2);
    CHECK(max_comp_le_prob(5, 5, Rational(1, 3)).exact_value == 1);
    CHECK(max_comp_le_prob(3, 2, half).exact_value == half);
    CHECK(max_comp_le_prob(4, 1, half).exact_value == Rational(1, 64));
    CHECK(max_comp_le_prob(0, 1, half).exact_value == 1);
}

TEST_CASE("oracle equivalence on the full small grid") {
    for (Rational p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
        for (int k = 0; k <= 5; ++k)
            for (int t = 1; t <= std::max(k, 1); ++t)
                CHECK(max_comp_le_prob(k, t, p).exact_value ==
                      brute_force_max_comp_le_prob(k, t, p).exact_value);
}

TEST_CASE("brute force oracle guards and trivia") {
    Rational third(1, 3);
    CHECK(brute_force_max_comp_le_prob(4, 4, third).exact_value == 1);
    CHECK(brute_force_max_comp_le_prob(5, 1, third).exact_value ==
          detail::rational_pow(Rational(2, 3), 10));
    CHECK_THROWS_AS(brute_force_max_comp_le_prob(7, 2, third), std::invalid_argument);
}

TEST_CASE("max_comp_le_prob monotonicity grid") {
    Rational ps[] = {Rational(1, 5), Rational(1, 2), Rational(4, 5)};
    for (const Rational& p : ps) {
        for (int k = 1; k <= 12; ++k)
            for (int t = 1; t < k; ++t)
                CHECK(max_comp_le_prob(k, t, p).exact_value <=
                      max_comp_le_prob(k, t + 1, p).exact_value);
        for (int t = 1; t <= 4; ++t)
            for (int k = t; k < 12; ++k)
                CHECK(max_comp_le_prob(k + 1, t, p).exact_value <=
                      max_comp_le_prob(k, t, p).exact_value);
    }
    for (int k = 2; k <= 10; ++k)
        for (int t = 1; t < k; ++t)
            CHECK(max_comp_le_prob(k, t, Rational(3, 4)).exact_value <=
                  max_comp_le_prob(k, t, Rational(1, 4)).exact_value);
}

TEST_CASE("exact and log-domain modes agree") {
    for (int k : {2, 5, 10, 20, 40, 64}) {
        for (int t : {1, 2, 3, k / 2, k}) {
            if (t < 1) continue;
            double le = max_comp_le_prob(k, t, Rational(1, 2)).log();
            double ll = max_comp_le_prob_log(k, t, 0.5).log();
            if (std::isfinite(le))
                CHECK(ll == Catch::Approx(le).epsilon(1e-9).margin(1e-9));
            else
                CHECK(!std::isfinite(ll));
        }
    }
    for (int k : {5, 17, 33}) {
        double le = connectivity_prob(k, Rational(3, 10)).log();
        double ll = connectivity_prob_log(k, 0.3).log();
        CHECK(ll == Catch::Approx(le).epsilon(1e-9).margin(1e-9));
    }
}

TEST_CASE("log-domain near-certain disconnection falls back to exact") {
    // p tiny: Q(k) is within 1e-12 of 1, triggering the exact fallback path
    double l = connectivity_prob_log(8, 1e-9).log();
    double e = connectivity_prob(8, parse_rational("1/1000000000")).log();
    CHECK(l == Catch::Approx(e).epsilon(1e-6));
}

TEST_CASE("max_comp_distribution examples") {
    Rational half(1, 2);
    auto d1 = max_comp_distribution(1, half);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].exact_value == 1);

    Rational p(2, 7);
    auto d2 = max_comp_distribution(2, p);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].exact_value == Rational(5, 7));
    CHECK(d2[1].exact_value == p);

    auto d3 = max_comp_distribution(3, half);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].exact_value == Rational(1, 8));
    CHECK(d3[1].exact_value == Rational(3, 8));
    CHECK(d3[2].exact_value == half);

    Rational sum = 0;
    for (const auto& pr : max_comp_distribution(9, Rational(2, 5))) sum += pr.exact_value;
    CHECK(sum == 1);
}

TEST_CASE("max_comp_distribution_log sums to one") {
    for (int k : {3, 8, 30}) {
        double total = 0.0;
        for (const auto& pr : max_comp_distribution_log(k, 0.35)) total += pr.to_double();
        CHECK(total == Catch::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("expected_tcomp_sets examples") {
    auto r = expected_tcomp_sets(4, 3, 2, 0.5, Rational(1, 2));
    REQUIRE(r.exact_expectation.has_value());
    CHECK(*r.exact_expectation == 2);
    CHECK(r.log_expectation == Catch::Approx(std::log(2.0)).epsilon(1e-9));

    auto r0 = expected_tcomp_sets(50, 0, 3, 0.5, Rational(1, 2));
    REQUIRE(r0.exact_expectation.has_value());
    CHECK(*r0.exact_expectation == 1);
    CHECK(r0.log_expectation == Catch::Approx(0.0).margin(1e-12));

    CHECK_THROWS_AS(expected_tcomp_sets(3, 4, 1, 0.5), std::invalid_argument);
}

TEST_CASE("expected_tcomp_sets exact and log agree through k = 64") {
    for (int k : {10, 40, 64}) {
        auto r = expected_tcomp_sets(1000000, k, 2, 0.5, Rational(1, 2));
        REQUIRE(r.exact_expectation.has_value());
        double le = log_of(*r.exact_expectation);
        CHECK(r.log_expectation == Catch::Approx(le).epsilon(1e-6));
    }
}
