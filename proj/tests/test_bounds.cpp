#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sqw/bounds.hpp"
#include "sqw/errors.hpp"

using namespace sqw;

TEST_CASE("bound_main") {
    // frozen by 40-digit evaluation of the closed form
    CHECK(bound_main(5, 2, 4) == doctest::Approx(7.4158310940).epsilon(1e-9));
    CHECK_THROWS_AS(bound_main(4, 2, 4), ConfigError);
    CHECK_THROWS_AS(bound_main(5, 1, 4), ConfigError);

    SUBCASE("always at least 1/2") {
        for (uint64_t p : {3ULL, 5ULL, 101ULL})
            for (unsigned r : {2u, 3u, 5u})
                for (uint64_t w : {1ULL, 2ULL, 100ULL, 100000ULL})
                    CHECK(bound_main(p, r, w) >= 0.5);
    }
    SUBCASE("grid scan: increasing in w_size") {
        for (auto [p, r] : {std::pair<uint64_t, unsigned>{5, 2}, {13, 3}}) {
            double prev = bound_main(p, r, 1);
            uint64_t q = 1;
            for (unsigned i = 0; i < r; ++i) q *= p;
            for (uint64_t w = 2; w <= q; w += std::max<uint64_t>(1, q / 100)) {
                double cur = bound_main(p, r, w);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("bound_dms") {
    CHECK(bound_dms(5, 2, 4) == doctest::Approx(8.1).epsilon(1e-12));
    // d = p-1: value (p-1+p)^r / (2 sqrt(q))
    CHECK(bound_dms(7, 2, 6) ==
          doctest::Approx(std::pow(13.0, 2) / (2.0 * 7.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bound_dms(5, 2, 1), ConfigError);
    CHECK_THROWS_AS(bound_dms(5, 2, 5), ConfigError);
}

TEST_CASE("prior thresholds") {
    PriorThresholds t = thresholds_prior(73, 2);
    CHECK(t.thm_b_applicable);
    CHECK(*t.thm_b == doctest::Approx(51.2640224719).epsilon(1e-9));  // 6 sqrt(73)
    CHECK_FALSE(thresholds_prior(5, 2).thm_c.has_value());
    CHECK_FALSE(thresholds_prior(7, 4).thm_b_applicable);  // 2r-1 = 7 > sqrt(7)
    PriorThresholds t20 = thresholds_prior(101, 20);
    REQUIRE(t20.thm_c.has_value());
    double cr = std::exp((4 * std::log(20.0) + 8) / 20.0);
    double expect = cr * std::sqrt(101.0) *
                    std::exp((std::log(101.0) + 4 * std::log(std::log(101.0))) / 20.0);
    CHECK(*t20.thm_c == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("corollary 1") {
    Corollary1Result c = corollary1_check(73, 2, 0.1, 73 * 73);
    CHECK(c.satisfied == (73.0 * 73.0 >= 9.0 * std::pow(73.0, 1.2)));
    CHECK(c.satisfied);
    CHECK(c.constant_unspecified);
    CHECK_FALSE(corollary1_check(73, 2, 0.1, 1).satisfied);
    CHECK_FALSE(corollary1_check(101, 3, 0.5, 1).satisfied);
    CHECK_THROWS_AS(corollary1_check(73, 2, 0.0, 10), ConfigError);
    // eps -> 0+ limit matches the existence threshold without the factor 8
    double t0 = corollary1_check(73, 2, 1e-12, 100).threshold;
    double t2 = corollary2_check(73, 2, 100).threshold;
    CHECK(t0 == doctest::Approx(t2 / 8.0).epsilon(1e-6));
    // budget shape at r=2: p^(-eps/2) + p^(1-r/2-(2r-1)eps/2) = p^(-0.05) + p^(-0.15)
    Corollary1Result b = corollary1_check(53, 2, 0.1, 53 * 53);
    CHECK(b.budget ==
          doctest::Approx(std::pow(53.0, -0.05) + std::pow(53.0, -0.15)).epsilon(1e-12));
}

TEST_CASE("corollary 2 is exact at the boundary") {
    Corollary2Result c = corollary2_check(73, 2, 5256);
    CHECK(c.threshold == doctest::Approx(5256.0).epsilon(1e-12));
    CHECK(c.satisfied);
    CHECK_FALSE(corollary2_check(73, 2, 5255).satisfied);
    // p=3, r=2: threshold 216 > 9 = q, unsatisfiable
    Corollary2Result small = corollary2_check(3, 2, 9);
    CHECK(small.threshold == doctest::Approx(216.0));
    CHECK(small.threshold_exceeds_field);
    CHECK_FALSE(small.satisfied);
    // odd r: threshold 1000 * 101^(3/2) ~ 1015037.4
    Corollary2Result odd = corollary2_check(101, 3, 1'020'100);
    CHECK(odd.threshold == doctest::Approx(1015037.4377).epsilon(1e-8));
    CHECK(odd.satisfied);
    CHECK_FALSE(corollary2_check(101, 3, 1'015'037).satisfied);
    CHECK(corollary2_check(101, 3, 1'015'038).satisfied);
}
