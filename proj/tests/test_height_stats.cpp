#include "doctest.h"
#include "test_support.hpp"

#include "moran/height_stats.hpp"
#include "moran/oracle.hpp"

#include <cmath>
#include <stdexcept>

using namespace moran;
using moran::test::R;

TEST_CASE("height_cdf examples") {
    ModelParams half(R(1, 2));
    CHECK(height_cdf(half, 2, 1) == R(1, 2));
    CHECK(height_cdf(half, 2, 2) == 1);
    CHECK(height_cdf(half, 1, 0) == 0);
    for (std::size_t H = 7; H <= 10; ++H) CHECK(height_cdf(half, 7, H) == 1);
    CHECK_THROWS_AS(height_cdf(half, 0, 0), std::invalid_argument);
}

TEST_CASE("height_pmf examples") {
    ModelParams half(R(1, 2));
    CHECK(height_pmf(half, 2).pmf == std::vector<Rational>{0, R(1, 2), R(1, 2)});
    CHECK(height_pmf(half, 1).pmf == std::vector<Rational>{0, 1});
    CHECK(height_pmf(ModelParams(R(1, 3)), 2).pmf == std::vector<Rational>{0, R(2, 3), R(1, 3)});
    // enumeration oracle: p = 1/2, n = 3 gives uuu, uud, udu each 1/8 of 3/8
    CHECK(height_pmf(half, 3).pmf == std::vector<Rational>{0, R(1, 3), R(1, 3), R(1, 3)});
}

TEST_CASE("height_pgf examples") {
    ModelParams half(R(1, 2));
    CHECK(height_pgf(half, 2, R(1)) == 1);
    CHECK(height_pgf(half, 2, R(1, 2)) == R(3, 8));
    CHECK(height_pgf(half, 2, R(0)) == 0);
    for (auto p : {R(1, 4), R(2, 3)}) CHECK(height_pgf(ModelParams(p), 9, R(1)) == 1);

    Polynomial pgf = height_pgf_polynomial(half, 2);
    CHECK(pgf == Polynomial{0, R(1, 2), R(1, 2)});
}

TEST_CASE("moments examples") {
    ModelParams half(R(1, 2));
    ModelParams third(R(1, 3));
    CHECK(height_mean(half, 1) == 1);
    CHECK(height_mean(half, 2) == R(3, 2));
    CHECK(height_mean(third, 2) == R(4, 3));
    CHECK(height_variance(half, 1) == 0);
    CHECK(height_variance(half, 2) == R(1, 4));
    CHECK(height_variance(third, 2) == R(2, 9));

    // frozen from a Fractions enumeration of all 2^12 words
    CHECK(height_mean(half, 12) == R(1013, 233));
    CHECK(height_variance(half, 12) == R(184732, 54289));
    CHECK(height_mean(ModelParams(R(1, 4)), 12) == R(42963, 14209));
    CHECK(height_mean(ModelParams(R(3, 4)), 12) == R(64771, 10009));
}

TEST_CASE("distribution invariants") {
    for (auto p : {R(1, 4), R(1, 3), R(1, 2), R(2, 3), R(3, 4)}) {
        ModelParams m(p);
        for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
            HeightDistribution d = height_pmf(m, n);
            REQUIRE(d.pmf.size() == n + 1);
            Rational total(0);
            for (const auto& x : d.pmf) {
                CHECK(x >= 0);
                CHECK(x <= 1);
                total += x;
            }
            CHECK(total == 1);
            CHECK(d.pmf[0] == 0);
            auto cdf = d.cdf();
            for (std::size_t h = 1; h <= n; ++h) CHECK(cdf[h] >= cdf[h - 1]);

            // two routes to the mean
            CHECK(d.mean() == height_mean(m, n));
            CHECK(d.mean() >= 1);
            CHECK(d.mean() <= static_cast<long>(n));
            CHECK(d.variance() >= 0);
        }
    }
}

TEST_CASE("distribution matches exhaustive enumeration") {
    for (auto p : {R(1, 4), R(1, 2), R(3, 4)}) {
        ModelParams m(p);
        for (std::size_t n = 1; n <= 12; ++n) {
            auto hist = enumerate_walks(m, n, WalkModel::Restricted);
            Rational total(0);
            for (const auto& w : hist) total += w;
            HeightDistribution d = height_pmf(m, n);
            for (std::size_t h = 0; h <= n; ++h) CHECK(d.pmf[h] == hist[h] / total);
        }
    }
}

TEST_CASE("mean is nondecreasing in p") {
    const std::vector<Rational> ps{R(1, 4), R(1, 3), R(1, 2), R(2, 3), R(3, 4)};
    for (std::size_t n : {3u, 10u, 30u}) {
        Rational prev(0);
        for (const auto& p : ps) {
            Rational m = height_mean(ModelParams(p), n);
            CHECK(m >= prev);
            prev = m;
        }
    }
}

TEST_CASE("PGF derivative at u = 1 is the mean") {
    const Rational step = R(1, 1000000);
    for (auto p : {R(1, 4), R(1, 2), R(3, 4)}) {
        ModelParams m(p);
        for (std::size_t n : {2u, 8u, 25u}) {
            HeightDistribution d = height_pmf(m, n);
            Rational secant = (height_pgf(d, R(1)) - height_pgf(d, 1 - step)) / step;
            CHECK(std::fabs(to_double(secant - d.mean())) <= 1e-4);
        }
    }
}

TEST_CASE("float mode agrees with exact mode") {
    for (auto p : {R(1, 4), R(1, 2), R(3, 4)}) {
        ModelParams m(p);
        HeightDistribution exact = height_pmf(m, 60);
        HeightDistributionFloat fl = height_pmf_float(m, 60);
        auto cdf = exact.cdf();
        for (std::size_t H = 0; H <= 60; ++H) {
            CHECK(fl.cdf[H] == doctest::Approx(to_double(cdf[H])).epsilon(1e-12));
        }
        CHECK(fl.mean() == doctest::Approx(to_double(exact.mean())).epsilon(1e-12));
        CHECK(fl.variance() == doctest::Approx(to_double(exact.variance())).epsilon(1e-10));
        CHECK(height_pgf(fl, 0.5) == doctest::Approx(to_double(height_pgf(exact, R(1, 2)))).epsilon(1e-12));
    }
}

TEST_CASE("float coefficient ratios stay within 1e-9 of exact at n = 2000") {
    for (auto p : {R(1, 4), R(1, 2), R(3, 4)}) {
        ModelParams m(p);
        for (std::size_t H : {3u, 8u, 15u, 40u, 500u}) {
            const double exact = to_double(height_cdf(m, 2000, H));
            const double fl = height_cdf_float(m, 2000, H);
            if (exact == 0.0) {
                CHECK(std::fabs(fl) < 1e-300);
            } else {
                CHECK(std::fabs(fl / exact - 1.0) <= 1e-9);
            }
        }
    }
}

TEST_CASE("mode selection") {
    CHECK(default_mode(2000) == EvalMode::Exact);
    CHECK(default_mode(2001) == EvalMode::Float);
}

TEST_CASE("float CDF from sparse terms matches the bounded series") {
    for (auto p : {R(1, 5), R(1, 2), R(9, 10)}) {
        ModelParams m(p);
        const double eps = 1.0 / binet_roots(m).lambda_plus;
        for (std::size_t n : {1u, 7u, 60u, 300u}) {
            const double total = gf_coeff_float(unbounded_gf(m), n, eps);
            for (std::size_t H : {0u, 1u, 2u, 5u, 20u}) {
                const double via_gf = gf_coeff_float(bounded_gf(m, H), n, eps) / total;
                CHECK(height_cdf_float(m, n, H) == doctest::Approx(via_gf).epsilon(1e-12));
            }
        }
    }
}
