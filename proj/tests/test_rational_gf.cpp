#include "doctest.h"
#include "test_support.hpp"

#include "moran/rational_gf.hpp"

#include <cmath>
#include <stdexcept>

using namespace moran;
using moran::test::R;

TEST_CASE("parse_rational accepts fractions and exact decimals") {
    CHECK(parse_rational("1/2") == R(1, 2));
    CHECK(parse_rational("6/8") == R(3, 4));
    CHECK(parse_rational("0.3") == R(3, 10));
    CHECK(parse_rational("0.25") == R(1, 4));
    CHECK(parse_rational(".5") == R(1, 2));
    CHECK(parse_rational("2.5e-1") == R(1, 4));
    CHECK(parse_rational("-3") == R(-3));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("log_abs survives magnitudes outside double range") {
    Rational tiny = pow(R(1, 2), 5000);
    CHECK(log_abs(tiny) == doctest::Approx(-5000 * std::log(2.0)).epsilon(1e-12));
    CHECK(log_abs(R(-3, 7)) == doctest::Approx(std::log(3.0 / 7.0)));
}

TEST_CASE("polynomials are canonical") {
    Polynomial zero{0, 0};
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    Polynomial p{1, 2, 0, 0};
    REQUIRE(p.degree().has_value());
    CHECK(*p.degree() == 1);
    CHECK(p[7] == 0);
    CHECK((p - p).is_zero());
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(Polynomial{1, R(-1, 2)}, Polynomial{1, R(1, 2)}) == Polynomial{1, 0, R(-1, 4)});
    CHECK(poly_mul(Polynomial{1, 1}, Polynomial{1, 1}) == Polynomial{1, 2, 1});
    CHECK(poly_mul(Polynomial{0}, Polynomial{1, 1}).is_zero());
}

TEST_CASE("poly_mul is commutative and associative with degrees adding") {
    std::mt19937 gen(20240607);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = test::random_polynomial(gen);
        Polynomial b = test::random_polynomial(gen);
        Polynomial c = test::random_polynomial(gen);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(*poly_mul(a, b).degree() == *a.degree() + *b.degree());
        }
    }
}

TEST_CASE("gf_from_fraction normalizes the denominator") {
    RationalGF gf = gf_from_fraction(Polynomial{2}, Polynomial{2, -1});
    CHECK(gf.num() == Polynomial{1});
    CHECK(gf.den() == Polynomial{1, R(-1, 2)});

    Polynomial num{1, R(-1, 2)};
    Polynomial den{1, R(-1, 2), R(-1, 4)};
    RationalGF same = gf_from_fraction(num, den);
    CHECK(same.num() == num);
    CHECK(same.den() == den);

    CHECK_THROWS_AS(gf_from_fraction(Polynomial{1}, Polynomial{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gf_from_fraction(Polynomial{1}, Polynomial{}), std::invalid_argument);
}

TEST_CASE("gf_coeff examples") {
    RationalGF f = gf_from_fraction(Polynomial{1}, Polynomial{1, R(-1, 2), R(-1, 4)});
    CHECK(gf_coeff(f, 0) == 1);
    CHECK(gf_coeff(f, 2) == R(1, 2));
    CHECK(gf_coeff(f, 4) == R(5, 16));

    RationalGF geometric = gf_from_fraction(Polynomial{1}, Polynomial{1, -1});
    CHECK(gf_coeffs_upto(geometric, 3) == std::vector<Rational>{1, 1, 1, 1});
    CHECK(gf_coeffs_upto(f, 4) == std::vector<Rational>{1, R(1, 2), R(1, 2), R(3, 8), R(5, 16)});

    RationalGF g = gf_from_fraction(Polynomial{R(3, 7), 5}, Polynomial{1, R(2, 3)});
    CHECK(gf_coeffs_upto(g, 0) == std::vector<Rational>{R(3, 7)});
}

TEST_CASE("recurrence handles numerators longer than the denominator") {
    // (1 + z + z^2 + z^3)/(1 - z/3): coefficients are partial sums scaled by 3^{-k}.
    RationalGF gf = gf_from_fraction(Polynomial{1, 1, 1, 1}, Polynomial{1, R(-1, 3)});
    auto a = gf_coeffs_upto(gf, 5);
    CHECK(a[0] == 1);
    CHECK(a[1] == R(4, 3));
    CHECK(a[2] == R(13, 9));
    CHECK(a[3] == R(40, 27));
    CHECK(a[4] == R(40, 81));
    CHECK(a[5] == R(40, 243));
}

TEST_CASE("series properties on random fractions") {
    std::mt19937 gen(77);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial num = test::random_polynomial(gen, 4);
        Polynomial den = test::random_polynomial(gen, 4);
        den = den + Polynomial{1} - Polynomial{den[0]};  // den(0) = 1
        RationalGF gf = gf_from_fraction(num, den);
        const std::size_t N = 12;
        auto a = gf_coeffs_upto(gf, N);
        REQUIRE(a.size() == N + 1);

        // batch and single extraction agree
        for (std::size_t n = 0; n <= N; n += 3) CHECK(a[n] == gf_coeff(gf, n));

        // re-substitution: sum_k den_k a_{n-k} = num_n
        for (std::size_t n = 0; n <= N; ++n) {
            Rational s(0);
            for (std::size_t k = 0; k <= n; ++k) s += gf.den()[k] * a[n - k];
            CHECK(s == gf.num()[n]);
        }

        // a common factor with nonzero constant term changes nothing
        Polynomial factor{1, test::random_rational(gen)};
        RationalGF widened = gf_from_fraction(poly_mul(num, factor), poly_mul(den, factor));
        CHECK(gf_coeffs_upto(widened, N) == a);
    }
}

TEST_CASE("float recurrence tracks the exact one, with and without scaling") {
    RationalGF f = gf_from_fraction(Polynomial{1}, Polynomial{1, R(-1, 2), R(-1, 4)});
    auto exact = gf_coeffs_upto(f, 200);
    auto plain = gf_coeffs_upto_float(f, 200);
    const double scale = std::sqrt(5.0) - 1.0;
    auto scaled = gf_coeffs_upto_float(f, 200, scale);
    for (std::size_t n = 0; n <= 200; n += 10) {
        const double ref = to_double(exact[n]);
        CHECK(plain[n] == doctest::Approx(ref).epsilon(1e-12));
        CHECK(scaled[n] == doctest::Approx(ref * std::pow(scale, static_cast<double>(n))).epsilon(1e-12));
    }
    CHECK(gf_coeff_float(f, 4) == doctest::Approx(0.3125));
    CHECK_THROWS_AS(gf_coeffs_upto_float(f, 3, 0.0), std::invalid_argument);
}

TEST_CASE("sparse float recurrence equals the generic float path") {
    std::mt19937 gen(77);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial num = moran::test::random_polynomial(gen);
        Polynomial den = moran::test::random_polynomial(gen);
        if (den[0] == 0) den = den + Polynomial{moran::test::R(3, 2)};
        const RationalGF gf = gf_from_fraction(num, den);
        std::vector<LogTerm> n_terms, d_terms;
        // unnormalized denominator: the sparse path divides by den_0 itself
        for (std::size_t k = 0; k < num.coeffs().size(); ++k) {
            if (num[k] != 0) n_terms.push_back({k, sgn(num[k]), log_abs(num[k])});
        }
        for (std::size_t k = den.coeffs().size(); k-- > 0;) {
            if (den[k] != 0) d_terms.push_back({k, sgn(den[k]), log_abs(den[k])});
        }
        const auto sparse = series_coeffs_float(n_terms, d_terms, 25, 0.7);
        const auto exact = gf_coeffs_upto(gf, 25);
        for (std::size_t n = 0; n <= 25; ++n) {
            const double want = to_double(exact[n]) * std::pow(0.7, static_cast<double>(n));
            CHECK(sparse[n] == doctest::Approx(want).epsilon(1e-9).scale(1e-9 + std::fabs(want)));
        }
    }
    CHECK_THROWS_AS(series_coeffs_float({{0, 1, 0.0}}, {{1, 1, 0.0}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(series_coeffs_float({{0, 1, 0.0}}, {{0, 1, 0.0}}, 3, 0.0), std::invalid_argument);
}
